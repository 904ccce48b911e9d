#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conjcheck/axioms.hpp"
#include "conjcheck/errors.hpp"
#include "conjcheck/finite.hpp"
#include "conjcheck/law.hpp"
#include "conjcheck/schreier.hpp"

namespace conjcheck {

  // A Schreier extension X -> A -> B together with h: X -> B; phi is the
  // action induced by the extension.
  template <typename EX, typename EA, typename EB>
  struct CrossedData {
    SchreierExtension<EX, EA, EB> e;
    Hom<EX, EB>                   h;
    ExternalAction<EB, EX>        phi;
  };

  // Checks that h runs from the kernel to the base and is a homomorphism
  // under the extension's plan.
  template <typename EX, typename EA, typename EB>
  CrossedData<EX, EA, EB> crossed_data(SchreierExtension<EX, EA, EB> const& e,
                                       Hom<EX, EB> const&                   h) {
    if (h.source().name() != e.kernel().name() || h.target().name() != e.base().name()) {
      throw KindMismatch("h must map " + e.kernel().name() + " to " + e.base().name()
                         + ", not " + h.source().name() + " to " + h.target().name());
    }
    Verdict v = verify_hom(h, e.plan());
    if (v.failed()) {
      throw NotHomomorphism("h: " + v.statement + " fails", v.witness);
    }
    return CrossedData<EX, EA, EB>{e, h, action_from_extension(e)};
  }

  // Some y in X with x+y = 0 = y+x: the structure's candidate when it is a
  // member, otherwise a scan of a finite carrier or of the enumeration window.
  template <typename E>
  std::optional<E> find_inverse(ConjStructure<E> const& X,
                                E const&                x,
                                std::size_t             window = default_ore_window) {
    E    z     = X.zero();
    auto works = [&](E const& y) {
      return X.contains(y) && X.add(x, y) == z && X.add(y, x) == z;
    };
    if (X.has_inverse_candidates()) {
      auto c = X.inverse_candidate(x);
      if (c && works(*c)) {
        return c;
      }
    }
    if (X.is_finite() || X.carrier().is_enumerable()) {
      for (auto const& y : X.is_finite() ? X.elements() : X.carrier().first(window)) {
        if (works(y)) {
          return y;
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // The three conditions
  ////////////////////////////////////////////////////////////////////////

  template <typename EX, typename EA, typename EB>
  LawList precrossed_laws(CrossedData<EX, EA, EB> const& d) {
    auto const& B = d.e.base();
    auto const& X = d.e.kernel();
    return {make_law("precrossed", "h(b.x) + b = b + h(x)", "precrossed semimodule",
                     std::make_tuple(B.carrier(), X.carrier()),
                     [d, B](EB const& b, EX const& x) {
                       return detail::differ(B, B.add(d.h(d.phi(b, x)), b), B.add(b, d.h(x)));
                     })};
  }

  template <typename EX, typename EA, typename EB>
  LawList crossed_laws(CrossedData<EX, EA, EB> const& d) {
    auto const& X = d.e.kernel();
    return {make_law("crossed", "h(y).x + y = y + x", "crossed semimodule",
                     std::make_tuple(X.carrier(), X.carrier()),
                     [d, X](EX const& x, EX const& y) {
                       return detail::differ(X, X.add(d.phi(d.h(y), x), y), X.add(y, x));
                     })};
  }

  template <typename EX, typename EA, typename EB>
  LawList groupoid_condition_laws(CrossedData<EX, EA, EB> const& d,
                                  std::size_t window = default_ore_window) {
    auto const& X = d.e.kernel();
    return {make_law(
        "groupoid", "x has an inverse -x in X and -conj(x) = conj(-x)", "crossed module",
        std::make_tuple(X.carrier()), [X, window](EX const& x) -> std::optional<std::string> {
          auto y = find_inverse(X, x, window);
          if (!y) {
            std::string msg = X.show(x) + " has no inverse in X";
            if (X.has_inverse_candidates()) {
              if (auto c = X.inverse_candidate(x); c && !X.contains(*c)) {
                msg += "; its formal inverse " + X.show(*c) + " lies outside";
              }
            }
            return msg;
          }
          auto yb = find_inverse(X, X.conj(x), window);
          if (!yb) {
            return "conj(" + X.show(x) + ") has no inverse in X";
          }
          return detail::differ(X, *yb, X.conj(*y));
        })};
  }

  template <typename EX, typename EA, typename EB>
  Verdict check_precrossed_condition(CrossedData<EX, EA, EB> const& d,
                                     EnumerationPlan const&         plan) {
    return verify_all(precrossed_laws(d), plan);
  }

  template <typename EX, typename EA, typename EB>
  Verdict check_crossed_condition(CrossedData<EX, EA, EB> const& d,
                                  EnumerationPlan const&         plan) {
    return verify_all(crossed_laws(d), plan);
  }

  // On parametric carriers inverses are searched among the candidate and
  // the enumeration window, so a pass is evidence only within the plan.
  template <typename EX, typename EA, typename EB>
  Verdict check_groupoid_condition(CrossedData<EX, EA, EB> const& d,
                                   EnumerationPlan const&         plan) {
    std::size_t window = plan.mode == PlanMode::bounded ? plan.window : default_ore_window;
    return verify_all(groupoid_condition_laws(d, window), plan);
  }

  ////////////////////////////////////////////////////////////////////////
  // Reflexive graph
  ////////////////////////////////////////////////////////////////////////

  //   A --dom = f--> B,  A --cod = h~--> B,  B --unit = r--> A
  template <typename EA, typename EB>
  struct ReflexiveGraph {
    Hom<EA, EB> dom;
    Hom<EA, EB> cod;
    Hom<EB, EA> unit;
    Verdict     laws;

    ConjStructure<EA> const& arrows() const noexcept {
      return dom.source();
    }
    ConjStructure<EB> const& objects() const noexcept {
      return dom.target();
    }
  };

  // h~(a) = h(q(a)) + f(a).
  template <typename EX, typename EA, typename EB>
  Hom<EA, EB> codomain_map(CrossedData<EX, EA, EB> const& d) {
    auto const& B = d.e.base();
    return Hom<EA, EB>("h~", d.e.total(), B, [d, B](EA const& a) {
      return B.add(d.h(d.e.q(a)), d.e.f()(a));
    });
  }

  template <typename EX, typename EA, typename EB>
  LawList reflexive_graph_laws(CrossedData<EX, EA, EB> const& d, Hom<EA, EB> const& cod) {
    auto const& A = d.e.total();
    auto const& B = d.e.base();
    auto const& X = d.e.kernel();
    std::string anchor = "reflexive graph";
    LawList laws = prefixed(hom_laws(cod), "cod");
    laws.push_back(make_law("cod-kernel", "h~(k(x)) = h(x)", anchor, std::make_tuple(X.carrier()),
                            [d, cod, B](EX const& x) {
                              return detail::differ(B, cod(d.e.k()(x)), d.h(x));
                            }));
    laws.push_back(make_law("cod-unit", "h~(r(b)) = b", anchor, std::make_tuple(B.carrier()),
                            [d, cod, B](EB const& b) { return detail::differ(B, cod(d.e.r()(b)), b); }));
    laws.push_back(make_law("dom-unit", "f(r(b)) = b", anchor, std::make_tuple(B.carrier()),
                            [d, B](EB const& b) { return detail::differ(B, d.e.f()(d.e.r()(b)), b); }));
    if (A.is_finite() && B.is_finite()) {
      laws.push_back(make_fact(
          "cod-unique", "h~ is the only homomorphism with h~ k = h and h~ r = 1", anchor,
          [d, cod, A, B, X]() -> std::optional<std::string> {
            auto ia = index_of(A);
            auto ib = index_of(B);
            PartialMap seed(A.size());
            auto set = [&](EA const& a, EB const& b) -> std::optional<std::string> {
              auto& slot = seed[ia.at(a)];
              if (slot && *slot != ib.at(b)) {
                return "the constraints disagree at " + A.show(a);
              }
              slot = ib.at(b);
              return std::nullopt;
            };
            for (auto const& x : X.elements()) {
              if (auto v = set(d.e.k()(x), d.h(x))) {
                return v;
              }
            }
            for (auto const& b : B.elements()) {
              if (auto v = set(d.e.r()(b), b)) {
                return v;
              }
            }
            auto found = enumerate_homs(tabulate(A), tabulate(B), seed, 2);
            if (found.size() != 1) {
              return std::to_string(found.size()) + " homomorphisms meet the constraints";
            }
            for (auto const& a : A.elements()) {
              if (found.front()[ia.at(a)] != ib.at(cod(a))) {
                return "the constrained homomorphism differs from h~ at " + A.show(a);
              }
            }
            return std::nullopt;
          }));
    }
    return laws;
  }

  // The graph with no laws checked yet.
  template <typename EX, typename EA, typename EB>
  ReflexiveGraph<EA, EB> reflexive_graph(CrossedData<EX, EA, EB> const& d) {
    return ReflexiveGraph<EA, EB>{d.e.f(), codomain_map(d), d.e.r(), Verdict{}};
  }

  template <typename EX, typename EA, typename EB>
  ReflexiveGraph<EA, EB> build_reflexive_graph(CrossedData<EX, EA, EB> const& d,
                                               EnumerationPlan const&         plan) {
    Verdict c1 = check_precrossed_condition(d, plan);
    if (c1.failed()) {
      throw PrecrossedConditionFailed(c1.statement + " fails", c1.witness);
    }
    auto g    = reflexive_graph(d);
    Verdict v = verify_all(reflexive_graph_laws(d, g.cod), plan);
    g.cod.record(v);
    g.laws = combine(c1, v);
    return g;
  }

  template <typename EX, typename EA, typename EB>
  ReflexiveGraph<EA, EB> build_reflexive_graph(CrossedData<EX, EA, EB> const& d) {
    return build_reflexive_graph(d, d.e.plan());
  }

  ////////////////////////////////////////////////////////////////////////
  // Internal category
  ////////////////////////////////////////////////////////////////////////

  // {(a,a') : f(a) = h~(a')}, enumerated through (x, a') -> (k(x) + r(h~(a')), a').
  template <typename EX, typename EA, typename EB>
  ConjStructure<std::pair<EA, EA>> composable_pairs(CrossedData<EX, EA, EB> const& d,
                                                    Hom<EA, EB> const&             cod) {
    using P  = std::pair<EA, EA>;
    using XA = std::pair<EX, EA>;
    auto const& A = d.e.total();
    auto const& f = d.e.f();
    std::string name = A.name() + "x_B" + A.name();
    auto base = product_domain(d.e.kernel().carrier(), A.carrier());
    auto dom  = image_domain<P, XA>(
        name, base,
        [d, cod, A](XA const& s) {
          return P(A.add(d.e.k()(s.first), d.e.r()(cod(s.second))), s.second);
        },
        [A, f, cod](P const& p) {
          return A.contains(p.first) && A.contains(p.second) && f(p.first) == cod(p.second);
        },
        [A](P const& p) { return "(" + A.show(p.first) + "," + A.show(p.second) + ")"; },
        [A](std::string_view s) {
          auto xs = text::split_top_level(text::unwrap(s, '(', ')'), ',');
          if (xs.size() != 2) {
            throw ParseError("expected a pair of arrows, got '" + std::string(s) + "'");
          }
          return P(A.parse(xs[0]), A.parse(xs[1]));
        });
    StructureParts<P> parts;
    parts.name = name;
    parts.op   = [A](P const& p, P const& q) {
      return P(A.add(p.first, q.first), A.add(p.second, q.second));
    };
    parts.conj = [A](P const& p) { return P(A.conj(p.first), A.conj(p.second)); };
    if (A.is_monoid()) {
      parts.identity = P(A.zero(), A.zero());
    }
    return ConjStructure<P>(std::move(dom), std::move(parts));
  }

  template <typename EA, typename EB>
  struct InternalCategory {
    ReflexiveGraph<EA, EB>             graph;
    ConjStructure<std::pair<EA, EA>>   composable;
    Hom<std::pair<EA, EA>, EA>         m;
    Verdict                            laws;
  };

  inline constexpr std::size_t forced_composition_bound = 12;

  // k(h~(a).x) + a = a + k(x).
  template <typename EX, typename EA, typename EB>
  LawList composition_condition_laws(CrossedData<EX, EA, EB> const& d) {
    auto const& A   = d.e.total();
    auto const& X   = d.e.kernel();
    auto        cod = codomain_map(d);
    return {make_law("composition-condition", "k(h~(a).x) + a = a + k(x)", "internal category",
                     std::make_tuple(A.carrier(), X.carrier()),
                     [d, cod, A](EA const& a, EX const& x) {
                       return detail::differ(A, A.add(d.e.k()(d.phi(cod(a), x)), a),
                                             A.add(a, d.e.k()(x)));
                     })};
  }

  template <typename EX, typename EA, typename EB>
  Verdict check_composition_condition(CrossedData<EX, EA, EB> const& d, EnumerationPlan const& plan) {
    return verify_all(composition_condition_laws(d), plan);
  }

  template <typename EX, typename EA, typename EB>
  LawList category_laws(CrossedData<EX, EA, EB> const&         d,
                        InternalCategory<EA, EB> const&        c) {
    using P = std::pair<EA, EA>;
    auto const& A   = d.e.total();
    auto const& B   = d.e.base();
    auto const& X   = d.e.kernel();
    auto const  m   = c.m;
    auto const  cod = c.graph.cod;
    auto const  f   = d.e.f();
    auto const  r   = d.e.r();
    std::string anchor = "internal category";
    LawList laws = prefixed(hom_laws(m), "m");
    laws.push_back(make_law("unit-left", "m(a, r(f(a))) = a", anchor, std::make_tuple(A.carrier()),
                            [m, f, r, A](EA const& a) {
                              return detail::differ(A, m(P(a, r(f(a)))), a);
                            }));
    laws.push_back(make_law("unit-right", "m(r(h~(a')), a') = a'", anchor,
                            std::make_tuple(A.carrier()), [m, cod, r, A](EA const& a) {
                              return detail::differ(A, m(P(r(cod(a)), a)), a);
                            }));
    laws.push_back(make_law("m-dom-cod", "f(m(a,a')) = f(a') and h~(m(a,a')) = h~(a)", anchor,
                            std::make_tuple(c.composable.carrier()),
                            [m, f, cod, B](P const& p) {
                              EA ma = m(p);
                              auto v = detail::differ(B, f(ma), f(p.second));
                              return v ? v : detail::differ(B, cod(ma), cod(p.first));
                            }));
    // Composable triples (a, a', a'') through (x, y, a'').
    laws.push_back(make_law(
        "m-associative", "m(m(a,a'),a'') = m(a,m(a',a'')) with a' = k(y)+r(h~(a'')), a = k(x)+r(h~(a'))",
        anchor, std::make_tuple(X.carrier(), X.carrier(), A.carrier()),
        [d, m, cod, r, A](EX const& x, EX const& y, EA const& a3) {
          EA a2 = A.add(d.e.k()(y), r(cod(a3)));
          EA a1 = A.add(d.e.k()(x), r(cod(a2)));
          return detail::differ(A, m(P(m(P(a1, a2)), a3)), m(P(a1, m(P(a2, a3)))));
        }));
    laws += composition_condition_laws(d);
    if (A.is_finite() && A.size() <= forced_composition_bound) {
      auto Pc = c.composable;
      laws.push_back(make_fact(
          "m-forced", "k(q(a)) + a' is the only additive map with both unit laws", anchor,
          [m, cod, f, r, A, Pc]() -> std::optional<std::string> {
            auto ia = index_of(A);
            auto ip = index_of(Pc);
            PartialMap seed(Pc.size());
            auto set = [&](P const& p, EA const& a) -> std::optional<std::string> {
              auto& slot = seed[ip.at(p)];
              if (slot && *slot != ia.at(a)) {
                return "the unit laws disagree at " + Pc.show(p);
              }
              slot = ia.at(a);
              return std::nullopt;
            };
            for (auto const& a : A.elements()) {
              if (auto v = set(P(a, r(f(a))), a)) {
                return v;
              }
              if (auto v = set(P(r(cod(a)), a), a)) {
                return v;
              }
            }
            auto found = enumerate_homs(tabulate(Pc), tabulate(A), seed, 2, false);
            if (found.size() != 1) {
              return std::to_string(found.size()) + " additive maps satisfy the unit laws";
            }
            for (auto const& p : Pc.elements()) {
              if (found.front()[ip.at(p)] != ia.at(m(p))) {
                return "another composition differs from m at " + Pc.show(p);
              }
            }
            return std::nullopt;
          }));
    }
    return laws;
  }

  // m(a, a') = k(q(a)) + a', with no laws checked yet.
  template <typename EX, typename EA, typename EB>
  InternalCategory<EA, EB> internal_category(CrossedData<EX, EA, EB> const& d,
                                             ReflexiveGraph<EA, EB> const&  graph) {
    using P       = std::pair<EA, EA>;
    auto pairs    = composable_pairs(d, graph.cod);
    auto const& A = d.e.total();
    Hom<P, EA> m("m", pairs, A, [d, A](P const& p) { return A.add(d.e.k()(d.e.q(p.first)), p.second); });
    return InternalCategory<EA, EB>{graph, pairs, m, Verdict{}};
  }

  template <typename EX, typename EA, typename EB>
  InternalCategory<EA, EB> build_internal_category(CrossedData<EX, EA, EB> const& d,
                                                   EnumerationPlan const&         plan) {
    auto graph  = build_reflexive_graph(d, plan);
    Verdict c2  = check_crossed_condition(d, plan);
    if (c2.failed()) {
      throw CrossedConditionFailed(c2.statement + " fails", c2.witness);
    }
    auto c    = internal_category(d, graph);
    Verdict v = verify_all(category_laws(d, c), plan);
    c.m.record(v);
    c.laws = combine(combine(graph.laws, c2), v);
    return c;
  }

  template <typename EX, typename EA, typename EB>
  InternalCategory<EA, EB> build_internal_category(CrossedData<EX, EA, EB> const& d) {
    return build_internal_category(d, d.e.plan());
  }

  ////////////////////////////////////////////////////////////////////////
  // Internal groupoid
  ////////////////////////////////////////////////////////////////////////

  template <typename EA, typename EB>
  struct InternalGroupoid {
    InternalCategory<EA, EB> category;
    Hom<EA, EA>              t;
    Verdict                  laws;
  };

  template <typename EX, typename EA, typename EB>
  LawList groupoid_laws(CrossedData<EX, EA, EB> const& d, InternalGroupoid<EA, EB> const& g) {
    using P = std::pair<EA, EA>;
    auto const& A   = d.e.total();
    auto const& B   = d.e.base();
    auto const  t   = g.t;
    auto const  m   = g.category.m;
    auto const  cod = g.category.graph.cod;
    auto const  f   = d.e.f();
    auto const  r   = d.e.r();
    std::string anchor = "internal groupoid";
    auto da = std::make_tuple(A.carrier());
    LawList laws = prefixed(hom_laws(t), "t");
    laws.push_back(make_law("inverse-right", "m(a, t(a)) = r(h~(a))", anchor, da,
                            [t, m, cod, r, A](EA const& a) {
                              return detail::differ(A, m(P(a, t(a))), r(cod(a)));
                            }));
    laws.push_back(make_law("inverse-left", "m(t(a), a) = r(f(a))", anchor, da,
                            [t, m, f, r, A](EA const& a) {
                              return detail::differ(A, m(P(t(a), a)), r(f(a)));
                            }));
    laws.push_back(make_law("t-swap", "f(t(a)) = h~(a) and h~(t(a)) = f(a)", anchor, da,
                            [t, f, cod, B](EA const& a) {
                              auto v = detail::differ(B, f(t(a)), cod(a));
                              return v ? v : detail::differ(B, cod(t(a)), f(a));
                            }));
    laws.push_back(make_law("t-involution", "t(t(a)) = a", anchor, da,
                            [t, A](EA const& a) { return detail::differ(A, t(t(a)), a); }));
    laws.push_back(make_law("t-unit", "t(r(b)) = r(b)", anchor, std::make_tuple(B.carrier()),
                            [t, r, A](EB const& b) { return detail::differ(A, t(r(b)), r(b)); }));
    return laws;
  }

  // t(a) = k(-q(a)) + r(h~(a)), with no laws checked yet.
  template <typename EX, typename EA, typename EB>
  InternalGroupoid<EA, EB> internal_groupoid(CrossedData<EX, EA, EB> const& d,
                                             InternalCategory<EA, EB> const& cat) {
    auto const& A = d.e.total();
    auto const& X = d.e.kernel();
    auto cod      = cat.graph.cod;
    Hom<EA, EA> t("t", A, A, [d, cod, A, X](EA const& a) {
      EX   x   = d.e.q(a);
      auto neg = find_inverse(X, x);
      if (!neg) {
        throw GroupoidConditionFailed(X.show(x) + " has no inverse in X", {X.show(x)});
      }
      return A.add(d.e.k()(*neg), d.e.r()(cod(a)));
    });
    return InternalGroupoid<EA, EB>{cat, t, Verdict{}};
  }

  template <typename EX, typename EA, typename EB>
  InternalGroupoid<EA, EB> build_groupoid(CrossedData<EX, EA, EB> const& d,
                                          EnumerationPlan const&         plan) {
    auto cat   = build_internal_category(d, plan);
    Verdict c3 = check_groupoid_condition(d, plan);
    if (c3.failed()) {
      throw GroupoidConditionFailed(c3.statement + " fails: " + c3.detail, c3.witness);
    }
    auto g    = internal_groupoid(d, cat);
    Verdict v = verify_all(groupoid_laws(d, g), plan);
    g.t.record(v);
    g.laws = combine(combine(cat.laws, c3), v);
    return g;
  }

  template <typename EX, typename EA, typename EB>
  InternalGroupoid<EA, EB> build_groupoid(CrossedData<EX, EA, EB> const& d) {
    return build_groupoid(d, d.e.plan());
  }

  ////////////////////////////////////////////////////////////////////////
  // Classification
  ////////////////////////////////////////////////////////////////////////

  enum class CrossedKind { none, precrossed_semimodule, crossed_semimodule, crossed_module };

  inline std::string to_string(CrossedKind k) {
    switch (k) {
      case CrossedKind::none:
        return "None";
      case CrossedKind::precrossed_semimodule:
        return "PrecrossedSemimodule";
      case CrossedKind::crossed_semimodule:
        return "CrossedSemimodule";
      case CrossedKind::crossed_module:
        return "CrossedModule";
    }
    return "?";
  }

  struct Classification {
    CrossedKind kind = CrossedKind::none;
    Verdict     precrossed;
    Verdict     crossed;
    Verdict     groupoid;
  };

  // All three conditions are evaluated; the label is the longest passing
  // prefix of the chain precrossed, crossed, groupoid.
  template <typename EX, typename EA, typename EB>
  Classification classify(CrossedData<EX, EA, EB> const& d, EnumerationPlan const& plan) {
    Classification c;
    c.precrossed = check_precrossed_condition(d, plan);
    c.crossed    = check_crossed_condition(d, plan);
    c.groupoid   = check_groupoid_condition(d, plan);
    if (c.precrossed.passed()) {
      c.kind = CrossedKind::precrossed_semimodule;
      if (c.crossed.passed()) {
        c.kind = CrossedKind::crossed_semimodule;
        if (c.groupoid.passed()) {
          c.kind = CrossedKind::crossed_module;
        }
      }
    }
    return c;
  }

}  // namespace conjcheck
