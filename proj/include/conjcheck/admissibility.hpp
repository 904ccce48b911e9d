#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "conjcheck/axioms.hpp"
#include "conjcheck/builders.hpp"
#include "conjcheck/equivalence.hpp"
#include "conjcheck/errors.hpp"
#include "conjcheck/finite.hpp"
#include "conjcheck/law.hpp"
#include "conjcheck/schreier.hpp"

namespace conjcheck {

  //         f          g
  //    A ------> B <------ C        f r = 1 = g s
  //      <------   ------>          alpha r = beta = gamma s
  //         r   \  |  /  s
  //          alpha beta gamma
  //                D
  template <typename EA, typename EB, typename EC, typename ED>
  struct AdmissibilityDiagram {
    Hom<EA, EB> f;
    Hom<EB, EA> r;
    Hom<EC, EB> g;
    Hom<EB, EC> s;
    Hom<EA, ED> alpha;
    Hom<EB, ED> beta;
    Hom<EC, ED> gamma;

    ConjStructure<EA> const& A() const noexcept {
      return f.source();
    }
    ConjStructure<EB> const& B() const noexcept {
      return f.target();
    }
    ConjStructure<EC> const& C() const noexcept {
      return g.source();
    }
    ConjStructure<ED> const& D() const noexcept {
      return alpha.target();
    }
  };

  template <typename EA, typename EB, typename EC, typename ED>
  LawList diagram_laws(AdmissibilityDiagram<EA, EB, EC, ED> const& d) {
    auto const& B  = d.B();
    auto const& D  = d.D();
    auto        db = std::make_tuple(B.carrier());
    std::string anchor = "admissibility diagram";
    LawList laws = prefixed(hom_laws(d.f), "f");
    laws += prefixed(hom_laws(d.r), "r");
    laws += prefixed(hom_laws(d.g), "g");
    laws += prefixed(hom_laws(d.s), "s");
    laws += prefixed(hom_laws(d.alpha), "alpha");
    laws += prefixed(hom_laws(d.beta), "beta");
    laws += prefixed(hom_laws(d.gamma), "gamma");
    laws.push_back(make_law("f-split", "f(r(b)) = b", anchor, db,
                            [d, B](EB const& b) { return detail::differ(B, d.f(d.r(b)), b); }));
    laws.push_back(make_law("g-split", "g(s(b)) = b", anchor, db,
                            [d, B](EB const& b) { return detail::differ(B, d.g(d.s(b)), b); }));
    laws.push_back(make_law("alpha-r", "alpha(r(b)) = beta(b)", anchor, db, [d, D](EB const& b) {
      return detail::differ(D, d.alpha(d.r(b)), d.beta(b));
    }));
    laws.push_back(make_law("gamma-s", "gamma(s(b)) = beta(b)", anchor, db, [d, D](EB const& b) {
      return detail::differ(D, d.gamma(d.s(b)), d.beta(b));
    }));
    return laws;
  }

  // Throws DiagramError with the failing law and witness.
  template <typename EA, typename EB, typename EC, typename ED>
  void verify_diagram(AdmissibilityDiagram<EA, EB, EC, ED> const& d, EnumerationPlan const& plan) {
    Verdict v = verify_all(diagram_laws(d), plan);
    if (v.failed()) {
      throw DiagramError(v.law + ": " + v.statement + " fails", v.witness);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Pullback
  ////////////////////////////////////////////////////////////////////////

  template <typename EA, typename EC>
  struct PullbackObject {
    using Pair = std::pair<EA, EC>;
    ConjStructure<Pair> P;
    Hom<Pair, EA>       p1;
    Hom<Pair, EC>       p2;
    Hom<EA, Pair>       e1;  // a -> (a, s(f(a)))
    Hom<EC, Pair>       e2;  // c -> (r(g(c)), c)
  };

  namespace detail {
    template <typename EA, typename EB, typename EC, typename ED>
    PullbackObject<EA, EC> pullback_over(AdmissibilityDiagram<EA, EB, EC, ED> const& d,
                                         ConjStructure<std::pair<EA, EC>>          P) {
      using Pair = std::pair<EA, EC>;
      auto f = d.f;
      auto g = d.g;
      auto r = d.r;
      auto s = d.s;
      return PullbackObject<EA, EC>{
          P,
          Hom<Pair, EA>("p1", P, d.A(), [](Pair const& p) { return p.first; }),
          Hom<Pair, EC>("p2", P, d.C(), [](Pair const& p) { return p.second; }),
          Hom<EA, Pair>("e1", d.A(), P, [f, s](EA const& a) { return Pair(a, s(f(a))); }),
          Hom<EC, Pair>("e2", d.C(), P, [g, r](EC const& c) { return Pair(r(g(c)), c); })};
    }

    template <typename EA, typename EB, typename EC, typename ED>
    StructureParts<std::pair<EA, EC>> pullback_parts(AdmissibilityDiagram<EA, EB, EC, ED> const& d,
                                                     std::string name) {
      using Pair = std::pair<EA, EC>;
      auto const& A = d.A();
      auto const& C = d.C();
      StructureParts<Pair> parts;
      parts.name = std::move(name);
      parts.op   = [A, C](Pair const& x, Pair const& y) {
        return Pair(A.add(x.first, y.first), C.add(x.second, y.second));
      };
      parts.conj = [A, C](Pair const& x) { return Pair(A.conj(x.first), C.conj(x.second)); };
      if (A.is_monoid() && C.is_monoid()) {
        parts.identity = Pair(A.zero(), C.zero());
      }
      return parts;
    }
  }  // namespace detail

  // Finite carriers: the materialized set of pairs with f(a) = g(c), closure
  // checked.
  template <typename EA, typename EB, typename EC, typename ED>
  PullbackObject<EA, EC> build_pullback(AdmissibilityDiagram<EA, EB, EC, ED> const& d) {
    using Pair = std::pair<EA, EC>;
    if (!d.A().is_finite() || !d.C().is_finite()) {
      throw PlanError("pullback of parametric carriers needs the Schreier legs");
    }
    std::string name = d.A().name() + "x_" + d.B().name() + d.C().name();
    std::vector<Pair> pairs;
    for (auto const& a : d.A().elements()) {
      EB b = d.f(a);
      for (auto const& c : d.C().elements()) {
        if (d.g(c) == b) {
          pairs.emplace_back(a, c);
        }
      }
    }
    auto full = ConjStructure<Pair>(product_domain(d.A().carrier(), d.C().carrier(), name),
                                    detail::pullback_parts(d, name));
    return detail::pullback_over(d, substructure(name, full, std::move(pairs)));
  }

  // Any carriers: pairs are enumerated and drawn as
  // (k(x) + r(b), l(y) + s(b)) from the legs' Schreier decompositions.
  template <typename EA, typename EB, typename EC, typename ED, typename EX, typename EY>
  PullbackObject<EA, EC> build_pullback(AdmissibilityDiagram<EA, EB, EC, ED> const& d,
                                        SchreierExtension<EX, EA, EB> const&      ef,
                                        SchreierExtension<EY, EC, EB> const&      eg) {
    using Pair = std::pair<EA, EC>;
    using XBY  = std::pair<EX, std::pair<EB, EY>>;
    auto const& A = d.A();
    auto const& C = d.C();
    std::string name = A.name() + "x_" + d.B().name() + C.name();
    auto base = product_domain(ef.kernel().carrier(),
                               product_domain(d.B().carrier(), eg.kernel().carrier()));
    auto f = d.f;
    auto g = d.g;
    auto dom = image_domain<Pair, XBY>(
        name, base,
        [ef, eg, A, C, d](XBY const& t) {
          EB const& b = t.second.first;
          return Pair(A.add(ef.k()(t.first), d.r(b)), C.add(eg.k()(t.second.second), d.s(b)));
        },
        [A, C, f, g](Pair const& p) {
          return A.contains(p.first) && C.contains(p.second) && f(p.first) == g(p.second);
        },
        [A, C](Pair const& p) { return "(" + A.show(p.first) + "," + C.show(p.second) + ")"; },
        [A, C](std::string_view s) {
          auto xs = text::split_top_level(text::unwrap(s, '(', ')'), ',');
          if (xs.size() != 2) {
            throw ParseError("expected a pair, got '" + std::string(s) + "'");
          }
          return Pair(A.parse(xs[0]), C.parse(xs[1]));
        });
    return detail::pullback_over(d, ConjStructure<Pair>(std::move(dom), detail::pullback_parts(d, name)));
  }

  // Closure of the pair carrier and e1 r = e2 s.
  template <typename EA, typename EB, typename EC, typename ED>
  LawList pullback_laws(AdmissibilityDiagram<EA, EB, EC, ED> const& d,
                        PullbackObject<EA, EC> const&               pb) {
    using Pair = std::pair<EA, EC>;
    auto const& P = pb.P;
    std::string anchor = "pullback";
    LawList laws;
    laws.push_back(make_law("pullback-closure", "p+p' and conj(p) lie in the pullback", anchor,
                            std::make_tuple(P.carrier(), P.carrier()),
                            [P](Pair const& p, Pair const& q) {
                              auto v = detail::outside(P, P.add(p, q));
                              return v ? v : detail::outside(P, P.conj(p));
                            }));
    laws.push_back(make_law("e1r-e2s", "e1(r(b)) = e2(s(b))", anchor,
                            std::make_tuple(d.B().carrier()), [d, pb, P](EB const& b) {
                              return detail::differ(P, pb.e1(d.r(b)), pb.e2(d.s(b)));
                            }));
    return laws;
  }

  // Indices of pullback elements outside the substructure generated by the
  // images of e1 and e2 (empty when they are jointly epimorphic here).
  template <typename EA, typename EC>
  std::vector<std::pair<EA, EC>> not_generated_by_injections(PullbackObject<EA, EC> const& pb) {
    auto index = index_of(pb.P);
    std::vector<std::size_t> gens;
    for (auto const& a : pb.e1.source().elements()) {
      gens.push_back(index.at(pb.e1(a)));
    }
    for (auto const& c : pb.e2.source().elements()) {
      gens.push_back(index.at(pb.e2(c)));
    }
    auto inside = generated(tabulate(pb.P), gens);
    std::set<std::size_t> in(inside.begin(), inside.end());
    std::vector<std::pair<EA, EC>> out;
    auto elems = pb.P.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (!in.count(i)) {
        out.push_back(elems[i]);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Brute-force oracle
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t default_oracle_bound = 10000;

  template <typename EA, typename EC, typename ED>
  struct OracleResult {
    bool                                        admissible = false;
    std::string                                 reason;
    // phi on the pullback, when admissible.
    std::map<std::pair<EA, EC>, ED>             phi;
    // Number of homomorphisms found, capped at 2.
    std::size_t                                 extensions = 0;
    std::vector<std::pair<EA, EC>>              not_generated;
  };

  // Searches every conjugation-preserving homomorphism on the pullback with
  // phi(e1(a)) = alpha(a) and phi(e2(c)) = gamma(c) (and phi(0) = 0 between
  // monoids); admissible iff exactly one exists.
  template <typename EA, typename EB, typename EC, typename ED>
  OracleResult<EA, EC, ED> check_admissible_oracle(AdmissibilityDiagram<EA, EB, EC, ED> const& d,
                                                   std::size_t bound = default_oracle_bound) {
    if (!d.A().is_finite() || !d.C().is_finite() || !d.D().is_finite()) {
      throw PlanError("the admissibility oracle needs finite carriers");
    }
    auto pb = build_pullback(d);
    auto const& P = pb.P;
    if (P.size() > bound) {
      throw CarrierTooLarge("pullback has " + std::to_string(P.size())
                            + " elements, oracle bound is " + std::to_string(bound));
    }
    OracleResult<EA, EC, ED> out;
    out.not_generated = not_generated_by_injections(pb);
    auto ip = index_of(P);
    auto id = index_of(d.D());
    auto dl = d.D().elements();
    PartialMap seed(P.size());
    auto set = [&](std::pair<EA, EC> const& p, ED const& v) {
      auto& slot = seed[ip.at(p)];
      if (slot && *slot != id.at(v)) {
        out.reason = "forced values clash at " + P.show(p) + ": " + d.D().show(dl[*slot])
                     + " and " + d.D().show(v);
        return false;
      }
      slot = id.at(v);
      return true;
    };
    if (P.is_monoid() && d.D().is_monoid() && !set(P.zero(), d.D().zero())) {
      return out;
    }
    for (auto const& a : d.A().elements()) {
      if (!set(pb.e1(a), d.alpha(a))) {
        return out;
      }
    }
    for (auto const& c : d.C().elements()) {
      if (!set(pb.e2(c), d.gamma(c))) {
        return out;
      }
    }
    auto found     = enumerate_homs(tabulate(P), tabulate(d.D()), seed, 2);
    out.extensions = found.size();
    if (found.empty()) {
      out.reason = "no homomorphism extends alpha and gamma";
      return out;
    }
    if (found.size() > 1) {
      out.reason = "the extension is not unique";
      if (!out.not_generated.empty()) {
        out.reason += "; " + P.show(out.not_generated.front())
                      + " is not generated by the images of e1 and e2";
      }
      return out;
    }
    out.admissible = true;
    auto elems = P.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      out.phi.emplace(elems[i], dl[found.front()[i]]);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // The admissibility criterion
  ////////////////////////////////////////////////////////////////////////

  template <typename EP, typename ED>
  struct AdmissibleMap {
    Verdict                      verdict;
    std::function<ED(EP const&)> phi;  // set when the verdict passes
  };

  namespace detail {
    // Every x in D with x + v = t: all of them on finite carriers, the
    // structure's solver otherwise.
    template <typename E>
    std::vector<E> right_solutions(ConjStructure<E> const& D, E const& t, E const& v) {
      std::vector<E> out;
      if (D.is_finite()) {
        for (auto const& x : D.elements()) {
          if (D.add(x, v) == t) {
            out.push_back(x);
          }
        }
        return out;
      }
      if (D.can_solve_right()) {
        if (auto x = D.solve_right(t, v); x && D.contains(*x) && D.add(*x, v) == t) {
          out.push_back(*x);
        }
      }
      return out;
    }
  }  // namespace detail

  template <typename EA, typename EB, typename EC, typename ED>
  LawList admissibility_criterion_laws(AdmissibilityDiagram<EA, EB, EC, ED> const& d,
                                       PullbackObject<EA, EC> const&               pb) {
    using Pair = std::pair<EA, EC>;
    auto const& D = d.D();
    auto const& P = pb.P;
    auto        dp = std::make_tuple(P.carrier());
    std::string anchor = "admissibility criterion";
    auto solve = [d, D](Pair const& p) {
      ED bb = d.beta(d.f(p.first));
      ED cb = D.conj(bb);
      return detail::right_solutions(D, D.add(d.alpha(p.first), cb, d.gamma(p.second)),
                                     D.add(cb, bb));
    };
    LawList laws;
    laws.push_back(make_law("phi-unique", "x + conj(beta(b)) + beta(b) = alpha(a) + conj(beta(b)) + gamma(c) has one solution x",
                            anchor, dp, [solve](Pair const& p) -> std::optional<std::string> {
                              auto xs = solve(p);
                              if (xs.size() == 1) {
                                return std::nullopt;
                              }
                              return std::to_string(xs.size()) + " solutions";
                            }));
    laws.push_back(make_law(
        "phi-additive",
        "alpha(a1+a2) + conj(beta(b1+b2)) + gamma(c1+c2) = alpha(a1) + conj(beta(b1)) + gamma(c1) + alpha(a2) + conj(beta(b2)) + gamma(c2)",
        anchor, std::make_tuple(P.carrier(), P.carrier()), [d, D](Pair const& p, Pair const& q) {
          auto term = [&](EA const& a, EC const& c) {
            return D.add(d.alpha(a), D.conj(d.beta(d.f(a))), d.gamma(c));
          };
          EA a = d.A().add(p.first, q.first);
          EC c = d.C().add(p.second, q.second);
          return detail::differ(D, term(a, c), D.add(term(p.first, p.second), term(q.first, q.second)));
        }));
    if (!D.is_finite()) {
      laws += prefixed(cancellation_laws(D), "D");
    }
    // phi(p) compared with `expected`, or why phi(p) is undefined.
    auto against = [solve, D, P](Pair const& p, ED const& expected) -> std::optional<std::string> {
      auto xs = solve(p);
      if (xs.size() != 1) {
        return "phi" + P.show(p) + " is undefined: the defining equation has " + std::to_string(xs.size()) + " solutions";
      }
      return detail::differ(D, xs.front(), expected);
    };
    laws.push_back(make_law("phi-e1", "phi(a, s(f(a))) = alpha(a)", anchor,
                            std::make_tuple(d.A().carrier()), [d, pb, against](EA const& a) {
                              return against(pb.e1(a), d.alpha(a));
                            }));
    laws.push_back(make_law("phi-e2", "phi(r(g(c)), c) = gamma(c)", anchor,
                            std::make_tuple(d.C().carrier()), [d, pb, against](EC const& c) {
                              return against(pb.e2(c), d.gamma(c));
                            }));
    if (P.is_monoid() && D.is_monoid()) {
      laws.push_back(make_fact("phi-pointed", "phi(0,0) = 0", anchor, [D, P, against] {
        return against(P.zero(), D.zero());
      }));
    }
    return laws;
  }

  // Solves for phi, then runs additivity and the restriction laws; on a pass
  // phi(a,c) is the unique solution.
  template <typename EA, typename EB, typename EC, typename ED>
  AdmissibleMap<std::pair<EA, EC>, ED> check_admissibility_criterion(
      AdmissibilityDiagram<EA, EB, EC, ED> const& d,
      PullbackObject<EA, EC> const&               pb,
      EnumerationPlan const&                      plan) {
    using Pair = std::pair<EA, EC>;
    AdmissibleMap<Pair, ED> out;
    out.verdict = verify_all(admissibility_criterion_laws(d, pb), plan);
    if (out.verdict.passed()) {
      auto const& D = d.D();
      out.phi = [d, D](Pair const& p) {
        ED bb = d.beta(d.f(p.first));
        ED cb = D.conj(bb);
        auto xs = detail::right_solutions(D, D.add(d.alpha(p.first), cb, d.gamma(p.second)),
                                          D.add(cb, bb));
        if (xs.size() != 1) {
          throw DiagramError("the defining equation has " + std::to_string(xs.size()) + " solutions here");
        }
        return xs.front();
      };
    }
    return out;
  }

  template <typename EA, typename EB, typename EC, typename ED>
  AdmissibleMap<std::pair<EA, EC>, ED> check_admissibility_criterion(
      AdmissibilityDiagram<EA, EB, EC, ED> const& d,
      EnumerationPlan const&                      plan) {
    return check_admissibility_criterion(d, build_pullback(d), plan);
  }

  // The oracle's answer as a verdict.
  template <typename EA, typename EC, typename ED>
  Verdict oracle_verdict(OracleResult<EA, EC, ED> const& o, std::size_t pullback_size) {
    if (o.admissible) {
      return Verdict::holds(EnumerationPlan::exhaustive(), pullback_size);
    }
    return Verdict::failure("admissible", "a unique phi restricts to alpha and gamma", {},
                            o.reason);
  }

  // Oracle when the carriers are finite and the pullback is within bound,
  // the criterion otherwise.
  template <typename EA, typename EB, typename EC, typename ED>
  Verdict admissibility_verdict(AdmissibilityDiagram<EA, EB, EC, ED> const& d,
                                PullbackObject<EA, EC> const&               pb,
                                EnumerationPlan const&                      plan,
                                std::size_t bound = default_oracle_bound) {
    if (d.A().is_finite() && d.C().is_finite() && d.D().is_finite() && pb.P.size() <= bound) {
      return oracle_verdict(check_admissible_oracle(d, bound), pb.P.size());
    }
    return check_admissibility_criterion(d, pb, plan).verdict;
  }

  ////////////////////////////////////////////////////////////////////////
  // Commutation of morphisms
  ////////////////////////////////////////////////////////////////////////

  template <typename E1, typename E2, typename ED>
  LawList huq_laws(Hom<E1, ED> const& k1, Hom<E2, ED> const& k2) {
    auto const& D = k1.target();
    return {make_law("huq", "k1(x) + k2(y) = k2(y) + k1(x)", "Huq commutation",
                     std::make_tuple(k1.source().carrier(), k2.source().carrier()),
                     [k1, k2, D](E1 const& x, E2 const& y) {
                       return detail::differ(D, D.add(k1(x), k2(y)), D.add(k2(y), k1(x)));
                     })};
  }

  template <typename E1, typename E2, typename ED>
  Verdict check_huq_commute(Hom<E1, ED> const& k1, Hom<E2, ED> const& k2,
                            EnumerationPlan const& plan) {
    return verify_all(huq_laws(k1, k2), plan);
  }

  // If alpha k and gamma l commute, phi(a,c) = alpha(k(q_f(a))) + gamma(c)
  // is a homomorphism on the pullback restricting to alpha and gamma.
  // Throws HuqFailed otherwise.
  template <typename EA, typename EB, typename EC, typename ED, typename EX, typename EY>
  AdmissibleMap<std::pair<EA, EC>, ED> check_huq_admissibility(
      AdmissibilityDiagram<EA, EB, EC, ED> const& d,
      PullbackObject<EA, EC> const&               pb,
      SchreierExtension<EX, EA, EB> const&        ef,
      SchreierExtension<EY, EC, EB> const&        eg,
      EnumerationPlan const&                      plan) {
    using Pair = std::pair<EA, EC>;
    Verdict huq = check_huq_commute(compose(d.alpha, ef.k()), compose(d.gamma, eg.k()), plan);
    if (huq.failed()) {
      throw HuqFailed(huq.statement + " fails", huq.witness);
    }
    auto const& D = d.D();
    Hom<Pair, ED> phi("phi", pb.P, D, [d, ef, D](Pair const& p) {
      return D.add(d.alpha(ef.k()(ef.q(p.first))), d.gamma(p.second));
    });
    std::string anchor = "Huq commutation";
    LawList laws = prefixed(hom_laws(phi), "phi");
    laws.push_back(make_law("phi-e1", "phi(e1(a)) = alpha(a)", anchor,
                            std::make_tuple(d.A().carrier()), [d, D, pb, phi](EA const& a) {
                              return detail::differ(D, phi(pb.e1(a)), d.alpha(a));
                            }));
    laws.push_back(make_law("phi-e2", "phi(e2(c)) = gamma(c)", anchor,
                            std::make_tuple(d.C().carrier()), [d, D, pb, phi](EC const& c) {
                              return detail::differ(D, phi(pb.e2(c)), d.gamma(c));
                            }));
    return {combine(huq, verify_all(laws, plan)), phi.map()};
  }

  ////////////////////////////////////////////////////////////////////////
  // One-sided and reflexive criteria
  ////////////////////////////////////////////////////////////////////////

  struct OneSidedReport {
    Verdict extension;         // phi with phi e1 = alpha, phi e2 = gamma
    Verdict kernel_extension;  // phi with phi <k,0> = alpha k, phi e2 = gamma
    Verdict identity;          // alpha k(g(c).x) + gamma(c) = gamma(c) + alpha k(x)
    // Pullback elements outside the substructure generated by <k,0> and e2
    // images (finite carriers only).
    std::vector<std::string> not_generated;

    bool agree() const {
      return extension.passed() == kernel_extension.passed()
             && extension.passed() == identity.passed();
    }
  };

  template <typename EA, typename EB, typename EC, typename ED, typename EX>
  LawList one_sided_identity_laws(AdmissibilityDiagram<EA, EB, EC, ED> const& d,
                                  SchreierExtension<EX, EA, EB> const&        ef) {
    auto const& D = d.D();
    return {make_law("one-sided", "alpha(k(g(c).x)) + gamma(c) = gamma(c) + alpha(k(x))",
                     "one-sided admissibility",
                     std::make_tuple(d.C().carrier(), ef.kernel().carrier()),
                     [d, ef, D](EC const& c, EX const& x) {
                       ED ak = d.alpha(ef.k()(ef.act(d.g(c), x)));
                       return detail::differ(D, D.add(ak, d.gamma(c)),
                                             D.add(d.gamma(c), d.alpha(ef.k()(x))));
                     })};
  }

  // phi(a,c) = alpha(k(q(a))) + gamma(c): the only candidate once
  // phi <k,0> = alpha k and phi e2 = gamma, since (a,c) = (k q(a), 0) + e2(c).
  template <typename EA, typename EB, typename EC, typename ED, typename EX>
  LawList kernel_candidate_laws(AdmissibilityDiagram<EA, EB, EC, ED> const& d,
                                PullbackObject<EA, EC> const&               pb,
                                SchreierExtension<EX, EA, EB> const&        ef,
                                bool                                        with_e1) {
    using Pair = std::pair<EA, EC>;
    auto const& D  = d.D();
    auto const& C  = d.C();
    Hom<Pair, ED> phi("phi", pb.P, D, [d, ef, D](Pair const& p) {
      return D.add(d.alpha(ef.k()(ef.q(p.first))), d.gamma(p.second));
    });
    std::string anchor = "one-sided admissibility";
    LawList laws = prefixed(hom_laws(phi), "phi");
    laws.push_back(make_law("phi-k", "phi(k(x), 0) = alpha(k(x))", anchor,
                            std::make_tuple(ef.kernel().carrier()), [d, ef, D, C, phi](EX const& x) {
                              return detail::differ(D, phi(Pair(ef.k()(x), C.zero())),
                                                    d.alpha(ef.k()(x)));
                            }));
    laws.push_back(make_law("phi-e2", "phi(e2(c)) = gamma(c)", anchor,
                            std::make_tuple(C.carrier()), [d, D, pb, phi](EC const& c) {
                              return detail::differ(D, phi(pb.e2(c)), d.gamma(c));
                            }));
    if (with_e1) {
      laws.push_back(make_law("phi-e1", "phi(e1(a)) = alpha(a)", anchor,
                              std::make_tuple(d.A().carrier()), [d, D, pb, phi](EA const& a) {
                                return detail::differ(D, phi(pb.e1(a)), d.alpha(a));
                              }));
    }
    return laws;
  }

  // The three equivalent conditions for a diagram whose left leg (f, r) is
  // Schreier. On finite carriers the two existence statements are decided
  // by search over all homomorphisms on the pullback; otherwise by checking
  // the forced candidate alpha k q(a) + gamma(c).
  template <typename EA, typename EB, typename EC, typename ED, typename EX>
  OneSidedReport check_one_sided_admissibility(AdmissibilityDiagram<EA, EB, EC, ED> const& d,
                                               PullbackObject<EA, EC> const&               pb,
                                               SchreierExtension<EX, EA, EB> const&        ef,
                                               EnumerationPlan const&                      plan) {
    using Pair = std::pair<EA, EC>;
    OneSidedReport out;
    out.identity = verify_all(one_sided_identity_laws(d, ef), plan);
    auto const& P = pb.P;
    auto const& D = d.D();
    bool finite = P.is_finite() && D.is_finite();
    if (!finite) {
      out.extension        = verify_all(kernel_candidate_laws(d, pb, ef, true), plan);
      out.kernel_extension = verify_all(kernel_candidate_laws(d, pb, ef, false), plan);
      return out;
    }
    auto ip = index_of(P);
    auto id = index_of(D);
    auto exists = [&](std::vector<std::pair<Pair, ED>> const& forced, std::string const& slug,
                      std::string const& statement) {
      PartialMap seed(P.size());
      std::vector<std::size_t> gens;
      for (auto const& [p, v] : forced) {
        auto& slot = seed[ip.at(p)];
        gens.push_back(ip.at(p));
        if (slot && *slot != id.at(v)) {
          return std::pair(Verdict::failure(slug, statement, {P.show(p)}, "forced values clash"),
                           gens);
        }
        slot = id.at(v);
      }
      auto found = enumerate_homs(tabulate(P), tabulate(D), seed, 1);
      if (found.empty()) {
        return std::pair(Verdict::failure(slug, statement, {}, "no homomorphism meets the constraints"),
                         gens);
      }
      return std::pair(Verdict::holds(EnumerationPlan::exhaustive(), P.size()), gens);
    };
    std::vector<std::pair<Pair, ED>> two;
    for (auto const& c : d.C().elements()) {
      two.emplace_back(pb.e2(c), d.gamma(c));
    }
    if (P.is_monoid() && D.is_monoid()) {
      two.emplace_back(P.zero(), D.zero());
    }
    auto one = two;
    for (auto const& a : d.A().elements()) {
      one.emplace_back(pb.e1(a), d.alpha(a));
    }
    for (auto const& x : ef.kernel().elements()) {
      two.emplace_back(Pair(ef.k()(x), d.C().zero()), d.alpha(ef.k()(x)));
    }
    out.extension = exists(one, "extension", "some phi has phi e1 = alpha and phi e2 = gamma").first;
    auto [v2, gens] = exists(two, "kernel-extension",
                             "some phi has phi <k,0> = alpha k and phi e2 = gamma");
    out.kernel_extension = v2;
    auto inside = generated(tabulate(P), gens);
    std::set<std::size_t> in(inside.begin(), inside.end());
    auto elems = P.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (!in.count(i)) {
        out.not_generated.push_back(P.show(elems[i]));
      }
    }
    return out;
  }

  struct ReflexiveReport {
    Verdict admissible;
    Verdict identity;  // alpha k(h(y).x) + gamma k(y) = gamma k(y) + alpha k(x), h = g k
    bool    agree() const {
      return admissible.passed() == identity.passed();
    }
  };

  // A = C and s = r, with (f, r) Schreier.
  template <typename EA, typename EB, typename ED, typename EX>
  ReflexiveReport check_reflexive_admissibility(AdmissibilityDiagram<EA, EB, EA, ED> const& d,
                                                PullbackObject<EA, EA> const&               pb,
                                                SchreierExtension<EX, EA, EB> const&        ef,
                                                EnumerationPlan const&                      plan) {
    auto const& D = d.D();
    auto const& X = ef.kernel();
    ReflexiveReport out;
    out.identity = verify_all(
        {make_law("reflexive-admissible",
                  "alpha(k(h(y).x)) + gamma(k(y)) = gamma(k(y)) + alpha(k(x)) with h = g k",
                  "reflexive admissibility", std::make_tuple(X.carrier(), X.carrier()),
                  [d, ef, D](EX const& x, EX const& y) {
                    EB hy = d.g(ef.k()(y));
                    ED gy = d.gamma(ef.k()(y));
                    return detail::differ(D, D.add(d.alpha(ef.k()(ef.act(hy, x))), gy),
                                          D.add(gy, d.alpha(ef.k()(x))));
                  })},
        plan);
    out.admissible = admissibility_verdict(d, pb, plan);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Smith commutation against Huq commutation of normalizations
  ////////////////////////////////////////////////////////////////////////

  struct SmithHuqReport {
    Verdict smith;  // admissibility of the relation diagram
    Verdict huq;    // r1 ker(r2) against s2 ker(s1)
    bool    agree() const {
      return smith.passed() == huq.passed();
    }
  };

  template <typename E>
  using RelationDiagram =
      AdmissibilityDiagram<std::pair<E, E>, E, std::pair<E, E>, E>;

  //   R --r2--> X <--s1-- S,  alpha = r1, beta = 1, gamma = s2
  template <typename E>
  RelationDiagram<E> relation_diagram(EquivalenceRelationOnObject<E> const& R,
                                      EquivalenceRelationOnObject<E> const& S) {
    return RelationDiagram<E>{R.r2(), R.diagonal(), S.r1(), S.diagonal(),
                              R.r1(), identity_hom(R.object()), S.r2()};
  }

  template <typename E>
  SmithHuqReport smith_is_huq_harness(EquivalenceRelationOnObject<E> const& R,
                                      EquivalenceRelationOnObject<E> const& S,
                                      EnumerationPlan const&                plan) {
    if (!R.is_schreier()) {
      throw NotSchreierRelation(R.name() + " is not a Schreier relation", R.schreier().witness);
    }
    if (!S.is_schreier()) {
      throw NotSchreierRelation(S.name() + " is not a Schreier relation", S.schreier().witness);
    }
    auto d = relation_diagram(R, S);
    verify_diagram(d, plan);
    SmithHuqReport out;
    if (R.relation().is_finite() && S.relation().is_finite()) {
      out.smith = admissibility_verdict(d, build_pullback(d), plan);
    } else {
      out.smith = check_admissibility_criterion(
                      d, build_pullback(d, R.second_leg(), S.first_leg()), plan)
                      .verdict;
    }
    out.huq = check_huq_commute(compose(R.r1(), R.second_leg().k()),
                                compose(S.r2(), S.first_leg().k()), plan);
    return out;
  }

}  // namespace conjcheck
