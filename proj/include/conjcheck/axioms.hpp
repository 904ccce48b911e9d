#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "conjcheck/law.hpp"
#include "conjcheck/structure.hpp"

namespace conjcheck {

  namespace detail {
    template <typename E>
    std::optional<std::string> differ(ConjStructure<E> const& s,
                                      E const&                lhs,
                                      E const&                rhs) {
      if (lhs == rhs) {
        return std::nullopt;
      }
      return s.show(lhs) + " != " + s.show(rhs);
    }

    template <typename E>
    std::optional<std::string> outside(ConjStructure<E> const& s, E const& e) {
      if (s.contains(e)) {
        return std::nullopt;
      }
      return s.show(e) + " lies outside " + s.name();
    }
  }  // namespace detail

  // Closure, associativity and the three conjugation identities.
  template <typename E>
  LawList conjugation_axiom_laws(ConjStructure<E> const& s) {
    auto d  = s.carrier();
    LawList laws;
    laws.push_back(make_law("closure", "x+y and conj(x) lie in the carrier",
                            "conjugation axioms", std::make_tuple(d, d),
                            [s](E const& x, E const& y) {
                              auto v = detail::outside(s, s.add(x, y));
                              return v ? v : detail::outside(s, s.conj(x));
                            }));
    laws.push_back(make_law("associativity", "(x+y)+z = x+(y+z)",
                            "conjugation axioms", std::make_tuple(d, d, d),
                            [s](E const& x, E const& y, E const& z) {
                              return detail::differ(s, s.add(s.add(x, y), z),
                                                    s.add(x, s.add(y, z)));
                            }));
    laws.push_back(make_law("conj-commutes", "conj(x)+x = x+conj(x)",
                            "conjugation axioms", std::make_tuple(d),
                            [s](E const& x) {
                              return detail::differ(s, s.add(s.conj(x), x),
                                                    s.add(x, s.conj(x)));
                            }));
    laws.push_back(make_law("conj-swap", "x+conj(y)+y = y+conj(y)+x",
                            "conjugation axioms", std::make_tuple(d, d),
                            [s](E const& x, E const& y) {
                              return detail::differ(s, s.add(x, s.conj(y), y),
                                                    s.add(y, s.conj(y), x));
                            }));
    laws.push_back(make_law("conj-antihom", "conj(x+y) = conj(y)+conj(x)",
                            "conjugation axioms", std::make_tuple(d, d),
                            [s](E const& x, E const& y) {
                              return detail::differ(s, s.conj(s.add(x, y)),
                                                    s.add(s.conj(y), s.conj(x)));
                            }));
    return laws;
  }

  template <typename E>
  Verdict verify_conjugation_axioms(ConjStructure<E> const& s,
                                    EnumerationPlan const&  plan) {
    return verify_all(conjugation_axiom_laws(s), plan);
  }

  // Neutrality of the identity; empty for semigroups.
  template <typename E>
  LawList identity_laws(ConjStructure<E> const& s) {
    LawList laws;
    if (!s.is_monoid()) {
      return laws;
    }
    laws.push_back(make_fact("identity-member", "0 lies in the carrier",
                             "monoid identity", [s] {
                               return detail::outside(s, s.zero());
                             }));
    laws.push_back(make_law("identity-neutral", "0+x = x = x+0",
                            "monoid identity", std::make_tuple(s.carrier()),
                            [s](E const& x) {
                              auto v = detail::differ(s, s.add(s.zero(), x), x);
                              return v ? v : detail::differ(s, s.add(x, s.zero()), x);
                            }));
    return laws;
  }

  template <typename E>
  LawList cancellation_laws(ConjStructure<E> const& s) {
    auto d = s.carrier();
    auto implication = [s](E const& l1, E const& l2, E const& x, E const& y)
        -> std::optional<std::string> {
      if (l1 == l2 && x != y) {
        return "both sides equal " + s.show(l1);
      }
      return std::nullopt;
    };
    LawList laws;
    laws.push_back(make_law("right-cancel", "x+a = y+a implies x = y",
                            "cancellation", std::make_tuple(d, d, d),
                            [s, implication](E const& x, E const& y, E const& a) {
                              return implication(s.add(x, a), s.add(y, a), x, y);
                            }));
    laws.push_back(make_law("left-cancel", "a+x = a+y implies x = y",
                            "cancellation", std::make_tuple(d, d, d),
                            [s, implication](E const& a, E const& x, E const& y) {
                              return implication(s.add(a, x), s.add(a, y), x, y);
                            }));
    laws.push_back(make_law(
        "conj-cancel", "x+conj(a)+a = y+conj(a)+a implies x = y", "cancellation",
        std::make_tuple(d, d, d),
        [s, implication](E const& x, E const& y, E const& a) {
          return implication(s.add(x, s.conj(a), a), s.add(y, s.conj(a), a), x, y);
        }));
    return laws;
  }

  // Runs the cancellation forms in order and reports the first that fails.
  template <typename E>
  Verdict verify_cancellation(ConjStructure<E> const& s,
                              EnumerationPlan const&  plan) {
    return verify_all(cancellation_laws(s), plan);
  }

  template <typename E>
  LawList derived_identity_laws(ConjStructure<E> const& s) {
    auto d = s.carrier();
    LawList laws;
    laws.push_back(make_law(
        "conj-sum", "conj(x+y)+(x+y) = conj(y)+y+x+conj(x)",
        "derived identities", std::make_tuple(d, d), [s](E const& x, E const& y) {
          E xy = s.add(x, y);
          return detail::differ(s, s.add(s.conj(xy), xy),
                                s.add(s.conj(y), y, x, s.conj(x)));
        }));
    laws.push_back(make_law("right-swap", "x+y+conj(y) = conj(y)+y+x",
                            "derived identities", std::make_tuple(d, d),
                            [s](E const& x, E const& y) {
                              return detail::differ(s, s.add(x, y, s.conj(y)),
                                                    s.add(s.conj(y), y, x));
                            }));
    laws.push_back(make_law("maltsev-term", "p(x,y,y) = p(y,y,x) for p(x,y,z) = x+conj(y)+z",
                            "derived identities", std::make_tuple(d, d),
                            [s](E const& x, E const& y) {
                              auto p = [&s](E const& a, E const& b, E const& c) {
                                return s.add(a, s.conj(b), c);
                              };
                              return detail::differ(s, p(x, y, y), p(y, y, x));
                            }));
    return laws;
  }

  template <typename E>
  Verdict verify_derived_identities(ConjStructure<E> const& s,
                                    EnumerationPlan const&  plan) {
    return verify_all(derived_identity_laws(s), plan);
  }

  // Candidate pool for the Ore search: structural candidates followed by
  // the enumerable window of the carrier.
  template <typename E>
  std::vector<E> ore_pool(ConjStructure<E> const& s,
                          E const&                a,
                          E const&                b,
                          std::size_t             window) {
    std::vector<E> pool{s.add(s.conj(b), b), s.add(s.conj(b), a), a, b,
                        s.add(s.conj(a), a), s.conj(a), s.conj(b)};
    if (s.carrier().is_enumerable()) {
      for (auto const& e : s.carrier().first(window)) {
        pool.push_back(e);
      }
    }
    std::vector<E> out;
    std::set<E>    seen;
    for (auto const& e : pool) {
      if (s.contains(e) && seen.insert(e).second) {
        out.push_back(e);
      }
    }
    return out;
  }

  inline constexpr std::size_t default_ore_window = 16;

  template <typename E>
  LawList ore_laws(ConjStructure<E> const& s, std::size_t window = default_ore_window) {
    auto d = s.carrier();
    LawCheck law = make_law(
        "ore", "a+s = b+t for some s, t", "Ore condition", std::make_tuple(d, d),
        [s, window](E const& a, E const& b) -> std::optional<std::string> {
          auto pool = ore_pool(s, a, b, window);
          std::set<E> right;
          for (auto const& t : pool) {
            right.insert(s.add(b, t));
          }
          for (auto const& x : pool) {
            if (right.count(s.add(a, x)) != 0) {
              return std::nullopt;
            }
          }
          return "no witness among " + std::to_string(pool.size())
                 + " candidates (inconclusive)";
        });
    law.existential = true;
    return {law};
  }

  // Failures are inconclusive: the search is confined to a window.
  template <typename E>
  Verdict verify_ore(ConjStructure<E> const& s,
                     EnumerationPlan const&  plan,
                     std::size_t             window = default_ore_window) {
    if (plan.mode == PlanMode::bounded) {
      window = plan.window;
    }
    return verify_all(ore_laws(s, window), plan);
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms
  ////////////////////////////////////////////////////////////////////////

  template <typename ES, typename ET>
  LawList hom_laws(Hom<ES, ET> const& h) {
    auto d = h.source().carrier();
    auto const& t = h.target();
    LawList laws;
    laws.push_back(make_law("hom-closure", "h(x) lies in the target",
                            "homomorphism", std::make_tuple(d),
                            [h, t](ES const& x) { return detail::outside(t, h(x)); }));
    laws.push_back(make_law("hom-additive", "h(x+y) = h(x)+h(y)", "homomorphism",
                            std::make_tuple(d, d), [h, t](ES const& x, ES const& y) {
                              return detail::differ(t, h(h.source().add(x, y)),
                                                    t.add(h(x), h(y)));
                            }));
    laws.push_back(make_law("hom-conj", "h(conj(x)) = conj(h(x))", "homomorphism",
                            std::make_tuple(d), [h, t](ES const& x) {
                              return detail::differ(t, h(h.source().conj(x)),
                                                    t.conj(h(x)));
                            }));
    if (h.preserves_identity()) {
      laws.push_back(make_fact("hom-identity", "h(0) = 0", "homomorphism", [h, t] {
        return detail::differ(t, h(h.source().zero()), t.zero());
      }));
    }
    return laws;
  }

  // Records the outcome in the hom's write-once cache.
  template <typename ES, typename ET>
  Verdict verify_hom(Hom<ES, ET> const& h, EnumerationPlan const& plan) {
    Verdict v = verify_all(hom_laws(h), plan);
    h.record(v);
    return v;
  }

  // Every row and column of the operation is a permutation of the carrier.
  template <typename E>
  bool is_group_table(ConjStructure<E> const& s) {
    auto elems = s.elements();
    for (auto const& x : elems) {
      std::set<E> row;
      std::set<E> col;
      for (auto const& y : elems) {
        E xy = s.add(x, y);
        E yx = s.add(y, x);
        if (!s.contains(xy) || !s.contains(yx)) {
          return false;
        }
        row.insert(xy);
        col.insert(yx);
      }
      if (row.size() != elems.size() || col.size() != elems.size()) {
        return false;
      }
    }
    return true;
  }

  // Everything `verify` runs on a structure, in report order.
  template <typename E>
  LawList structure_laws(ConjStructure<E> const& s,
                         std::size_t             ore_window = default_ore_window) {
    LawList laws = conjugation_axiom_laws(s);
    laws += identity_laws(s);
    laws += cancellation_laws(s);
    laws += derived_identity_laws(s);
    laws += ore_laws(s, ore_window);
    return laws;
  }

}  // namespace conjcheck
