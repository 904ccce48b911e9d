#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "conjcheck/axioms.hpp"
#include "conjcheck/builders.hpp"
#include "conjcheck/errors.hpp"
#include "conjcheck/finite.hpp"
#include "conjcheck/law.hpp"
#include "conjcheck/structure.hpp"

namespace conjcheck {

  // A split epimorphism (f, r) with kernel k and Schreier retraction q:
  //
  //        k        f
  //   X ------> A ------> B       f r = 1,  a = k q(a) + r f(a)
  //        <- - -   <------
  //          q        r
  template <typename EX, typename EA, typename EB>
  class SchreierExtension {
   public:
    using kernel_type = EX;
    using total_type  = EA;
    using base_type   = EB;

    SchreierExtension(Hom<EX, EA>                  k,
                      Hom<EA, EB>                  f,
                      Hom<EB, EA>                  r,
                      std::function<EX(EA const&)> q,
                      EnumerationPlan              plan)
        : _k(std::move(k)),
          _f(std::move(f)),
          _r(std::move(r)),
          _q(std::move(q)),
          _plan(plan),
          _cache(std::make_shared<Cache>()) {}

    Hom<EX, EA> const& k() const noexcept {
      return _k;
    }
    Hom<EA, EB> const& f() const noexcept {
      return _f;
    }
    Hom<EB, EA> const& r() const noexcept {
      return _r;
    }
    EX q(EA const& a) const {
      return _q(a);
    }
    std::function<EX(EA const&)> const& retraction() const noexcept {
      return _q;
    }

    ConjStructure<EX> const& kernel() const noexcept {
      return _k.source();
    }
    ConjStructure<EA> const& total() const noexcept {
      return _f.source();
    }
    ConjStructure<EB> const& base() const noexcept {
      return _f.target();
    }
    EnumerationPlan const& plan() const noexcept {
      return _plan;
    }

    // The induced action b.x = q(r(b) + k(x)).
    EX act(EB const& b, EX const& x) const {
      return _q(total().add(_r(b), _k(x)));
    }

    // Verdict of the retraction laws, written once at construction.
    std::optional<Verdict> retraction_verdict() const {
      std::lock_guard<std::mutex> lock(_cache->mutex);
      return _cache->laws;
    }
    void record_retraction_verdict(Verdict const& v) const {
      std::lock_guard<std::mutex> lock(_cache->mutex);
      if (!_cache->laws) {
        _cache->laws = v;
      }
    }

   private:
    struct Cache {
      std::mutex             mutex;
      std::optional<Verdict> laws;
    };

    Hom<EX, EA>                  _k;
    Hom<EA, EB>                  _f;
    Hom<EB, EA>                  _r;
    std::function<EX(EA const&)> _q;
    EnumerationPlan              _plan;
    std::shared_ptr<Cache>       _cache;
  };

  ////////////////////////////////////////////////////////////////////////
  // Retraction laws
  ////////////////////////////////////////////////////////////////////////

  template <typename EX, typename EA, typename EB>
  LawList schreier_laws(SchreierExtension<EX, EA, EB> const& e) {
    auto const& X = e.kernel();
    auto const& A = e.total();
    auto const& B = e.base();
    LawList laws;
    laws.push_back(make_law("decomposition", "a = k(q(a)) + r(f(a))", "Schreier retraction",
                            std::make_tuple(A.carrier()), [e, A](EA const& a) {
                              return detail::differ(A, A.add(e.k()(e.q(a)), e.r()(e.f()(a))), a);
                            }));
    laws.push_back(make_law("retraction-unique", "q(k(x) + r(b)) = x", "Schreier retraction",
                            std::make_tuple(X.carrier(), B.carrier()),
                            [e, A, X](EX const& x, EB const& b) {
                              return detail::differ(X, e.q(A.add(e.k()(x), e.r()(b))), x);
                            }));
    return laws;
  }

  template <typename EX, typename EA, typename EB>
  LawList retraction_laws(SchreierExtension<EX, EA, EB> const& e) {
    auto const& X = e.kernel();
    auto const& A = e.total();
    auto const& B = e.base();
    LawList laws = schreier_laws(e);
    std::string anchor = "retraction consequences";
    laws.push_back(make_law("q-k", "q(k(x)) = x", anchor, std::make_tuple(X.carrier()),
                            [e, X](EX const& x) { return detail::differ(X, e.q(e.k()(x)), x); }));
    laws.push_back(make_law("q-r", "q(r(b)) = 0", anchor, std::make_tuple(B.carrier()),
                            [e, X](EB const& b) {
                              return detail::differ(X, e.q(e.r()(b)), X.zero());
                            }));
    laws.push_back(make_fact("q-zero", "q(0) = 0", anchor, [e, X, A] {
      return detail::differ(X, e.q(A.zero()), X.zero());
    }));
    laws.push_back(make_law("kq-swap", "k(q(r(b)+k(x))) + r(b) = r(b) + k(x)", anchor,
                            std::make_tuple(B.carrier(), X.carrier()),
                            [e, A](EB const& b, EX const& x) {
                              EA rbkx = A.add(e.r()(b), e.k()(x));
                              return detail::differ(A, A.add(e.k()(e.q(rbkx)), e.r()(b)), rbkx);
                            }));
    laws.push_back(make_law("q-sum", "q(a+a') = q(a) + q(r(f(a)) + k(q(a')))", anchor,
                            std::make_tuple(A.carrier(), A.carrier()),
                            [e, A, X](EA const& a, EA const& a2) {
                              EX rhs = X.add(e.q(a), e.q(A.add(e.r()(e.f()(a)), e.k()(e.q(a2)))));
                              return detail::differ(X, e.q(A.add(a, a2)), rhs);
                            }));
    laws.push_back(make_law("f-kills-kernel", "f(k(x)) = 0", anchor, std::make_tuple(X.carrier()),
                            [e, B](EX const& x) {
                              return detail::differ(B, e.f()(e.k()(x)), B.zero());
                            }));
    if (A.is_finite() && X.is_finite() && B.is_finite()) {
      laws.push_back(make_fact(
          "cokernel", "f identifies exactly the elements identified by the congruence generated by k",
          anchor, [e, A, X]() -> std::optional<std::string> {
            auto table = tabulate(A);
            auto index = index_of(A);
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            for (auto const& x : X.elements()) {
              pairs.emplace_back(index.at(e.k()(x)), index.at(A.zero()));
            }
            auto cong  = generated_congruence(table, pairs);
            auto elems = A.elements();
            for (std::size_t i = 0; i < elems.size(); ++i) {
              for (std::size_t j = 0; j < elems.size(); ++j) {
                bool same_f = e.f()(elems[i]) == e.f()(elems[j]);
                if (same_f != (cong[i] == cong[j])) {
                  return A.show(elems[i]) + " and " + A.show(elems[j])
                         + (same_f ? " share an f-image but are not identified"
                                   : " are identified but have different f-images");
                }
              }
            }
            return std::nullopt;
          }));
    }
    return laws;
  }

  template <typename EX, typename EA, typename EB>
  Verdict verify_retraction_laws(SchreierExtension<EX, EA, EB> const& e,
                                 EnumerationPlan const&               plan) {
    return verify_all(retraction_laws(e), plan);
  }

  template <typename EX, typename EA, typename EB>
  LawList retraction_conjugation_laws(SchreierExtension<EX, EA, EB> const& e) {
    auto const& A = e.total();
    auto const& X = e.kernel();
    return {make_law("q-conj", "q(conj(a)) = f(conj(a)).conj(q(a))", "retraction and conjugation",
                     std::make_tuple(A.carrier()), [e, A, X](EA const& a) {
                       EA abar = A.conj(a);
                       return detail::differ(X, e.q(abar), e.act(e.f()(abar), X.conj(e.q(a))));
                     })};
  }

  template <typename EX, typename EA, typename EB>
  Verdict verify_retraction_conjugation(SchreierExtension<EX, EA, EB> const& e,
                                        EnumerationPlan const&               plan) {
    return verify_all(retraction_conjugation_laws(e), plan);
  }

  ////////////////////////////////////////////////////////////////////////
  // Finding the retraction
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    template <typename E>
    std::vector<std::string> shown(ConjStructure<E> const& s, std::vector<E> const& xs) {
      std::vector<std::string> out;
      for (auto const& x : xs) {
        out.push_back(s.show(x));
      }
      return out;
    }

    template <typename EX, typename EA, typename EB>
    void check_split_and_kernel(Hom<EX, EA> const& k,
                                Hom<EA, EB> const& f,
                                Hom<EB, EA> const& r,
                                EnumerationPlan const& plan) {
      auto const& A = f.source();
      auto const& B = f.target();
      auto split = forall("split", "f(r(b)) = b", plan, std::make_tuple(B.carrier()),
                          [&](EB const& b) { return f(r(b)) == b; });
      if (split.failed()) {
        throw NotSplit("f(r(b)) != b", split.witness);
      }
      auto const& X = k.source();
      if (A.is_finite() && X.is_finite()) {
        auto ker = kernel_elements(f);
        std::set<EA> image;
        for (auto const& x : X.elements()) {
          EA kx = k(x);
          if (!image.insert(kx).second) {
            throw NotKernel("k is not injective", {X.show(x)});
          }
        }
        std::set<EA> kernel(ker.begin(), ker.end());
        for (auto const& a : kernel) {
          if (!image.count(a)) {
            throw NotKernel("kernel element outside the image of k", {A.show(a)});
          }
        }
        for (auto const& a : image) {
          if (!kernel.count(a)) {
            throw NotKernel("image of k leaves the kernel of f", {A.show(a)});
          }
        }
        return;
      }
      auto kills = forall("kernel", "f(k(x)) = 0", plan, std::make_tuple(X.carrier()),
                          [&](EX const& x) { return f(k(x)) == B.zero(); });
      if (kills.failed()) {
        throw NotKernel("image of k leaves the kernel of f", kills.witness);
      }
    }

    template <typename EX, typename EA, typename EB>
    SchreierExtension<EX, EA, EB> finish(SchreierExtension<EX, EA, EB> e) {
      e.record_retraction_verdict(verify_retraction_laws(e, e.plan()));
      return e;
    }
  }  // namespace detail

  // Finite carriers: solves a = k(x) + r(f(a)) for every a by search and
  // stores q as a table.
  // Each a has exactly one x with a = k(x) + r(f(a)). Needs a finite X.
  template <typename EX, typename EA, typename EB>
  LawList decomposition_laws(Hom<EX, EA> const& k, Hom<EA, EB> const& f, Hom<EB, EA> const& r) {
    auto const& A = f.source();
    auto const& X = k.source();
    return {make_law("decomposition-count", "a = k(x) + r(f(a)) for exactly one x", "Schreier retraction",
                     std::make_tuple(A.carrier()),
                     [k, f, r, A, X](EA const& a) -> std::optional<std::string> {
                       EA rfa = r(f(a));
                       std::vector<EX> found;
                       for (auto const& x : X.elements()) {
                         if (A.add(k(x), rfa) == a) {
                           found.push_back(x);
                         }
                       }
                       if (found.size() == 1) {
                         return std::nullopt;
                       }
                       std::string msg = std::to_string(found.size()) + " decompositions";
                       for (auto const& x : found) {
                         msg += " " + X.show(x);
                       }
                       return msg;
                     })};
  }

  template <typename EX, typename EA, typename EB>
  SchreierExtension<EX, EA, EB> find_schreier_retraction(Hom<EX, EA> const&     k,
                                                         Hom<EA, EB> const&     f,
                                                         Hom<EB, EA> const&     r,
                                                         EnumerationPlan const& plan) {
    detail::check_split_and_kernel(k, f, r, plan);
    auto const& A = f.source();
    auto const& X = k.source();
    if (!A.is_finite() || !X.is_finite()) {
      throw PlanError("retraction search needs finite carriers; supply a candidate q");
    }
    auto xs    = X.elements();
    auto table = std::make_shared<std::map<EA, EX>>();
    for (auto const& a : A.elements()) {
      EA rfa = r(f(a));
      std::vector<EX> found;
      for (auto const& x : xs) {
        if (A.add(k(x), rfa) == a) {
          found.push_back(x);
        }
      }
      if (found.size() != 1) {
        std::vector<std::string> witness{A.show(a)};
        for (auto const& s : detail::shown(X, found)) {
          witness.push_back(s);
        }
        throw NotSchreier(A.show(a) + " has " + std::to_string(found.size())
                              + " decompositions k(x) + r(f(a))",
                          witness);
      }
      table->emplace(a, found.front());
    }
    auto q = [table, A](EA const& a) {
      auto it = table->find(a);
      if (it == table->end()) {
        throw std::out_of_range("q is undefined at " + A.show(a));
      }
      return it->second;
    };
    return detail::finish(SchreierExtension<EX, EA, EB>(k, f, r, q, plan));
  }

  // Any carriers: checks that `candidate` satisfies both defining laws of
  // the retraction under the plan (which makes it the unique one there).
  template <typename EX, typename EA, typename EB>
  SchreierExtension<EX, EA, EB> find_schreier_retraction(Hom<EX, EA> const&           k,
                                                         Hom<EA, EB> const&           f,
                                                         Hom<EB, EA> const&           r,
                                                         EnumerationPlan const&       plan,
                                                         std::function<EX(EA const&)> candidate) {
    detail::check_split_and_kernel(k, f, r, plan);
    SchreierExtension<EX, EA, EB> e(k, f, r, std::move(candidate), plan);
    Verdict v = verify_all(schreier_laws(e), plan);
    if (v.failed()) {
      throw NotSchreier(v.statement + " fails", v.witness);
    }
    return detail::finish(std::move(e));
  }

  // The table of q on a finite extension.
  template <typename EX, typename EA, typename EB>
  std::vector<std::pair<EA, EX>> retraction_table(SchreierExtension<EX, EA, EB> const& e) {
    std::vector<std::pair<EA, EX>> out;
    for (auto const& a : e.total().elements()) {
      out.emplace_back(a, e.q(a));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // External actions
  ////////////////////////////////////////////////////////////////////////

  template <typename EB, typename EX>
  class ExternalAction {
   public:
    ExternalAction(std::string                                name,
                   ConjStructure<EB>                          B,
                   ConjStructure<EX>                          X,
                   std::function<EX(EB const&, EX const&)> act)
        : _name(std::move(name)), _B(std::move(B)), _X(std::move(X)), _act(std::move(act)) {}

    std::string const& name() const noexcept {
      return _name;
    }
    ConjStructure<EB> const& acting() const noexcept {
      return _B;
    }
    ConjStructure<EX> const& acted() const noexcept {
      return _X;
    }
    EX operator()(EB const& b, EX const& x) const {
      return _act(b, x);
    }

   private:
    std::string                              _name;
    ConjStructure<EB>                        _B;
    ConjStructure<EX>                        _X;
    std::function<EX(EB const&, EX const&)> _act;
  };

  template <typename EB, typename EX>
  ExternalAction<EB, EX> trivial_action(ConjStructure<EB> const& B, ConjStructure<EX> const& X) {
    return ExternalAction<EB, EX>("trivial", B, X, [](EB const&, EX const& x) { return x; });
  }

  template <typename EB, typename EX>
  LawList action_laws(ExternalAction<EB, EX> const& phi) {
    auto const& B = phi.acting();
    auto const& X = phi.acted();
    auto db = B.carrier();
    auto dx = X.carrier();
    std::string anchor = "monoid action";
    LawList laws;
    laws.push_back(make_law("action-closure", "b.x lies in X", anchor, std::make_tuple(db, dx),
                            [phi, X](EB const& b, EX const& x) {
                              return detail::outside(X, phi(b, x));
                            }));
    laws.push_back(make_law("action-unit", "0.x = x", anchor, std::make_tuple(dx),
                            [phi, B, X](EX const& x) {
                              return detail::differ(X, phi(B.zero(), x), x);
                            }));
    laws.push_back(make_law("action-compose", "(b+b').x = b.(b'.x)", anchor,
                            std::make_tuple(db, db, dx),
                            [phi, B, X](EB const& b, EB const& b2, EX const& x) {
                              return detail::differ(X, phi(B.add(b, b2), x), phi(b, phi(b2, x)));
                            }));
    laws.push_back(make_law("action-additive", "b.(x+y) = b.x + b.y", anchor,
                            std::make_tuple(db, dx, dx),
                            [phi, X](EB const& b, EX const& x, EX const& y) {
                              return detail::differ(X, phi(b, X.add(x, y)),
                                                    X.add(phi(b, x), phi(b, y)));
                            }));
    laws.push_back(make_law("action-zero", "b.0 = 0", anchor, std::make_tuple(db),
                            [phi, X](EB const& b) {
                              return detail::differ(X, phi(b, X.zero()), X.zero());
                            }));
    return laws;
  }

  template <typename EB, typename EX>
  Verdict verify_action(ExternalAction<EB, EX> const& phi, EnumerationPlan const& plan) {
    return verify_all(action_laws(phi), plan);
  }

  // phi(b)(x) = q(r(b) + k(x)); the action laws are checked under the
  // extension's plan.
  template <typename EX, typename EA, typename EB>
  ExternalAction<EB, EX> action_from_extension(SchreierExtension<EX, EA, EB> const& e) {
    ExternalAction<EB, EX> phi("induced by " + e.total().name(), e.base(), e.kernel(),
                               [e](EB const& b, EX const& x) { return e.act(b, x); });
    Verdict v = verify_action(phi, e.plan());
    if (v.failed()) {
      throw ActionLawFailure(v.statement + " fails", v.witness);
    }
    return phi;
  }

  // The semidirect-product forms of the three conjugation identities.
  // `with_variant` adds the reading of the middle one with b1 + conj(b1) on
  // both sides.
  template <typename EB, typename EX>
  LawList compatibility_laws(ExternalAction<EB, EX> const& phi, bool with_variant = false) {
    auto const& B = phi.acting();
    auto const& X = phi.acted();
    auto db = B.carrier();
    auto dx = X.carrier();
    std::string anchor = "action compatibility";
    LawList laws;
    laws.push_back(make_law("compat-conj-commutes", "conj(b).(conj(x)+x) = x + (b+conj(b)).conj(x)",
                            anchor, std::make_tuple(db, dx),
                            [phi, B, X](EB const& b, EX const& x) {
                              EX xb = X.conj(x);
                              return detail::differ(X, phi(B.conj(b), X.add(xb, x)),
                                                    X.add(x, phi(B.add(b, B.conj(b)), xb)));
                            }));
    laws.push_back(make_law(
        "compat-conj-swap",
        "x1 + (b1+conj(b1)).(conj(x1)+x2) = x2 + (b2+conj(b1)).(conj(x1)+x1)", anchor,
        std::make_tuple(dx, dx, db, db),
        [phi, B, X](EX const& x1, EX const& x2, EB const& b1, EB const& b2) {
          EX x1b = X.conj(x1);
          EB b1b = B.conj(b1);
          return detail::differ(X, X.add(x1, phi(B.add(b1, b1b), X.add(x1b, x2))),
                                X.add(x2, phi(B.add(b2, b1b), X.add(x1b, x1))));
        }));
    laws.push_back(make_law("compat-conj-antihom",
                            "(conj(b2)+conj(b1)).conj(b1.x2) = conj(b2).conj(x2)", anchor,
                            std::make_tuple(dx, db, db),
                            [phi, B, X](EX const& x2, EB const& b1, EB const& b2) {
                              EB b2b = B.conj(b2);
                              return detail::differ(
                                  X, phi(B.add(b2b, B.conj(b1)), X.conj(phi(b1, x2))),
                                  phi(b2b, X.conj(x2)));
                            }));
    if (with_variant) {
      laws.push_back(make_law(
          "compat-conj-swap-variant",
          "x1 + (b1+conj(b1)).(conj(x1)+x2) = x2 + (b1+conj(b1)).(conj(x1)+x1)", anchor,
          std::make_tuple(dx, dx, db),
          [phi, B, X](EX const& x1, EX const& x2, EB const& b1) {
            EX x1b = X.conj(x1);
            EB s   = B.add(b1, B.conj(b1));
            return detail::differ(X, X.add(x1, phi(s, X.add(x1b, x2))),
                                  X.add(x2, phi(s, X.add(x1b, x1))));
          }));
    }
    return laws;
  }

  template <typename EB, typename EX>
  Verdict verify_action_compatibility(ExternalAction<EB, EX> const& phi,
                                      EnumerationPlan const&        plan) {
    return verify_all(compatibility_laws(phi), plan);
  }

  // Verdict of the variant reading alone, reported next to the main one.
  template <typename EB, typename EX>
  Verdict verify_swap_variant(ExternalAction<EB, EX> const& phi, EnumerationPlan const& plan) {
    auto laws = compatibility_laws(phi, true);
    return laws.back().check(plan);
  }

  ////////////////////////////////////////////////////////////////////////
  // Semidirect products
  ////////////////////////////////////////////////////////////////////////

  // X x| B with (x1,b1)+(x2,b2) = (x1 + b1.x2, b1+b2) and
  // conj(x,b) = (conj(b).conj(x), conj(b)); no laws are checked.
  template <typename EB, typename EX>
  ConjStructure<std::pair<EX, EB>> semidirect_structure(ExternalAction<EB, EX> const& phi,
                                                        std::string name = {}) {
    using P = std::pair<EX, EB>;
    auto const& B = phi.acting();
    auto const& X = phi.acted();
    if (name.empty()) {
      name = X.name() + "x|" + B.name();
    }
    StructureParts<P> parts;
    parts.name = name;
    parts.op   = [phi, B, X](P const& p, P const& q) {
      return P(X.add(p.first, phi(p.second, q.first)), B.add(p.second, q.second));
    };
    parts.conj = [phi, B, X](P const& p) {
      EB bb = B.conj(p.second);
      return P(phi(bb, X.conj(p.first)), bb);
    };
    parts.identity = P(X.zero(), B.zero());
    if (X.has_inverse_candidates() && B.has_inverse_candidates()) {
      parts.inverse = [phi, B, X](P const& p) -> std::optional<P> {
        auto bi = B.inverse_candidate(p.second);
        if (!bi) {
          return std::nullopt;
        }
        auto xi = X.inverse_candidate(phi(*bi, p.first));
        if (!xi) {
          return std::nullopt;
        }
        return P(*xi, *bi);
      };
    }
    parts.declared_group = X.declared_group() && B.declared_group();
    return ConjStructure<P>(product_domain(X.carrier(), B.carrier(), name), std::move(parts));
  }

  template <typename EB, typename EX>
  using SemidirectExtension = SchreierExtension<EX, std::pair<EX, EB>, EB>;

  // The canonical extension X -> X x| B -> B of a compatible action, with
  // q the first projection. Throws CompatibilityFailure or
  // CancellationFailure with the failing tuple.
  template <typename EB, typename EX>
  SemidirectExtension<EB, EX> semidirect(ExternalAction<EB, EX> const& phi,
                                         EnumerationPlan const&        plan,
                                         std::string                   name = {}) {
    using P = std::pair<EX, EB>;
    Verdict compat = verify_action_compatibility(phi, plan);
    if (compat.failed()) {
      throw CompatibilityFailure(compat.statement + " fails", compat.witness);
    }
    auto A = semidirect_structure(phi, std::move(name));
    Verdict cancel = verify_cancellation(A, plan);
    if (cancel.failed()) {
      throw CancellationFailure(cancel.statement + " fails", cancel.witness);
    }
    auto const& B = phi.acting();
    auto const& X = phi.acted();
    EX x0 = X.zero();
    EB b0 = B.zero();
    Hom<EX, P> k("k", X, A, [b0](EX const& x) { return P(x, b0); });
    Hom<P, EB> f("f", A, B, [](P const& p) { return p.second; });
    Hom<EB, P> r("r", B, A, [x0](EB const& b) { return P(x0, b); });
    SemidirectExtension<EB, EX> e(k, f, r, [](P const& p) { return p.first; }, plan);
    return detail::finish(std::move(e));
  }

  // X -> X x B -> B with the trivial action, q found by search on finite
  // carriers and taken to be the first projection otherwise.
  template <typename EX, typename EB>
  SchreierExtension<EX, std::pair<EX, EB>, EB> direct_product_extension(
      ConjStructure<EX> const& X,
      ConjStructure<EB> const& B,
      EnumerationPlan const&   plan) {
    using P = std::pair<EX, EB>;
    auto A  = product_structure(X, B);
    EX x0   = X.zero();
    EB b0   = B.zero();
    Hom<EX, P> k("k", X, A, [b0](EX const& x) { return P(x, b0); });
    Hom<P, EB> f("f", A, B, [](P const& p) { return p.second; });
    Hom<EB, P> r("r", B, A, [x0](EB const& b) { return P(x0, b); });
    if (X.is_finite() && B.is_finite()) {
      return find_schreier_retraction(k, f, r, plan);
    }
    return find_schreier_retraction<EX, P, EB>(k, f, r, plan,
                                               [](P const& p) { return p.first; });
  }

  ////////////////////////////////////////////////////////////////////////
  // Round trip: extension -> action -> semidirect product -> extension
  ////////////////////////////////////////////////////////////////////////

  template <typename EX, typename EA, typename EB>
  LawList roundtrip_laws(SchreierExtension<EX, EA, EB> const& e,
                         SemidirectExtension<EB, EX> const&   e2) {
    using P = std::pair<EX, EB>;
    auto const& A  = e.total();
    auto const& A2 = e2.total();
    Hom<EA, P> alpha("alpha", A, A2, [e](EA const& a) { return P(e.q(a), e.f()(a)); });
    Hom<P, EA> beta("beta", A2, A, [e, A](P const& p) {
      return A.add(e.k()(p.first), e.r()(p.second));
    });
    std::string anchor = "extensions and actions";
    LawList laws = prefixed(hom_laws(alpha), "alpha");
    laws += prefixed(hom_laws(beta), "beta");
    laws.push_back(make_law("beta-alpha", "beta(alpha(a)) = a", anchor,
                            std::make_tuple(A.carrier()), [alpha, beta, A](EA const& a) {
                              return detail::differ(A, beta(alpha(a)), a);
                            }));
    laws.push_back(make_law("alpha-beta", "alpha(beta(x,b)) = (x,b)", anchor,
                            std::make_tuple(A2.carrier()), [alpha, beta, A2](P const& p) {
                              return detail::differ(A2, alpha(beta(p)), p);
                            }));
    laws.push_back(make_law("alpha-k", "alpha(k(x)) = (x,0)", anchor,
                            std::make_tuple(e.kernel().carrier()),
                            [alpha, e, e2, A2](EX const& x) {
                              return detail::differ(A2, alpha(e.k()(x)), e2.k()(x));
                            }));
    laws.push_back(make_law("alpha-r", "alpha(r(b)) = (0,b)", anchor,
                            std::make_tuple(e.base().carrier()),
                            [alpha, e, e2, A2](EB const& b) {
                              return detail::differ(A2, alpha(e.r()(b)), e2.r()(b));
                            }));
    laws.push_back(make_law("f-alpha", "pi_B(alpha(a)) = f(a)", anchor,
                            std::make_tuple(A.carrier()), [alpha, e](EA const& a) {
                              return detail::differ(e.base(), alpha(a).second, e.f()(a));
                            }));
    return laws;
  }

  // Builds the induced action and its semidirect product and checks that
  // alpha(a) = (q(a), f(a)) and beta(x,b) = k(x) + r(b) are mutually
  // inverse homomorphisms commuting with k, f and r.
  template <typename EX, typename EA, typename EB>
  Verdict roundtrip_iso(SchreierExtension<EX, EA, EB> const& e, EnumerationPlan const& plan) {
    auto phi = action_from_extension(e);
    auto e2  = semidirect(phi, plan);
    return verify_all(roundtrip_laws(e, e2), plan);
  }

  template <typename EX, typename EA, typename EB>
  Verdict roundtrip_iso(SchreierExtension<EX, EA, EB> const& e) {
    return roundtrip_iso(e, e.plan());
  }

}  // namespace conjcheck
