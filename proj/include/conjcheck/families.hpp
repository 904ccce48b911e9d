#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "conjcheck/admissibility.hpp"
#include "conjcheck/builders.hpp"
#include "conjcheck/finite.hpp"
#include "conjcheck/schreier.hpp"

namespace conjcheck {

  using FiniteHom       = Hom<std::size_t, std::size_t>;
  using FiniteExtension = SchreierExtension<std::size_t, std::size_t, std::size_t>;
  using FiniteDiagram   = AdmissibilityDiagram<std::size_t, std::size_t, std::size_t, std::size_t>;

  inline FiniteHom table_hom(std::string name, Finite const& s, Finite const& t,
                             std::vector<std::size_t> values) {
    return FiniteHom(std::move(name), s, t,
                     [v = std::move(values)](std::size_t x) { return v.at(x); });
  }

  struct FiniteSplitEpi {
    Finite    total;
    FiniteHom k;
    FiniteHom f;
    FiniteHom r;
  };

  // X x| B as a table with elements "x.b" (index x*|B| + b), with k, f, r.
  inline FiniteSplitEpi semidirect_table(Finite const& X, Finite const& B,
                                         std::function<std::size_t(std::size_t, std::size_t)> const& act,
                                         std::string name) {
    std::size_t nx = X.size();
    std::size_t nb = B.size();
    auto id = [nb](std::size_t x, std::size_t b) { return x * nb + b; };
    FiniteTable t;
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t b = 0; b < nb; ++b) {
        t.names.push_back(X.show(x) + "." + B.show(b));
      }
    }
    t.op.assign(nx * nb, std::vector<std::size_t>(nx * nb));
    for (std::size_t x1 = 0; x1 < nx; ++x1) {
      for (std::size_t b1 = 0; b1 < nb; ++b1) {
        for (std::size_t x2 = 0; x2 < nx; ++x2) {
          for (std::size_t b2 = 0; b2 < nb; ++b2) {
            t.op[id(x1, b1)][id(x2, b2)] = id(X.add(x1, act(b1, x2)), B.add(b1, b2));
          }
        }
        std::size_t bb = B.conj(b1);
        t.conj.push_back(id(act(bb, X.conj(x1)), bb));
      }
    }
    if (X.is_monoid() && B.is_monoid()) {
      t.identity = id(X.zero(), B.zero());
    }
    Finite A   = table_structure(std::move(name), std::move(t));
    std::size_t x0 = X.zero();
    std::size_t b0 = B.zero();
    return {A, FiniteHom("k", X, A, [id, b0](std::size_t x) { return id(x, b0); }),
            FiniteHom("f", A, B, [nb](std::size_t a) { return a % nb; }),
            FiniteHom("r", B, A, [id, x0](std::size_t b) { return id(x0, b); })};
  }

  // The same with the retraction found by search.
  inline FiniteExtension finite_semidirect(Finite const& X, Finite const& B,
                                           std::function<std::size_t(std::size_t, std::size_t)> act,
                                           std::string name) {
    auto s = semidirect_table(X, B, act, std::move(name));
    return find_schreier_retraction(s.k, s.f, s.r, EnumerationPlan::exhaustive());
  }

  inline FiniteExtension finite_direct(Finite const& X, Finite const& B) {
    return finite_semidirect(X, B, [](std::size_t, std::size_t x) { return x; },
                             X.name() + "x" + B.name());
  }

  struct FamilyDiagram {
    std::string     label;
    FiniteDiagram   d;
    FiniteExtension left;
    FiniteExtension right;
  };

  // Split extensions of order at most six over the bases 0, Z2 and Z3.
  inline std::vector<std::pair<Finite, std::vector<FiniteExtension>>> small_extensions() {
    auto Z1 = trivial_monoid();
    auto Z2 = cyclic_group(2);
    auto Z3 = cyclic_group(3);
    std::vector<std::pair<Finite, std::vector<FiniteExtension>>> out;
    out.push_back({Z1, {finite_direct(Z2, Z1), finite_direct(Z3, Z1)}});
    out.push_back({Z2,
                   {finite_direct(Z1, Z2), finite_direct(Z2, Z2), finite_direct(Z3, Z2),
                    finite_semidirect(Z3, Z2,
                                      [Z3](std::size_t b, std::size_t x) { return b ? Z3.conj(x) : x; },
                                      "Z3x|Z2")}});
    out.push_back({Z3, {finite_direct(Z1, Z3), finite_direct(Z2, Z3)}});
    return out;
  }

  inline std::vector<Finite> small_codomains() {
    return {cyclic_group(2), cyclic_group(3), cyclic_group(4), symmetric_group3(),
            quaternion_group()};
  }

  // Every diagram A -> B <- C -> D with A, C from small_extensions() over
  // a common base, alpha any homomorphism and gamma any homomorphism with
  // gamma s = alpha r, at most `per_cell` per (A, C, D).
  inline std::vector<FamilyDiagram> admissibility_family(std::size_t per_cell = static_cast<std::size_t>(-1)) {
    std::vector<FamilyDiagram> out;
    for (auto const& [B, exts] : small_extensions()) {
      for (auto const& left : exts) {
        for (auto const& right : exts) {
          auto const& A = left.total();
          auto const& C = right.total();
          for (auto const& D : small_codomains()) {
            std::size_t kept = 0;
            auto ta = tabulate(A);
            auto tc = tabulate(C);
            auto td = tabulate(D);
            for (auto const& alpha : all_homs(ta, td)) {
              PartialMap seed(C.size());
              for (auto const& b : B.elements()) {
                seed[right.r()(b)] = alpha[left.r()(b)];
              }
              for (auto const& gamma : enumerate_homs(tc, td, seed)) {
                if (kept++ >= per_cell) {
                  break;
                }
                std::vector<std::size_t> beta;
                for (auto const& b : B.elements()) {
                  beta.push_back(alpha[left.r()(b)]);
                }
                FiniteDiagram d{left.f(),
                                left.r(),
                                right.f(),
                                right.r(),
                                table_hom("alpha", A, D, alpha),
                                table_hom("beta", B, D, beta),
                                table_hom("gamma", C, D, gamma)};
                std::string label = A.name() + " ->" + B.name() + "<- " + C.name() + " => "
                                    + D.name() + " #" + std::to_string(kept);
                out.push_back({label, d, left, right});
              }
              if (kept >= per_cell) {
                break;
              }
            }
          }
        }
      }
    }
    return out;
  }

}  // namespace conjcheck
