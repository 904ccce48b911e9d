#pragma once

#include <string>
#include <utility>

#include "conjcheck/builders.hpp"
#include "conjcheck/errors.hpp"
#include "conjcheck/internal.hpp"
#include "conjcheck/schreier.hpp"

namespace conjcheck {

  using Quaternion = RationalQuaternion;
  using Gaussian   = GaussianRational;

  // x / |x| for elements whose norm is a rational square.
  template <typename Q>
  Q normalized(Q const& x) {
    auto n = x.norm2().sqrt_exact();
    if (!n || n->is_zero()) {
      throw Error("the norm of " + ElementText<Q>::show(x) + " is not a nonzero rational");
    }
    return x.scaled(n->inverse());
  }

  ////////////////////////////////////////////////////////////////////////
  // Quaternions: X = {0 < |x| <= 1}, B = unit quaternions, b.x = b x conj(b)
  ////////////////////////////////////////////////////////////////////////

  inline ExternalAction<Quaternion, Quaternion> quaternion_conjugation_action() {
    return ExternalAction<Quaternion, Quaternion>(
        "b.x = b x conj(b)", unit_quaternions(), scaled_unit_quaternions(),
        [](Quaternion const& b, Quaternion const& x) { return b * x * b.conj(); });
  }

  inline SemidirectExtension<Quaternion, Quaternion> quaternion_extension(EnumerationPlan const& plan) {
    return semidirect(quaternion_conjugation_action(), plan, "X x| S3(Q)");
  }

  template <typename EX, typename EA, typename EB>
  Hom<EX, EB> normalization_hom(SchreierExtension<EX, EA, EB> const& e) {
    return Hom<EX, EB>("x/|x|", e.kernel(), e.base(), [](EX const& x) { return normalized(x); });
  }

  inline CrossedData<Quaternion, std::pair<Quaternion, Quaternion>, Quaternion> quaternion_crossed(
      EnumerationPlan const& plan) {
    auto e = quaternion_extension(plan);
    return crossed_data(e, normalization_hom(e));
  }

  // The same X over B = 0: precrossed but not crossed since X is not commutative.
  inline CrossedData<Quaternion, std::pair<Quaternion, std::size_t>, std::size_t>
  quaternion_over_trivial(EnumerationPlan const& plan) {
    auto X = scaled_unit_quaternions();
    auto e = direct_product_extension(X, trivial_monoid(), plan);
    return crossed_data(e, zero_hom(X, trivial_monoid()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Complex numbers: the disk over the circle with the trivial action
  ////////////////////////////////////////////////////////////////////////

  inline ExternalAction<Gaussian, Gaussian> circle_action() {
    return ExternalAction<Gaussian, Gaussian>(
        "b.x = b x conj(b)", unit_circle(), unit_disk(),
        [](Gaussian const& b, Gaussian const& x) { return b * x * b.conj(); });
  }

  inline SemidirectExtension<Gaussian, Gaussian> circle_extension(EnumerationPlan const& plan) {
    return semidirect(circle_action(), plan, "D(Q) x| S1(Q)");
  }

  inline CrossedData<Gaussian, std::pair<Gaussian, Gaussian>, Gaussian> circle_crossed(
      EnumerationPlan const& plan) {
    auto e = circle_extension(plan);
    return crossed_data(e, normalization_hom(e));
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite and natural-number instances
  ////////////////////////////////////////////////////////////////////////

  // X = Q8 over B = 0 with h = 0.
  inline CrossedData<std::size_t, std::pair<std::size_t, std::size_t>, std::size_t> q8_over_trivial() {
    auto ex = EnumerationPlan::exhaustive();
    auto X  = quaternion_group();
    auto B  = trivial_monoid();
    return crossed_data(direct_product_extension(X, B, ex), zero_hom(X, B));
  }

  // X = B = Zn with the trivial action and h = id.
  inline CrossedData<std::size_t, std::pair<std::size_t, std::size_t>, std::size_t> cyclic_identity(
      std::size_t n) {
    auto ex = EnumerationPlan::exhaustive();
    auto Z  = cyclic_group(n);
    return crossed_data(direct_product_extension(Z, Z, ex), identity_hom(Z));
  }

  // X = B = N under +, A = N x N, trivial action, h = id.
  inline CrossedData<Integer, std::pair<Integer, Integer>, Integer> naturals_square(
      EnumerationPlan const& plan) {
    auto N = naturals(NatOp::plus, NatConj::identity);
    return crossed_data(direct_product_extension(N, N, plan), identity_hom(N));
  }

}  // namespace conjcheck
