#include <catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "conjcheck/families.hpp"
#include "conjcheck/schreier.hpp"
#include "conjcheck/showcase.hpp"

using namespace conjcheck;

namespace {

  auto const ex = EnumerationPlan::exhaustive();

  // Z3 x| Z2 with the generator of Z2 acting by negation.
  std::size_t negate_if(std::size_t b, std::size_t x) {
    return b ? (3 - x) % 3 : x;
  }

  std::vector<FiniteExtension> finite_cases() {
    auto Z2 = cyclic_group(2);
    auto Z3 = cyclic_group(3);
    auto Q8 = quaternion_group();
    return {finite_direct(Z2, Z3), finite_direct(Z3, Z2), finite_direct(Q8, Z2),
            finite_direct(Z2, Q8), finite_direct(Q8, Z3), finite_direct(Z2, Z2),
            finite_semidirect(Z3, Z2, negate_if, "Z3x|Z2")};
  }

  void check_all(LawList const& laws, EnumerationPlan const& plan) {
    for (auto const& r : run_laws(laws, plan)) {
      INFO(r.law.slug << " " << r.verdict.summary());
      CHECK(r.verdict.passed());
    }
  }

}  // namespace

TEST_CASE("direct products have the projection as retraction") {
  for (auto const& e : finite_cases()) {
    if (e.total().name().find("x|") != std::string::npos) {
      continue;
    }
    INFO(e.total().name());
    std::size_t nb = e.base().size();
    for (auto const& [a, x] : retraction_table(e)) {
      CHECK(x == a / nb);
      CHECK(e.f()(a) == a % nb);
    }
    auto phi = action_from_extension(e);
    for (auto b : e.base().elements()) {
      for (auto x : e.kernel().elements()) {
        CHECK(phi(b, x) == x);
      }
    }
  }
}

TEST_CASE("the semidirect table multiplies as (x1 + b1.x2, b1 + b2)") {
  auto e = finite_cases().back();
  auto const& A = e.total();
  REQUIRE(A.size() == 6);
  for (std::size_t x1 = 0; x1 < 3; ++x1) {
    for (std::size_t b1 = 0; b1 < 2; ++b1) {
      for (std::size_t x2 = 0; x2 < 3; ++x2) {
        for (std::size_t b2 = 0; b2 < 2; ++b2) {
          std::size_t x = (x1 + negate_if(b1, x2)) % 3;
          std::size_t b = (b1 + b2) % 2;
          CHECK(A.add(x1 * 2 + b1, x2 * 2 + b2) == x * 2 + b);
        }
      }
    }
  }
  CHECK_FALSE(A.add(1 * 2 + 0, 0 * 2 + 1) == A.add(0 * 2 + 1, 1 * 2 + 0));
  auto phi = action_from_extension(e);
  for (std::size_t b = 0; b < 2; ++b) {
    for (std::size_t x = 0; x < 3; ++x) {
      CHECK(phi(b, x) == negate_if(b, x));
    }
  }
}

TEST_CASE("retraction laws, their conjugation law and the round trip hold on every finite case") {
  for (auto const& e : finite_cases()) {
    INFO(e.total().name());
    REQUIRE(e.retraction_verdict().has_value());
    CHECK(e.retraction_verdict()->passed());
    check_all(retraction_laws(e), ex);
    check_all(retraction_conjugation_laws(e), ex);
    auto phi = action_from_extension(e);
    check_all(action_laws(phi), ex);
    check_all(compatibility_laws(phi), ex);
    check_all(roundtrip_laws(e, semidirect(phi, ex)), ex);
    CHECK(roundtrip_iso(e).outcome == Outcome::holds_exhaustive);
  }
}

TEST_CASE("Z6 split over Z2 through 2x and 3b") {
  auto Z6 = cyclic_group(6);
  auto Z3 = cyclic_group(3);
  auto Z2 = cyclic_group(2);
  auto k  = table_hom("k", Z3, Z6, {0, 2, 4});
  auto f  = table_hom("f", Z6, Z2, {0, 1, 0, 1, 0, 1});
  auto r  = table_hom("r", Z2, Z6, {0, 3});
  auto e  = find_schreier_retraction(k, f, r, ex);
  for (std::size_t a = 0; a < 6; ++a) {
    // a = 2x + 3(a mod 2) (mod 6)
    std::size_t x = 0;
    while ((2 * x + 3 * (a % 2)) % 6 != a) {
      ++x;
    }
    CHECK(e.q(a) == x);
  }
  check_all(retraction_laws(e), ex);
  CHECK(roundtrip_iso(e).passed());
}

TEST_CASE("S3 split over the sign") {
  auto S3 = symmetric_group3();
  auto Z3 = cyclic_group(3);
  auto Z2 = cyclic_group(2);
  // e r r2 s rs r2s
  auto k = table_hom("k", Z3, S3, {0, 1, 2});
  auto f = table_hom("f", S3, Z2, {0, 0, 0, 1, 1, 1});
  auto r = table_hom("r", Z2, S3, {0, 3});
  auto e = find_schreier_retraction(k, f, r, ex);
  check_all(retraction_laws(e), ex);
  check_all(retraction_conjugation_laws(e), ex);
  auto phi = action_from_extension(e);
  for (std::size_t x = 0; x < 3; ++x) {
    CHECK(phi(1, x) == (3 - x) % 3);
  }
  CHECK(roundtrip_iso(e).passed());
}

TEST_CASE("a chain under max has a split epi without unique decompositions") {
  auto chain = [](std::string name, std::size_t n) {
    FiniteTable t;
    for (std::size_t i = 0; i < n; ++i) {
      t.names.push_back(std::to_string(i));
      t.conj.push_back(i);
    }
    t.op.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        t.op[i][j] = std::max(i, j);
      }
    }
    t.identity = 0;
    return table_structure(std::move(name), std::move(t));
  };
  auto X = chain("X", 2);
  auto A = chain("A", 3);
  auto B = chain("B", 2);
  auto k = table_hom("k", X, A, {0, 1});
  auto f = table_hom("f", A, B, {0, 0, 1});
  auto r = table_hom("r", B, A, {0, 2});
  for (auto const& h : {k, f, r}) {
    CHECK(verify_hom(h, ex).passed());
  }
  try {
    find_schreier_retraction(k, f, r, ex);
    FAIL("expected NotSchreier");
  } catch (NotSchreier const& err) {
    // 2 = max(0, 2) = max(1, 2)
    CHECK(err.witness() == std::vector<std::string>{"2", "0", "1"});
  }
  auto v = verify_all(decomposition_laws(k, f, r), ex);
  REQUIRE(v.failed());
  CHECK(v.detail == "2 decompositions 0 1");
}

TEST_CASE("split epis are validated before the search") {
  auto Z2 = cyclic_group(2);
  auto Z4 = cyclic_group(4);
  // Z2 -> Z4 -> Z2 does not split.
  auto k = table_hom("k", Z2, Z4, {0, 2});
  auto f = table_hom("f", Z4, Z2, {0, 1, 0, 1});
  auto r = table_hom("r", Z2, Z4, {0, 0});
  CHECK_THROWS_AS(find_schreier_retraction(k, f, r, ex), NotSplit);

  auto Z22 = klein_group();
  auto f2  = table_hom("f", Z22, Z2, {0, 1, 0, 1});
  auto r2  = table_hom("r", Z2, Z22, {0, 1});
  auto bad = table_hom("k", Z2, Z22, {0, 1});
  CHECK_THROWS_AS(find_schreier_retraction(bad, f2, r2, ex), NotKernel);
  auto good = table_hom("k", Z2, Z22, {0, 2});
  CHECK_NOTHROW(find_schreier_retraction(good, f2, r2, ex));
}

TEST_CASE("semidirect rejects an action that is not compatible") {
  auto Z3 = cyclic_group(3);
  auto Z2 = cyclic_group(2);
  ExternalAction<std::size_t, std::size_t> shift("shift", Z2, Z3,
                                                 [](std::size_t b, std::size_t x) { return (x + b) % 3; });
  CHECK(verify_action(shift, ex).failed());
  CHECK_THROWS_AS(semidirect(shift, ex), CompatibilityFailure);
}

TEST_CASE("the swap variant of compatibility agrees with the derived law on a group action") {
  auto Z3  = cyclic_group(3);
  auto Z2  = cyclic_group(2);
  ExternalAction<std::size_t, std::size_t> neg("neg", Z2, Z3, negate_if);
  CHECK(verify_action_compatibility(neg, ex).passed());
  CHECK(verify_swap_variant(neg, ex).passed());
}

TEST_CASE("the quaternion extension passes its retraction laws under sampling") {
  auto plan = EnumerationPlan::sampled(2000, 11);
  auto e    = quaternion_extension(plan);
  check_all(retraction_laws(e), plan);
  check_all(retraction_conjugation_laws(e), plan);
  auto phi = action_from_extension(e);
  check_all(action_laws(phi), plan);
  CHECK(roundtrip_iso(e, plan).outcome == Outcome::holds_sampled);

  // The action is b x conj(b) and q is the first coordinate.
  std::mt19937_64 rng(5);
  for (int n = 0; n < 200; ++n) {
    auto b = e.base().carrier().draw(rng);
    auto x = e.kernel().carrier().draw(rng);
    REQUIRE(phi(b, x) == b * x * b.conj());
    REQUIRE(e.q(std::pair(x, b)) == x);
  }
}

TEST_CASE("naturals squared form a Schreier extension of N by N") {
  auto plan = EnumerationPlan::bounded(12);
  auto N    = naturals(NatOp::plus, NatConj::identity);
  auto e    = direct_product_extension(N, N, plan);
  check_all(retraction_laws(e), plan);
  CHECK(roundtrip_iso(e, plan).outcome == Outcome::holds_bounded);
}
