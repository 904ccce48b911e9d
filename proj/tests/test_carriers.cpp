#include <catch_amalgamated.hpp>

#include <array>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "conjcheck/builders.hpp"
#include "conjcheck/plan.hpp"
#include "conjcheck/quaternion.hpp"
#include "conjcheck/rational.hpp"
#include "conjcheck/structure.hpp"

using namespace conjcheck;

namespace {

  // Hamilton product straight from the definition, on raw GMP rationals.
  std::array<mpq_class, 4> hamilton(std::array<mpq_class, 4> const& p, std::array<mpq_class, 4> const& q) {
    return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
            p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
            p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
            p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
  }

  std::array<mpq_class, 4> raw(RationalQuaternion const& q) {
    return {q.a.raw(), q.b.raw(), q.c.raw(), q.d.raw()};
  }

  RationalQuaternion random_quaternion(std::mt19937_64& rng) {
    return {draw_rational(rng, 50), draw_rational(rng, 50), draw_rational(rng, 50), draw_rational(rng, 50)};
  }

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-3, -6).str() == "1/2");
  CHECK(Rational::parse(" -6/8 ").str() == "-3/4");
  CHECK(Rational::parse("5").str() == "5");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(4, 9).sqrt_exact() == Rational(2, 3));
  CHECK_FALSE(Rational(2).sqrt_exact().has_value());
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK_THROWS_AS(Rational(0).inverse(), std::exception);
}

TEST_CASE("quaternion product matches the Hamilton formula") {
  using namespace quaternion;
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(i * i == -one);
  CHECK(i * j * k == -one);

  std::mt19937_64 rng(42);
  for (int n = 0; n < 2000; ++n) {
    auto p   = random_quaternion(rng);
    auto q   = random_quaternion(rng);
    auto pq  = p * q;
    auto ref = hamilton(raw(p), raw(q));
    for (auto& x : ref) {
      x.canonicalize();
    }
    REQUIRE(raw(pq) == ref);
    REQUIRE((p * q).norm2() == p.norm2() * q.norm2());
    REQUIRE((p * q).conj() == q.conj() * p.conj());
  }
}

TEST_CASE("Hurwitz units are the 24 unit quaternions with half-integer or integer coordinates") {
  // All quaternions with coordinates in {0, +-1/2, +-1} and norm 1.
  std::vector<Rational> coords{Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1)};
  std::set<RationalQuaternion> expected;
  for (auto const& a : coords) {
    for (auto const& b : coords) {
      for (auto const& c : coords) {
        for (auto const& d : coords) {
          RationalQuaternion q{a, b, c, d};
          if (q.norm2() == Rational(1)) {
            expected.insert(q);
          }
        }
      }
    }
  }
  REQUIRE(expected.size() == 24);

  auto H = hurwitz_group();
  REQUIRE(H.is_finite());
  REQUIRE(H.size() == 24);
  auto elems = H.elements();
  CHECK(std::set<RationalQuaternion>(elems.begin(), elems.end()) == expected);
  CHECK(H.zero() == quaternion::one);
  for (auto const& q : elems) {
    CHECK(H.add(q, H.conj(q)) == quaternion::one);
    CHECK(H.contains(H.conj(q)));
  }
}

TEST_CASE("Q8, S3, Klein and cyclic tables against direct computation") {
  auto Z5 = cyclic_group(5);
  for (std::size_t a = 0; a < 5; ++a) {
    for (std::size_t b = 0; b < 5; ++b) {
      CHECK(Z5.add(a, b) == (a + b) % 5);
    }
    CHECK(Z5.conj(a) == (5 - a) % 5);
  }

  auto K = klein_group();
  CHECK(K.size() == 4);
  CHECK(K.show(K.add(K.parse("01"), K.parse("11"))) == "10");

  auto Q = quaternion_group();
  auto q = q8_elements();
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      CHECK(q[Q.add(a, b)] == q[a] * q[b]);
    }
    CHECK(q[Q.conj(a)] == q[a].conj());
  }
  CHECK(Q.show(Q.add(Q.parse("i"), Q.parse("j"))) == "k");

  auto S = symmetric_group3();
  CHECK(S.size() == 6);
  std::size_t commuting = 0;
  for (auto x : S.elements()) {
    for (auto y : S.elements()) {
      commuting += S.add(x, y) == S.add(y, x);
    }
    CHECK(S.add(x, S.conj(x)) == S.zero());
  }
  // Sum over x of |centralizer(x)| = |G| * (number of classes) = 6 * 3.
  CHECK(commuting == 18);
}

TEST_CASE("K x E agrees with the quaternions, the complex numbers and the rationals") {
  auto KE3 = ke_structure(3, KEVariant::semigroup);
  auto KE1 = ke_structure(1, KEVariant::semigroup);
  auto KE0 = ke_structure(0, KEVariant::semigroup);
  std::mt19937_64 rng(7);
  for (int n = 0; n < 500; ++n) {
    auto p = KE3.carrier().draw(rng);
    auto q = KE3.carrier().draw(rng);
    REQUIRE(ke_to_quaternion(KE3.add(p, q)) == ke_to_quaternion(p) * ke_to_quaternion(q));
    REQUIRE(ke_to_quaternion(KE3.conj(p)) == ke_to_quaternion(p).conj());

    auto z = KE1.carrier().draw(rng);
    auto w = KE1.carrier().draw(rng);
    GaussianRational zc{z.alpha, z.u[0]};
    GaussianRational wc{w.alpha, w.u[0]};
    auto zw = KE1.add(z, w);
    REQUIRE(GaussianRational{zw.alpha, zw.u[0]} == zc * wc);

    auto a = KE0.carrier().draw(rng);
    auto b = KE0.carrier().draw(rng);
    REQUIRE(KE0.add(a, b).alpha == a.alpha * b.alpha);
  }
  CHECK_THROWS_AS(ke_structure(2, KEVariant::semigroup), DimensionError);

  auto M = ke_structure(3, KEVariant::monoid_nonzero);
  CHECK(M.is_monoid());
  CHECK_FALSE(M.contains(KEPoint{0, {0, 0, 0}}));
  CHECK(M.contains(KEPoint{0, {1, 0, 0}}));
}

TEST_CASE("parametric carriers draw only their own elements") {
  std::mt19937_64 rng(3);
  auto interval = open_interval_semigroup();
  auto unit     = unit_interval_monoid();
  auto disk     = open_disk_semigroup();
  auto ball     = open_ball_semigroup();
  auto circle   = unit_circle();
  auto sphere   = unit_quaternions();
  auto scaled   = scaled_unit_quaternions();
  for (int n = 0; n < 300; ++n) {
    auto t = interval.carrier().draw(rng);
    REQUIRE(t.sign() != 0);
    REQUIRE(t * t < Rational(1));
    auto u = unit.carrier().draw(rng);
    REQUIRE(u > Rational(0));
    REQUIRE(u <= Rational(1));
    REQUIRE(disk.carrier().draw(rng).norm2() < Rational(1));
    REQUIRE(ball.carrier().draw(rng).norm2() < Rational(1));
    REQUIRE(circle.carrier().draw(rng).norm2() == Rational(1));
    REQUIRE(sphere.carrier().draw(rng).norm2() == Rational(1));
    auto x = scaled.carrier().draw(rng);
    REQUIRE(x.norm2() > Rational(0));
    REQUIRE(x.norm2() <= Rational(1));
    REQUIRE(x.norm2().sqrt_exact().has_value());
  }
  CHECK_FALSE(interval.contains(Rational(0)));
  CHECK_FALSE(interval.contains(Rational(1)));
  CHECK(interval.contains(Rational(-1, 2)));
  CHECK(unit.contains(Rational(1)));
  CHECK_FALSE(unit.contains(Rational(-1, 2)));
  CHECK_FALSE(disk.contains(GaussianRational{Rational(3, 5), Rational(4, 5)}));
  CHECK(circle.contains(GaussianRational{Rational(3, 5), Rational(4, 5)}));
  CHECK(scaled.contains(RationalQuaternion{Rational(1, 2), 0, 0, 0}));
  CHECK_FALSE(scaled.contains(RationalQuaternion{Rational(1, 2), Rational(1, 2), 0, 0}));
}

TEST_CASE("stereographic unit quaternions have norm one") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 500; ++n) {
    auto q = unit_quaternion(draw_rational(rng), draw_rational(rng), draw_rational(rng));
    REQUIRE(q.norm2() == Rational(1));
  }
}

TEST_CASE("naturals and the free semigroup") {
  auto N = naturals(NatOp::plus, NatConj::identity);
  CHECK(N.carrier().first(4) == std::vector<Integer>{0, 1, 2, 3});
  CHECK(N.add(Integer(2), Integer(5)) == Integer(7));
  CHECK_FALSE(N.contains(Integer(-1)));

  auto M = naturals(NatOp::max, NatConj::identity);
  CHECK(M.add(Integer(2), Integer(5)) == Integer(5));

  auto F = free_semigroup();
  CHECK(F.add("xy", "yx") == "xyyx");
  CHECK(F.conj("xxy") == "yxx");
  CHECK_FALSE(F.contains(""));
  CHECK_FALSE(F.contains("xz"));
}

TEST_CASE("domains enumerate products without repetition") {
  auto Z3 = cyclic_group(3);
  auto Z2 = cyclic_group(2);
  auto P  = product_domain(Z3.carrier(), Z2.carrier());
  REQUIRE(P.size() == 6);
  auto elems = P.elements();
  CHECK(std::set<std::pair<std::size_t, std::size_t>>(elems.begin(), elems.end()).size() == 6);
  CHECK(P.show(elems[3]) == "(1,1)");
  CHECK(P.parse("(2,1)") == std::pair<std::size_t, std::size_t>(2, 1));

  auto N  = naturals_domain();
  auto NN = product_domain(N, N);
  auto first = NN.first(55);
  std::set<std::pair<Integer, Integer>> seen(first.begin(), first.end());
  CHECK(seen.size() == 55);
  for (long a = 0; a < 10; ++a) {
    for (long b = 0; a + b < 10; ++b) {
      CHECK(seen.count({Integer(a), Integer(b)}) == 1);
    }
  }
  CHECK_THROWS_AS(N.size(), PlanError);
  CHECK_THROWS_AS(Z3.parse("7"), ParseError);
}

TEST_CASE("plans parse and sampling is a pure function of seed and index") {
  CHECK(EnumerationPlan::parse("exhaustive", 1).mode == PlanMode::exhaustive);
  auto b = EnumerationPlan::parse("bounded=12", 1);
  CHECK(b.mode == PlanMode::bounded);
  CHECK(b.window == 12);
  auto s = EnumerationPlan::parse("sampled=300", 9);
  CHECK(s.count == 300);
  CHECK(s.seed == 9);
  CHECK(s.str() == "sampled=300 seed=9");
  CHECK_THROWS_AS(EnumerationPlan::parse("bounded=0", 1), PlanError);
  CHECK_THROWS_AS(EnumerationPlan::parse("sampled=-3", 1), PlanError);
  CHECK_THROWS_AS(EnumerationPlan::parse("everything", 1), PlanError);

  auto r1 = tuple_rng(5, 17);
  auto r2 = tuple_rng(5, 17);
  auto r3 = tuple_rng(5, 18);
  auto x1 = r1();
  CHECK(x1 == r2());
  CHECK(x1 != r3());
}
