#include <catch_amalgamated.hpp>

#include <array>
#include <string>
#include <vector>

#include "conjcheck/axioms.hpp"
#include "conjcheck/builders.hpp"
#include "conjcheck/finite.hpp"
#include "conjcheck/law.hpp"

using namespace conjcheck;

namespace {

  using Table = std::vector<std::vector<std::size_t>>;

  Finite make_table(Table op, std::vector<std::size_t> conj, std::optional<std::size_t> identity = {}) {
    FiniteTable t;
    for (std::size_t i = 0; i < op.size(); ++i) {
      t.names.push_back("e" + std::to_string(i));
    }
    t.op       = std::move(op);
    t.conj     = std::move(conj);
    t.identity = identity;
    return table_structure("T", std::move(t));
  }

  // Raw checks on a table, written out without the library.
  bool raw_associative(Table const& op) {
    std::size_t n = op.size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (op[op[x][y]][z] != op[x][op[y][z]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool raw_axioms(Table const& op, std::vector<std::size_t> const& c) {
    std::size_t n = op.size();
    for (std::size_t x = 0; x < n; ++x) {
      if (op[c[x]][x] != op[x][c[x]]) {
        return false;
      }
      for (std::size_t y = 0; y < n; ++y) {
        if (op[op[x][c[y]]][y] != op[op[y][c[y]]][x]) {
          return false;
        }
        if (c[op[x][y]] != op[c[y]][c[x]]) {
          return false;
        }
      }
    }
    return true;
  }

  bool raw_group(Table const& op) {
    std::size_t n = op.size();
    for (std::size_t e = 0; e < n; ++e) {
      bool neutral = true;
      for (std::size_t x = 0; x < n; ++x) {
        neutral = neutral && op[e][x] == x && op[x][e] == x;
      }
      if (!neutral) {
        continue;
      }
      for (std::size_t x = 0; x < n; ++x) {
        bool has_inverse = false;
        for (std::size_t y = 0; y < n; ++y) {
          has_inverse = has_inverse || (op[x][y] == e && op[y][x] == e);
        }
        if (!has_inverse) {
          return false;
        }
      }
      return true;
    }
    return false;
  }

  bool passes(LawList const& laws, std::string const& slug) {
    for (auto const& law : laws) {
      if (law.slug == slug) {
        return law.check(EnumerationPlan::exhaustive()).passed();
      }
    }
    FAIL("no law " << slug);
    return false;
  }

  // Every operation table on n elements, as a callback.
  template <typename Visit>
  void for_each_table(std::size_t n, Visit visit) {
    std::size_t cells = n * n;
    std::vector<std::size_t> digits(cells, 0);
    while (true) {
      Table op(n, std::vector<std::size_t>(n));
      for (std::size_t i = 0; i < cells; ++i) {
        op[i / n][i % n] = digits[i];
      }
      visit(op);
      std::size_t pos = 0;
      while (pos < cells && ++digits[pos] == n) {
        digits[pos++] = 0;
      }
      if (pos == cells) {
        return;
      }
    }
  }

  template <typename Visit>
  void for_each_map(std::size_t n, Visit visit) {
    std::vector<std::size_t> m(n, 0);
    while (true) {
      visit(m);
      std::size_t pos = 0;
      while (pos < n && ++m[pos] == n) {
        m[pos++] = 0;
      }
      if (pos == n) {
        return;
      }
    }
  }

}  // namespace

TEST_CASE("forall visits every tuple of an exhaustive plan") {
  auto Z4 = cyclic_group(4);
  auto d  = Z4.carrier();
  auto v  = forall("t", "true", EnumerationPlan::exhaustive(), std::make_tuple(d, d, d),
                   [](std::size_t, std::size_t, std::size_t) { return true; });
  CHECK(v.outcome == Outcome::holds_exhaustive);
  CHECK(v.checks == 64);

  auto b = forall("t", "true", EnumerationPlan::bounded(3), std::make_tuple(d, d),
                  [](std::size_t, std::size_t) { return true; });
  CHECK(b.outcome == Outcome::holds_bounded);
  CHECK(b.checks == 9);

  auto s = forall("t", "true", EnumerationPlan::sampled(50, 4), std::make_tuple(d),
                  [](std::size_t) { return true; });
  CHECK(s.outcome == Outcome::holds_sampled);
  CHECK(s.checks == 50);

  auto f = forall("small", "x + y < 5", EnumerationPlan::exhaustive(), std::make_tuple(d, d),
                  [](std::size_t x, std::size_t y) { return x + y < 5; });
  REQUIRE(f.failed());
  CHECK(f.replay_token() == "small:2|3");

  auto N = naturals();
  CHECK_THROWS_AS(forall("t", "true", EnumerationPlan::exhaustive(), std::make_tuple(N.carrier()),
                         [](Integer const&) { return true; }),
                  PlanError);
}

TEST_CASE("an empty carrier passes every universal law vacuously") {
  auto E = make_table({}, {});
  for (auto const& r : run_laws(structure_laws(E), EnumerationPlan::exhaustive())) {
    INFO(r.law.slug);
    CHECK(r.verdict.passed());
    CHECK(r.verdict.vacuous());
  }
}

TEST_CASE("finite groups with inversion pass the full law set exhaustively") {
  for (auto const& G : {cyclic_group(1), cyclic_group(2), cyclic_group(5), klein_group(), symmetric_group3(),
                        quaternion_group()}) {
    INFO(G.name());
    for (auto const& r : run_laws(structure_laws(G), EnumerationPlan::exhaustive())) {
      INFO(r.law.slug << " " << r.verdict.summary());
      CHECK(r.verdict.outcome == Outcome::holds_exhaustive);
    }
    CHECK(is_group_table(G));
  }
}

TEST_CASE("Hurwitz units pass every law on all 24^3 triples") {
  auto H = hurwitz_group();
  for (auto const& r : run_laws(structure_laws(H), EnumerationPlan::exhaustive())) {
    INFO(r.law.slug << " " << r.verdict.summary());
    CHECK(r.verdict.outcome == Outcome::holds_exhaustive);
    if (r.law.slug == "associativity") {
      CHECK(r.verdict.checks == 24 * 24 * 24);
    }
  }
}

TEST_CASE("library axiom checks agree with a direct check on all tables of order 2 and 3") {
  std::size_t structures = 0;
  std::size_t conjugation = 0;
  for (std::size_t n : {2, 3}) {
    for_each_table(n, [&](Table const& op) {
      if (!raw_associative(op)) {
        return;
      }
      for_each_map(n, [&](std::vector<std::size_t> const& c) {
        ++structures;
        auto S    = make_table(op, c);
        auto laws = conjugation_axiom_laws(S);
        bool lib  = verify_all(laws, EnumerationPlan::exhaustive()).passed();
        REQUIRE(lib == raw_axioms(op, c));
        if (!lib) {
          return;
        }
        ++conjugation;
        auto cl       = cancellation_laws(S);
        bool left     = passes(cl, "left-cancel");
        bool right    = passes(cl, "right-cancel");
        bool quasi    = passes(cl, "conj-cancel");
        // In a conjugation semigroup the quasi-identity is equivalent to
        // two-sided cancellation.
        REQUIRE(quasi == (left && right));
        // A finite cancellative semigroup is a group.
        if (left && right) {
          REQUIRE(raw_group(op));
          REQUIRE(is_group_table(S));
        }
        // Identities implied by the axioms hold whenever the axioms do.
        REQUIRE(verify_derived_identities(S, EnumerationPlan::exhaustive()).passed());
      });
    });
  }
  CHECK(structures > 100);
  CHECK(conjugation > 10);
}

TEST_CASE("a mutated table fails the anti-homomorphism axiom with a replayable witness") {
  auto good = make_table({{0, 1}, {1, 0}}, {0, 1});
  REQUIRE(verify_conjugation_axioms(good, EnumerationPlan::exhaustive()).passed());

  auto bad   = make_table({{0, 1}, {1, 0}}, {1, 0});
  auto laws  = conjugation_axiom_laws(bad);
  auto v     = verify_all(laws, EnumerationPlan::exhaustive());
  REQUIRE(v.failed());
  CHECK(v.law == "conj-antihom");
  CHECK(v.replay_token() == "conj-antihom:e0|e0");
  CHECK_FALSE(v.inconclusive);

  auto again = replay_token(laws, v.replay_token());
  CHECK(again.failed());
  CHECK(again.witness == v.witness);
  CHECK(again.detail == v.detail);

  // The other axioms survive the mutation.
  for (auto const& slug : {"closure", "associativity", "conj-commutes", "conj-swap"}) {
    CHECK(passes(laws, slug));
  }
  CHECK(replay_token(laws, "conj-commutes:e1").outcome == Outcome::holds_replay);
  CHECK_THROWS_AS(replay_token(laws, "nonsense:e0"), ParseError);
  CHECK_THROWS_AS(replay_token(laws, "conj-antihom:e0"), ParseError);
  CHECK_THROWS_AS(replay_token(laws, "conj-antihom:e0|e7"), ParseError);
  CHECK_THROWS_AS(replay_token(laws, "no colon"), ParseError);
}

TEST_CASE("replaying any sampled failure reproduces it") {
  auto N    = naturals(NatOp::plus, NatConj::successor);
  auto laws = structure_laws(N);
  for (auto const& r : run_laws(laws, EnumerationPlan::sampled(200, 3))) {
    if (r.verdict.failed()) {
      auto again = replay_token(laws, r.verdict.replay_token());
      CHECK(again.failed());
      CHECK(again.law == r.verdict.law);
      CHECK(again.detail == r.verdict.detail);
    }
  }
  CHECK(verify_all(laws, EnumerationPlan::bounded(4)).law == "conj-antihom");
}

TEST_CASE("the Ore search is existential and its failures are inconclusive") {
  auto N = naturals(NatOp::plus, NatConj::identity);
  CHECK(verify_ore(N, EnumerationPlan::bounded(8)).passed());

  auto F = free_semigroup();
  auto v = verify_ore(F, EnumerationPlan::bounded(4));
  REQUIRE(v.failed());
  CHECK(v.inconclusive);
  CHECK(v.detail.find("inconclusive") != std::string::npos);
}

TEST_CASE("sampled verdicts depend only on the plan") {
  auto D    = open_disk_semigroup();
  auto laws = structure_laws(D);
  for (std::uint64_t seed : {1, 2, 3}) {
    auto plan = EnumerationPlan::sampled(300, seed);
    auto a    = run_laws(laws, plan);
    auto b    = run_laws(laws, plan);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      INFO(a[i].law.slug << " " << a[i].verdict.summary());
      CHECK(a[i].verdict == b[i].verdict);
      CHECK(a[i].verdict.passed());
    }
  }
}

TEST_CASE("infinite examples satisfy the axioms under sampling") {
  auto plan = EnumerationPlan::sampled(400, 5);
  CHECK(verify_all(structure_laws(open_interval_semigroup()), plan).passed());
  CHECK(verify_all(structure_laws(open_ball_semigroup()), plan).passed());
  CHECK(verify_all(structure_laws(unit_quaternions()), plan).passed());
  CHECK(verify_all(structure_laws(scaled_unit_quaternions()), plan).passed());
  for (std::size_t dim : {0, 1, 3}) {
    auto KE = ke_structure(dim, KEVariant::semigroup);
    CHECK(verify_conjugation_axioms(KE, plan).passed());
    auto c = verify_cancellation(KE, plan);
    CHECK(c.failed());  // (0, 0) absorbs everything
    CHECK(verify_all(structure_laws(ke_structure(dim, KEVariant::monoid_nonzero)), plan).passed());
  }
}

TEST_CASE("homomorphism laws") {
  auto S3 = symmetric_group3();
  auto Z2 = cyclic_group(2);
  CHECK(verify_hom(identity_hom(S3), EnumerationPlan::exhaustive()).passed());

  // The sign of a permutation: the transpositions are s, rs, r2s.
  Hom<std::size_t, std::size_t> sign("sign", S3, Z2, [](std::size_t x) -> std::size_t { return x >= 3 ? 1 : 0; });
  auto v = verify_hom(sign, EnumerationPlan::exhaustive());
  CHECK(v.passed());
  CHECK(sign.verified() == v);

  Hom<std::size_t, std::size_t> bad("bad", S3, Z2, [](std::size_t x) -> std::size_t { return x == 1 ? 1 : 0; });
  auto w = verify_hom(bad, EnumerationPlan::exhaustive());
  REQUIRE(w.failed());
  CHECK(w.law == "hom-additive");

  auto Z3 = cyclic_group(3);
  Hom<std::size_t, std::size_t> shift("shift", Z3, Z3, [](std::size_t x) { return (x + 1) % 3; },
                                      HomKind::semigroup);
  CHECK(verify_hom(shift, EnumerationPlan::exhaustive()).failed());
  auto I = open_interval_semigroup();
  Hom<Rational, Rational> half("half", I, I, [](Rational const& x) { return x * Rational(1, 2); },
                               HomKind::monoid);
  CHECK_THROWS_AS(hom_laws(half), KindMismatch);
}

TEST_CASE("verdicts combine to the first failure") {
  auto ex   = EnumerationPlan::exhaustive();
  auto pass = Verdict::holds(ex, 3);
  auto samp = Verdict::holds(EnumerationPlan::sampled(10, 2), 10);
  auto f1   = Verdict::failure("a", "A", {"1"}, "");
  auto f2   = Verdict::failure("b", "B", {"2"}, "");
  CHECK(combine(pass, samp).outcome == Outcome::holds_sampled);
  CHECK(combine(pass, samp).checks == 13);
  CHECK(combine(f1, f2).law == "a");
  CHECK(combine(pass, f2).law == "b");
  CHECK(f1.replay_token() == "a:1");
  CHECK(pass.summary() == "holds (exhaustive, 3 checks)");
  CHECK(Verdict::holds(ex, 0).vacuous());
}

TEST_CASE("prefixed laws report and replay under the new slug") {
  auto bad  = make_table({{0, 1}, {1, 0}}, {1, 0});
  auto laws = prefixed(conjugation_axiom_laws(bad), "z2");
  auto v    = verify_all(laws, EnumerationPlan::exhaustive());
  CHECK(v.law == "z2-conj-antihom");
  CHECK(replay_token(laws, v.replay_token()).law == "z2-conj-antihom");
}

TEST_CASE("congruences of small groups are the normal-subgroup partitions") {
  CHECK(enumerate_congruences(tabulate(cyclic_group(4))).size() == 3);
  CHECK(enumerate_congruences(tabulate(klein_group())).size() == 5);
  CHECK(enumerate_congruences(tabulate(symmetric_group3())).size() == 3);
  CHECK(enumerate_congruences(tabulate(quaternion_group())).size() == 6);
}

TEST_CASE("malformed tables are rejected") {
  CHECK_THROWS_AS(make_table({{0, 1}}, {0, 1}), TableError);
  CHECK_THROWS_AS(make_table({{0, 2}, {1, 0}}, {0, 1}), TableError);
  CHECK_THROWS_AS(make_table({{0, 1}, {1, 0}}, {0, 1}, 1), TableError);
  FiniteTable dup;
  dup.names = {"a", "a"};
  dup.op    = {{0, 1}, {1, 0}};
  dup.conj  = {0, 1};
  CHECK_THROWS_AS(table_structure("dup", dup), TableError);
}
