#include <catch_amalgamated.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "conjcheck/admissibility.hpp"
#include "conjcheck/equivalence.hpp"
#include "conjcheck/families.hpp"

using namespace conjcheck;

namespace {

  auto const ex = EnumerationPlan::exhaustive();

  using Cell = std::pair<std::size_t, std::size_t>;

  // alpha(a) - beta(b) + gamma(c) is the only candidate on a pullback of
  // groups, since (a, c) = e1(a) - e1(r(b)) + e2(c).
  struct ForcedMap {
    std::vector<Cell>          pullback;
    std::map<Cell, std::size_t> phi;
    bool                       hom = true;
  };

  ForcedMap forced_map(FiniteDiagram const& d) {
    auto const& A = d.A();
    auto const& C = d.C();
    auto const& D = d.D();
    ForcedMap out;
    for (std::size_t a = 0; a < A.size(); ++a) {
      for (std::size_t c = 0; c < C.size(); ++c) {
        if (d.f(a) == d.g(c)) {
          out.pullback.emplace_back(a, c);
        }
      }
    }
    for (auto const& [a, c] : out.pullback) {
      std::size_t beta = d.beta(d.f(a));
      out.phi[{a, c}]  = D.add(D.add(d.alpha(a), D.conj(beta)), d.gamma(c));
    }
    for (auto const& p : out.pullback) {
      for (auto const& q : out.pullback) {
        Cell pq(A.add(p.first, q.first), C.add(p.second, q.second));
        if (out.phi.at(pq) != D.add(out.phi.at(p), out.phi.at(q))) {
          out.hom = false;
        }
      }
      Cell cp(A.conj(p.first), C.conj(p.second));
      if (out.phi.at(cp) != D.conj(out.phi.at(p))) {
        out.hom = false;
      }
    }
    return out;
  }

  // {x : x ~ 0}
  std::vector<std::size_t> normal_subgroup(EquivalenceRelationOnObject<std::size_t> const& R) {
    auto const& G = R.object();
    std::vector<std::size_t> out;
    for (auto x : G.elements()) {
      if (R.relation().contains(Cell(x, G.zero()))) {
        out.push_back(x);
      }
    }
    return out;
  }

  bool commute_elementwise(Finite const& G, std::vector<std::size_t> const& N,
                           std::vector<std::size_t> const& M) {
    for (auto n : N) {
      for (auto m : M) {
        if (G.add(n, m) != G.add(m, n)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace

TEST_CASE("the criterion, the search oracle and the forced map agree on the whole family") {
  auto family = admissibility_family();
  REQUIRE(family.size() >= 50);
  std::size_t admissible = 0;
  for (auto const& fd : family) {
    INFO(fd.label);
    auto const& d = fd.d;
    REQUIRE(verify_all(diagram_laws(d), ex).passed());
    auto pb = build_pullback(d);
    REQUIRE(verify_all(pullback_laws(d, pb), ex).passed());

    auto forced = forced_map(d);
    REQUIRE(pb.P.size() == forced.pullback.size());
    auto crit   = check_admissibility_criterion(d, pb, ex);
    auto oracle = check_admissible_oracle(d);
    CHECK(crit.verdict.passed() == forced.hom);
    CHECK(oracle.admissible == forced.hom);
    // Groups: e1 and e2 generate the pullback.
    CHECK(oracle.not_generated.empty());
    if (forced.hom) {
      ++admissible;
      for (auto const& p : forced.pullback) {
        CHECK(crit.phi(p) == forced.phi.at(p));
        CHECK(oracle.phi.at(p) == forced.phi.at(p));
      }
    }
    CHECK(admissibility_verdict(d, pb, ex).passed() == forced.hom);
  }
  CHECK(admissible > 0);
  CHECK(admissible < family.size());
}

TEST_CASE("one-sided and Huq admissibility agree with the forced map") {
  for (auto const& fd : admissibility_family(3)) {
    INFO(fd.label);
    auto const& d = fd.d;
    auto pb       = build_pullback(d);
    bool ok       = forced_map(d).hom;

    auto one = check_one_sided_admissibility(d, pb, fd.left, ex);
    CHECK(one.agree());
    CHECK(one.extension.passed() == ok);
    CHECK(one.not_generated.empty());

    auto huq = check_huq_commute(compose(d.alpha, fd.left.k()), compose(d.gamma, fd.right.k()), ex);
    if (huq.failed()) {
      CHECK_THROWS_AS(check_huq_admissibility(d, pb, fd.left, fd.right, ex), HuqFailed);
      continue;
    }
    auto m = check_huq_admissibility(d, pb, fd.left, fd.right, ex);
    CHECK(m.verdict.passed());
    CHECK(ok);
    auto forced = forced_map(d);
    for (auto const& p : forced.pullback) {
      CHECK(m.phi(p) == forced.phi.at(p));
    }
  }
}

TEST_CASE("reflexive admissibility on diagrams with A = C") {
  std::size_t seen = 0;
  for (auto const& fd : admissibility_family(4)) {
    if (fd.left.total().name() != fd.right.total().name()) {
      continue;
    }
    INFO(fd.label);
    ++seen;
    auto pb  = build_pullback(fd.d);
    auto rep = check_reflexive_admissibility(fd.d, pb, fd.left, ex);
    CHECK(rep.agree());
    CHECK(rep.admissible.passed() == forced_map(fd.d).hom);
  }
  CHECK(seen > 10);
}

TEST_CASE("a diagram into the trivial group is admissible with phi = 0") {
  auto Z1 = trivial_monoid();
  auto Z2 = cyclic_group(2);
  auto Z3 = cyclic_group(3);
  auto left  = finite_direct(Z2, Z3);
  auto right = finite_direct(Z1, Z3);
  auto zero  = [&](std::string name, Finite const& s) {
    return table_hom(std::move(name), s, Z1, std::vector<std::size_t>(s.size(), 0));
  };
  FiniteDiagram d{left.f(), left.r(), right.f(), right.r(), zero("alpha", left.total()),
                  zero("beta", Z3), zero("gamma", right.total())};
  auto pb = build_pullback(d);
  CHECK(pb.P.size() == 6);
  auto crit = check_admissibility_criterion(d, pb, ex);
  REQUIRE(crit.verdict.passed());
  for (auto const& p : pb.P.elements()) {
    CHECK(crit.phi(p) == 0);
  }
  CHECK(check_admissible_oracle(d).admissible);
}

TEST_CASE("a non-commuting pair into S3 is not admissible") {
  auto Z1 = trivial_monoid();
  auto Z2 = cyclic_group(2);
  auto S3 = symmetric_group3();
  auto e  = finite_direct(Z2, Z1);
  // e r r2 s rs r2s: two different reflections.
  FiniteDiagram d{e.f(), e.r(), e.f(), e.r(), table_hom("alpha", e.total(), S3, {0, 3}),
                  table_hom("beta", Z1, S3, {0}), table_hom("gamma", e.total(), S3, {0, 4})};
  auto pb   = build_pullback(d);
  auto crit = check_admissibility_criterion(d, pb, ex);
  REQUIRE(crit.verdict.failed());
  CHECK(crit.verdict.law == "phi-additive");
  CHECK_FALSE(check_admissible_oracle(d).admissible);
  CHECK_FALSE(forced_map(d).hom);
}

TEST_CASE("Smith commutation agrees with Huq commutation of normalizations") {
  struct Case {
    Finite      G;
    std::size_t pairs;
    std::size_t commuting;
  };
  // Normal subgroups: Z4 has 3, Z2xZ2 has 5, S3 has 1, A3, S3.
  std::vector<Case> cases{{cyclic_group(4), 9, 9}, {klein_group(), 25, 25}, {symmetric_group3(), 9, 6}};
  for (auto const& c : cases) {
    INFO(c.G.name());
    auto rels = congruence_relations(c.G);
    std::size_t pairs = 0, commuting = 0;
    for (auto const& R : rels) {
      REQUIRE(R.is_schreier());
      for (auto const& S : rels) {
        INFO(R.name() << " " << S.name());
        auto rep    = smith_is_huq_harness(R, S, ex);
        bool oracle = commute_elementwise(c.G, normal_subgroup(R), normal_subgroup(S));
        CHECK(rep.agree());
        CHECK(rep.huq.passed() == oracle);
        CHECK(rep.smith.passed() == oracle);
        ++pairs;
        commuting += oracle;
      }
    }
    CHECK(pairs == c.pairs);
    CHECK(commuting == c.commuting);
  }
}

TEST_CASE("the discrete and total relations") {
  auto S3 = symmetric_group3();
  auto D  = discrete_relation(S3);
  auto T  = total_relation(S3);
  CHECK(D.relation().size() == 6);
  CHECK(T.relation().size() == 36);
  CHECK(smith_is_huq_harness(D, T, ex).smith.passed());
  CHECK(smith_is_huq_harness(T, T, ex).smith.failed());
}
