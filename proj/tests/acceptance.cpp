#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "conjcheck/arcs.hpp"
#include "conjcheck/families.hpp"
#include "conjcheck/gallery.hpp"
#include "conjcheck/internal.hpp"
#include "conjcheck/showcase.hpp"

using namespace conjcheck;

namespace {

  auto const ex = EnumerationPlan::exhaustive();

  constexpr std::size_t samples     = 10000;
  constexpr double      time_budget = 60.0;

  struct Result {
    bool        pass = true;
    std::string detail;

    void require(bool ok, std::string const& what) {
      if (!ok && pass) {
        pass   = false;
        detail = what;
      }
    }
  };

  std::string failing(Verdict const& v) {
    return v.law + " " + v.summary();
  }

  std::vector<FiniteExtension> finite_cases() {
    auto Z2 = cyclic_group(2);
    auto Z3 = cyclic_group(3);
    auto Q8 = quaternion_group();
    auto negate_if = [](std::size_t b, std::size_t x) { return b ? (3 - x) % 3 : x; };
    return {finite_direct(Z2, Z3), finite_direct(Z3, Z2), finite_direct(Q8, Z2), finite_direct(Z2, Q8),
            finite_direct(Q8, Z3), finite_direct(Z2, Z2), finite_semidirect(Z3, Z2, negate_if, "Z3x|Z2")};
  }

  Result axiom_suite() {
    Result o;
    auto H = hurwitz_group();
    o.require(H.size() == 24, "Hurwitz group has " + std::to_string(H.size()) + " elements");
    for (auto const& q : H.elements()) {
      o.require(H.add(q, H.conj(q)) == H.zero(), "conj is not the inverse at " + H.show(q));
    }
    std::size_t laws = 0;
    for (auto const& r : run_laws(structure_laws(H), ex)) {
      ++laws;
      o.require(r.verdict.outcome == Outcome::holds_exhaustive, failing(r.verdict));
      if (r.law.slug == "associativity") {
        o.require(r.verdict.checks == 24 * 24 * 24, "associativity ran " + std::to_string(r.verdict.checks));
      }
    }
    if (o.pass) {
      o.detail = std::to_string(laws) + " laws exhaustive on 24 units";
    }
    return o;
  }

  Result schreier_laws() {
    Result o;
    auto cases = finite_cases();
    for (auto const& e : cases) {
      o.require(verify_all(decomposition_laws(e.k(), e.f(), e.r()), ex).passed(),
                e.total().name() + ": q is not unique");
      auto v = verify_all(retraction_laws(e), ex);
      o.require(v.outcome == Outcome::holds_exhaustive, e.total().name() + " " + failing(v));
    }
    auto plan = EnumerationPlan::sampled(samples, 1);
    auto q    = quaternion_extension(plan);
    auto v    = verify_all(retraction_laws(q), plan);
    o.require(v.outcome == Outcome::holds_sampled, "quaternion extension " + failing(v));
    auto c = verify_all(retraction_conjugation_laws(q), plan);
    o.require(c.passed(), "quaternion extension " + failing(c));
    if (o.pass) {
      o.detail = std::to_string(cases.size()) + " finite extensions exhaustive, quaternion extension "
                 + std::to_string(samples) + " samples";
    }
    return o;
  }

  Result round_trip() {
    Result o;
    auto cases = finite_cases();
    for (auto const& e : cases) {
      auto v = roundtrip_iso(e, ex);
      o.require(v.outcome == Outcome::holds_exhaustive, e.total().name() + " " + failing(v));
    }
    auto plan = EnumerationPlan::sampled(samples, 1);
    auto v    = roundtrip_iso(quaternion_extension(plan), plan);
    o.require(v.outcome == Outcome::holds_sampled, "quaternion extension " + failing(v));
    if (o.pass) {
      o.detail = std::to_string(cases.size()) + " finite cases exhaustive, quaternion extension "
                 + std::to_string(samples) + " samples";
    }
    return o;
  }

  Result classification() {
    Result o;
    auto plan = EnumerationPlan::sampled(samples, 1);
    auto q    = classify(quaternion_crossed(plan), plan);
    o.require(q.kind == CrossedKind::crossed_semimodule, "quaternion instance is " + to_string(q.kind));
    o.require(q.groupoid.failed(), "quaternion groupoid condition holds");
    if (q.groupoid.failed()) {
      auto x = scaled_unit_quaternions().parse(q.groupoid.witness.at(0));
      o.require(x.norm2() == Rational(1, 4), "groupoid witness " + q.groupoid.witness.at(0) + " has norm^2 "
                                                 + x.norm2().str());
    }

    auto p = classify(q8_over_trivial(), ex);
    o.require(p.kind == CrossedKind::precrossed_semimodule, "Q8 over 0 is " + to_string(p.kind));
    o.require(p.crossed.witness == std::vector<std::string>{"i", "j"}, "Q8 crossed witness " + p.crossed.summary());

    auto z = cyclic_identity(3);
    auto c = classify(z, ex);
    o.require(c.kind == CrossedKind::crossed_module, "Z3 is " + to_string(c.kind));
    auto g = build_groupoid(z, ex);
    o.require(g.laws.outcome == Outcome::holds_exhaustive, "Z3 groupoid " + failing(g.laws));
    if (o.pass) {
      o.detail = "quaternion CrossedSemimodule (groupoid condition fails at " + q.groupoid.witness.at(0)
                 + "), Q8 PrecrossedSemimodule (crossed condition fails at i|j), Z3 CrossedModule";
    }
    return o;
  }

  template <typename EX, typename EA, typename EB>
  void category_case(Result& o, std::string const& name, CrossedData<EX, EA, EB> const& d,
                     EnumerationPlan const& plan, bool crossed) {
    auto cr = check_crossed_condition(d, plan);
    auto cc = check_composition_condition(d, plan);
    o.require(cr.passed() == crossed, name + ": crossed " + cr.summary());
    o.require(cc.passed() == cr.passed() && cc.outcome == cr.outcome,
              name + ": composition condition " + cc.summary() + " against crossed " + cr.summary());
    if (crossed) {
      auto cat = build_internal_category(d, plan);
      o.require(cat.laws.passed(), name + " " + failing(cat.laws));
    }
  }

  Result internal_category_laws() {
    Result o;
    auto plan = EnumerationPlan::sampled(samples, 1);
    category_case(o, "Z2", cyclic_identity(2), ex, true);
    category_case(o, "Z3", cyclic_identity(3), ex, true);
    category_case(o, "N x N", naturals_square(plan), plan, true);
    category_case(o, "quaternions", quaternion_crossed(plan), plan, true);
    category_case(o, "disk over circle", circle_crossed(plan), plan, true);
    category_case(o, "Q8 over 0", q8_over_trivial(), ex, false);
    category_case(o, "quaternions over 0", quaternion_over_trivial(plan), plan, false);
    if (o.pass) {
      o.detail = "5 crossed instances, composition iff crossed on 7 instances";
    }
    return o;
  }

  Result oracle_equivalence() {
    Result o;
    auto family = admissibility_family();
    o.require(family.size() >= 50, "family has " + std::to_string(family.size()) + " diagrams");
    std::size_t admissible = 0;
    for (auto const& fd : family) {
      auto pb     = build_pullback(fd.d);
      auto crit   = check_admissibility_criterion(fd.d, pb, ex);
      auto oracle = check_admissible_oracle(fd.d);
      o.require(crit.verdict.passed() == oracle.admissible, fd.label + ": criterion " + crit.verdict.summary()
                                                                 + ", oracle " + oracle.reason);
      if (crit.verdict.passed() && oracle.admissible) {
        ++admissible;
        for (auto const& p : pb.P.elements()) {
          o.require(crit.phi(p) == oracle.phi.at(p), fd.label + ": phi differs at " + pb.P.show(p));
        }
      }
    }
    if (o.pass) {
      o.detail = std::to_string(family.size()) + " diagrams, " + std::to_string(admissible)
                 + " admissible, all agree";
    }
    return o;
  }

  Result smith_is_huq() {
    Result o;
    std::size_t pairs = 0;
    for (auto const& G : {cyclic_group(4), klein_group(), symmetric_group3()}) {
      auto rels = congruence_relations(G);
      for (auto const& R : rels) {
        for (auto const& S : rels) {
          auto rep = smith_is_huq_harness(R, S, ex);
          ++pairs;
          o.require(rep.agree(), G.name() + " " + R.name() + " " + S.name() + ": Smith "
                                     + rep.smith.summary() + ", Huq " + rep.huq.summary());
        }
      }
    }
    if (o.pass) {
      o.detail = std::to_string(pairs) + " pairs agree";
    }
    return o;
  }

  Result arcs() {
    Result o;
    auto demo = demo_arcs(1000, 1);
    o.require(demo.compositions.size() == 1000, "wrong number of compositions");
    o.require(demo.category.passed(), failing(demo.category));
    o.require(demo.records.passed(), failing(demo.records));
    for (auto const& r : demo.laws) {
      o.require(r.verdict.passed(), failing(r.verdict));
    }
    for (auto const& c : demo.compositions) {
      o.require(c.composite.x == c.second.x * c.first.x && c.composite.b == c.first.b,
                "a composite is not (x'x, b)");
    }
    auto const& w = demo.witness;
    o.require(w.x == Gaussian{0, -2} && w.b == Gaussian{0, 1}, "formal inverse of (i/2, 1) is wrong");
    o.require(!w.in_carrier, "(-2i, i) is accepted as an arrow");
    if (o.pass) {
      o.detail = "1000 compositions are (x'x, b); (-2i, i) out of carrier with |x|^2 = " + w.norm2.str();
    }
    return o;
  }

  std::string gallery_text() {
    Session s("conjcheck gallery --seed 7", ex);
    auto plans = gallery_plans(std::nullopt, 7);
    gallery_rows(s, plans);
    std::ostringstream os;
    s.finish().print(os);
    return os.str();
  }

  Result determinism() {
    Result o;
    auto a = gallery_text();
    auto b = gallery_text();
    o.require(a == b, "two gallery runs differ");
    o.require(a.find("result: pass (exit 0)") != std::string::npos, "gallery does not pass");
    if (o.pass) {
      o.detail = "two runs byte-identical (" + std::to_string(a.size()) + " bytes)";
    }
    return o;
  }

}  // namespace

int main() {
  std::vector<std::function<Result()>> criteria{
      [] { return axiom_suite(); },
      [] { return schreier_laws(); },
      [] { return round_trip(); },
      [] { return classification(); },
      [] { return internal_category_laws(); },
      [] { return oracle_equivalence(); },
      [] { return smith_is_huq(); },
      [] { return arcs(); },
      [] { return determinism(); },
  };
  int failures = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    auto   start = std::chrono::steady_clock::now();
    Result o;
    try {
      o = criteria[n]();
    } catch (std::exception const& e) {
      o = Result{false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > time_budget) {
      o.pass = false;
      o.detail += "; over the time budget";
    }
    failures += !o.pass;
    char t[32];
    std::snprintf(t, sizeof t, "%.1fs", secs);
    std::cout << "criterion " << n + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " " << o.detail << " (" << t
              << ")" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
