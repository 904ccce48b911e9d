#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conjcheck/admissibility.hpp"
#include "conjcheck/arcs.hpp"
#include "conjcheck/axioms.hpp"
#include "conjcheck/builders.hpp"
#include "conjcheck/commands.hpp"
#include "conjcheck/equivalence.hpp"
#include "conjcheck/families.hpp"
#include "conjcheck/internal.hpp"
#include "conjcheck/report.hpp"
#include "conjcheck/showcase.hpp"

namespace conjcheck {

  struct GalleryPlans {
    EnumerationPlan finite;
    EnumerationPlan infinite;
  };

  // Finite rows follow the requested plan (exhaustive by default); rows on
  // infinite carriers are sampled, with the requested count when sampled.
  inline GalleryPlans gallery_plans(std::optional<EnumerationPlan> const& requested, std::uint64_t seed) {
    GalleryPlans p{EnumerationPlan::exhaustive(), EnumerationPlan::sampled(default_sample_count, seed)};
    if (requested) {
      p.finite = *requested;
      if (requested->mode == PlanMode::sampled) {
        p.infinite = *requested;
      }
    }
    return p;
  }

  namespace detail {
    inline LawCheck kind_fact(std::string slug, CrossedKind expected, std::function<CrossedKind()> get) {
      return make_fact(std::move(slug), "classifies exactly as " + to_string(expected), "classification",
                       [expected, get]() -> std::optional<std::string> {
                         auto k = get();
                         if (k == expected) {
                           return std::nullopt;
                         }
                         return "classified as " + to_string(k);
                       });
    }

    template <typename EX, typename EA, typename EB>
    CrossedKind kind_of(CrossedData<EX, EA, EB> const& d, EnumerationPlan const& plan) {
      return classify(d, plan).kind;
    }

    inline std::optional<std::string> smith_huq_disagreement(Finite const& G) {
      auto ex   = EnumerationPlan::exhaustive();
      auto rels = congruence_relations(G);
      for (auto const& R : rels) {
        for (auto const& S : rels) {
          auto rep = smith_is_huq_harness(R, S, ex);
          if (!rep.agree()) {
            return R.name() + " and " + S.name() + ": Smith " + rep.smith.summary() + ", Huq "
                   + rep.huq.summary();
          }
        }
      }
      return std::nullopt;
    }

    inline std::optional<std::string> family_disagreement() {
      auto ex     = EnumerationPlan::exhaustive();
      auto family = admissibility_family();
      if (family.size() < 50) {
        return "only " + std::to_string(family.size()) + " diagrams";
      }
      for (auto const& fd : family) {
        auto o    = check_admissible_oracle(fd.d);
        auto crit = check_admissibility_criterion(fd.d, build_pullback(fd.d), ex);
        if (o.admissible != crit.verdict.passed()) {
          return fd.label + ": oracle and criterion disagree";
        }
        if (o.admissible) {
          for (auto const& [p, v] : o.phi) {
            if (crit.phi(p) != v) {
              return fd.label + ": phi differs";
            }
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace detail

  // The built-in suite. Each section is one row of the matrix. The "over 0
  // crossed" sections and the quaternion and N x N groupoid sections hold
  // conditions that must fail.
  inline void gallery_rows(Session& s, GalleryPlans const& plans) {
    auto structure_row = [&](std::string section, std::string prefix, auto const& S) {
      s.section(std::move(section));
      s.set_plan(S.is_finite() ? plans.finite : plans.infinite);
      std::size_t window = s.plan().mode == PlanMode::bounded ? s.plan().window : default_ore_window;
      s.run(prefixed(structure_laws(S, window), prefix));
    };

    structure_row("hurwitz units", "hurwitz", hurwitz_group());
    structure_row("open interval", "interval", open_interval_semigroup());
    structure_row("open disk", "disk", open_disk_semigroup());
    structure_row("open ball", "ball", open_ball_semigroup());
    // All of K x E contains (0, 0), so only the axioms are claimed there.
    for (std::size_t dim : {0, 1, 3}) {
      auto G = ke_structure(dim, KEVariant::semigroup);
      auto n = std::to_string(dim);
      s.section("KxE dim " + n);
      s.set_plan(plans.infinite);
      auto laws = conjugation_axiom_laws(G);
      laws += derived_identity_laws(G);
      s.run(prefixed(laws, "ke" + n));
      structure_row("KxE dim " + n + " nonzero", "ke" + n + "m", ke_structure(dim, KEVariant::monoid_nonzero));
    }

    {
      auto plan = plans.infinite;
      s.set_plan(plan);
      auto d = quaternion_crossed(plan);
      s.section("quaternion extension");
      s.run(prefixed(retraction_laws(d.e), "quat"));
      s.run(prefixed(retraction_conjugation_laws(d.e), "quat"));
      auto phi = action_from_extension(d.e);
      s.run(prefixed(roundtrip_laws(d.e, semidirect(phi, plan)), "quat"));
      s.section("quaternion classification");
      s.run({detail::kind_fact("quat-kind", CrossedKind::crossed_semimodule,
                               [d, plan] { return detail::kind_of(d, plan); })});
      auto c = internal_category(d, reflexive_graph(d));
      s.run(prefixed(category_laws(d, c), "quat"));
      s.section("quaternion groupoid");
      s.run(prefixed(groupoid_condition_laws(d), "quat"), RowRole::expected_fail);
    }
    {
      auto plan = plans.infinite;
      s.set_plan(plan);
      auto d = quaternion_over_trivial(plan);
      s.section("quaternion over 0 crossed");
      s.run(prefixed(crossed_laws(d), "qx0"), RowRole::expected_fail);
    }
    {
      s.set_plan(plans.finite);
      auto d    = q8_over_trivial();
      auto plan = plans.finite;
      s.section("Q8 over 0");
      s.run({detail::kind_fact("q8-kind", CrossedKind::precrossed_semimodule,
                               [d, plan] { return detail::kind_of(d, plan); })});
      s.run(prefixed(reflexive_graph_laws(d, codomain_map(d)), "q8"));
      s.section("Q8 over 0 crossed");
      s.run(prefixed(crossed_laws(d), "q8"), RowRole::expected_fail);
    }
    {
      auto plan = plans.infinite;
      s.set_plan(plan);
      auto d = naturals_square(plan);
      s.section("N x N category");
      s.run({detail::kind_fact("n2-kind", CrossedKind::crossed_semimodule,
                               [d, plan] { return detail::kind_of(d, plan); })});
      s.run(prefixed(category_laws(d, internal_category(d, reflexive_graph(d))), "n2"));
      s.section("N x N groupoid");
      s.run(prefixed(groupoid_condition_laws(d), "n2"), RowRole::expected_fail);
    }
    {
      s.set_plan(plans.finite);
      auto d    = cyclic_identity(3);
      auto plan = plans.finite;
      s.section("Z3 groupoid");
      s.run({detail::kind_fact("z3-kind", CrossedKind::crossed_module,
                               [d, plan] { return detail::kind_of(d, plan); })});
      auto c = internal_category(d, reflexive_graph(d));
      s.run(prefixed(groupoid_laws(d, internal_groupoid(d, c)), "z3"));
    }
    {
      s.set_plan(plans.infinite);
      auto d = circle_crossed(plans.infinite);
      auto c = internal_category(d, reflexive_graph(d));
      s.section("arcs");
      s.run(arc_laws(c));
    }
    s.set_plan(plans.finite);
    s.section("Smith is Huq");
    for (auto const& G : {cyclic_group(4), klein_group(), symmetric_group3()}) {
      s.run({make_fact("smith-huq-" + G.name(), "Smith and Huq commutation agree on every pair",
                       "Smith is Huq", [G] { return detail::smith_huq_disagreement(G); })});
    }
    s.section("admissibility family");
    s.run({make_fact("admissibility-family", "criterion and oracle agree on every small diagram",
                     "admissibility criterion", [] { return detail::family_disagreement(); })});
    s.matrix();
  }

}  // namespace conjcheck
