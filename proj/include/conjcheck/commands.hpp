#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conjcheck/admissibility.hpp"
#include "conjcheck/arcs.hpp"
#include "conjcheck/axioms.hpp"
#include "conjcheck/description.hpp"
#include "conjcheck/internal.hpp"
#include "conjcheck/report.hpp"
#include "conjcheck/schreier.hpp"
#include "conjcheck/showcase.hpp"

namespace conjcheck {

  // Sample count used when no plan is given and a carrier is infinite.
  inline constexpr std::size_t default_sample_count = 1000;

  inline EnumerationPlan effective_plan(std::optional<EnumerationPlan> const& requested, bool finite,
                                        std::uint64_t seed) {
    if (requested) {
      return *requested;
    }
    return finite ? EnumerationPlan::exhaustive() : EnumerationPlan::sampled(default_sample_count, seed);
  }

  ////////////////////////////////////////////////////////////////////////
  // verify
  ////////////////////////////////////////////////////////////////////////

  template <typename E>
  void verify_rows(Session& s, ConjStructure<E> const& S) {
    s.line("structure " + describe(S));
    std::size_t window = s.plan().mode == PlanMode::bounded ? s.plan().window : default_ore_window;
    s.section(S.name());
    s.run(structure_laws(S, window));
  }

  inline void verify_command(Session& s, Json const& doc, std::optional<EnumerationPlan> const& plan,
                             std::uint64_t seed) {
    auto S = structure_from_json(doc);
    std::visit(
        [&](auto const& st) {
          s.set_plan(effective_plan(plan, st.is_finite(), seed));
          s.line("plan " + s.plan().str());
          verify_rows(s, st);
        },
        S);
  }

  ////////////////////////////////////////////////////////////////////////
  // schreier
  ////////////////////////////////////////////////////////////////////////

  template <typename EX, typename EA, typename EB>
  void schreier_rows(Session& s, SchreierExtension<EX, EA, EB> const& e) {
    s.section("retraction");
    s.run(retraction_laws(e));
    s.run(retraction_conjugation_laws(e));
    s.section("induced action");
    ExternalAction<EB, EX> phi("b.x = q(r(b) + k(x))", e.base(), e.kernel(),
                               [e](EB const& b, EX const& x) { return e.act(b, x); });
    s.run(action_laws(phi));
    s.run(compatibility_laws(phi, false));
    s.section("round trip");
    try {
      auto e2 = semidirect(phi, s.plan());
      s.run(roundtrip_laws(e, e2));
    } catch (Error const& err) {
      s.row("semidirect", "round trip",
            Verdict::failure("semidirect", "X x| B is a conjugation monoid for the induced action",
                             err.witness(), err.what()));
    }
    if (e.total().is_finite()) {
      std::string q = "q =";
      for (auto const& [a, x] : retraction_table(e)) {
        q += " " + e.total().show(a) + "->" + e.kernel().show(x);
      }
      s.line(q);
    }
  }

  template <typename EX, typename EA, typename EB>
  void extension_lines(Session& s, SchreierExtension<EX, EA, EB> const& e) {
    s.line("kernel " + describe(e.kernel()));
    s.line("total  " + describe(e.total()));
    s.line("base   " + describe(e.base()));
  }

  inline void finite_schreier(Session& s, FiniteExtensionSpec const& spec) {
    s.line("kernel " + describe(spec.kernel));
    s.line("total  " + describe(spec.total));
    s.line("base   " + describe(spec.base));
    s.section("split epi");
    s.run(prefixed(hom_laws(spec.k), "k"));
    s.run(prefixed(hom_laws(spec.f), "f"));
    s.run(prefixed(hom_laws(spec.r), "r"));
    detail::check_split_and_kernel(spec.k, spec.f, spec.r, s.plan());
    if (spec.q) {
      auto table = *spec.q;
      SchreierExtension<std::size_t, std::size_t, std::size_t> e(
          spec.k, spec.f, spec.r, [table](std::size_t a) { return table.at(a); }, s.plan());
      schreier_rows(s, e);
      return;
    }
    auto found = s.run(decomposition_laws(spec.k, spec.f, spec.r), RowRole::law, true);
    if (!all_passed(found)) {
      s.line("not a Schreier split epi: no retraction q exists");
      return;
    }
    schreier_rows(s, find_schreier_retraction(spec.k, spec.f, spec.r, s.plan()));
  }

  ////////////////////////////////////////////////////////////////////////
  // classify
  ////////////////////////////////////////////////////////////////////////

  template <typename EX, typename EA, typename EB>
  CrossedKind classify_rows(Session& s, CrossedData<EX, EA, EB> const& d) {
    s.line("h " + d.h.source().name() + " -> " + d.h.target().name());
    std::size_t window = s.plan().mode == PlanMode::bounded ? s.plan().window : default_ore_window;
    s.section("conditions");
    bool c1 = all_passed(s.run(precrossed_laws(d), RowRole::condition, true));
    bool c2 = all_passed(s.run(crossed_laws(d), RowRole::condition, true));
    bool c3 = all_passed(s.run(groupoid_condition_laws(d, window), RowRole::condition, true));
    bool cc = all_passed(s.run(composition_condition_laws(d), RowRole::condition, true));
    s.run({make_fact("composition-iff-crossed", "the composition condition holds exactly when the crossed condition does",
                     "internal category", [c2, cc]() -> std::optional<std::string> {
                       if (c2 == cc) {
                         return std::nullopt;
                       }
                       return std::string("crossed condition ") + (c2 ? "holds" : "fails") + " but (C) "
                              + (cc ? "holds" : "fails");
                     })});
    CrossedKind kind = !c1 ? CrossedKind::none
                       : !c2 ? CrossedKind::precrossed_semimodule
                       : !c3 ? CrossedKind::crossed_semimodule
                             : CrossedKind::crossed_module;
    s.line("classification " + to_string(kind));
    if (kind == CrossedKind::none) {
      return kind;
    }
    s.section("reflexive graph");
    auto g = reflexive_graph(d);
    s.run(reflexive_graph_laws(d, g.cod));
    if (kind == CrossedKind::precrossed_semimodule) {
      return kind;
    }
    s.section("internal category");
    auto c = internal_category(d, g);
    s.run(category_laws(d, c));
    if (kind == CrossedKind::crossed_semimodule) {
      return kind;
    }
    s.section("internal groupoid");
    s.run(groupoid_laws(d, internal_groupoid(d, c)));
    return kind;
  }

  ////////////////////////////////////////////////////////////////////////
  // Extension builders
  ////////////////////////////////////////////////////////////////////////

  struct ExtensionBuilder {
    std::string name;
    std::string params;
    bool        finite = false;
    std::function<void(Session&, Json const&)> schreier;
    std::function<void(Session&, Json const&)> classify;
  };

  namespace detail {
    template <typename Make>
    ExtensionBuilder crossed_builder(std::string name, std::string params, bool finite, Make make) {
      return {std::move(name), std::move(params), finite,
              [make](Session& s, Json const& p) {
                auto d = make(s.plan(), p);
                extension_lines(s, d.e);
                schreier_rows(s, d.e);
              },
              [make](Session& s, Json const& p) {
                auto d = make(s.plan(), p);
                extension_lines(s, d.e);
                classify_rows(s, d);
              }};
    }
  }  // namespace detail

  inline std::vector<ExtensionBuilder> const& extension_builders() {
    static std::vector<ExtensionBuilder> const registry = [] {
      std::vector<ExtensionBuilder> r;
      r.push_back(detail::crossed_builder(
          "quaternion-crossed", "", false,
          [](EnumerationPlan const& plan, Json const&) { return quaternion_crossed(plan); }));
      r.push_back(detail::crossed_builder(
          "circle", "", false,
          [](EnumerationPlan const& plan, Json const&) { return circle_crossed(plan); }));
      r.push_back(detail::crossed_builder(
          "quaternion-over-trivial", "", false,
          [](EnumerationPlan const& plan, Json const&) { return quaternion_over_trivial(plan); }));
      r.push_back(detail::crossed_builder(
          "naturals-square", "", false,
          [](EnumerationPlan const& plan, Json const&) { return naturals_square(plan); }));
      r.push_back(detail::crossed_builder(
          "q8-over-trivial", "", true, [](EnumerationPlan const&, Json const&) { return q8_over_trivial(); }));
      r.push_back(detail::crossed_builder("cyclic-identity", "n", true,
                                          [](EnumerationPlan const&, Json const& p) {
                                            return cyclic_identity(detail::size_or(p, "n", 3));
                                          }));
      return r;
    }();
    return registry;
  }

  inline ExtensionBuilder const& find_extension_builder(std::string const& name) {
    for (auto const& b : extension_builders()) {
      if (b.name == name) {
        return b;
      }
    }
    std::string known;
    for (auto const& b : extension_builders()) {
      known += (known.empty() ? "" : ", ") + b.name;
    }
    throw ParseError("unknown extension builder '" + name + "' (known: " + known + ")");
  }

  inline void schreier_command(Session& s, Json const& doc, std::optional<EnumerationPlan> const& plan,
                               std::uint64_t seed) {
    auto spec = extension_from_json(doc);
    if (auto const* f = std::get_if<FiniteExtensionSpec>(&spec)) {
      s.set_plan(effective_plan(plan, true, seed));
      s.line("plan " + s.plan().str());
      finite_schreier(s, *f);
      return;
    }
    auto const& b = std::get<BuilderSpec>(spec);
    auto const& builder = find_extension_builder(b.name);
    s.set_plan(effective_plan(plan, builder.finite, seed));
    s.line("plan " + s.plan().str());
    builder.schreier(s, b.params);
  }

  inline void classify_command(Session& s, Json const& doc, std::optional<EnumerationPlan> const& plan,
                               std::uint64_t seed) {
    auto spec = extension_from_json(doc);
    if (auto const* f = std::get_if<FiniteExtensionSpec>(&spec)) {
      if (!f->h) {
        throw ParseError("classify needs a map h from the kernel to the base");
      }
      s.set_plan(effective_plan(plan, true, seed));
      s.line("plan " + s.plan().str());
      auto e = find_schreier_retraction(f->k, f->f, f->r, s.plan());
      extension_lines(s, e);
      classify_rows(s, crossed_data(e, *f->h));
      return;
    }
    auto const& b = std::get<BuilderSpec>(spec);
    auto const& builder = find_extension_builder(b.name);
    s.set_plan(effective_plan(plan, builder.finite, seed));
    s.line("plan " + s.plan().str());
    builder.classify(s, b.params);
  }

  ////////////////////////////////////////////////////////////////////////
  // admissible
  ////////////////////////////////////////////////////////////////////////

  inline bool admissible_rows(Session& s, DiagramSpec const& spec, std::size_t bound = default_oracle_bound) {
    auto const& d = spec.diagram;
    s.line("diagram " + spec.name);
    s.line("A " + describe(d.A()));
    s.line("B " + describe(d.B()));
    s.line("C " + describe(d.C()));
    s.line("D " + describe(d.D()));
    s.section("diagram");
    s.run(diagram_laws(d));
    auto pb = build_pullback(d);
    s.line("pullback " + describe(pb.P));
    s.run(pullback_laws(d, pb));
    s.section("criterion");
    bool criterion = all_passed(s.run(admissibility_criterion_laws(d, pb), RowRole::condition, true));
    auto crit      = check_admissibility_criterion(d, pb, EnumerationPlan::exhaustive());
    s.section("oracle");
    auto oracle = std::make_shared<OracleResult<std::size_t, std::size_t, std::size_t>>(
        check_admissible_oracle(d, bound));
    s.run({make_fact("oracle", "a unique phi on the pullback restricts to alpha and gamma",
                     "admissibility", [oracle]() -> std::optional<std::string> {
                       if (oracle->admissible) {
                         return std::nullopt;
                       }
                       return oracle->reason;
                     })},
          RowRole::condition);
    auto P = pb.P;
    auto D = d.D();
    s.run({make_fact("oracle-agrees", "the criterion and the oracle agree, with the same phi",
                     "admissibility", [oracle, criterion, crit, P, D]() -> std::optional<std::string> {
                       if (oracle->admissible != criterion) {
                         return std::string("criterion says ") + (criterion ? "admissible" : "not admissible")
                                + ", oracle says " + (oracle->admissible ? "admissible" : "not admissible");
                       }
                       if (criterion) {
                         for (auto const& [p, v] : oracle->phi) {
                           if (crit.phi(p) != v) {
                             return "phi differs at " + P.show(p) + ": " + D.show(crit.phi(p)) + " and "
                                    + D.show(v);
                           }
                         }
                       }
                       return std::nullopt;
                     })});
    s.line(std::string("verdict ") + (criterion ? "Admissible" : "NotAdmissible") + "; oracle "
           + (oracle->admissible == criterion ? "agrees" : "disagrees"));
    if (oracle->admissible) {
      std::string phi = "phi =";
      for (auto const& [p, v] : oracle->phi) {
        phi += " " + P.show(p) + "->" + D.show(v);
      }
      s.line(phi);
    } else if (!oracle->reason.empty()) {
      s.line("reason " + oracle->reason);
    }
    return criterion;
  }

  inline void admissible_command(Session& s, Json const& doc, std::optional<EnumerationPlan> const& plan,
                                 std::uint64_t seed) {
    auto spec = diagram_from_json(doc);
    s.set_plan(effective_plan(plan, true, seed));
    s.line("plan " + s.plan().str());
    admissible_rows(s, spec);
  }

  ////////////////////////////////////////////////////////////////////////
  // demo-arcs
  ////////////////////////////////////////////////////////////////////////

  inline void demo_arcs_command(Session& s, std::size_t count, std::uint64_t seed,
                                std::optional<std::string> const& out) {
    s.set_plan(EnumerationPlan::sampled(count, seed));
    s.line("plan " + s.plan().str());
    auto demo = demo_arcs(count, seed);
    auto const& w = demo.witness;
    s.line("arrow (" + ElementText<Gaussian>::show(w.arrow.x) + ", " + ElementText<Gaussian>::show(w.arrow.b)
           + ") has formal inverse (" + ElementText<Gaussian>::show(w.x) + ", "
           + ElementText<Gaussian>::show(w.b) + ") with |x|^2 = " + w.norm2.str() + ": "
           + (w.in_carrier ? "inside" : "out of carrier"));
    s.section("arc category");
    s.row("category", "internal category", demo.category);
    std::vector<LawCheck> laws;
    for (auto const& r : demo.laws) {
      laws.push_back(r.law);
      s.row(r.law.slug, r.law.anchor, r.verdict);
    }
    if (s.replaying()) {
      s.run(laws);
    }
    s.section("arc records");
    s.row("arc-records", "arc category", demo.records);
    if (out) {
      write_arc_file(*out, demo);
      auto back = read_arc_file(*out);
      Verdict v = back.size() == demo.compositions.size()
                      ? validate_arcs(back)
                      : Verdict::failure("arc-file", "the arc file reads back", {}, "record count changed");
      s.row("arc-file", "arc category", v);
      s.line("wrote " + std::to_string(back.size()) + " composable pairs to " + *out);
    }
  }

}  // namespace conjcheck
