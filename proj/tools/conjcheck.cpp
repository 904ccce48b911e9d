#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "conjcheck/commands.hpp"
#include "conjcheck/gallery.hpp"

namespace {

  std::string echo(int argc, char** argv) {
    std::string out = "conjcheck";
    for (int i = 1; i < argc; ++i) {
      out += " ";
      out += argv[i];
    }
    return out;
  }

  std::string error_text(conjcheck::Error const& e) {
    std::string out = e.what();
    if (!e.witness().empty()) {
      out += " (witness";
      for (auto const& w : e.witness()) {
        out += " " + w;
      }
      out += ")";
    }
    return out;
  }

}  // namespace

int main(int argc, char** argv) {
  using namespace conjcheck;

  CLI::App app{"conjcheck: laws of conjugation semigroups, Schreier extensions and crossed semimodules"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string   plan_text;
  std::uint64_t seed = 1;
  std::string   replay;
  std::string   out;
  std::string   path;
  std::size_t   count = 1000;

  app.add_option("--plan", plan_text, "exhaustive | bounded=N | sampled=N");
  app.add_option("--seed", seed, "seed for sampled plans")->capture_default_str();
  app.add_option("--replay", replay, "re-evaluate one law at a witness, law:w1|w2");
  app.add_option("--out", out, "write the report (or the arc data for demo-arcs) to this file");

  auto* verify     = app.add_subcommand("verify", "check the axioms of a structure description");
  auto* schreier   = app.add_subcommand("schreier", "find the Schreier retraction of a split epi and check it");
  auto* classify   = app.add_subcommand("classify", "classify an extension with h as a crossed structure");
  auto* admissible = app.add_subcommand("admissible", "decide admissibility of a diagram");
  auto* arcs       = app.add_subcommand("demo-arcs", "compose sampled arcs of the disk-over-circle category");
  auto* gallery    = app.add_subcommand("gallery", "run the built-in examples and counterexamples");
  for (auto* sub : {verify, schreier, classify, admissible}) {
    sub->add_option("path", path, "description file (JSON)")->required();
  }
  arcs->add_option("--count", count, "number of composable pairs")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::optional<std::string> replay_token;
  if (!replay.empty()) {
    replay_token = replay;
  }
  Session session(echo(argc, argv), EnumerationPlan::exhaustive(), replay_token);
  if (replay_token) {
    session.line("replay " + replay);
  }
  try {
    std::optional<EnumerationPlan> plan;
    if (!plan_text.empty()) {
      plan = EnumerationPlan::parse(plan_text, seed);
    }
    if (verify->parsed()) {
      verify_command(session, read_json_file(path), plan, seed);
    } else if (schreier->parsed()) {
      schreier_command(session, read_json_file(path), plan, seed);
    } else if (classify->parsed()) {
      classify_command(session, read_json_file(path), plan, seed);
    } else if (admissible->parsed()) {
      admissible_command(session, read_json_file(path), plan, seed);
    } else if (arcs->parsed()) {
      demo_arcs_command(session, count, seed, out.empty() ? std::nullopt : std::optional<std::string>(out));
    } else if (gallery->parsed()) {
      auto plans = gallery_plans(plan, seed);
      session.line("plans finite " + plans.finite.str() + ", infinite " + plans.infinite.str());
      gallery_rows(session, plans);
    }
  } catch (Error const& e) {
    session.error(error_text(e));
  } catch (std::exception const& e) {
    session.error(e.what());
  }

  Report report = session.finish();
  report.print(std::cout);
  if (!out.empty() && !arcs->parsed()) {
    std::ofstream os(out);
    if (!os) {
      std::cerr << "cannot write " << out << "\n";
      return 2;
    }
    report.print(os);
  }
  return report.exit_status();
}
