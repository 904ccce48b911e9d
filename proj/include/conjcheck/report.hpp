#pragma once

#include <cstddef>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "conjcheck/errors.hpp"
#include "conjcheck/law.hpp"
#include "conjcheck/plan.hpp"
#include "conjcheck/structure.hpp"
#include "conjcheck/verdict.hpp"

namespace conjcheck {

  // law: a failure is a failure. condition: part of a classification, its
  // outcome is reported but does not decide the exit status. expected_fail:
  // the row must fail.
  enum class RowRole { law, condition, expected_fail };

  struct ReportRow {
    std::string section;
    std::string law;
    std::string anchor;
    Verdict     verdict;
    RowRole     role = RowRole::law;

    bool ok() const noexcept {
      switch (role) {
        case RowRole::law:
          return verdict.passed() || verdict.inconclusive;
        case RowRole::condition:
          return true;
        case RowRole::expected_fail:
          return verdict.failed() && !verdict.inconclusive;
      }
      return false;
    }

    std::string status() const {
      switch (role) {
        case RowRole::law:
          if (verdict.passed()) {
            return verdict.vacuous() ? "vacuous" : "pass";
          }
          return verdict.inconclusive ? "inconclusive" : "FAIL";
        case RowRole::condition:
          return verdict.passed() ? "holds" : "fails";
        case RowRole::expected_fail:
          return ok() ? "expected-fail" : "REGRESSION";
      }
      return "?";
    }
  };

  struct Report {
    std::string              command;
    std::vector<std::string> lines;
    std::vector<ReportRow>   rows;
    std::vector<std::string> errors;
    bool                     matrix = false;

    // 0 pass, 1 law failure, 2 input error.
    int exit_status() const {
      if (!errors.empty()) {
        return 2;
      }
      for (auto const& r : rows) {
        if (!r.ok()) {
          return 1;
        }
      }
      return 0;
    }

    // Per section in order of appearance: FAIL if a row is not ok, xfail if
    // it holds expected failures, ok otherwise.
    std::vector<std::pair<std::string, std::string>> section_status() const {
      std::vector<std::pair<std::string, std::string>> out;
      for (auto const& r : rows) {
        if (out.empty() || out.back().first != r.section) {
          out.emplace_back(r.section, "ok");
        }
        auto& status = out.back().second;
        if (!r.ok()) {
          status = "FAIL";
        } else if (r.role == RowRole::expected_fail && status == "ok") {
          status = "xfail";
        }
      }
      return out;
    }

    void print(std::ostream& os) const {
      os << "$ " << command << "\n";
      for (auto const& l : lines) {
        os << l << "\n";
      }
      std::string section;
      for (auto const& r : rows) {
        if (r.section != section) {
          section = r.section;
          os << "-- " << section << "\n";
        }
        os << "  " << std::left << std::setw(13) << r.status() << " " << std::setw(26) << r.law
           << " [" << r.anchor << "] " << r.verdict.summary() << "\n";
      }
      for (auto const& e : errors) {
        os << "error: " << e << "\n";
      }
      if (matrix) {
        os << "matrix:";
        for (auto const& [name, status] : section_status()) {
          os << " " << name << "=" << status;
        }
        os << "\n";
      }
      int status = exit_status();
      os << "result: " << (status == 0 ? "pass" : status == 1 ? "FAIL" : "input error") << " (exit "
         << status << ")\n";
    }
  };

  template <typename E>
  std::string describe(ConjStructure<E> const& s) {
    std::ostringstream os;
    os << s.name() << ": ";
    if (s.is_finite()) {
      os << s.size() << (s.size() == 1 ? " element" : " elements");
    } else {
      os << "infinite";
    }
    os << (s.is_monoid() ? ", monoid" : ", semigroup");
    if (s.declared_group()) {
      os << ", group";
    }
    return os.str();
  }

  // Collects report rows for one command. In replay mode laws are not run:
  // the one whose slug matches the token is evaluated at the witness, unless
  // the caller needs the results to continue.
  class Session {
   public:
    Session(std::string command, EnumerationPlan plan, std::optional<std::string> replay = std::nullopt)
        : _plan(plan), _replay(std::move(replay)) {
      _report.command = std::move(command);
    }

    EnumerationPlan const& plan() const noexcept {
      return _plan;
    }
    void set_plan(EnumerationPlan plan) {
      _plan = plan;
    }
    bool replaying() const noexcept {
      return _replay.has_value();
    }

    void line(std::string text) {
      _report.lines.push_back(std::move(text));
    }
    void section(std::string name) {
      _section = std::move(name);
    }

    std::vector<LawResult> run(LawList const& laws, RowRole role = RowRole::law, bool needed = false) {
      if (_replay) {
        for (auto const& law : laws) {
          if (!_replayed && law.slug == replay_slug()) {
            _replayed = true;
            Verdict v = replay_token(LawList{law}, *_replay);
            _report.rows.push_back({_section, law.slug, law.anchor, v, role});
          }
        }
        return needed ? run_laws(laws, _plan) : std::vector<LawResult>{};
      }
      auto results = run_laws(laws, _plan);
      for (auto const& r : results) {
        _report.rows.push_back({_section, r.law.slug, r.law.anchor, r.verdict, role});
      }
      return results;
    }

    void row(std::string law, std::string anchor, Verdict v, RowRole role = RowRole::law) {
      if (!_replay) {
        _report.rows.push_back({_section, std::move(law), std::move(anchor), std::move(v), role});
      }
    }

    void error(std::string message) {
      _report.errors.push_back(std::move(message));
    }

    Report finish() {
      if (_replay && !_replayed && _report.errors.empty()) {
        _report.errors.push_back("no law named '" + replay_slug() + "' in this run");
      }
      return std::move(_report);
    }

    void matrix() {
      _report.matrix = true;
    }

   private:
    std::string replay_slug() const {
      return _replay->substr(0, _replay->find(':'));
    }

    EnumerationPlan            _plan;
    std::optional<std::string> _replay;
    bool                       _replayed = false;
    std::string                _section;
    Report                     _report;
  };

  inline bool all_passed(std::vector<LawResult> const& results) {
    for (auto const& r : results) {
      if (r.verdict.failed()) {
        return false;
      }
    }
    return true;
  }

}  // namespace conjcheck
