#pragma once

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "conjcheck/plan.hpp"

namespace conjcheck {

  enum class Outcome {
    holds_exhaustive,
    holds_bounded,
    holds_sampled,
    holds_replay,
    fails
  };

  // Outcome of a law check. A failing verdict always carries the law that
  // failed and a witness tuple that reproduces the failure when replayed.
  struct Verdict {
    Outcome       outcome = Outcome::holds_exhaustive;
    std::size_t   window  = 0;
    std::size_t   count   = 0;
    std::uint64_t seed    = 0;
    std::size_t   checks  = 0;  // tuples evaluated
    std::string   law;          // slug of the failing law
    std::string   statement;    // the failing law, written out
    std::vector<std::string> witness;
    std::string              detail;
    // Existential laws searched within a window cannot be refuted; such
    // failures are inconclusive rather than disproofs.
    bool inconclusive = false;

    static Verdict holds(EnumerationPlan const& plan, std::size_t checks) {
      Verdict v;
      v.checks = checks;
      switch (plan.mode) {
        case PlanMode::exhaustive:
          v.outcome = Outcome::holds_exhaustive;
          break;
        case PlanMode::bounded:
          v.outcome = Outcome::holds_bounded;
          v.window  = plan.window;
          break;
        case PlanMode::sampled:
          v.outcome = Outcome::holds_sampled;
          v.count   = plan.count;
          v.seed    = plan.seed;
          break;
      }
      return v;
    }

    static Verdict failure(std::string              law,
                           std::string              statement,
                           std::vector<std::string> witness,
                           std::string              detail) {
      Verdict v;
      v.outcome   = Outcome::fails;
      v.law       = std::move(law);
      v.statement = std::move(statement);
      v.witness   = std::move(witness);
      v.detail    = std::move(detail);
      return v;
    }

    bool passed() const noexcept {
      return outcome != Outcome::fails;
    }

    bool failed() const noexcept {
      return outcome == Outcome::fails;
    }

    // Holds vacuously: nothing to check (e.g. empty carrier).
    bool vacuous() const noexcept {
      return passed() && checks == 0;
    }

    // "law:w1|w2|..." as accepted by --replay.
    std::string replay_token() const {
      std::string out = law + ":";
      for (std::size_t i = 0; i < witness.size(); ++i) {
        out += (i ? "|" : "") + witness[i];
      }
      return out;
    }

    std::string summary() const {
      std::ostringstream os;
      switch (outcome) {
        case Outcome::holds_exhaustive:
          os << "holds (exhaustive";
          break;
        case Outcome::holds_bounded:
          os << "holds (bounded window=" << window;
          break;
        case Outcome::holds_sampled:
          os << "holds (sampled count=" << count << " seed=" << seed;
          break;
        case Outcome::holds_replay:
          os << "holds (replayed";
          break;
        case Outcome::fails:
          os << (inconclusive ? "inconclusive: " : "FAILS: ") << statement
             << " witness " << replay_token();
          if (!detail.empty()) {
            os << " [" << detail << "]";
          }
          return os.str();
      }
      os << ", " << checks << " checks";
      if (checks == 0) {
        os << ", vacuous";
      }
      os << ")";
      return os.str();
    }

    friend bool operator==(Verdict const&, Verdict const&) = default;
  };

  // Combines the verdicts of several laws checked under one plan: the first
  // failure wins, otherwise the weaker kind of evidence is kept and the check
  // counts add up.
  inline Verdict combine(Verdict const& first, Verdict const& second) {
    if (first.failed()) {
      return first;
    }
    if (second.failed()) {
      return second;
    }
    Verdict out = static_cast<int>(second.outcome) > static_cast<int>(first.outcome)
                      ? second
                      : first;
    out.checks = first.checks + second.checks;
    return out;
  }

}  // namespace conjcheck
