#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "conjcheck/errors.hpp"
#include "conjcheck/rational.hpp"

namespace conjcheck {

  enum class PlanMode { exhaustive, bounded, sampled };

  // How the quantifiers of a law are instantiated.
  //   exhaustive   every element of finite carriers
  //   bounded      the first `window` elements of each (enumerable) carrier
  //   sampled      `count` tuples drawn deterministically from `seed`
  struct EnumerationPlan {
    PlanMode      mode   = PlanMode::exhaustive;
    std::size_t   window = 0;
    std::size_t   count  = 0;
    std::uint64_t seed   = 0;

    static EnumerationPlan exhaustive() {
      return {};
    }

    static EnumerationPlan bounded(std::size_t window) {
      if (window == 0) {
        throw PlanError("bounded window must be positive");
      }
      return {PlanMode::bounded, window, 0, 0};
    }

    static EnumerationPlan sampled(std::size_t count, std::uint64_t seed) {
      if (count == 0) {
        throw PlanError("sample count must be positive");
      }
      return {PlanMode::sampled, 0, count, seed};
    }

    // "exhaustive", "bounded=N" or "sampled=N" (seed given separately).
    static EnumerationPlan parse(std::string_view spec, std::uint64_t seed) {
      auto number = [&](std::string_view digits) {
        auto v = Integer::parse(digits);
        if (v.sign() <= 0 || !v.raw().fits_ulong_p()) {
          throw PlanError("bad plan size in '" + std::string(spec) + "'");
        }
        return static_cast<std::size_t>(v.raw().get_ui());
      };
      try {
        if (spec == "exhaustive") {
          return exhaustive();
        } else if (spec.starts_with("bounded=")) {
          return bounded(number(spec.substr(8)));
        } else if (spec.starts_with("sampled=")) {
          return sampled(number(spec.substr(8)), seed);
        }
      } catch (ParseError const&) {
      }
      throw PlanError("unknown plan '" + std::string(spec)
                      + "' (expected exhaustive, bounded=N or sampled=N)");
    }

    std::string str() const {
      switch (mode) {
        case PlanMode::exhaustive:
          return "exhaustive";
        case PlanMode::bounded:
          return "bounded=" + std::to_string(window);
        case PlanMode::sampled:
          return "sampled=" + std::to_string(count)
                 + " seed=" + std::to_string(seed);
      }
      return "";
    }
  };

  // Generator for the index-th sampled tuple: a pure function of
  // (seed, index), so tuples can be drawn in any order or in parallel.
  inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  inline std::mt19937_64 tuple_rng(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ index));
  }

  // Magnitude bound on numerators and denominators of sampled rationals.
  inline constexpr long default_sample_bound = 20;

  inline long draw_int(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  }

  inline Rational draw_rational(std::mt19937_64& rng,
                                long bound = default_sample_bound) {
    return Rational(draw_int(rng, -bound, bound), draw_int(rng, 1, bound));
  }

  // Uniform-ish rational in (0, 1].
  inline Rational draw_unit_interval(std::mt19937_64& rng,
                                     long bound = default_sample_bound) {
    long d = draw_int(rng, 1, bound);
    return Rational(draw_int(rng, 1, d), d);
  }

}  // namespace conjcheck
