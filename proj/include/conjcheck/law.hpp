#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "conjcheck/errors.hpp"
#include "conjcheck/plan.hpp"
#include "conjcheck/structure.hpp"
#include "conjcheck/verdict.hpp"

namespace conjcheck {

  // A predicate returns either bool (true = holds) or an optional violation
  // message (nullopt = holds).
  namespace detail {
    inline std::optional<std::string> as_violation(bool ok) {
      return ok ? std::nullopt : std::optional<std::string>(std::string());
    }
    inline std::optional<std::string> as_violation(std::optional<std::string> v) {
      return v;
    }

    template <typename... E, std::size_t... I>
    std::vector<std::string> show_tuple(std::tuple<Domain<E>...> const& doms,
                                        std::tuple<E...> const&         t,
                                        std::index_sequence<I...>) {
      return {std::get<I>(doms).show(std::get<I>(t))...};
    }

    template <typename... E, std::size_t... I>
    std::tuple<E...> pick(std::tuple<std::vector<E>...> const&  lists,
                          std::array<std::size_t, sizeof...(E)> const& idx,
                          std::index_sequence<I...>) {
      return std::tuple<E...>{std::get<I>(lists)[idx[I]]...};
    }

    // Visits every index tuple below `sizes` in lexicographic order (first
    // coordinate most significant) until `visit` returns false or `limit`
    // tuples have been seen. Returns the number visited.
    template <std::size_t N, typename Visit>
    std::size_t odometer(std::array<std::size_t, N> const& sizes,
                         std::size_t                       limit,
                         Visit&&                           visit) {
      for (auto n : sizes) {
        if (n == 0) {
          return 0;
        }
      }
      std::array<std::size_t, N> idx{};
      std::size_t                seen = 0;
      while (seen < limit) {
        ++seen;
        if (!visit(idx)) {
          return seen;
        }
        std::size_t pos = N;
        while (pos > 0) {
          --pos;
          if (++idx[pos] < sizes[pos]) {
            break;
          }
          idx[pos] = 0;
          if (pos == 0) {
            return seen;
          }
        }
        if constexpr (N == 0) {
          return seen;
        }
      }
      return seen;
    }
  }  // namespace detail

  // Checks `pred` over the tuple space of `doms` under `plan`. Exhaustive and
  // bounded plans visit tuples in lexicographic order of the canonical
  // enumerations, so the first failure is the smallest witness. Sampled
  // plans try landmark tuples first (at most half the budget) and then draw
  // tuple j from tuple_rng(seed, j).
  template <typename... E, typename Pred>
  Verdict forall(std::string const&              law,
                 std::string const&              statement,
                 EnumerationPlan const&          plan,
                 std::tuple<Domain<E>...> const& doms,
                 Pred const&                     pred) {
    constexpr std::size_t N   = sizeof...(E);
    auto                  seq = std::index_sequence_for<E...>{};
    std::optional<Verdict> failure;
    auto evaluate = [&](std::tuple<E...> const& t) {
      auto violation = detail::as_violation(std::apply(pred, t));
      if (violation) {
        failure = Verdict::failure(law, statement,
                                   detail::show_tuple(doms, t, seq),
                                   *violation);
        return false;
      }
      return true;
    };

    if (plan.mode != PlanMode::sampled) {
      auto extent = [&](auto const& d) {
        if (plan.mode == PlanMode::exhaustive) {
          if (!d.is_finite()) {
            throw PlanError("exhaustive plan on infinite carrier " + d.name()
                            + " (law " + law + ")");
          }
          return d.size();
        }
        return d.is_finite() ? std::min(plan.window, d.size()) : plan.window;
      };
      std::array<std::size_t, N>    sizes{};
      std::tuple<std::vector<E>...> lists;
      [&]<std::size_t... I>(std::index_sequence<I...>) {
        ((sizes[I] = extent(std::get<I>(doms))), ...);
        ((std::get<I>(lists) = std::get<I>(doms).first(sizes[I])), ...);
      }(seq);
      std::size_t checks = detail::odometer<N>(
          sizes, static_cast<std::size_t>(-1),
          [&](auto const& idx) { return evaluate(detail::pick(lists, idx, seq)); });
      if (failure) {
        return *failure;
      }
      return Verdict::holds(plan, checks);
    }

    // Sampled.
    std::size_t checks = 0;
    bool        all_landmarks = true;
    std::array<std::size_t, N> lsizes{};
    [&]<std::size_t... I>(std::index_sequence<I...>) {
      ((lsizes[I] = std::get<I>(doms).landmarks().size()), ...);
    }(seq);
    for (auto n : lsizes) {
      all_landmarks = all_landmarks && n > 0;
    }
    if (all_landmarks) {
      std::tuple<std::vector<E>...> lists;
      [&]<std::size_t... I>(std::index_sequence<I...>) {
        ((std::get<I>(lists) = std::get<I>(doms).landmarks()), ...);
      }(seq);
      checks = detail::odometer<N>(lsizes, plan.count / 2, [&](auto const& idx) {
        return evaluate(detail::pick(lists, idx, seq));
      });
      if (failure) {
        return *failure;
      }
    }
    for (std::size_t j = 0; checks < plan.count; ++j) {
      auto rng = tuple_rng(plan.seed, j);
      std::tuple<E...> t = [&]<std::size_t... I>(std::index_sequence<I...>) {
        return std::tuple<E...>{std::get<I>(doms).draw(rng)...};
      }(seq);
      ++checks;
      if (!evaluate(t)) {
        return *failure;
      }
    }
    return Verdict::holds(plan, checks);
  }

  ////////////////////////////////////////////////////////////////////////
  // LawCheck: a named, replayable law
  ////////////////////////////////////////////////////////////////////////

  struct LawCheck {
    std::string slug;
    std::string statement;
    std::string anchor;
    // Existential laws searched within a window: failures are inconclusive.
    bool existential = false;
    std::function<Verdict(EnumerationPlan const&)>          run;
    std::function<Verdict(std::vector<std::string> const&)> replay_fn;

    Verdict check(EnumerationPlan const& plan) const {
      Verdict v = run(plan);
      v.inconclusive = v.failed() && existential;
      return v;
    }

    // Re-evaluates the law at one witness tuple.
    Verdict replay(std::vector<std::string> const& witness) const {
      Verdict v = replay_fn(witness);
      v.inconclusive = v.failed() && existential;
      return v;
    }
  };

  template <typename... E, typename Pred>
  LawCheck make_law(std::string              slug,
                    std::string              statement,
                    std::string              anchor,
                    std::tuple<Domain<E>...> doms,
                    Pred                     pred) {
    LawCheck law;
    law.slug      = std::move(slug);
    law.statement = std::move(statement);
    law.anchor    = std::move(anchor);
    law.run = [slug = law.slug, statement = law.statement, doms,
               pred](EnumerationPlan const& plan) {
      return forall(slug, statement, plan, doms, pred);
    };
    law.replay_fn = [slug = law.slug, statement = law.statement, doms,
                     pred](std::vector<std::string> const& witness) {
      constexpr std::size_t N = sizeof...(E);
      if (witness.size() != N) {
        throw ParseError("law " + slug + " takes " + std::to_string(N)
                         + " witness elements, got "
                         + std::to_string(witness.size()));
      }
      auto t = [&]<std::size_t... I>(std::index_sequence<I...>) {
        return std::tuple<E...>{std::get<I>(doms).parse(witness[I])...};
      }(std::index_sequence_for<E...>{});
      auto violation = detail::as_violation(std::apply(pred, t));
      if (violation) {
        return Verdict::failure(slug, statement, witness, *violation);
      }
      Verdict v;
      v.outcome = Outcome::holds_replay;
      v.checks  = 1;
      return v;
    };
    return law;
  }

  // A closed statement, evaluated once.
  template <typename Pred>
  LawCheck make_fact(std::string slug,
                     std::string statement,
                     std::string anchor,
                     Pred        pred) {
    LawCheck law;
    law.slug      = std::move(slug);
    law.statement = std::move(statement);
    law.anchor    = std::move(anchor);
    auto eval = [slug = law.slug, statement = law.statement, pred](Outcome ok) {
      auto violation = detail::as_violation(pred());
      if (violation) {
        return Verdict::failure(slug, statement, {}, *violation);
      }
      Verdict v;
      v.outcome = ok;
      v.checks  = 1;
      return v;
    };
    law.run = [eval](EnumerationPlan const&) {
      return eval(Outcome::holds_exhaustive);
    };
    law.replay_fn = [eval](std::vector<std::string> const&) {
      return eval(Outcome::holds_replay);
    };
    return law;
  }

  using LawList = std::vector<LawCheck>;

  inline LawList& operator+=(LawList& lhs, LawList const& rhs) {
    lhs.insert(lhs.end(), rhs.begin(), rhs.end());
    return lhs;
  }

  // The same laws under slugs "prefix-slug".
  inline LawList prefixed(LawList laws, std::string const& prefix) {
    for (auto& law : laws) {
      law.slug = prefix + "-" + law.slug;
      auto rename = [slug = law.slug](Verdict v) {
        if (v.failed()) {
          v.law = slug;
        }
        return v;
      };
      law.run = [run = law.run, rename](EnumerationPlan const& p) { return rename(run(p)); };
      law.replay_fn = [fn = law.replay_fn, rename](std::vector<std::string> const& w) {
        return rename(fn(w));
      };
    }
    return laws;
  }

  struct LawResult {
    LawCheck law;
    Verdict  verdict;
  };

  // Runs every law (no short circuit), in order.
  inline std::vector<LawResult> run_laws(LawList const&         laws,
                                         EnumerationPlan const& plan) {
    std::vector<LawResult> out;
    out.reserve(laws.size());
    for (auto const& law : laws) {
      out.push_back({law, law.check(plan)});
    }
    return out;
  }

  // First failure in list order, or the combined pass.
  inline Verdict verify_all(LawList const& laws, EnumerationPlan const& plan) {
    Verdict out = Verdict::holds(EnumerationPlan::exhaustive(), 0);
    for (auto const& law : laws) {
      out = combine(out, law.check(plan));
      if (out.failed()) {
        return out;
      }
    }
    return out;
  }

  // Splits "slug:w1|w2|..." and replays it against the matching law.
  inline Verdict replay_token(LawList const& laws, std::string_view token) {
    auto colon = token.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("replay token must look like law:w1|w2, got '"
                       + std::string(token) + "'");
    }
    std::string slug(token.substr(0, colon));
    std::string_view rest = token.substr(colon + 1);
    std::vector<std::string> witness;
    if (!rest.empty()) {
      std::size_t start = 0;
      while (true) {
        auto bar = rest.find('|', start);
        witness.emplace_back(rest.substr(start, bar - start));
        if (bar == std::string_view::npos) {
          break;
        }
        start = bar + 1;
      }
    }
    for (auto const& law : laws) {
      if (law.slug == slug) {
        return law.replay(witness);
      }
    }
    throw ParseError("no law named '" + slug + "' in this run");
  }

}  // namespace conjcheck
