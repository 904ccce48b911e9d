#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "conjcheck/errors.hpp"
#include "conjcheck/internal.hpp"
#include "conjcheck/law.hpp"
#include "conjcheck/showcase.hpp"

namespace conjcheck {

  // An arrow (x, b) of the disk-over-circle category, read as the arc of
  // radius |x| from b to h(x) b.
  struct ArcRecord {
    Gaussian x;
    Gaussian b;

    ArcRecord(Gaussian x_, Gaussian b_) : x(std::move(x_)), b(std::move(b_)) {
      if (!unit_disk().contains(x)) {
        throw ParseError("arc radius out of range: " + ElementText<Gaussian>::show(x));
      }
      if (b.norm2() != Rational(1)) {
        throw ParseError("arc start is not on the unit circle: " + ElementText<Gaussian>::show(b));
      }
    }

    Rational radius2() const {
      return x.norm2();
    }
    Gaussian const& start() const noexcept {
      return b;
    }
    Gaussian end() const {
      return normalized(x) * b;
    }
    std::pair<Gaussian, Gaussian> arrow() const {
      return {x, b};
    }

    friend bool operator==(ArcRecord const&, ArcRecord const&) = default;
  };

  // `second` after `first`.
  inline bool composable(ArcRecord const& second, ArcRecord const& first) {
    return second.b == first.end();
  }

  inline ArcRecord compose(ArcRecord const& second, ArcRecord const& first) {
    if (!composable(second, first)) {
      throw DomainError("arcs are not composable: " + ElementText<Gaussian>::show(second.b)
                        + " != " + ElementText<Gaussian>::show(first.end()));
    }
    return ArcRecord(second.x * first.x, first.b);
  }

  struct ArcComposition {
    ArcRecord first;
    ArcRecord second;
    ArcRecord composite;
  };

  // The formal inverse (x^-1, h(x) b) of an arrow and whether it is an arrow.
  struct InverseWitness {
    ArcRecord arrow;
    Gaussian  x;
    Gaussian  b;
    Rational  norm2;
    bool      in_carrier = false;
  };

  inline InverseWitness inverse_witness(ArcRecord const& a) {
    Gaussian inv = *a.x.inverse();
    Rational n   = inv.norm2();
    bool     in  = unit_disk().contains(inv);
    return {a, inv, a.end(), n, in};
  }

  using CircleData     = CrossedData<Gaussian, std::pair<Gaussian, Gaussian>, Gaussian>;
  using CircleCategory = InternalCategory<std::pair<Gaussian, Gaussian>, Gaussian>;

  inline LawList arc_laws(CircleCategory const& c) {
    using A = std::pair<Gaussian, Gaussian>;
    using P = std::pair<A, A>;
    auto D  = unit_disk();
    auto S  = unit_circle();
    auto m  = c.m;
    auto const& T = m.target();
    std::string anchor = "arc category";
    LawList laws;
    laws.push_back(make_law(
        "arc-composition", "(x', h(x) b) o (x, b) = (x'x, b) and ends at h(x') h(x) b", anchor,
        std::make_tuple(D.carrier(), S.carrier(), D.carrier()),
        [m, T](Gaussian const& x, Gaussian const& b, Gaussian const& x2) -> std::optional<std::string> {
          ArcRecord first(x, b);
          ArcRecord second(x2, first.end());
          ArcRecord expected = compose(second, first);
          A         got      = m(P(second.arrow(), first.arrow()));
          if (auto v = detail::differ(T, got, expected.arrow())) {
            return v;
          }
          if (expected.end() != normalized(x2) * first.end()) {
            return "the composite ends at " + ElementText<Gaussian>::show(expected.end());
          }
          return std::nullopt;
        }));
    laws.push_back(make_law("arc-identity", "(1, h(x) b) o (x, b) = (x, b) = (x, b) o (1, b)", anchor,
                            std::make_tuple(D.carrier(), S.carrier()),
                            [m, T](Gaussian const& x, Gaussian const& b) {
                              ArcRecord a(x, b);
                              Gaussian  one{1, 0};
                              auto v = detail::differ(T, m(P(A(one, a.end()), a.arrow())), a.arrow());
                              return v ? v : detail::differ(T, m(P(a.arrow(), A(one, b))), a.arrow());
                            }));
    laws.push_back(make_fact(
        "arc-inverse-outside", "the formal inverse of (i/2, 1) is (-2i, i), outside the carrier",
        anchor, []() -> std::optional<std::string> {
          auto w = inverse_witness(ArcRecord({0, Rational(1, 2)}, {1, 0}));
          if (w.x != Gaussian{0, -2} || w.b != Gaussian{0, 1}) {
            return "formal inverse is (" + ElementText<Gaussian>::show(w.x) + ", "
                   + ElementText<Gaussian>::show(w.b) + ")";
          }
          if (w.in_carrier) {
            return "the formal inverse lies in the carrier";
          }
          return std::nullopt;
        }));
    return laws;
  }

  // Every record is a composable pair with the right composite and
  // consistent derived fields.
  inline Verdict validate_arcs(std::vector<ArcComposition> const& records) {
    std::string statement = "stored arcs are composable and compose to (x'x, b)";
    for (std::size_t i = 0; i < records.size(); ++i) {
      auto const& r = records[i];
      std::vector<std::string> w{std::to_string(i)};
      if (!composable(r.second, r.first)) {
        return Verdict::failure("arc-record", statement, w, "second arc does not start at the end of the first");
      }
      if (compose(r.second, r.first) != r.composite) {
        return Verdict::failure("arc-record", statement, w, "stored composite differs from (x'x, b)");
      }
      if (r.composite.end() != r.second.end()) {
        return Verdict::failure("arc-record", statement, w, "composite does not end where the second arc ends");
      }
    }
    return Verdict::holds(EnumerationPlan::exhaustive(), records.size());
  }

  struct ArcDemo {
    std::size_t                 count = 0;
    std::uint64_t               seed  = 0;
    std::vector<ArcComposition> compositions;
    InverseWitness              witness;
    Verdict                     category;
    std::vector<LawResult>      laws;
    Verdict                     records;
  };

  // Samples `count` composable pairs from tuple_rng(seed, j), composes them
  // with m of the internal category and checks the arc laws.
  inline ArcDemo demo_arcs(std::size_t count, std::uint64_t seed) {
    using A   = std::pair<Gaussian, Gaussian>;
    using P   = std::pair<A, A>;
    auto plan = EnumerationPlan::sampled(count, seed);
    auto d    = circle_crossed(plan);
    auto c    = build_internal_category(d, plan);
    auto D    = unit_disk();
    auto S    = unit_circle();

    ArcDemo out{count, seed, {}, inverse_witness(ArcRecord({0, Rational(1, 2)}, {1, 0})),
                c.laws, run_laws(arc_laws(c), plan), Verdict{}};
    out.compositions.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
      auto      rng = tuple_rng(seed, j);
      Gaussian  x   = D.carrier().draw(rng);
      Gaussian  b   = S.carrier().draw(rng);
      Gaussian  x2  = D.carrier().draw(rng);
      ArcRecord first(x, b);
      ArcRecord second(x2, first.end());
      A         ab  = c.m(P(second.arrow(), first.arrow()));
      out.compositions.push_back({first, second, ArcRecord(ab.first, ab.second)});
    }
    out.records = validate_arcs(out.compositions);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Arc file
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline nlohmann::json gaussian_json(Gaussian const& z) {
      return nlohmann::json::array({z.re.str(), z.im.str()});
    }

    inline Gaussian gaussian_from_json(nlohmann::json const& j) {
      if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
        throw ParseError("expected [\"re\", \"im\"], got " + j.dump());
      }
      return {Rational::parse(j[0].get<std::string>()), Rational::parse(j[1].get<std::string>())};
    }

    inline nlohmann::json arc_json(ArcRecord const& a) {
      return {{"x", gaussian_json(a.x)},
              {"b", gaussian_json(a.b)},
              {"radius2", a.radius2().str()},
              {"start", gaussian_json(a.start())},
              {"end", gaussian_json(a.end())}};
    }

    // Derived fields must match the values recomputed from x and b.
    inline ArcRecord arc_from_json(nlohmann::json const& j) {
      if (!j.is_object() || !j.contains("x") || !j.contains("b")) {
        throw ParseError("arc record needs x and b: " + j.dump());
      }
      ArcRecord a(gaussian_from_json(j.at("x")), gaussian_from_json(j.at("b")));
      if (j.contains("radius2") && Rational::parse(j.at("radius2").get<std::string>()) != a.radius2()) {
        throw ParseError("stored radius2 disagrees with x in " + j.dump());
      }
      if (j.contains("start") && gaussian_from_json(j.at("start")) != a.start()) {
        throw ParseError("stored start disagrees with b in " + j.dump());
      }
      if (j.contains("end") && gaussian_from_json(j.at("end")) != a.end()) {
        throw ParseError("stored end disagrees with h(x) b in " + j.dump());
      }
      return a;
    }
  }  // namespace detail

  inline nlohmann::json arcs_json(ArcDemo const& demo) {
    nlohmann::json comps = nlohmann::json::array();
    for (auto const& c : demo.compositions) {
      comps.push_back({{"first", detail::arc_json(c.first)},
                       {"second", detail::arc_json(c.second)},
                       {"composite", detail::arc_json(c.composite)}});
    }
    auto const& w = demo.witness;
    return {{"kind", "arcs"},
            {"count", demo.count},
            {"seed", demo.seed},
            {"compositions", std::move(comps)},
            {"inverse_witness",
             {{"arrow", detail::arc_json(w.arrow)},
              {"x", detail::gaussian_json(w.x)},
              {"b", detail::gaussian_json(w.b)},
              {"norm2", w.norm2.str()},
              {"in_carrier", w.in_carrier}}}};
  }

  inline void write_arc_file(std::string const& path, ArcDemo const& demo) {
    std::ofstream os(path);
    if (!os) {
      throw IoError("cannot open " + path + " for writing");
    }
    os << arcs_json(demo).dump(1) << "\n";
    if (!os) {
      throw IoError("failed writing " + path);
    }
  }

  inline std::vector<ArcComposition> read_arc_file(std::string const& path) {
    std::ifstream is(path);
    if (!is) {
      throw IoError("cannot open " + path);
    }
    nlohmann::json j;
    try {
      is >> j;
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(path + ": " + e.what());
    }
    if (!j.is_object() || j.value("kind", "") != "arcs" || !j.contains("compositions")) {
      throw ParseError(path + " is not an arc file");
    }
    std::vector<ArcComposition> out;
    try {
      for (auto const& c : j.at("compositions")) {
        out.push_back({detail::arc_from_json(c.at("first")), detail::arc_from_json(c.at("second")),
                       detail::arc_from_json(c.at("composite"))});
      }
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(path + ": " + e.what());
    }
    return out;
  }

}  // namespace conjcheck
