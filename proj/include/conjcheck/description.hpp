#pragma once

#include <cstddef>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "conjcheck/builders.hpp"
#include "conjcheck/errors.hpp"
#include "conjcheck/families.hpp"
#include "conjcheck/finite.hpp"
#include "conjcheck/quaternion.hpp"

// Structure descriptions are JSON documents of two shapes:
//
//   {"kind": "finite", "name": "Z2", "elements": ["0", "1"],
//    "op": [["0", "1"], ["1", "0"]], "conj": ["0", "1"], "identity": "0"}
//
//   {"kind": "builder", "name": "cyclic", "params": {"n": 4}}
//
// Extensions and diagrams use the same two shapes with other fields; see
// extension_from_json and diagram_from_json. Rationals are "p/q" strings.
namespace conjcheck {

  using Json = nlohmann::json;

  inline Json parse_json_text(std::string const& text, std::string const& where) {
    try {
      return Json::parse(text);
    } catch (Json::exception const& e) {
      throw ParseError(where + ": " + e.what());
    }
  }

  inline Json read_json_file(std::string const& path) {
    std::ifstream is(path);
    if (!is) {
      throw IoError("cannot open " + path);
    }
    std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    return parse_json_text(text, path);
  }

  namespace detail {
    inline Json const& field(Json const& j, std::string const& key, std::string const& where) {
      if (!j.is_object() || !j.contains(key)) {
        throw ParseError(where + ": missing field '" + key + "'");
      }
      return j.at(key);
    }

    inline std::string string_field(Json const& j, std::string const& key, std::string const& where) {
      auto const& v = field(j, key, where);
      if (!v.is_string()) {
        throw ParseError(where + ": field '" + key + "' must be a string");
      }
      return v.get<std::string>();
    }

    inline std::string string_or(Json const& j, std::string const& key, std::string fallback) {
      if (j.is_object() && j.contains(key)) {
        if (!j.at(key).is_string()) {
          throw ParseError("field '" + key + "' must be a string");
        }
        return j.at(key).get<std::string>();
      }
      return fallback;
    }

    inline std::size_t size_or(Json const& j, std::string const& key, std::size_t fallback) {
      if (j.is_object() && j.contains(key)) {
        if (!j.at(key).is_number_unsigned()) {
          throw ParseError("field '" + key + "' must be a non-negative integer");
        }
        return j.at(key).get<std::size_t>();
      }
      return fallback;
    }

    inline std::string kind_of(Json const& j, std::string const& where) {
      auto k = string_field(j, "kind", where);
      if (k != "finite" && k != "builder") {
        throw ParseError(where + ": kind must be \"finite\" or \"builder\", got '" + k + "'");
      }
      return k;
    }

    inline std::vector<std::string> string_array(Json const& j, std::string const& where) {
      if (!j.is_array()) {
        throw ParseError(where + " must be an array of names");
      }
      std::vector<std::string> out;
      for (auto const& v : j) {
        if (!v.is_string()) {
          throw ParseError(where + " must contain names only");
        }
        out.push_back(v.get<std::string>());
      }
      return out;
    }

    inline std::size_t lookup(Finite const& s, std::string const& name, std::string const& where) {
      try {
        return s.parse(name);
      } catch (ParseError const&) {
        throw TableError(where + ": '" + name + "' is not an element of " + s.name());
      }
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Structures
  ////////////////////////////////////////////////////////////////////////

  // Tables are given by element names. "conj" may be omitted for the
  // identity map.
  inline Finite finite_from_json(Json const& j) {
    std::string name  = detail::string_or(j, "name", "S");
    std::string where = "finite structure " + name;
    FiniteTable t;
    t.names = detail::string_array(detail::field(j, "elements", where), where + " elements");
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < t.names.size(); ++i) {
      index.emplace(t.names[i], i);
    }
    auto at = [&](std::string const& s) {
      auto it = index.find(s);
      if (it == index.end()) {
        throw TableError(where + ": unknown element '" + s + "'");
      }
      return it->second;
    };
    auto const& op = detail::field(j, "op", where);
    if (!op.is_array() || op.size() != t.names.size()) {
      throw TableError(where + ": op must have one row per element");
    }
    for (auto const& row : op) {
      auto names = detail::string_array(row, where + " op row");
      if (names.size() != t.names.size()) {
        throw TableError(where + ": op rows must have one entry per element");
      }
      std::vector<std::size_t> r;
      for (auto const& s : names) {
        r.push_back(at(s));
      }
      t.op.push_back(std::move(r));
    }
    if (j.contains("conj")) {
      auto names = detail::string_array(j.at("conj"), where + " conj");
      if (names.size() != t.names.size()) {
        throw TableError(where + ": conj must have one entry per element");
      }
      for (auto const& s : names) {
        t.conj.push_back(at(s));
      }
    } else {
      for (std::size_t i = 0; i < t.names.size(); ++i) {
        t.conj.push_back(i);
      }
    }
    if (j.contains("identity")) {
      t.identity = at(detail::string_field(j, "identity", where));
    }
    return table_structure(std::move(name), std::move(t));
  }

  inline Json finite_to_json(Finite const& s) {
    Json out{{"kind", "finite"}, {"name", s.name()}};
    Json names = Json::array();
    Json op    = Json::array();
    Json conj  = Json::array();
    for (auto x : s.elements()) {
      names.push_back(s.show(x));
      Json row = Json::array();
      for (auto y : s.elements()) {
        row.push_back(s.show(s.add(x, y)));
      }
      op.push_back(std::move(row));
      conj.push_back(s.show(s.conj(x)));
    }
    out["elements"] = std::move(names);
    out["op"]       = std::move(op);
    out["conj"]     = std::move(conj);
    if (s.is_monoid()) {
      out["identity"] = s.show(s.zero());
    }
    return out;
  }

  using AnyStructure = std::variant<ConjStructure<std::size_t>, ConjStructure<Integer>,
                                    ConjStructure<std::string>, ConjStructure<Rational>,
                                    ConjStructure<GaussianRational>, ConjStructure<RationalQuaternion>,
                                    ConjStructure<KEPoint>>;

  struct StructureBuilder {
    std::string                              name;
    std::string                              params;
    std::function<AnyStructure(Json const&)> build;
  };

  inline std::vector<StructureBuilder> const& structure_builders() {
    static std::vector<StructureBuilder> const registry = [] {
      auto conj_param = [](Json const& p) {
        return parse_standard_conj(detail::string_or(p, "conj", "negation"));
      };
      std::vector<StructureBuilder> r;
      r.push_back({"cyclic", "n, conj = negation|zero|identity", [conj_param](Json const& p) {
                     return AnyStructure(cyclic_group(detail::size_or(p, "n", 2), conj_param(p)));
                   }});
      r.push_back({"trivial", "", [](Json const&) { return AnyStructure(trivial_monoid()); }});
      r.push_back({"klein", "", [](Json const&) { return AnyStructure(klein_group()); }});
      r.push_back({"quaternion-group", "conj = negation|identity", [conj_param](Json const& p) {
                     return AnyStructure(quaternion_group(conj_param(p)));
                   }});
      r.push_back({"symmetric-group-3", "", [](Json const&) { return AnyStructure(symmetric_group3()); }});
      r.push_back({"naturals", "op = plus|max, conj = zero|identity|successor", [](Json const& p) {
                     auto op   = detail::string_or(p, "op", "plus");
                     auto conj = detail::string_or(p, "conj", "zero");
                     if (op != "plus" && op != "max") {
                       throw ParseError("naturals: op must be plus or max");
                     }
                     NatConj c = NatConj::zero;
                     if (conj == "identity") {
                       c = NatConj::identity;
                     } else if (conj == "successor") {
                       c = NatConj::successor;
                     } else if (conj != "zero") {
                       throw ParseError("naturals: conj must be zero, identity or successor");
                     }
                     return AnyStructure(naturals(op == "plus" ? NatOp::plus : NatOp::max, c));
                   }});
      r.push_back({"free-semigroup", "", [](Json const&) { return AnyStructure(free_semigroup()); }});
      r.push_back({"open-interval", "", [](Json const&) { return AnyStructure(open_interval_semigroup()); }});
      r.push_back({"unit-interval", "", [](Json const&) { return AnyStructure(unit_interval_monoid()); }});
      r.push_back({"open-disk", "", [](Json const&) { return AnyStructure(open_disk_semigroup()); }});
      r.push_back({"open-ball", "", [](Json const&) { return AnyStructure(open_ball_semigroup()); }});
      r.push_back({"unit-quaternions", "", [](Json const&) { return AnyStructure(unit_quaternions()); }});
      r.push_back({"hurwitz-units", "", [](Json const&) { return AnyStructure(hurwitz_group()); }});
      r.push_back({"scaled-unit-quaternions", "",
                   [](Json const&) { return AnyStructure(scaled_unit_quaternions()); }});
      r.push_back({"unit-circle", "", [](Json const&) { return AnyStructure(unit_circle()); }});
      r.push_back({"unit-disk", "", [](Json const&) { return AnyStructure(unit_disk()); }});
      r.push_back({"ke", "dimension = 0|1|3, variant = semigroup|monoid", [](Json const& p) {
                     auto v = detail::string_or(p, "variant", "semigroup");
                     KEVariant kv;
                     if (v == "semigroup") {
                       kv = KEVariant::semigroup;
                     } else if (v == "monoid") {
                       kv = KEVariant::monoid_nonzero;
                     } else {
                       throw ParseError("ke: variant must be semigroup or monoid");
                     }
                     return AnyStructure(ke_structure(detail::size_or(p, "dimension", 1), kv));
                   }});
      return r;
    }();
    return registry;
  }

  inline StructureBuilder const& find_structure_builder(std::string const& name) {
    for (auto const& b : structure_builders()) {
      if (b.name == name) {
        return b;
      }
    }
    std::string known;
    for (auto const& b : structure_builders()) {
      known += (known.empty() ? "" : ", ") + b.name;
    }
    throw ParseError("unknown builder '" + name + "' (known: " + known + ")");
  }

  inline AnyStructure structure_from_json(Json const& j) {
    if (detail::kind_of(j, "structure") == "finite") {
      return finite_from_json(j);
    }
    auto name = detail::string_field(j, "name", "builder");
    return find_structure_builder(name).build(j.value("params", Json::object()));
  }

  // A structure that must be given by a table (or a builder producing one).
  inline Finite finite_structure_from_json(Json const& j, std::string const& role) {
    auto s = structure_from_json(j);
    if (auto const* f = std::get_if<Finite>(&s)) {
      return *f;
    }
    throw ParseError(role + " must be a finite table structure");
  }

  ////////////////////////////////////////////////////////////////////////
  // Maps and extensions
  ////////////////////////////////////////////////////////////////////////

  // {"source name": "target name", ...}, total on the source.
  inline std::vector<std::size_t> map_from_json(Json const& j, Finite const& s, Finite const& t,
                                                std::string const& name) {
    if (!j.is_object()) {
      throw ParseError("map " + name + " must be an object from element names to element names");
    }
    std::vector<std::size_t> out(s.size());
    std::vector<bool>        seen(s.size(), false);
    for (auto const& [key, value] : j.items()) {
      if (!value.is_string()) {
        throw ParseError("map " + name + ": values must be element names");
      }
      auto x  = detail::lookup(s, key, "map " + name);
      out[x]  = detail::lookup(t, value.get<std::string>(), "map " + name);
      seen[x] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (!seen[i]) {
        throw TableError("map " + name + " is undefined at " + s.show(i));
      }
    }
    return out;
  }

  inline Json map_to_json(FiniteHom const& h) {
    Json out = Json::object();
    for (auto x : h.source().elements()) {
      out[h.source().show(x)] = h.target().show(h(x));
    }
    return out;
  }

  // A finite split epi with optional retraction candidate q and optional
  // h : X -> B.
  struct FiniteExtensionSpec {
    std::string                             name;
    Finite                                  kernel;
    Finite                                  total;
    Finite                                  base;
    FiniteHom                               k;
    FiniteHom                               f;
    FiniteHom                               r;
    std::optional<std::vector<std::size_t>> q;
    std::optional<FiniteHom>                h;
  };

  // A named parametric extension.
  struct BuilderSpec {
    std::string name;
    Json        params;
  };

  using ExtensionSpec = std::variant<FiniteExtensionSpec, BuilderSpec>;

  // Finite shape, either explicit
  //   {"kind": "finite", "kernel": S, "total": S, "base": S,
  //    "k": map, "f": map, "r": map, "q": map?, "h": map?}
  // or a semidirect product (trivial action when "action" is absent)
  //   {"kind": "finite", "kernel": S, "base": S,
  //    "action": {"b": {"x": "b.x", ...}, ...}, "h": map?}
  inline FiniteExtensionSpec finite_extension_from_json(Json const& j) {
    std::string where = "extension";
    auto X    = finite_structure_from_json(detail::field(j, "kernel", where), "kernel");
    auto B    = finite_structure_from_json(detail::field(j, "base", where), "base");
    auto name = detail::string_or(j, "name", "");
    std::optional<FiniteExtensionSpec> spec;
    if (j.contains("total")) {
      auto A = finite_structure_from_json(j.at("total"), "total");
      spec   = FiniteExtensionSpec{
          name.empty() ? A.name() : name,
          X, A, B,
          table_hom("k", X, A, map_from_json(detail::field(j, "k", where), X, A, "k")),
          table_hom("f", A, B, map_from_json(detail::field(j, "f", where), A, B, "f")),
          table_hom("r", B, A, map_from_json(detail::field(j, "r", where), B, A, "r")),
          std::nullopt, std::nullopt};
      if (j.contains("q")) {
        spec->q = map_from_json(j.at("q"), A, X, "q");
      }
    } else {
      std::vector<std::vector<std::size_t>> act(B.size());
      for (std::size_t b = 0; b < B.size(); ++b) {
        for (std::size_t x = 0; x < X.size(); ++x) {
          act[b].push_back(x);
        }
      }
      if (j.contains("action")) {
        auto const& a = j.at("action");
        if (!a.is_object()) {
          throw ParseError("action must map base elements to maps on the kernel");
        }
        for (auto const& [bname, m] : a.items()) {
          act[detail::lookup(B, bname, "action")] = map_from_json(m, X, X, "action of " + bname);
        }
      }
      if (name.empty()) {
        name = X.name() + (j.contains("action") ? "x|" : "x") + B.name();
      }
      auto s = semidirect_table(
          X, B, [act](std::size_t b, std::size_t x) { return act[b][x]; }, name);
      spec = FiniteExtensionSpec{name, X, s.total, B, s.k, s.f, s.r, std::nullopt, std::nullopt};
    }
    if (j.contains("h")) {
      spec->h = table_hom("h", X, B, map_from_json(j.at("h"), X, B, "h"));
    }
    return *spec;
  }

  inline ExtensionSpec extension_from_json(Json const& j) {
    if (detail::kind_of(j, "extension") == "finite") {
      return finite_extension_from_json(j);
    }
    return BuilderSpec{detail::string_field(j, "name", "builder"), j.value("params", Json::object())};
  }

  inline Json extension_to_json(FiniteExtensionSpec const& e) {
    Json out{{"kind", "finite"},
             {"name", e.name},
             {"kernel", finite_to_json(e.kernel)},
             {"total", finite_to_json(e.total)},
             {"base", finite_to_json(e.base)},
             {"k", map_to_json(e.k)},
             {"f", map_to_json(e.f)},
             {"r", map_to_json(e.r)}};
    if (e.q) {
      Json q = Json::object();
      for (auto a : e.total.elements()) {
        q[e.total.show(a)] = e.kernel.show((*e.q)[a]);
      }
      out["q"] = std::move(q);
    }
    if (e.h) {
      out["h"] = map_to_json(*e.h);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Diagrams
  ////////////////////////////////////////////////////////////////////////

  struct DiagramSpec {
    std::string         name;
    FiniteExtensionSpec left;
    FiniteExtensionSpec right;
    FiniteDiagram       diagram;
  };

  // {"kind": "finite", "left": extension, "right": extension,
  //  "codomain": S, "alpha": map, "gamma": map, "beta": map?}
  // The two extensions share their base; beta defaults to alpha r.
  inline DiagramSpec diagram_from_json(Json const& j) {
    if (detail::kind_of(j, "diagram") != "finite") {
      throw ParseError("diagrams must be given as finite tables");
    }
    std::string where = "diagram";
    auto left  = finite_extension_from_json(detail::field(j, "left", where));
    auto right = finite_extension_from_json(detail::field(j, "right", where));
    auto D     = finite_structure_from_json(detail::field(j, "codomain", where), "codomain");
    auto const& B = left.base;
    if (finite_to_json(B) != finite_to_json(right.base)) {
      throw DiagramError("the two extensions have different bases");
    }
    auto alpha = map_from_json(detail::field(j, "alpha", where), left.total, D, "alpha");
    auto gamma = map_from_json(detail::field(j, "gamma", where), right.total, D, "gamma");
    std::vector<std::size_t> beta;
    if (j.contains("beta")) {
      beta = map_from_json(j.at("beta"), B, D, "beta");
    } else {
      for (auto b : B.elements()) {
        beta.push_back(alpha[left.r(b)]);
      }
    }
    // The right leg is re-targeted at the left base so the types line up.
    auto rg = right.f;
    auto rs = right.r;
    FiniteHom g("g", right.total, B, [rg](std::size_t c) { return rg(c); });
    FiniteHom s("s", B, right.total, [rs](std::size_t b) { return rs(b); });
    FiniteDiagram d{left.f,
                    left.r,
                    g,
                    s,
                    table_hom("alpha", left.total, D, alpha),
                    table_hom("beta", B, D, beta),
                    table_hom("gamma", right.total, D, gamma)};
    auto name = detail::string_or(j, "name", left.total.name() + " -> " + B.name() + " <- "
                                                 + right.total.name() + " => " + D.name());
    return {name, left, right, d};
  }

}  // namespace conjcheck
