#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "conjcheck/errors.hpp"
#include "conjcheck/structure.hpp"

namespace conjcheck {

  // Multiplication table of a finite structure; elements are indices.
  struct FiniteTable {
    std::vector<std::string>              names;
    std::vector<std::vector<std::size_t>> op;
    std::vector<std::size_t>              conj;
    std::optional<std::size_t>            identity;

    std::size_t size() const noexcept {
      return names.size();
    }

    void validate() const {
      std::size_t n = size();
      std::set<std::string> seen;
      for (auto const& name : names) {
        if (name.empty() || name.find_first_of(",()[]|:") != std::string::npos) {
          throw TableError("bad element name '" + name + "'");
        }
        if (!seen.insert(name).second) {
          throw TableError("duplicate element name '" + name + "'");
        }
      }
      if (op.size() != n || conj.size() != n) {
        throw TableError("operation table is not " + std::to_string(n) + "x"
                         + std::to_string(n));
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (op[i].size() != n) {
          throw TableError("row " + names[i] + " has the wrong length");
        }
        for (auto v : op[i]) {
          if (v >= n) {
            throw TableError("operation entry out of range in row " + names[i]);
          }
        }
        if (conj[i] >= n) {
          throw TableError("conjugation entry out of range for " + names[i]);
        }
      }
      if (identity) {
        std::size_t z = *identity;
        if (z >= n) {
          throw TableError("identity index out of range");
        }
        for (std::size_t i = 0; i < n; ++i) {
          if (op[z][i] != i || op[i][z] != i) {
            throw TableError(names[z] + " is not a two-sided identity",
                             {names[i]});
          }
        }
      }
    }
  };

  using Finite = ConjStructure<std::size_t>;

  // Index domain showing elements by name.
  inline Domain<std::size_t> named_domain(std::string name,
                                          std::vector<std::string> names) {
    std::vector<std::size_t> idx(names.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    auto lookup = std::make_shared<std::map<std::string, std::size_t>>();
    for (std::size_t i = 0; i < names.size(); ++i) {
      lookup->emplace(names[i], i);
    }
    auto shared = std::make_shared<std::vector<std::string> const>(std::move(names));
    return finite_domain<std::size_t>(
        std::move(name), std::move(idx),
        [shared](std::size_t const& i) {
          return i < shared->size() ? (*shared)[i] : "#" + std::to_string(i);
        },
        [lookup](std::string_view s) {
          auto it = lookup->find(std::string(text::trim(s)));
          if (it == lookup->end()) {
            throw ParseError("unknown element '" + std::string(s) + "'");
          }
          return it->second;
        });
  }

  inline Finite table_structure(std::string name, FiniteTable table) {
    table.validate();
    auto t = std::make_shared<FiniteTable const>(std::move(table));
    StructureParts<std::size_t> parts;
    parts.name     = name;
    parts.op       = [t](std::size_t x, std::size_t y) { return t->op[x][y]; };
    parts.conj     = [t](std::size_t x) { return t->conj[x]; };
    parts.identity = t->identity;
    if (t->identity) {
      std::size_t z = *t->identity;
      parts.inverse = [t, z](std::size_t x) -> std::optional<std::size_t> {
        for (std::size_t y = 0; y < t->size(); ++y) {
          if (t->op[x][y] == z && t->op[y][x] == z) {
            return y;
          }
        }
        return std::nullopt;
      };
    }
    parts.solve_right = [t](std::size_t target, std::size_t v)
        -> std::optional<std::size_t> {
      for (std::size_t x = 0; x < t->size(); ++x) {
        if (t->op[x][v] == target) {
          return x;
        }
      }
      return std::nullopt;
    };
    return Finite(named_domain(std::move(name), t->names), std::move(parts));
  }

  // The table of any finite structure, indexed by its canonical order.
  template <typename E>
  FiniteTable tabulate(ConjStructure<E> const& s) {
    auto elems = s.elements();
    std::map<E, std::size_t> index;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      index.emplace(elems[i], i);
    }
    auto at = [&](E const& e) {
      auto it = index.find(e);
      if (it == index.end()) {
        throw TableError(s.name() + " is not closed: " + s.show(e));
      }
      return it->second;
    };
    FiniteTable t;
    for (auto const& e : elems) {
      t.names.push_back(s.show(e));
    }
    t.op.assign(elems.size(), std::vector<std::size_t>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = 0; j < elems.size(); ++j) {
        t.op[i][j] = at(s.add(elems[i], elems[j]));
      }
      t.conj.push_back(at(s.conj(elems[i])));
    }
    if (s.is_monoid()) {
      t.identity = at(s.zero());
    }
    return t;
  }

  // Position of each element in a finite carrier's canonical order.
  template <typename E>
  std::map<E, std::size_t> index_of(ConjStructure<E> const& s) {
    std::map<E, std::size_t> out;
    auto elems = s.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      out.emplace(elems[i], i);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Forced-value propagation and homomorphism search
  ////////////////////////////////////////////////////////////////////////

  using PartialMap = std::vector<std::optional<std::size_t>>;

  struct Propagation {
    PartialMap                 values;
    std::optional<std::string> conflict;

    bool complete() const {
      return std::all_of(values.begin(), values.end(),
                         [](auto const& v) { return v.has_value(); });
    }
    std::vector<std::size_t> unforced() const {
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (!values[i]) {
          out.push_back(i);
        }
      }
      return out;
    }
  };

  // Closes a partial assignment S -> T under phi(a+b) = phi(a)+phi(b) and,
  // when `with_conj`, phi(conj a) = conj(phi(a)). Stops at the first
  // conflicting forced value.
  inline Propagation propagate(FiniteTable const& s,
                               FiniteTable const& t,
                               PartialMap         seed,
                               bool               with_conj = true) {
    Propagation out{std::move(seed), std::nullopt};
    auto& phi = out.values;
    std::deque<std::size_t>  queue;
    std::vector<char>        done(s.size(), 0);
    std::vector<std::size_t> processed;
    for (std::size_t i = 0; i < phi.size(); ++i) {
      if (phi[i]) {
        queue.push_back(i);
      }
    }
    auto assign = [&](std::size_t e, std::size_t v) {
      if (!phi[e]) {
        phi[e] = v;
        queue.push_back(e);
        return true;
      }
      if (*phi[e] != v) {
        out.conflict = s.names[e] + " forced to both " + t.names[*phi[e]]
                       + " and " + t.names[v];
        return false;
      }
      return true;
    };
    while (!queue.empty()) {
      std::size_t a = queue.front();
      queue.pop_front();
      if (done[a]) {
        continue;
      }
      done[a] = 1;
      processed.push_back(a);
      std::size_t va = *phi[a];
      if (with_conj && !assign(s.conj[a], t.conj[va])) {
        return out;
      }
      for (auto p : processed) {
        std::size_t vp = *phi[p];
        if (!assign(s.op[a][p], t.op[va][vp]) || !assign(s.op[p][a], t.op[vp][va])) {
          return out;
        }
      }
    }
    return out;
  }

  // All complete homomorphisms extending `seed`, up to `limit` of them.
  // Branches on the smallest unforced element.
  inline std::vector<std::vector<std::size_t>> enumerate_homs(
      FiniteTable const& s,
      FiniteTable const& t,
      PartialMap         seed,
      std::size_t        limit     = static_cast<std::size_t>(-1),
      bool               with_conj = true) {
    std::vector<std::vector<std::size_t>> found;
    std::function<void(PartialMap)> search = [&](PartialMap partial) {
      if (found.size() >= limit) {
        return;
      }
      auto p = propagate(s, t, std::move(partial), with_conj);
      if (p.conflict) {
        return;
      }
      auto open = p.unforced();
      if (open.empty()) {
        std::vector<std::size_t> total;
        for (auto const& v : p.values) {
          total.push_back(*v);
        }
        found.push_back(std::move(total));
        return;
      }
      for (std::size_t v = 0; v < t.size() && found.size() < limit; ++v) {
        PartialMap next = p.values;
        next[open.front()] = v;
        search(std::move(next));
      }
    };
    if (seed.empty()) {
      seed.assign(s.size(), std::nullopt);
    }
    search(std::move(seed));
    return found;
  }

  // All conjugation-preserving homomorphisms (monoid homomorphisms when
  // both tables have identities).
  inline std::vector<std::vector<std::size_t>> all_homs(FiniteTable const& s,
                                                        FiniteTable const& t) {
    PartialMap seed(s.size());
    if (s.identity && t.identity) {
      seed[*s.identity] = *t.identity;
    }
    return enumerate_homs(s, t, std::move(seed));
  }

  ////////////////////////////////////////////////////////////////////////
  // Substructures and congruences
  ////////////////////////////////////////////////////////////////////////

  // Indices of the substructure generated by `gens` (closure under + and
  // conjugation), sorted.
  inline std::vector<std::size_t> generated(FiniteTable const&       t,
                                            std::vector<std::size_t> gens) {
    std::vector<char>        in(t.size(), 0);
    std::vector<std::size_t> members;
    std::deque<std::size_t>  queue;
    auto add = [&](std::size_t e) {
      if (!in[e]) {
        in[e] = 1;
        members.push_back(e);
        queue.push_back(e);
      }
    };
    for (auto g : gens) {
      add(g);
    }
    std::vector<std::size_t> processed;
    while (!queue.empty()) {
      std::size_t a = queue.front();
      queue.pop_front();
      processed.push_back(a);
      add(t.conj[a]);
      for (auto p : processed) {
        add(t.op[a][p]);
        add(t.op[p][a]);
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  // Class index of every element, classes numbered by first occurrence.
  using Partition = std::vector<std::size_t>;

  namespace detail {
    struct UnionFind {
      std::vector<std::size_t> parent;
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        parent[std::max(a, b)] = std::min(a, b);
        return true;
      }
    };

    inline Partition normalize(std::vector<std::size_t> const& labels) {
      std::map<std::size_t, std::size_t> renumber;
      Partition out;
      for (auto l : labels) {
        auto it = renumber.emplace(l, renumber.size()).first;
        out.push_back(it->second);
      }
      return out;
    }
  }  // namespace detail

  // The smallest congruence (compatible with + and conjugation) containing
  // the given pairs.
  inline Partition generated_congruence(
      FiniteTable const&                                     t,
      std::vector<std::pair<std::size_t, std::size_t>> const& pairs) {
    detail::UnionFind uf(t.size());
    for (auto [a, b] : pairs) {
      uf.unite(a, b);
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < t.size(); ++a) {
        std::size_t b = uf.find(a);
        if (a == b) {
          continue;
        }
        changed |= uf.unite(t.conj[a], t.conj[b]);
        for (std::size_t c = 0; c < t.size(); ++c) {
          changed |= uf.unite(t.op[a][c], t.op[b][c]);
          changed |= uf.unite(t.op[c][a], t.op[c][b]);
        }
      }
    }
    std::vector<std::size_t> labels;
    for (std::size_t a = 0; a < t.size(); ++a) {
      labels.push_back(uf.find(a));
    }
    return detail::normalize(labels);
  }

  inline bool is_congruence(FiniteTable const& t, Partition const& p) {
    for (std::size_t a = 0; a < t.size(); ++a) {
      for (std::size_t b = a + 1; b < t.size(); ++b) {
        if (p[a] != p[b]) {
          continue;
        }
        if (p[t.conj[a]] != p[t.conj[b]]) {
          return false;
        }
        for (std::size_t c = 0; c < t.size(); ++c) {
          if (p[t.op[a][c]] != p[t.op[b][c]] || p[t.op[c][a]] != p[t.op[c][b]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Every congruence, found by running through all set partitions
  // (restricted growth strings). Intended for small carriers.
  inline std::vector<Partition> enumerate_congruences(FiniteTable const& t,
                                                      std::size_t max_size = 10) {
    std::size_t n = t.size();
    if (n > max_size) {
      throw CarrierTooLarge("congruence enumeration limited to "
                            + std::to_string(max_size) + " elements");
    }
    std::vector<Partition> out;
    if (n == 0) {
      out.push_back({});
      return out;
    }
    Partition rgs(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                             std::size_t blocks) {
      if (i == n) {
        if (is_congruence(t, rgs)) {
          out.push_back(rgs);
        }
        return;
      }
      for (std::size_t b = 0; b <= blocks; ++b) {
        rgs[i] = b;
        rec(i + 1, std::max(blocks, b + 1));
      }
    };
    rgs[0] = 0;
    rec(1, 1);
    return out;
  }

  // Kernel of a map into a monoid, by scan: indices sent to the identity.
  template <typename ES, typename ET>
  std::vector<ES> kernel_elements(Hom<ES, ET> const& f) {
    std::vector<ES> out;
    ET const& z = f.target().zero();
    for (auto const& a : f.source().elements()) {
      if (f(a) == z) {
        out.push_back(a);
      }
    }
    return out;
  }

  // The substructure on a subset of a finite carrier, closure checked.
  template <typename E>
  ConjStructure<E> substructure(std::string name,
                                ConjStructure<E> const& s,
                                std::vector<E>          elements) {
    std::set<E> members(elements.begin(), elements.end());
    for (auto const& x : elements) {
      if (!members.count(s.conj(x))) {
        throw TableError(name + " is not closed under conjugation",
                         {s.show(x)});
      }
      for (auto const& y : elements) {
        if (!members.count(s.add(x, y))) {
          throw TableError(name + " is not closed under the operation",
                           {s.show(x), s.show(y)});
        }
      }
    }
    auto d = finite_domain<E>(name, std::move(elements), s.carrier().parts().show,
                              s.carrier().parts().parse);
    StructureParts<E> parts = s.parts();
    parts.name = std::move(name);
    if (parts.identity && !members.count(*parts.identity)) {
      parts.identity.reset();
    }
    return ConjStructure<E>(std::move(d), std::move(parts));
  }

}  // namespace conjcheck
