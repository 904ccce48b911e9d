#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conjcheck/errors.hpp"
#include "conjcheck/plan.hpp"
#include "conjcheck/text.hpp"
#include "conjcheck/verdict.hpp"

namespace conjcheck {

  ////////////////////////////////////////////////////////////////////////
  // Domain: a set of elements together with the ways of visiting it
  ////////////////////////////////////////////////////////////////////////

  template <typename E>
  struct DomainParts {
    std::string name;
    // Set exactly when the domain is finite.
    std::optional<std::size_t> size;
    // Enumeration in the canonical order; empty when not enumerable.
    std::function<E(std::size_t)> nth;
    std::function<E(std::mt19937_64&)> draw;
    // Small distinguished elements, tried first by sampled plans.
    std::vector<E> landmarks;
    std::function<bool(E const&)> contains;
    std::function<std::string(E const&)> show;
    std::function<E(std::string_view)> parse;
  };

  template <typename E>
  class Domain {
   public:
    using element_type = E;

    explicit Domain(DomainParts<E> parts) {
      if constexpr (HasElementText<E>) {
        if (!parts.show) {
          parts.show = [](E const& e) { return ElementText<E>::show(e); };
        }
        if (!parts.parse) {
          parts.parse = [](std::string_view s) { return ElementText<E>::parse(s); };
        }
      }
      if (!parts.contains) {
        parts.contains = [](E const&) { return true; };
      }
      _parts = std::make_shared<DomainParts<E> const>(std::move(parts));
    }

    std::string const& name() const noexcept {
      return _parts->name;
    }

    bool is_finite() const noexcept {
      return _parts->size.has_value();
    }

    std::size_t size() const {
      if (!is_finite()) {
        throw PlanError("domain " + name() + " is infinite");
      }
      return *_parts->size;
    }

    bool is_enumerable() const noexcept {
      return static_cast<bool>(_parts->nth);
    }

    bool can_sample() const noexcept {
      return static_cast<bool>(_parts->draw);
    }

    E nth(std::size_t i) const {
      if (!is_enumerable()) {
        throw PlanError("domain " + name() + " cannot be enumerated");
      }
      if (is_finite() && i >= size()) {
        throw std::out_of_range("element index out of range in " + name());
      }
      return _parts->nth(i);
    }

    E draw(std::mt19937_64& rng) const {
      if (!can_sample()) {
        throw PlanError("domain " + name() + " has no sampler");
      }
      return _parts->draw(rng);
    }

    std::vector<E> const& landmarks() const noexcept {
      return _parts->landmarks;
    }

    bool contains(E const& e) const {
      return _parts->contains(e);
    }

    std::string show(E const& e) const {
      return _parts->show(e);
    }

    // Parses an element and checks membership.
    E parse(std::string_view s) const {
      E e = _parts->parse(s);
      if (!contains(e)) {
        throw ParseError("'" + std::string(s) + "' is not an element of "
                         + name());
      }
      return e;
    }

    // The first min(n, size) elements in canonical order.
    std::vector<E> first(std::size_t n) const {
      if (is_finite()) {
        n = std::min(n, size());
      }
      std::vector<E> out;
      out.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(nth(i));
      }
      return out;
    }

    std::vector<E> elements() const {
      return first(size());
    }

    DomainParts<E> const& parts() const noexcept {
      return *_parts;
    }

   private:
    std::shared_ptr<DomainParts<E> const> _parts;
  };

  // A finite domain listing `elements` in the given (canonical) order.
  template <typename E>
  Domain<E> finite_domain(std::string          name,
                          std::vector<E>       elements,
                          std::function<std::string(E const&)> show = {},
                          std::function<E(std::string_view)>   parse = {}) {
    auto list  = std::make_shared<std::vector<E> const>(std::move(elements));
    auto index = std::make_shared<std::map<E, std::size_t>>();
    for (std::size_t i = 0; i < list->size(); ++i) {
      index->emplace((*list)[i], i);
    }
    DomainParts<E> parts;
    parts.name = std::move(name);
    parts.size = list->size();
    parts.nth  = [list](std::size_t i) { return (*list)[i]; };
    if (!list->empty()) {
      parts.draw = [list](std::mt19937_64& rng) {
        return (*list)[std::uniform_int_distribution<std::size_t>(
            0, list->size() - 1)(rng)];
      };
    }
    parts.contains = [index](E const& e) { return index->count(e) != 0; };
    parts.show     = std::move(show);
    parts.parse    = std::move(parse);
    return Domain<E>(std::move(parts));
  }

  namespace detail {
    // Inverse of the Cantor pairing function.
    inline std::pair<std::size_t, std::size_t> cantor_unpair(std::size_t z) {
      std::size_t w = 0;
      while ((w + 1) * (w + 2) / 2 <= z) {
        ++w;
      }
      std::size_t t = w * (w + 1) / 2;
      std::size_t y = z - t;
      return {w - y, y};
    }
  }  // namespace detail

  // Cartesian product; finite products enumerate with the first coordinate
  // outermost, infinite ones along Cantor diagonals.
  template <typename E1, typename E2>
  Domain<std::pair<E1, E2>> product_domain(Domain<E1> const& d1,
                                           Domain<E2> const& d2,
                                           std::string name = {}) {
    using P = std::pair<E1, E2>;
    DomainParts<P> parts;
    parts.name = name.empty() ? d1.name() + "x" + d2.name() : std::move(name);
    if (d1.is_finite() && d2.is_finite()) {
      parts.size = d1.size() * d2.size();
    }
    if (d1.is_enumerable() && d2.is_enumerable()) {
      if (d1.is_finite() && d2.is_finite()) {
        std::size_t n2 = d2.size();
        parts.nth = [d1, d2, n2](std::size_t i) {
          return P(d1.nth(i / n2), d2.nth(i % n2));
        };
      } else if (d1.is_finite()) {
        std::size_t n1 = d1.size();
        parts.nth = [d1, d2, n1](std::size_t i) {
          return P(d1.nth(i % n1), d2.nth(i / n1));
        };
      } else if (d2.is_finite()) {
        std::size_t n2 = d2.size();
        parts.nth = [d1, d2, n2](std::size_t i) {
          return P(d1.nth(i / n2), d2.nth(i % n2));
        };
      } else {
        parts.nth = [d1, d2](std::size_t i) {
          auto [a, b] = detail::cantor_unpair(i);
          return P(d1.nth(a), d2.nth(b));
        };
      }
    }
    if (d1.can_sample() && d2.can_sample()) {
      parts.draw = [d1, d2](std::mt19937_64& rng) {
        E1 a = d1.draw(rng);
        return P(std::move(a), d2.draw(rng));
      };
    }
    for (auto const& a : d1.landmarks()) {
      for (auto const& b : d2.landmarks()) {
        parts.landmarks.emplace_back(a, b);
      }
    }
    parts.contains = [d1, d2](P const& p) {
      return d1.contains(p.first) && d2.contains(p.second);
    };
    parts.show = [d1, d2](P const& p) {
      return "(" + d1.show(p.first) + "," + d2.show(p.second) + ")";
    };
    parts.parse = [d1, d2](std::string_view s) {
      auto xs = text::split_top_level(text::unwrap(s, '(', ')'), ',');
      if (xs.size() != 2) {
        throw ParseError("expected a pair, got '" + std::string(s) + "'");
      }
      return P(d1.parse(xs[0]), d2.parse(xs[1]));
    };
    return Domain<P>(std::move(parts));
  }

  // The image of `base` under an injective `embed`; membership, text and
  // the order of enumeration are those of the image.
  template <typename T, typename S>
  Domain<T> image_domain(std::string                          name,
                         Domain<S> const&                     base,
                         std::function<T(S const&)>           embed,
                         std::function<bool(T const&)>        contains,
                         std::function<std::string(T const&)> show,
                         std::function<T(std::string_view)>   parse) {
    DomainParts<T> parts;
    parts.name = std::move(name);
    if (base.is_finite()) {
      parts.size = base.size();
    }
    if (base.is_enumerable()) {
      parts.nth = [base, embed](std::size_t i) { return embed(base.nth(i)); };
    }
    if (base.can_sample()) {
      parts.draw = [base, embed](std::mt19937_64& rng) {
        return embed(base.draw(rng));
      };
    }
    for (auto const& s : base.landmarks()) {
      parts.landmarks.push_back(embed(s));
    }
    parts.contains = std::move(contains);
    parts.show     = std::move(show);
    parts.parse    = std::move(parse);
    return Domain<T>(std::move(parts));
  }

  // Elements of a finite domain satisfying `keep`, in the original order.
  template <typename E>
  Domain<E> filtered_domain(std::string                   name,
                            Domain<E> const&              base,
                            std::function<bool(E const&)> keep) {
    std::vector<E> kept;
    for (auto const& e : base.elements()) {
      if (keep(e)) {
        kept.push_back(e);
      }
    }
    auto d = finite_domain<E>(std::move(name), std::move(kept),
                              base.parts().show, base.parts().parse);
    return d;
  }

  ////////////////////////////////////////////////////////////////////////
  // ConjStructure: carrier + operation + conjugation (+ identity)
  ////////////////////////////////////////////////////////////////////////

  template <typename E>
  struct StructureParts {
    std::string                               name;
    std::function<E(E const&, E const&)>      op;
    std::function<E(E const&)>                conj;
    std::optional<E>                          identity;
    // Candidate two-sided inverse; it may fall outside the carrier.
    std::function<std::optional<E>(E const&)> inverse;
    // Some x with x + v = t when one is known (arguments: t, v).
    std::function<std::optional<E>(E const&, E const&)> solve_right;
    // Set when the carrier is known analytically to be a group.
    bool declared_group = false;
  };

  template <typename E>
  class ConjStructure {
   public:
    using element_type = E;

    ConjStructure(Domain<E> carrier, StructureParts<E> parts)
        : _carrier(std::move(carrier)),
          _parts(std::make_shared<StructureParts<E> const>(std::move(parts))) {
      if (!_parts->op || !_parts->conj) {
        throw TableError("structure " + name() + " lacks an operation");
      }
    }

    std::string const& name() const noexcept {
      return _parts->name;
    }

    Domain<E> const& carrier() const noexcept {
      return _carrier;
    }

    E add(E const& x, E const& y) const {
      return _parts->op(x, y);
    }

    template <typename... Rest>
    E add(E const& x, E const& y, Rest const&... rest) const {
      return add(add(x, y), rest...);
    }

    E conj(E const& x) const {
      return _parts->conj(x);
    }

    bool is_monoid() const noexcept {
      return _parts->identity.has_value();
    }

    std::optional<E> const& identity() const noexcept {
      return _parts->identity;
    }

    E const& zero() const {
      if (!is_monoid()) {
        throw KindMismatch(name() + " has no identity element");
      }
      return *_parts->identity;
    }

    bool has_inverse_candidates() const noexcept {
      return static_cast<bool>(_parts->inverse);
    }

    std::optional<E> inverse_candidate(E const& x) const {
      return _parts->inverse ? _parts->inverse(x) : std::nullopt;
    }

    bool can_solve_right() const noexcept {
      return static_cast<bool>(_parts->solve_right);
    }

    std::optional<E> solve_right(E const& target, E const& v) const {
      return _parts->solve_right ? _parts->solve_right(target, v)
                                 : std::nullopt;
    }

    bool declared_group() const noexcept {
      return _parts->declared_group;
    }

    // Carrier shortcuts.
    bool is_finite() const noexcept {
      return _carrier.is_finite();
    }
    std::size_t size() const {
      return _carrier.size();
    }
    std::vector<E> elements() const {
      return _carrier.elements();
    }
    bool contains(E const& e) const {
      return _carrier.contains(e);
    }
    std::string show(E const& e) const {
      return _carrier.show(e);
    }
    E parse(std::string_view s) const {
      return _carrier.parse(s);
    }

    StructureParts<E> const& parts() const noexcept {
      return *_parts;
    }

   private:
    Domain<E>                                  _carrier;
    std::shared_ptr<StructureParts<E> const>   _parts;
  };

  ////////////////////////////////////////////////////////////////////////
  // Hom: a map between structures, verified on demand
  ////////////////////////////////////////////////////////////////////////

  enum class HomKind { automatic, semigroup, monoid };

  template <typename ES, typename ET>
  class Hom {
   public:
    using source_type = ES;
    using target_type = ET;

    Hom(std::string                      name,
        ConjStructure<ES>                source,
        ConjStructure<ET>                target,
        std::function<ET(ES const&)>     map,
        HomKind                          kind = HomKind::automatic)
        : _name(std::move(name)),
          _source(std::move(source)),
          _target(std::move(target)),
          _map(std::move(map)),
          _kind(kind),
          _cache(std::make_shared<Cache>()) {}

    std::string const& name() const noexcept {
      return _name;
    }
    ConjStructure<ES> const& source() const noexcept {
      return _source;
    }
    ConjStructure<ET> const& target() const noexcept {
      return _target;
    }
    ET operator()(ES const& x) const {
      return _map(x);
    }
    std::function<ET(ES const&)> const& map() const noexcept {
      return _map;
    }

    // Whether identity preservation is part of the contract.
    bool preserves_identity() const {
      if (_kind == HomKind::semigroup) {
        return false;
      }
      if (_kind == HomKind::monoid) {
        if (!_source.is_monoid() || !_target.is_monoid()) {
          throw KindMismatch("monoid homomorphism " + _name
                             + " requested between non-monoids");
        }
        return true;
      }
      return _source.is_monoid() && _target.is_monoid();
    }

    // Write-once record of the verification outcome.
    void record(Verdict const& v) const {
      std::lock_guard<std::mutex> lock(_cache->mutex);
      if (!_cache->verdict) {
        _cache->verdict = v;
      }
    }
    std::optional<Verdict> verified() const {
      std::lock_guard<std::mutex> lock(_cache->mutex);
      return _cache->verdict;
    }

   private:
    struct Cache {
      std::mutex             mutex;
      std::optional<Verdict> verdict;
    };

    std::string                  _name;
    ConjStructure<ES>            _source;
    ConjStructure<ET>            _target;
    std::function<ET(ES const&)> _map;
    HomKind                      _kind;
    std::shared_ptr<Cache>       _cache;
  };

  template <typename E>
  Hom<E, E> identity_hom(ConjStructure<E> const& s) {
    return Hom<E, E>("id_" + s.name(), s, s, [](E const& x) { return x; });
  }

  // g after f.
  template <typename E1, typename E2, typename E3>
  Hom<E1, E3> compose(Hom<E2, E3> const& g, Hom<E1, E2> const& f) {
    return Hom<E1, E3>(g.name() + "." + f.name(), f.source(), g.target(),
                       [g, f](E1 const& x) { return g(f(x)); });
  }

  // The constant map onto the identity of a monoid.
  template <typename ES, typename ET>
  Hom<ES, ET> zero_hom(ConjStructure<ES> const& s, ConjStructure<ET> const& t) {
    ET z = t.zero();
    return Hom<ES, ET>("0", s, t, [z](ES const&) { return z; });
  }

}  // namespace conjcheck
