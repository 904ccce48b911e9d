#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "conjcheck/builders.hpp"
#include "conjcheck/finite.hpp"
#include "conjcheck/schreier.hpp"

namespace conjcheck {

  // An equivalence relation R on X seen as a substructure of X x X with
  // projections r1, r2 and diagonal iR. `first_leg` and `second_leg` are the
  // split epis (r1, iR) and (r2, iR) with their retractions when Schreier.
  template <typename E>
  class EquivalenceRelationOnObject {
   public:
    using Pair = std::pair<E, E>;
    using Leg  = SchreierExtension<E, Pair, E>;

    EquivalenceRelationOnObject(std::string          name,
                                ConjStructure<E>     X,
                                ConjStructure<Pair>  R,
                                std::optional<Leg>   first_leg,
                                std::optional<Leg>   second_leg,
                                Verdict              schreier)
        : _name(std::move(name)),
          _X(std::move(X)),
          _R(std::move(R)),
          _first(std::move(first_leg)),
          _second(std::move(second_leg)),
          _schreier(std::move(schreier)) {}

    std::string const& name() const noexcept {
      return _name;
    }
    ConjStructure<E> const& object() const noexcept {
      return _X;
    }
    ConjStructure<Pair> const& relation() const noexcept {
      return _R;
    }
    Hom<Pair, E> r1() const {
      return Hom<Pair, E>("r1", _R, _X, [](Pair const& p) { return p.first; });
    }
    Hom<Pair, E> r2() const {
      return Hom<Pair, E>("r2", _R, _X, [](Pair const& p) { return p.second; });
    }
    Hom<E, Pair> diagonal() const {
      return Hom<E, Pair>("iR", _X, _R, [](E const& x) { return Pair(x, x); });
    }
    Verdict const& schreier() const noexcept {
      return _schreier;
    }
    bool is_schreier() const noexcept {
      return _schreier.passed() && _first && _second;
    }
    // (r1, iR) with kernel y -> (0, y).
    Leg const& first_leg() const {
      if (!_first) {
        throw NotSchreierRelation(_name + ": (r1, iR) is not a Schreier split epi",
                                  _schreier.witness);
      }
      return *_first;
    }
    // (r2, iR) with kernel x -> (x, 0).
    Leg const& second_leg() const {
      if (!_second) {
        throw NotSchreierRelation(_name + ": (r2, iR) is not a Schreier split epi",
                                  _schreier.witness);
      }
      return *_second;
    }

   private:
    std::string                   _name;
    ConjStructure<E>              _X;
    ConjStructure<Pair>           _R;
    std::optional<Leg>            _first;
    std::optional<Leg>            _second;
    Verdict                       _schreier;
  };

  // Reflexivity, symmetry, transitivity and joint monicity of (r1, r2).
  template <typename E>
  LawList relation_laws(EquivalenceRelationOnObject<E> const& rel) {
    using P = std::pair<E, E>;
    auto const& X = rel.object();
    auto const& R = rel.relation();
    std::string anchor = "equivalence relation";
    LawList laws;
    laws.push_back(make_law("reflexive", "(x,x) lies in R", anchor, std::make_tuple(X.carrier()),
                            [R](E const& x) { return detail::outside(R, P(x, x)); }));
    laws.push_back(make_law("symmetric", "(x,y) in R implies (y,x) in R", anchor,
                            std::make_tuple(R.carrier()),
                            [R](P const& p) { return detail::outside(R, P(p.second, p.first)); }));
    laws.push_back(make_law("transitive", "(x,y), (y,z) in R implies (x,z) in R", anchor,
                            std::make_tuple(R.carrier(), R.carrier()),
                            [R](P const& p, P const& q) -> std::optional<std::string> {
                              if (p.second != q.first) {
                                return std::nullopt;
                              }
                              return detail::outside(R, P(p.first, q.second));
                            }));
    laws.push_back(make_law("jointly-monic", "r1(p) = r1(p') and r2(p) = r2(p') imply p = p'",
                            anchor, std::make_tuple(R.carrier(), R.carrier()),
                            [](P const& p, P const& q) {
                              return p.first != q.first || p.second != q.second || p == q;
                            }));
    return laws;
  }

  // The relation {(x,y) : partition[x] = partition[y]} on a finite
  // structure, indices following X.elements().
  template <typename E>
  EquivalenceRelationOnObject<E> relation_from_partition(ConjStructure<E> const& X,
                                                         Partition const&        partition,
                                                         std::string             name) {
    using P    = std::pair<E, E>;
    auto elems = X.elements();
    if (partition.size() != elems.size()) {
      throw TableError(name + ": partition does not cover " + X.name());
    }
    if (!is_congruence(tabulate(X), partition)) {
      throw NotSchreierRelation(name + " is not a congruence on " + X.name());
    }
    std::vector<P> pairs;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = 0; j < elems.size(); ++j) {
        if (partition[i] == partition[j]) {
          pairs.emplace_back(elems[i], elems[j]);
        }
      }
    }
    auto full = product_structure(X, X, name);
    auto R    = substructure(name, full, pairs);

    auto ex = EnumerationPlan::exhaustive();
    E    z  = X.zero();
    std::vector<E> zero_class;
    auto zi = index_of(X).at(z);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (partition[i] == partition[zi]) {
        zero_class.push_back(elems[i]);
      }
    }
    auto K = substructure(name + "[0]", X, zero_class);
    Hom<E, P> iR("iR", X, R, [](E const& x) { return P(x, x); });
    Hom<P, E> r1("r1", R, X, [](P const& p) { return p.first; });
    Hom<P, E> r2("r2", R, X, [](P const& p) { return p.second; });
    Hom<E, P> k1("k1", K, R, [z](E const& y) { return P(z, y); });
    Hom<E, P> k2("k2", K, R, [z](E const& x) { return P(x, z); });

    using Leg = SchreierExtension<E, P, E>;
    std::optional<Leg> first;
    std::optional<Leg> second;
    Verdict v = verify_all(relation_laws(EquivalenceRelationOnObject<E>(
                               name, X, R, std::nullopt, std::nullopt, Verdict{})),
                           ex);
    try {
      first  = find_schreier_retraction(k1, r1, iR, ex);
      second = find_schreier_retraction(k2, r2, iR, ex);
      v      = combine(v, combine(*first->retraction_verdict(), *second->retraction_verdict()));
    } catch (Error const& err) {
      v = Verdict::failure("schreier-relation", "(r1, iR) and (r2, iR) are Schreier split epis",
                           err.witness(), err.what());
      first.reset();
      second.reset();
    }
    return EquivalenceRelationOnObject<E>(std::move(name), X, R, first, second, v);
  }

  template <typename E>
  EquivalenceRelationOnObject<E> discrete_relation(ConjStructure<E> const& X) {
    Partition p;
    for (std::size_t i = 0; i < X.size(); ++i) {
      p.push_back(i);
    }
    return relation_from_partition(X, p, "Delta_" + X.name());
  }

  template <typename E>
  EquivalenceRelationOnObject<E> total_relation(ConjStructure<E> const& X) {
    return relation_from_partition(X, Partition(X.size(), 0), "Nabla_" + X.name());
  }

  // Every congruence of a finite structure as a relation, named by the
  // class of 0.
  template <typename E>
  std::vector<EquivalenceRelationOnObject<E>> congruence_relations(ConjStructure<E> const& X) {
    std::vector<EquivalenceRelationOnObject<E>> out;
    auto elems = X.elements();
    auto zi    = index_of(X).at(X.zero());
    for (auto const& p : enumerate_congruences(tabulate(X))) {
      std::string name = "~{";
      bool        sep  = false;
      for (std::size_t i = 0; i < elems.size(); ++i) {
        if (p[i] == p[zi]) {
          name += (sep ? " " : "") + X.show(elems[i]);
          sep = true;
        }
      }
      out.push_back(relation_from_partition(X, p, name + "}"));
    }
    return out;
  }

}  // namespace conjcheck
