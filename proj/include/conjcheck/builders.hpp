#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "conjcheck/errors.hpp"
#include "conjcheck/finite.hpp"
#include "conjcheck/plan.hpp"
#include "conjcheck/quaternion.hpp"
#include "conjcheck/rational.hpp"
#include "conjcheck/structure.hpp"
#include "conjcheck/text.hpp"

namespace conjcheck {

  ////////////////////////////////////////////////////////////////////////
  // Finite tables
  ////////////////////////////////////////////////////////////////////////

  // Which of the three standard conjugations to put on a commutative
  // structure: x̄ = -x, x̄ = 0 or x̄ = x.
  enum class StandardConj { negation, zero, identity };

  inline StandardConj parse_standard_conj(std::string_view s) {
    if (s == "negation" || s == "inverse") {
      return StandardConj::negation;
    }
    if (s == "zero") {
      return StandardConj::zero;
    }
    if (s == "identity") {
      return StandardConj::identity;
    }
    throw ParseError("unknown conjugation '" + std::string(s)
                     + "' (expected negation, zero or identity)");
  }

  // Table of a group given by its multiplication on indices 0..n-1, with 0
  // the identity and the given conjugation.
  inline FiniteTable group_table(std::vector<std::string> names,
                                 std::function<std::size_t(std::size_t, std::size_t)> mul,
                                 StandardConj conj = StandardConj::negation) {
    std::size_t n = names.size();
    FiniteTable t;
    t.names = std::move(names);
    t.op.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        t.op[i][j] = mul(i, j);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      switch (conj) {
        case StandardConj::negation:
          for (std::size_t j = 0; j < n; ++j) {
            if (t.op[i][j] == 0) {
              t.conj.push_back(j);
              break;
            }
          }
          break;
        case StandardConj::zero:
          t.conj.push_back(0);
          break;
        case StandardConj::identity:
          t.conj.push_back(i);
          break;
      }
    }
    t.identity = 0;
    return t;
  }

  inline Finite cyclic_group(std::size_t n, StandardConj conj = StandardConj::negation) {
    if (n == 0) {
      throw TableError("cyclic group of order 0");
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(std::to_string(i));
    }
    return table_structure("Z" + std::to_string(n),
                           group_table(std::move(names),
                                       [n](std::size_t a, std::size_t b) { return (a + b) % n; },
                                       conj));
  }

  inline Finite trivial_monoid() {
    return cyclic_group(1);
  }

  // Z2 x Z2 with elements named by their two bits.
  inline Finite klein_group() {
    return table_structure(
        "Z2xZ2", group_table({"00", "01", "10", "11"},
                             [](std::size_t a, std::size_t b) { return a ^ b; }));
  }

  inline std::vector<RationalQuaternion> q8_elements() {
    using namespace quaternion;
    return {one, -one, i, -i, j, -j, k, -k};
  }

  // Quaternion group {±1, ±i, ±j, ±k}; `conj` chooses inverse (the group
  // conjugation) or the identity map.
  inline Finite quaternion_group(StandardConj conj = StandardConj::negation) {
    auto elems = q8_elements();
    auto index = [elems](RationalQuaternion const& q) {
      return static_cast<std::size_t>(
          std::find(elems.begin(), elems.end(), q) - elems.begin());
    };
    return table_structure(
        conj == StandardConj::negation ? "Q8" : "Q8[conj=identity]",
        group_table({"1", "-1", "i", "-i", "j", "-j", "k", "-k"},
                    [elems, index](std::size_t a, std::size_t b) {
                      return index(elems[a] * elems[b]);
                    },
                    conj));
  }

  // Symmetric group on three letters; r a 3-cycle, s a transposition.
  inline Finite symmetric_group3() {
    using Perm = std::array<int, 3>;
    auto compose = [](Perm const& p, Perm const& q) {  // p after q
      return Perm{p[q[0]], p[q[1]], p[q[2]]};
    };
    Perm e{0, 1, 2};
    Perm r{1, 2, 0};
    Perm s{0, 2, 1};
    Perm r2 = compose(r, r);
    std::vector<Perm> perms{e, r, r2, s, compose(r, s), compose(r2, s)};
    auto index = [perms](Perm const& p) {
      return static_cast<std::size_t>(
          std::find(perms.begin(), perms.end(), p) - perms.begin());
    };
    return table_structure(
        "S3", group_table({"e", "r", "r2", "s", "rs", "r2s"},
                          [perms, index, compose](std::size_t a, std::size_t b) {
                            return index(compose(perms[a], perms[b]));
                          }));
  }

  // Componentwise product of two structures.
  template <typename E1, typename E2>
  ConjStructure<std::pair<E1, E2>> product_structure(ConjStructure<E1> const& s,
                                                     ConjStructure<E2> const& t,
                                                     std::string name = {}) {
    using P = std::pair<E1, E2>;
    if (name.empty()) {
      name = s.name() + "x" + t.name();
    }
    StructureParts<P> parts;
    parts.name = name;
    parts.op   = [s, t](P const& x, P const& y) {
      return P(s.add(x.first, y.first), t.add(x.second, y.second));
    };
    parts.conj = [s, t](P const& x) { return P(s.conj(x.first), t.conj(x.second)); };
    if (s.is_monoid() && t.is_monoid()) {
      parts.identity = P(s.zero(), t.zero());
    }
    parts.declared_group = s.declared_group() && t.declared_group();
    return ConjStructure<P>(product_domain(s.carrier(), t.carrier(), name),
                            std::move(parts));
  }

  ////////////////////////////////////////////////////////////////////////
  // The natural numbers and words
  ////////////////////////////////////////////////////////////////////////

  enum class NatOp { plus, max };
  enum class NatConj { zero, identity, successor };

  inline Domain<Integer> naturals_domain() {
    DomainParts<Integer> parts;
    parts.name      = "N";
    parts.nth       = [](std::size_t i) { return Integer(static_cast<long>(i)); };
    parts.draw      = [](std::mt19937_64& rng) {
      return Integer(draw_int(rng, 0, default_sample_bound));
    };
    parts.landmarks = {Integer(0), Integer(1), Integer(2)};
    parts.contains  = [](Integer const& n) { return n.sign() >= 0; };
    return Domain<Integer>(std::move(parts));
  }

  inline ConjStructure<Integer> naturals(NatOp op = NatOp::plus,
                                         NatConj conj = NatConj::zero) {
    StructureParts<Integer> parts;
    parts.name = std::string("N[") + (op == NatOp::plus ? "+" : "max") + ",conj="
                 + (conj == NatConj::zero       ? "0"
                    : conj == NatConj::identity ? "x"
                                                : "x+1")
                 + "]";
    if (op == NatOp::plus) {
      parts.op          = [](Integer const& a, Integer const& b) { return a + b; };
      parts.inverse     = [](Integer const& a) { return std::optional<Integer>(-a); };
      parts.solve_right = [](Integer const& t, Integer const& v) -> std::optional<Integer> {
        Integer x = t - v;
        return x.sign() >= 0 ? std::optional<Integer>(x) : std::nullopt;
      };
    } else {
      parts.op = [](Integer const& a, Integer const& b) { return a < b ? b : a; };
    }
    switch (conj) {
      case NatConj::zero:
        parts.conj = [](Integer const&) { return Integer(0); };
        break;
      case NatConj::identity:
        parts.conj = [](Integer const& a) { return a; };
        break;
      case NatConj::successor:
        parts.conj = [](Integer const& a) { return a + Integer(1); };
        break;
    }
    parts.identity = Integer(0);
    return ConjStructure<Integer>(naturals_domain(), std::move(parts));
  }

  // Nonempty words over {x, y} under concatenation with reversal as the
  // unary operation. Not a conjugation semigroup; the control case for the
  // Ore search.
  inline ConjStructure<std::string> free_semigroup() {
    DomainParts<std::string> d;
    d.name = "Free{x,y}";
    d.nth  = [](std::size_t i) {
      std::size_t len = 1;
      std::size_t block = 2;
      while (i >= block) {
        i -= block;
        ++len;
        block *= 2;
      }
      std::string w(len, 'x');
      for (std::size_t p = 0; p < len; ++p) {
        if ((i >> (len - 1 - p)) & 1) {
          w[p] = 'y';
        }
      }
      return w;
    };
    d.draw = [](std::mt19937_64& rng) {
      std::string w(static_cast<std::size_t>(draw_int(rng, 1, 6)), 'x');
      for (auto& ch : w) {
        ch = draw_int(rng, 0, 1) ? 'y' : 'x';
      }
      return w;
    };
    d.landmarks = {"x", "y", "xy", "yx"};
    d.contains  = [](std::string const& w) {
      return !w.empty() && w.find_first_not_of("xy") == std::string::npos;
    };
    StructureParts<std::string> parts;
    parts.name = d.name;
    parts.op   = [](std::string const& a, std::string const& b) { return a + b; };
    parts.conj = [](std::string w) {
      std::reverse(w.begin(), w.end());
      return w;
    };
    return ConjStructure<std::string>(Domain<std::string>(std::move(d)), std::move(parts));
  }

  ////////////////////////////////////////////////////////////////////////
  // Rational intervals, disks and balls
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // Reduced fractions p/q with 0 < p < q (or p <= q when `closed`),
    // ordered by denominator then numerator; with `signed_too` each is
    // followed by its negative.
    inline Rational nth_fraction(std::size_t i, bool closed, bool signed_too) {
      for (long q = 1;; ++q) {
        long top = closed ? q : q - 1;
        for (long p = 1; p <= top; ++p) {
          if (std::gcd(p, q) != 1) {
            continue;
          }
          for (int sign = 1; sign >= (signed_too ? -1 : 1); sign -= 2) {
            if (i == 0) {
              return Rational(sign * p, q);
            }
            --i;
          }
        }
      }
    }

    template <typename T>
    T rejection(std::mt19937_64& rng,
                std::function<T(std::mt19937_64&)> const& draw,
                std::function<bool(T const&)> const&      keep) {
      while (true) {
        T x = draw(rng);
        if (keep(x)) {
          return x;
        }
      }
    }
  }  // namespace detail

  // {u : 0 < |u| < 1} under product, conj(u) = u.
  inline ConjStructure<Rational> open_interval_semigroup() {
    DomainParts<Rational> d;
    d.name      = "(-1,1)\\0";
    d.nth       = [](std::size_t i) { return detail::nth_fraction(i, false, true); };
    d.draw      = [](std::mt19937_64& rng) {
      long den = draw_int(rng, 2, default_sample_bound);
      long num = draw_int(rng, 1, den - 1);
      return Rational(draw_int(rng, 0, 1) ? num : -num, den);
    };
    d.landmarks = {Rational(1, 2), Rational(-1, 2), Rational(1, 3), Rational(2, 3)};
    d.contains  = [](Rational const& u) {
      return !u.is_zero() && u < Rational(1) && u > Rational(-1);
    };
    StructureParts<Rational> parts;
    parts.name = "open interval";
    parts.op   = [](Rational const& a, Rational const& b) { return a * b; };
    parts.conj = [](Rational const& a) { return a; };
    parts.solve_right = [](Rational const& t, Rational const& v) {
      return std::optional<Rational>(t / v);
    };
    return ConjStructure<Rational>(Domain<Rational>(std::move(d)), std::move(parts));
  }

  // {u : 0 < u <= 1} under product, conj(u) = u, identity 1.
  inline ConjStructure<Rational> unit_interval_monoid() {
    DomainParts<Rational> d;
    d.name      = "(0,1]";
    d.nth       = [](std::size_t i) { return detail::nth_fraction(i, true, false); };
    d.draw      = [](std::mt19937_64& rng) { return draw_unit_interval(rng); };
    d.landmarks = {Rational(1), Rational(1, 2), Rational(1, 3), Rational(2, 3)};
    d.contains  = [](Rational const& u) { return u.sign() > 0 && u <= Rational(1); };
    StructureParts<Rational> parts;
    parts.name     = "unit interval";
    parts.op       = [](Rational const& a, Rational const& b) { return a * b; };
    parts.conj     = [](Rational const& a) { return a; };
    parts.identity = Rational(1);
    parts.inverse  = [](Rational const& a) { return std::optional<Rational>(a.inverse()); };
    parts.solve_right = [](Rational const& t, Rational const& v) {
      return std::optional<Rational>(t / v);
    };
    return ConjStructure<Rational>(Domain<Rational>(std::move(d)), std::move(parts));
  }

  // {z in Q(i) : 0 < |z| < 1} under product and complex conjugation.
  inline ConjStructure<GaussianRational> open_disk_semigroup() {
    DomainParts<GaussianRational> d;
    d.name = "open disk";
    d.draw = [](std::mt19937_64& rng) {
      return detail::rejection<GaussianRational>(
          rng,
          [](std::mt19937_64& g) {
            return GaussianRational{draw_rational(g), draw_rational(g)};
          },
          [](GaussianRational const& z) {
            auto n = z.norm2();
            return !n.is_zero() && n < Rational(1);
          });
    };
    d.landmarks = {{Rational(1, 2), 0}, {0, Rational(1, 2)}, {Rational(3, 5), Rational(-1, 5)}};
    d.contains  = [](GaussianRational const& z) {
      auto n = z.norm2();
      return !n.is_zero() && n < Rational(1);
    };
    StructureParts<GaussianRational> parts;
    parts.name = "open disk";
    parts.op   = [](GaussianRational const& a, GaussianRational const& b) { return a * b; };
    parts.conj = [](GaussianRational const& a) { return a.conj(); };
    parts.solve_right = [](GaussianRational const& t, GaussianRational const& v)
        -> std::optional<GaussianRational> {
      auto inv = v.inverse();
      return inv ? std::optional<GaussianRational>(t * *inv) : std::nullopt;
    };
    return ConjStructure<GaussianRational>(Domain<GaussianRational>(std::move(d)),
                                           std::move(parts));
  }

  // {q in H over Q : 0 < |q| < 1} under quaternion product and conjugation.
  inline ConjStructure<RationalQuaternion> open_ball_semigroup() {
    DomainParts<RationalQuaternion> d;
    d.name = "open ball";
    d.draw = [](std::mt19937_64& rng) {
      return detail::rejection<RationalQuaternion>(
          rng,
          [](std::mt19937_64& g) {
            Rational a = draw_rational(g, 6);
            Rational b = draw_rational(g, 6);
            Rational c = draw_rational(g, 6);
            return RationalQuaternion{a, b, c, draw_rational(g, 6)};
          },
          [](RationalQuaternion const& q) {
            auto n = q.norm2();
            return !n.is_zero() && n < Rational(1);
          });
    };
    d.landmarks = {quaternion::i.scaled(Rational(1, 2)), quaternion::j.scaled(Rational(1, 2)),
                   quaternion::one.scaled(Rational(1, 3))};
    d.contains  = [](RationalQuaternion const& q) {
      auto n = q.norm2();
      return !n.is_zero() && n < Rational(1);
    };
    StructureParts<RationalQuaternion> parts;
    parts.name = "open ball";
    parts.op   = [](RationalQuaternion const& a, RationalQuaternion const& b) { return a * b; };
    parts.conj = [](RationalQuaternion const& a) { return a.conj(); };
    parts.solve_right = [](RationalQuaternion const& t, RationalQuaternion const& v)
        -> std::optional<RationalQuaternion> {
      auto inv = v.inverse();
      return inv ? std::optional<RationalQuaternion>(t * *inv) : std::nullopt;
    };
    return ConjStructure<RationalQuaternion>(Domain<RationalQuaternion>(std::move(d)),
                                             std::move(parts));
  }

  ////////////////////////////////////////////////////////////////////////
  // Quaternion and circle structures
  ////////////////////////////////////////////////////////////////////////

  inline RationalQuaternion draw_unit_quaternion(std::mt19937_64& rng) {
    Rational t1 = draw_rational(rng);
    Rational t2 = draw_rational(rng);
    return unit_quaternion(t1, t2, draw_rational(rng));
  }

  namespace detail {
    inline StructureParts<RationalQuaternion> quaternion_parts(std::string name) {
      StructureParts<RationalQuaternion> parts;
      parts.name     = std::move(name);
      parts.op       = [](RationalQuaternion const& a, RationalQuaternion const& b) {
        return a * b;
      };
      parts.conj     = [](RationalQuaternion const& a) { return a.conj(); };
      parts.identity = quaternion::one;
      parts.inverse  = [](RationalQuaternion const& a) { return a.inverse(); };
      parts.solve_right = [](RationalQuaternion const& t, RationalQuaternion const& v)
          -> std::optional<RationalQuaternion> {
        auto inv = v.inverse();
        return inv ? std::optional<RationalQuaternion>(t * *inv) : std::nullopt;
      };
      return parts;
    }

    inline StructureParts<GaussianRational> complex_parts(std::string name) {
      StructureParts<GaussianRational> parts;
      parts.name     = std::move(name);
      parts.op       = [](GaussianRational const& a, GaussianRational const& b) {
        return a * b;
      };
      parts.conj     = [](GaussianRational const& a) { return a.conj(); };
      parts.identity = GaussianRational{1, 0};
      parts.inverse  = [](GaussianRational const& a) { return a.inverse(); };
      parts.solve_right = [](GaussianRational const& t, GaussianRational const& v)
          -> std::optional<GaussianRational> {
        auto inv = v.inverse();
        return inv ? std::optional<GaussianRational>(t * *inv) : std::nullopt;
      };
      return parts;
    }

    // 0 < n <= 1 and n a square of a rational.
    inline bool scaled_unit_norm(Rational const& n) {
      return n.sign() > 0 && n <= Rational(1) && n.sqrt_exact().has_value();
    }
  }  // namespace detail

  // Rational unit quaternions: a group with conj(q) = q^-1.
  inline ConjStructure<RationalQuaternion> unit_quaternions() {
    DomainParts<RationalQuaternion> d;
    d.name      = "S3(Q)";
    d.draw      = draw_unit_quaternion;
    d.landmarks = hurwitz_units();
    d.contains  = [](RationalQuaternion const& q) { return q.norm2() == Rational(1); };
    auto parts  = detail::quaternion_parts("unit quaternions");
    parts.declared_group = true;
    return ConjStructure<RationalQuaternion>(Domain<RationalQuaternion>(std::move(d)),
                                             std::move(parts));
  }

  // The 24 Hurwitz units as a finite group.
  inline ConjStructure<RationalQuaternion> hurwitz_group() {
    auto parts = detail::quaternion_parts("Hurwitz units");
    parts.declared_group = true;
    return ConjStructure<RationalQuaternion>(
        finite_domain<RationalQuaternion>("Hurwitz", hurwitz_units()), std::move(parts));
  }

  // {rho*u : rho in Q, 0 < rho <= 1, u a rational unit quaternion}: the
  // quaternions of norm at most one whose norm is rational.
  inline ConjStructure<RationalQuaternion> scaled_unit_quaternions() {
    DomainParts<RationalQuaternion> d;
    d.name = "X(Q)";
    d.draw = [](std::mt19937_64& rng) {
      Rational rho = draw_unit_interval(rng);
      return draw_unit_quaternion(rng).scaled(rho);
    };
    Rational half(1, 2);
    d.landmarks = {quaternion::one,         quaternion::one.scaled(half),
                   quaternion::i.scaled(half), quaternion::j.scaled(half),
                   quaternion::k.scaled(half), quaternion::i,
                   quaternion::j,           quaternion::one.scaled(-1)};
    d.contains  = [](RationalQuaternion const& q) {
      return detail::scaled_unit_norm(q.norm2());
    };
    return ConjStructure<RationalQuaternion>(Domain<RationalQuaternion>(std::move(d)),
                                             detail::quaternion_parts("scaled unit quaternions"));
  }

  // Rational points of the unit circle.
  inline ConjStructure<GaussianRational> unit_circle() {
    DomainParts<GaussianRational> d;
    d.name      = "S1(Q)";
    d.draw      = [](std::mt19937_64& rng) { return unit_circle_point(draw_rational(rng)); };
    d.landmarks = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {Rational(3, 5), Rational(4, 5)}};
    d.contains  = [](GaussianRational const& z) { return z.norm2() == Rational(1); };
    auto parts  = detail::complex_parts("unit circle");
    parts.declared_group = true;
    return ConjStructure<GaussianRational>(Domain<GaussianRational>(std::move(d)),
                                           std::move(parts));
  }

  // {rho*u : 0 < rho <= 1, u on the unit circle}: the punctured closed disk
  // restricted to rational moduli.
  inline ConjStructure<GaussianRational> unit_disk() {
    DomainParts<GaussianRational> d;
    d.name = "D(Q)";
    d.draw = [](std::mt19937_64& rng) {
      Rational rho = draw_unit_interval(rng);
      return unit_circle_point(draw_rational(rng)).scaled(rho);
    };
    d.landmarks = {{1, 0}, {Rational(1, 2), 0}, {0, Rational(1, 2)}, {0, 1}};
    d.contains  = [](GaussianRational const& z) {
      return detail::scaled_unit_norm(z.norm2());
    };
    return ConjStructure<GaussianRational>(Domain<GaussianRational>(std::move(d)),
                                           detail::complex_parts("unit disk"));
  }

  ////////////////////////////////////////////////////////////////////////
  // K x E
  ////////////////////////////////////////////////////////////////////////

  // (alpha, u) with u of dimension 0, 1 or 3.
  struct KEPoint {
    Rational              alpha;
    std::vector<Rational> u;

    friend bool operator==(KEPoint const&, KEPoint const&) = default;
    friend auto operator<=>(KEPoint const&, KEPoint const&) = default;
  };

  enum class KEVariant {
    semigroup,              // all of K x E
    monoid_nonzero,         // points other than (0, 0), identity (1, 0)
    monoid_nonzero_scalar,  // points with alpha != 0 (not closed)
  };

  namespace ke {
    using Vec = std::vector<Rational>;

    inline Rational dot(Vec const& u, Vec const& v) {
      Rational s;
      for (std::size_t i = 0; i < u.size(); ++i) {
        s += u[i] * v[i];
      }
      return s;
    }

    inline Vec cross(Vec const& u, Vec const& v) {
      if (u.size() != 3) {
        return Vec(u.size());
      }
      return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
              u[0] * v[1] - u[1] * v[0]};
    }

    inline Vec scale(Rational const& a, Vec const& u) {
      Vec out;
      for (auto const& x : u) {
        out.push_back(a * x);
      }
      return out;
    }

    inline Vec add(Vec const& u, Vec const& v) {
      Vec out;
      for (std::size_t i = 0; i < u.size(); ++i) {
        out.push_back(u[i] + v[i]);
      }
      return out;
    }

    inline Vec sub(Vec const& u, Vec const& v) {
      return add(u, scale(-1, v));
    }

    inline KEPoint product(KEPoint const& p, KEPoint const& q) {
      return {p.alpha * q.alpha - dot(p.u, q.u),
              add(add(scale(p.alpha, q.u), scale(q.alpha, p.u)), cross(p.u, q.u))};
    }

    inline bool is_zero_vec(Vec const& u) {
      return std::all_of(u.begin(), u.end(), [](Rational const& x) { return x.is_zero(); });
    }

    inline Vec draw_vec(std::mt19937_64& rng, std::size_t dim) {
      Vec u;
      for (std::size_t i = 0; i < dim; ++i) {
        u.push_back(draw_rational(rng));
      }
      return u;
    }

    // Samples the two compatibility identities of the scalar and vector
    // products; returns the first violating triple.
    inline std::optional<std::array<Vec, 3>> compatibility_violation(std::size_t dim,
                                                                     std::size_t samples) {
      for (std::size_t j = 0; j < samples; ++j) {
        auto rng = tuple_rng(dim, j);
        Vec  u   = draw_vec(rng, dim);
        Vec  v   = draw_vec(rng, dim);
        Vec  w   = draw_vec(rng, dim);
        Vec lhs = sub(cross(u, cross(v, w)), scale(dot(v, w), u));
        Vec rhs = sub(cross(cross(u, v), w), scale(dot(u, v), w));
        if (lhs != rhs || dot(u, cross(v, w)) != dot(cross(u, v), w)) {
          return std::array<Vec, 3>{u, v, w};
        }
      }
      return std::nullopt;
    }
  }  // namespace ke

  inline std::string show_ke(KEPoint const& p) {
    std::string out = "[" + p.alpha.str();
    for (auto const& x : p.u) {
      out += "," + x.str();
    }
    return out + "]";
  }

  inline constexpr std::size_t ke_compatibility_samples = 1000;

  // K x E over the rationals with (a,u)+(b,v) = (ab - u.v, av + bu + u x v)
  // and conj(a,u) = (a,-u).
  inline ConjStructure<KEPoint> ke_structure(std::size_t dimension, KEVariant variant) {
    if (dimension != 0 && dimension != 1 && dimension != 3) {
      throw DimensionError("K x E is defined for dimensions 0, 1 and 3, not "
                           + std::to_string(dimension));
    }
    if (auto bad = ke::compatibility_violation(dimension, ke_compatibility_samples)) {
      throw DimensionError("vector product fails the compatibility identities in dimension "
                           + std::to_string(dimension));
    }
    std::size_t dim = dimension;
    std::function<bool(KEPoint const&)> member;
    std::string                         suffix;
    switch (variant) {
      case KEVariant::semigroup:
        member = [dim](KEPoint const& p) { return p.u.size() == dim; };
        suffix = "";
        break;
      case KEVariant::monoid_nonzero:
        member = [dim](KEPoint const& p) {
          return p.u.size() == dim && !(p.alpha.is_zero() && ke::is_zero_vec(p.u));
        };
        suffix = "*";
        break;
      case KEVariant::monoid_nonzero_scalar:
        member = [dim](KEPoint const& p) { return p.u.size() == dim && !p.alpha.is_zero(); };
        suffix = "[alpha!=0]";
        break;
    }
    std::string name = "KxE" + std::to_string(dim) + suffix;
    DomainParts<KEPoint> d;
    d.name = name;
    d.draw = [dim, member](std::mt19937_64& rng) {
      return detail::rejection<KEPoint>(
          rng,
          [dim](std::mt19937_64& g) {
            Rational a = draw_rational(g);
            return KEPoint{a, ke::draw_vec(g, dim)};
          },
          member);
    };
    KEPoint one{1, ke::Vec(dim)};
    d.landmarks.push_back(one);
    for (std::size_t i = 0; i < dim; ++i) {
      ke::Vec e(dim);
      e[i] = 1;
      d.landmarks.push_back({variant == KEVariant::monoid_nonzero_scalar ? 1 : 0, e});
    }
    if (variant == KEVariant::semigroup) {
      d.landmarks.push_back({0, ke::Vec(dim)});
    }
    d.contains = member;
    d.show     = show_ke;
    d.parse    = [dim](std::string_view s) {
      auto v = text::parse_rationals(s, dim + 1);
      return KEPoint{v[0], ke::Vec(v.begin() + 1, v.end())};
    };
    StructureParts<KEPoint> parts;
    parts.name = name;
    parts.op   = ke::product;
    parts.conj = [](KEPoint const& p) { return KEPoint{p.alpha, ke::scale(-1, p.u)}; };
    if (variant != KEVariant::semigroup) {
      parts.identity = one;
    }
    return ConjStructure<KEPoint>(Domain<KEPoint>(std::move(d)), std::move(parts));
  }

  // (alpha, (b, c, d)) -> alpha + bi + cj + dk.
  inline RationalQuaternion ke_to_quaternion(KEPoint const& p) {
    return {p.alpha, p.u.at(0), p.u.at(1), p.u.at(2)};
  }

}  // namespace conjcheck
