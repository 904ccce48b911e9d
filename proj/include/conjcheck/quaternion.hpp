#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "conjcheck/rational.hpp"

namespace conjcheck {

  // re + im*i over the rationals.
  struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational conj() const {
      return {re, -im};
    }

    Rational norm2() const {
      return re * re + im * im;
    }

    GaussianRational scaled(Rational const& s) const {
      return {re * s, im * s};
    }

    std::optional<GaussianRational> inverse() const {
      Rational n = norm2();
      if (n.is_zero()) {
        return std::nullopt;
      }
      return conj().scaled(n.inverse());
    }

    friend GaussianRational operator+(GaussianRational const& x,
                                      GaussianRational const& y) {
      return {x.re + y.re, x.im + y.im};
    }
    friend GaussianRational operator*(GaussianRational const& x,
                                      GaussianRational const& y) {
      return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    GaussianRational operator-() const {
      return {-re, -im};
    }

    friend bool operator==(GaussianRational const&, GaussianRational const&)
        = default;
    friend auto operator<=>(GaussianRational const&, GaussianRational const&)
        = default;
  };

  // a + b i + c j + d k over the rationals.
  struct RationalQuaternion {
    Rational a;
    Rational b;
    Rational c;
    Rational d;

    static RationalQuaternion scalar(Rational s) {
      return {std::move(s), 0, 0, 0};
    }

    RationalQuaternion conj() const {
      return {a, -b, -c, -d};
    }

    Rational norm2() const {
      return a * a + b * b + c * c + d * d;
    }

    RationalQuaternion scaled(Rational const& s) const {
      return {a * s, b * s, c * s, d * s};
    }

    std::optional<RationalQuaternion> inverse() const {
      Rational n = norm2();
      if (n.is_zero()) {
        return std::nullopt;
      }
      return conj().scaled(n.inverse());
    }

    friend RationalQuaternion operator+(RationalQuaternion const& p,
                                        RationalQuaternion const& q) {
      return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d};
    }
    friend RationalQuaternion operator-(RationalQuaternion const& p,
                                        RationalQuaternion const& q) {
      return {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d};
    }
    RationalQuaternion operator-() const {
      return {-a, -b, -c, -d};
    }

    // Hamilton product: i^2 = j^2 = k^2 = ijk = -1.
    friend RationalQuaternion operator*(RationalQuaternion const& p,
                                        RationalQuaternion const& q) {
      mpz_class dp, dq;
      mpz_class x[4], y[4];
      common_denominator(p, x, dp);
      common_denominator(q, y, dq);
      mpz_class den = dp * dq;
      mpz_class n[4];
      n[0] = x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
      n[1] = x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2];
      n[2] = x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1];
      n[3] = x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0];
      return {Rational(mpq_class(n[0], den)), Rational(mpq_class(n[1], den)),
              Rational(mpq_class(n[2], den)), Rational(mpq_class(n[3], den))};
    }

    static void common_denominator(RationalQuaternion const& q, mpz_class* num, mpz_class& den) {
      Rational const* parts[4] = {&q.a, &q.b, &q.c, &q.d};
      den = 1;
      for (auto const* r : parts) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r->raw().get_den_mpz_t());
      }
      for (int i = 0; i < 4; ++i) {
        mpz_class const& d = parts[i]->raw().get_den();
        num[i] = parts[i]->raw().get_num() * (den / d);
      }
    }

    friend bool operator==(RationalQuaternion const&,
                           RationalQuaternion const&)
        = default;
    friend auto operator<=>(RationalQuaternion const&,
                            RationalQuaternion const&)
        = default;
  };

  namespace quaternion {
    inline RationalQuaternion const one{1, 0, 0, 0};
    inline RationalQuaternion const i{0, 1, 0, 0};
    inline RationalQuaternion const j{0, 0, 1, 0};
    inline RationalQuaternion const k{0, 0, 0, 1};
  }  // namespace quaternion

  // Rational point of the unit circle, ((1 - t^2) + 2t i) / (1 + t^2).
  inline GaussianRational unit_circle_point(Rational const& t) {
    Rational den = Rational(1) + t * t;
    return {(Rational(1) - t * t) / den, (Rational(2) * t) / den};
  }

  // Rational point of the unit 3-sphere obtained by inverse stereographic
  // projection of (t1, t2, t3); every rational unit quaternion other than -1
  // arises this way.
  inline RationalQuaternion unit_quaternion(Rational const& t1,
                                            Rational const& t2,
                                            Rational const& t3) {
    Rational s   = t1 * t1 + t2 * t2 + t3 * t3;
    Rational den = Rational(1) + s;
    return {(Rational(1) - s) / den,
            (Rational(2) * t1) / den,
            (Rational(2) * t2) / den,
            (Rational(2) * t3) / den};
  }

  // Closure under multiplication of {±1, ±i, ±j, ±k, (±1±i±j±k)/2}, sorted.
  inline std::vector<RationalQuaternion> hurwitz_units() {
    std::set<RationalQuaternion> units;
    for (int s = -1; s <= 1; s += 2) {
      units.insert(quaternion::one.scaled(s));
      units.insert(quaternion::i.scaled(s));
      units.insert(quaternion::j.scaled(s));
      units.insert(quaternion::k.scaled(s));
    }
    Rational const half(1, 2);
    for (int m = 0; m < 16; ++m) {
      auto sgn = [&](int bit) { return (m >> bit) & 1 ? -half : half; };
      units.insert({sgn(0), sgn(1), sgn(2), sgn(3)});
    }
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<RationalQuaternion> current(units.begin(), units.end());
      for (auto const& p : current) {
        for (auto const& q : current) {
          grew |= units.insert(p * q).second;
        }
      }
    }
    return {units.begin(), units.end()};
  }

}  // namespace conjcheck
