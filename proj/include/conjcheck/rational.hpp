#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "conjcheck/errors.hpp"

namespace conjcheck {

  // Arbitrary precision integer (thin value wrapper around mpz_class).
  class Integer {
   public:
    Integer() = default;
    Integer(long v) : _v(v) {}  // NOLINT(runtime/explicit)
    explicit Integer(mpz_class v) : _v(std::move(v)) {}

    static Integer parse(std::string_view text) {
      std::string s(text);
      while (!s.empty() && s.front() == ' ') {
        s.erase(s.begin());
      }
      while (!s.empty() && s.back() == ' ') {
        s.pop_back();
      }
      if (!s.empty() && s.front() == '+') {
        s.erase(s.begin());
      }
      mpz_class v;
      if (s.empty() || v.set_str(s, 10) != 0) {
        throw ParseError("not an integer: '" + std::string(text) + "'");
      }
      return Integer(v);
    }

    mpz_class const& raw() const noexcept {
      return _v;
    }

    int sign() const {
      return sgn(_v);
    }

    bool is_zero() const {
      return sgn(_v) == 0;
    }

    std::string str() const {
      return _v.get_str();
    }

    std::optional<Integer> sqrt_exact() const {
      if (sgn(_v) < 0 || mpz_perfect_square_p(_v.get_mpz_t()) == 0) {
        return std::nullopt;
      }
      return Integer(mpz_class(sqrt(_v)));
    }

    friend Integer operator+(Integer const& a, Integer const& b) {
      return Integer(mpz_class(a._v + b._v));
    }
    friend Integer operator-(Integer const& a, Integer const& b) {
      return Integer(mpz_class(a._v - b._v));
    }
    friend Integer operator*(Integer const& a, Integer const& b) {
      return Integer(mpz_class(a._v * b._v));
    }
    Integer operator-() const {
      return Integer(mpz_class(-_v));
    }

    friend bool operator==(Integer const& a, Integer const& b) {
      return cmp(a._v, b._v) == 0;
    }
    friend std::strong_ordering operator<=>(Integer const& a, Integer const& b) {
      int c = cmp(a._v, b._v);
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater
                            : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, Integer const& x) {
      return os << x.str();
    }

   private:
    mpz_class _v;
  };

  // Exact rational number, always in lowest terms with a positive
  // denominator.
  class Rational {
   public:
    Rational() = default;
    Rational(long n) : _v(n) {}  // NOLINT(runtime/explicit)
    Rational(long n, long d) {
      if (d == 0) {
        throw std::domain_error("rational with zero denominator");
      }
      _v = mpq_class(n, d);
      _v.canonicalize();
    }
    explicit Rational(Integer const& n) : _v(n.raw()) {}
    Rational(Integer const& n, Integer const& d) {
      if (d.is_zero()) {
        throw std::domain_error("rational with zero denominator");
      }
      _v = mpq_class(n.raw(), d.raw());
      _v.canonicalize();
    }
    explicit Rational(mpq_class v) : _v(std::move(v)) {
      _v.canonicalize();
    }

    // Accepts "p", "p/q" and "-p/q" (spaces around the text are ignored).
    static Rational parse(std::string_view text) {
      auto slash = text.find('/');
      if (slash == std::string_view::npos) {
        return Rational(Integer::parse(text));
      }
      Integer n = Integer::parse(text.substr(0, slash));
      Integer d = Integer::parse(text.substr(slash + 1));
      if (d.is_zero()) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
      }
      return Rational(n, d);
    }

    mpq_class const& raw() const noexcept {
      return _v;
    }

    Integer numerator() const {
      return Integer(mpz_class(_v.get_num()));
    }

    Integer denominator() const {
      return Integer(mpz_class(_v.get_den()));
    }

    int sign() const {
      return sgn(_v);
    }

    bool is_zero() const {
      return sgn(_v) == 0;
    }

    std::string str() const {
      return _v.get_str();
    }

    // The rational square root, when it exists.
    std::optional<Rational> sqrt_exact() const {
      auto n = numerator().sqrt_exact();
      auto d = denominator().sqrt_exact();
      if (!n || !d) {
        return std::nullopt;
      }
      return Rational(*n, *d);
    }

    Rational inverse() const {
      if (is_zero()) {
        throw std::domain_error("inverse of zero");
      }
      return Rational(mpq_class(1 / _v));
    }

    friend Rational operator+(Rational const& a, Rational const& b) {
      return Rational(mpq_class(a._v + b._v), Raw{});
    }
    friend Rational operator-(Rational const& a, Rational const& b) {
      return Rational(mpq_class(a._v - b._v), Raw{});
    }
    friend Rational operator*(Rational const& a, Rational const& b) {
      return Rational(mpq_class(a._v * b._v), Raw{});
    }
    friend Rational operator/(Rational const& a, Rational const& b) {
      if (b.is_zero()) {
        throw std::domain_error("division by zero");
      }
      return Rational(mpq_class(a._v / b._v), Raw{});
    }
    Rational operator-() const {
      return Rational(mpq_class(-_v), Raw{});
    }
    Rational& operator+=(Rational const& o) {
      _v += o._v;
      return *this;
    }
    Rational& operator-=(Rational const& o) {
      _v -= o._v;
      return *this;
    }
    Rational& operator*=(Rational const& o) {
      _v *= o._v;
      return *this;
    }

    friend bool operator==(Rational const& a, Rational const& b) {
      return cmp(a._v, b._v) == 0;
    }
    friend std::strong_ordering operator<=>(Rational const& a,
                                            Rational const& b) {
      int c = cmp(a._v, b._v);
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater
                            : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, Rational const& x) {
      return os << x.str();
    }

   private:
    // GMP arithmetic on canonical operands already yields canonical results.
    struct Raw {};
    Rational(mpq_class v, Raw) : _v(std::move(v)) {}

    mpq_class _v;
  };

}  // namespace conjcheck
