#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conjcheck/errors.hpp"
#include "conjcheck/quaternion.hpp"
#include "conjcheck/rational.hpp"

namespace conjcheck {

  namespace text {
    inline std::string_view trim(std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
      }
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
      }
      return s;
    }

    // Splits on `sep` occurring outside any () or [] nesting.
    inline std::vector<std::string_view> split_top_level(std::string_view s,
                                                         char sep) {
      std::vector<std::string_view> out;
      int         depth = 0;
      std::size_t start = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == '(' || ch == '[') {
          ++depth;
        } else if (ch == ')' || ch == ']') {
          --depth;
        } else if (ch == sep && depth == 0) {
          out.push_back(trim(s.substr(start, i - start)));
          start = i + 1;
        }
      }
      out.push_back(trim(s.substr(start)));
      return out;
    }

    inline std::string_view unwrap(std::string_view s, char open, char close) {
      s = trim(s);
      if (s.size() < 2 || s.front() != open || s.back() != close) {
        throw ParseError("expected " + std::string(1, open) + "..."
                         + std::string(1, close) + ", got '" + std::string(s)
                         + "'");
      }
      return s.substr(1, s.size() - 2);
    }

    inline std::vector<Rational> parse_rationals(std::string_view s,
                                                 std::size_t expected) {
      auto parts = split_top_level(unwrap(s, '[', ']'), ',');
      if (parts.size() != expected) {
        throw ParseError("expected " + std::to_string(expected)
                         + " coordinates in '" + std::string(s) + "'");
      }
      std::vector<Rational> out;
      for (auto p : parts) {
        out.push_back(Rational::parse(p));
      }
      return out;
    }
  }  // namespace text

  // Default textual form of element types. Every form round-trips through
  // parse(), and none of them contains '|', which separates witness entries.
  template <typename E>
  struct ElementText;

  template <>
  struct ElementText<std::size_t> {
    static std::string show(std::size_t x) {
      return std::to_string(x);
    }
    static std::size_t parse(std::string_view s) {
      auto v = Integer::parse(text::trim(s));
      if (v.sign() < 0 || !v.raw().fits_ulong_p()) {
        throw ParseError("not an index: '" + std::string(s) + "'");
      }
      return v.raw().get_ui();
    }
  };

  template <>
  struct ElementText<Integer> {
    static std::string show(Integer const& x) {
      return x.str();
    }
    static Integer parse(std::string_view s) {
      return Integer::parse(text::trim(s));
    }
  };

  template <>
  struct ElementText<Rational> {
    static std::string show(Rational const& x) {
      return x.str();
    }
    static Rational parse(std::string_view s) {
      return Rational::parse(text::trim(s));
    }
  };

  template <>
  struct ElementText<GaussianRational> {
    static std::string show(GaussianRational const& z) {
      return "[" + z.re.str() + "," + z.im.str() + "]";
    }
    static GaussianRational parse(std::string_view s) {
      auto v = text::parse_rationals(s, 2);
      return {v[0], v[1]};
    }
  };

  template <>
  struct ElementText<RationalQuaternion> {
    static std::string show(RationalQuaternion const& q) {
      return "[" + q.a.str() + "," + q.b.str() + "," + q.c.str() + ","
             + q.d.str() + "]";
    }
    static RationalQuaternion parse(std::string_view s) {
      auto v = text::parse_rationals(s, 4);
      return {v[0], v[1], v[2], v[3]};
    }
  };

  template <>
  struct ElementText<std::string> {
    static std::string show(std::string const& w) {
      return w;
    }
    static std::string parse(std::string_view s) {
      return std::string(text::trim(s));
    }
  };

  template <typename A, typename B>
  struct ElementText<std::pair<A, B>> {
    static std::string show(std::pair<A, B> const& p) {
      return "(" + ElementText<A>::show(p.first) + ","
             + ElementText<B>::show(p.second) + ")";
    }
    static std::pair<A, B> parse(std::string_view s) {
      auto parts = text::split_top_level(text::unwrap(s, '(', ')'), ',');
      if (parts.size() != 2) {
        throw ParseError("expected a pair, got '" + std::string(s) + "'");
      }
      return {ElementText<A>::parse(parts[0]), ElementText<B>::parse(parts[1])};
    }
  };

  template <typename E>
  concept HasElementText = requires(E const& e, std::string_view s) {
    { ElementText<E>::show(e) } -> std::convertible_to<std::string>;
    { ElementText<E>::parse(s) } -> std::convertible_to<E>;
  };

}  // namespace conjcheck
