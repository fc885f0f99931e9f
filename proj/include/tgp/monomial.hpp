#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>

#include "tgp/error.hpp"

namespace tgp {

/// Supported ring sizes: t_1..t_d with d <= kMaxVars. Everything in this
/// project lives at d <= 8 (partitions of at most 8).
constexpr int kMaxVars = 8;

/// Exponent vector of a monomial in t_1..t_nvars, with cached total degree.
struct Monomial {
  std::array<uint16_t, kMaxVars> e{};
  int16_t nvars = 0;
  int32_t deg = 0;

  static Monomial one(int nvars) {
    if (nvars < 0 || nvars > kMaxVars)
      throw precondition_error("ring dimension out of range");
    Monomial m;
    m.nvars = static_cast<int16_t>(nvars);
    return m;
  }
  /// t_i, 1-based.
  static Monomial var(int nvars, int i, int power = 1) {
    Monomial m = one(nvars);
    if (i < 1 || i > nvars) throw precondition_error("variable index out of range");
    m.e[i - 1] = static_cast<uint16_t>(power);
    m.deg = power;
    return m;
  }

  bool is_one() const { return deg == 0; }

  bool operator==(const Monomial& o) const {
    return nvars == o.nvars && deg == o.deg && e == o.e;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
};

inline bool divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg) return false;
  for (int i = 0; i < a.nvars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (int i = 0; i < a.nvars; ++i) m.e[i] = static_cast<uint16_t>(a.e[i] + b.e[i]);
  m.deg = a.deg + b.deg;
  return m;
}

/// Quotient a/b; requires b | a.
inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (int i = 0; i < a.nvars; ++i) m.e[i] = static_cast<uint16_t>(a.e[i] - b.e[i]);
  m.deg = a.deg - b.deg;
  return m;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  m.deg = 0;
  for (int i = 0; i < a.nvars; ++i) {
    m.e[i] = std::max(a.e[i], b.e[i]);
    m.deg += m.e[i];
  }
  return m;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

/// Total orders on monomials compatible with multiplication. degrevlex and
/// deglex refine total degree; degrevlex is the project default.
enum class MonomialOrder { degrevlex, deglex, lex };

/// Three-way comparison: negative when a < b, 0 when equal, positive when
/// a > b in the given order.
inline int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder ord) {
  switch (ord) {
    case MonomialOrder::degrevlex: {
      if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
      for (int i = a.nvars - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
      return 0;
    }
    case MonomialOrder::deglex: {
      if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
      for (int i = 0; i < a.nvars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
      return 0;
    }
    case MonomialOrder::lex: {
      for (int i = 0; i < a.nvars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

struct MonoLess {
  MonomialOrder ord = MonomialOrder::degrevlex;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return mono_cmp(a, b, ord) < 0;
  }
};

inline const char* order_name(MonomialOrder ord) {
  switch (ord) {
    case MonomialOrder::degrevlex: return "degrevlex";
    case MonomialOrder::deglex: return "deglex";
    case MonomialOrder::lex: return "lex";
  }
  return "?";
}

inline MonomialOrder order_parse(const std::string& s) {
  if (s == "degrevlex") return MonomialOrder::degrevlex;
  if (s == "deglex") return MonomialOrder::deglex;
  if (s == "lex") return MonomialOrder::lex;
  throw parse_error("unknown monomial order: " + s);
}

}  // namespace tgp
