#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "tgp/error.hpp"

namespace tgp {

/// Exact rational scalar. Canonical form (denominator > 0, reduced) is
/// maintained by GMP once established; constructors below canonicalize.
using Rat = mpq_class;

inline Rat rat_ll(long long v) { return Rat(static_cast<long>(v)); }

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw precondition_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q".
inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational");
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      throw parse_error("bad rational: " + s);
  try {
    Rat r(s);
    if (r.get_den() == 0) throw parse_error("zero denominator: " + s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw parse_error("bad rational: " + s);
  }
}

/// "p/q", or just "p" for integers.
inline std::string rat_str(const Rat& x) { return x.get_str(); }

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline long long rat_to_ll(const Rat& x) {
  if (!is_integer(x) || !x.get_num().fits_slong_p())
    throw integrity_error("rational is not a machine integer: " + x.get_str());
  return x.get_num().get_si();
}

inline std::string rat_vec_str(const std::vector<Rat>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_str(v[i]);
  }
  return s;
}

}  // namespace tgp
