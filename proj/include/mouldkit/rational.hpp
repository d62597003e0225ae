#ifndef MOULDKIT_RATIONAL_HPP
#define MOULDKIT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "mouldkit/error.hpp"

namespace mouldkit {

// Exact arbitrary-precision rational, always stored reduced with a
// positive denominator (the backend canonicalizes on every operation).
using bigint = boost::multiprecision::cpp_int;
using rat = boost::multiprecision::cpp_rational;

inline bigint rat_num(const rat& q) { return boost::multiprecision::numerator(q); }
inline bigint rat_den(const rat& q) { return boost::multiprecision::denominator(q); }

inline rat make_rat(long long num, long long den) {
  if (den == 0) throw error(errc::zero_denominator, "rational with zero denominator");
  return rat(bigint(num), bigint(den));
}

inline rat rat_abs(const rat& q) { return q < 0 ? rat(-q) : q; }

inline int rat_sign(const rat& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }

inline rat rat_pow(const rat& q, unsigned e) {
  rat r(1);
  rat base = q;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// Reduce into [0, 1): the epsilon arithmetic of Q/Z letters.
inline rat mod_one(const rat& q) {
  bigint n = rat_num(q), d = rat_den(q);
  bigint m = n % d;
  if (m < 0) m += d;
  return rat(m, d);
}

inline std::string rat_to_string(const rat& q) {
  std::string s = rat_num(q).str();
  if (rat_den(q) != 1) s += "/" + rat_den(q).str();
  return s;
}

inline double rat_to_double(const rat& q) { return q.convert_to<double>(); }

}  // namespace mouldkit

#endif
