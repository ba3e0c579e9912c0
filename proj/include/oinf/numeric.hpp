#ifndef OINF_NUMERIC_HPP
#define OINF_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace oinf {

// All arithmetic in the library is exact.  Integers are arbitrary
// precision; rationals are always stored reduced with positive
// denominator (cpp_rational maintains both invariants).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// Floor division for rationals: greatest integer <= r.
inline Int rat_floor(const Rat& r) {
  Int n = rat_num(r), d = rat_den(r);
  Int q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

inline Int rat_ceil(const Rat& r) {
  Int n = rat_num(r), d = rat_den(r);
  Int q = n / d;
  if (n % d != 0 && n > 0) ++q;
  return q;
}

inline std::string rat_str(const Rat& r) {
  if (is_integer(r)) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

}  // namespace oinf

#endif
