#ifndef OINF_LAURENT_HPP
#define OINF_LAURENT_HPP

#include "oinf/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace oinf {

// Integer Laurent polynomial in v = q^{1/2}.  A "pure q" polynomial has
// only even v-exponents; R- and KL-polynomials are stored that way, while
// coefficients of C-basis elements genuinely need half powers of q.
// No zero coefficient is ever stored.
class LaurentV {
public:
  LaurentV() = default;
  explicit LaurentV(Int constant) {
    if (constant != 0) coeff_[0] = std::move(constant);
  }
  static LaurentV monomial(Int c, long v_exp) {
    LaurentV p;
    if (c != 0) p.coeff_[v_exp] = std::move(c);
    return p;
  }
  static LaurentV one() { return LaurentV(Int(1)); }
  // q^k as a LaurentV (v-exponent 2k).
  static LaurentV q_power(long k) { return monomial(Int(1), 2 * k); }

  bool is_zero() const { return coeff_.empty(); }
  bool operator==(const LaurentV& o) const { return coeff_ == o.coeff_; }
  bool operator!=(const LaurentV& o) const { return !(*this == o); }

  const std::map<long, Int>& coeffs() const { return coeff_; }

  Int coeff(long v_exp) const {
    auto it = coeff_.find(v_exp);
    return it == coeff_.end() ? Int(0) : it->second;
  }

  long min_exp() const { return coeff_.empty() ? 0 : coeff_.begin()->first; }
  long max_exp() const { return coeff_.empty() ? 0 : coeff_.rbegin()->first; }

  bool pure_q() const {
    for (const auto& [e, c] : coeff_)
      if (e % 2 != 0) return false;
    return true;
  }

  LaurentV& operator+=(const LaurentV& o) {
    for (const auto& [e, c] : o.coeff_) add_term(e, c);
    return *this;
  }
  LaurentV& operator-=(const LaurentV& o) {
    for (const auto& [e, c] : o.coeff_) add_term(e, -c);
    return *this;
  }
  friend LaurentV operator+(LaurentV a, const LaurentV& b) { return a += b; }
  friend LaurentV operator-(LaurentV a, const LaurentV& b) { return a -= b; }

  friend LaurentV operator*(const LaurentV& a, const LaurentV& b) {
    LaurentV r;
    for (const auto& [ea, ca] : a.coeff_)
      for (const auto& [eb, cb] : b.coeff_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  LaurentV& operator*=(const LaurentV& o) { return *this = *this * o; }

  LaurentV operator-() const {
    LaurentV r;
    for (const auto& [e, c] : coeff_) r.coeff_[e] = -c;
    return r;
  }

  // v -> v^{-1}; on pure-q polynomials this is q -> q^{-1}.
  LaurentV bar() const {
    LaurentV r;
    for (const auto& [e, c] : coeff_) r.coeff_[-e] = c;
    return r;
  }

  LaurentV shifted(long v_exp) const {
    LaurentV r;
    for (const auto& [e, c] : coeff_) r.coeff_[e + v_exp] = c;
    return r;
  }

  // Value at q = 1 (equivalently v = 1).
  Int eval_one() const {
    Int s = 0;
    for (const auto& [e, c] : coeff_) s += c;
    return s;
  }

  void add_term(long v_exp, const Int& c) {
    if (c == 0) return;
    auto it = coeff_.find(v_exp);
    if (it == coeff_.end()) {
      coeff_[v_exp] = c;
    } else {
      it->second += c;
      if (it->second == 0) coeff_.erase(it);
    }
  }

  // Ascending q-coefficients c0 c1 ... of a pure-q polynomial with no
  // negative exponents (the cache file payload).
  std::vector<Int> q_coeff_list() const;
  static LaurentV from_q_coeff_list(const std::vector<Int>& cs);

  std::string str() const;  // human-readable, exponents in v

private:
  std::map<long, Int> coeff_;
};

}  // namespace oinf

#endif
