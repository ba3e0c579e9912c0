#ifndef OINF_HECKE_HPP
#define OINF_HECKE_HPP

#include "oinf/coxeter.hpp"
#include "oinf/laurent.hpp"

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>

namespace oinf {

// Element of the Hecke algebra in the T-basis: a finite formal sum of
// T_g with LaurentV coefficients, all g of one Coxeter type.
class HeckeElt {
public:
  HeckeElt() = default;
  explicit HeckeElt(CoxeterType t) : type_(t) {}

  static HeckeElt t_basis(const GroupElement& g, LaurentV c = LaurentV::one());
  static HeckeElt unit(CoxeterType t) { return t_basis(GroupElement(t)); }

  CoxeterType type() const { return type_; }
  const std::map<GroupElement, LaurentV>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentV coeff(const GroupElement& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? LaurentV() : it->second;
  }

  void add_term(const GroupElement& g, const LaurentV& c);

  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  HeckeElt scaled(const LaurentV& c) const;

  bool operator==(const HeckeElt& o) const { return type_ == o.type_ && terms_ == o.terms_; }
  bool operator!=(const HeckeElt& o) const { return !(*this == o); }

  std::string str() const;

private:
  CoxeterType type_;
  std::map<GroupElement, LaurentV> terms_;
};

// Memo table for R- and KL-polynomials, shared across the library.
// Concurrent readers are fine; insertion takes the writer lock.  Keys are
// canonicalized pairs; values are pure-q LaurentV polynomials.
class KLTable {
public:
  using Key = std::pair<GroupElement, GroupElement>;

  std::optional<LaurentV> lookup_p(const Key& k) const;
  std::optional<LaurentV> lookup_r(const Key& k) const;
  void store_p(const Key& k, const LaurentV& v);
  void store_r(const Key& k, const LaurentV& v);

  // Line-oriented cache file: one record per line,
  //   P <type> <x> <y> : c0 c1 c2 ...
  //   R <type> <x> <y> : c0 c1 c2 ...
  // with ascending q-coefficients, records sorted lexicographically.
  void load(const std::string& path);
  void save(const std::string& path) const;

  size_t size() const;

private:
  mutable std::shared_mutex mutex_;
  std::map<Key, LaurentV> p_table_;
  std::map<Key, LaurentV> r_table_;
};

HeckeElt t_multiply(const HeckeElt& a, const HeckeElt& b);
HeckeElt t_inverse(const GroupElement& g);
HeckeElt bar(const HeckeElt& a);

// R_{x,y} via the descent recursion; 0 when x is not <= y.
LaurentV r_poly(const GroupElement& x, const GroupElement& y, KLTable& table);

// P_{x,y} via the right-handed descent recursion with the mu-correction
// sum; memoized after canonicalizing x within its descent coset.
LaurentV kl_poly(const GroupElement& x, const GroupElement& y, KLTable& table);

// Coefficient of q^{(l(x,y)-1)/2} in P_{x,y}; 0 when l(x,y) is even.
Int mu(const GroupElement& x, const GroupElement& y, KLTable& table);

// C_g = q^{-l(g)/2} sum_{x<=g} (-1)^{l(x,g)} q^{l(x,g)} bar(P_{x,g}) T_x
HeckeElt c_element(const GroupElement& g, KLTable& table);

// Independent KL route: solves q^{l(x,y)} P_{x,y}(1/q) = sum_{a in [x,y]}
// R_{x,a} P_{a,y} by descending induction over the interval, using the
// degree bound for uniqueness.  Shares only the R-polynomials with
// kl_poly, never its recursion.
LaurentV kl_oracle(const GroupElement& x, const GroupElement& y, KLTable& table);

}  // namespace oinf

#endif
