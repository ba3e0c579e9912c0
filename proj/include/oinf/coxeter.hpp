#ifndef OINF_COXETER_HPP
#define OINF_COXETER_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

namespace oinf {

// Weyl groups of the infinite-rank root systems, modelled concretely:
// type A elements are finitary permutations of Z_{>0}, types B and D are
// finitary signed permutations (D with an even number of sign changes).
// Family B covers both the B-infinity and C-infinity Weyl groups, whose
// Coxeter presentations coincide.
//
// The one-sided/two-sided distinction for type A changes which
// transpositions are *simple*: simple reflections swap positions that are
// adjacent in the chosen total order on Z_{>0}, so Bruhat length and
// descent sets depend on the ambient order even though the underlying
// permutation does not.

enum class Family { A, B, D };
enum class Ambient { OneSidedInfinite, TwoSidedInfinite, Infinite };

struct CoxeterType {
  Family family = Family::A;
  Ambient ambient = Ambient::OneSidedInfinite;

  bool operator==(const CoxeterType& o) const {
    return family == o.family && ambient == o.ambient;
  }
  bool operator!=(const CoxeterType& o) const { return !(*this == o); }
  bool operator<(const CoxeterType& o) const {
    if (family != o.family) return family < o.family;
    return ambient < o.ambient;
  }

  std::string str() const;
  static CoxeterType parse(const std::string& s);

  static CoxeterType a() { return {Family::A, Ambient::OneSidedInfinite}; }
  static CoxeterType a2() { return {Family::A, Ambient::TwoSidedInfinite}; }
  static CoxeterType b() { return {Family::B, Ambient::Infinite}; }
  static CoxeterType d() { return {Family::D, Ambient::Infinite}; }
};

enum class Side { Left, Right };

class GroupElement {
public:
  GroupElement() = default;
  explicit GroupElement(CoxeterType t) : type_(t) {}

  // Images of 1..n.  For B/D a negative entry means a sign change.
  static GroupElement from_one_line(CoxeterType t, const std::vector<int>& images);

  // The simple reflection with the given index.  Type A one-sided: i>=1
  // swaps (i,i+1).  Type A two-sided: any integer i, swapping the
  // positions of order-rank i and i+1.  Types B/D: index 0 is the special
  // generator (sign flip at 1, resp. e1 <-> -e2), i>=1 swaps (i,i+1).
  static GroupElement simple(CoxeterType t, int index);

  CoxeterType type() const { return type_; }
  bool is_identity() const { return images_.empty(); }

  // Signed image of position k (k > 0).
  int apply(int k) const;

  const std::map<int, int>& images() const { return images_; }

  // Largest position not fixed (0 for the identity).
  int max_moved() const { return images_.empty() ? 0 : images_.rbegin()->first; }

  GroupElement operator*(const GroupElement& o) const;  // (x*y)(k) = x(y(k))
  GroupElement inverse() const;
  bool operator==(const GroupElement& o) const {
    return type_ == o.type_ && images_ == o.images_;
  }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  bool operator<(const GroupElement& o) const {
    if (type_ != o.type_) return type_ < o.type_;
    return images_ < o.images_;
  }

  std::vector<int> one_line(int n = 0) const;
  std::string str() const;  // e.g. "A:[3,1,2]", "B:[-2,1,3]"
  static GroupElement parse(const std::string& s);

private:
  void set_image(int k, int v);
  void normalize();  // drop fixed points, validate family invariants

  CoxeterType type_;
  std::map<int, int> images_;  // only non-fixed points
};

struct ReducedWord {
  std::vector<int> letters;  // simple-reflection indices
};

long length(const GroupElement& w);
std::set<int> descents(const GroupElement& w, Side side);
ReducedWord reduced_word(const GroupElement& w);
GroupElement product_of_word(CoxeterType t, const std::vector<int>& letters);

bool bruhat_leq(const GroupElement& x, const GroupElement& y);

// The full interval {z : x <= z <= y}; empty if x is not <= y.
std::vector<GroupElement> bruhat_interval(const GroupElement& x, const GroupElement& y);

// All z <= y (subword closure of one reduced word for y).
std::vector<GroupElement> bruhat_lower_order_ideal(const GroupElement& y);

bool is_reflection(const GroupElement& t);

// Strong exchange: for reduced `word` with product g and a reflection t
// with l(t g) < l(g), the unique 1-based index i with
// t g = word with letter i deleted.
int strong_exchange_index(const ReducedWord& word, CoxeterType t, const GroupElement& refl);

// Smallest rank m with x and y supported in the standard parabolic W_m,
// together with the longest element of W_m.
std::pair<int, GroupElement> parabolic_closure(const GroupElement& x, const GroupElement& y);

GroupElement longest_element(CoxeterType t, int rank);

}  // namespace oinf

#endif
