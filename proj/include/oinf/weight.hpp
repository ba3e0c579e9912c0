#ifndef OINF_WEIGHT_HPP
#define OINF_WEIGHT_HPP

#include "oinf/numeric.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace oinf {

enum class Algebra { GL, SL };

std::string algebra_str(Algebra a);
Algebra algebra_parse(const std::string& s);

// Eventually per-residue-affine tail: the value at position k >= start is
// slope_r * k + intercept_r where r = k mod modulus.  Slopes are stored
// as rationals; classification requires the step within each class
// (slope * modulus) to be an integer and rejects richer tails.
struct TailClass {
  Rat slope;
  Rat intercept;
  bool operator==(const TailClass& o) const {
    return slope == o.slope && intercept == o.intercept;
  }
};

struct TailSpec {
  long start = 1;
  long modulus = 1;
  std::vector<TailClass> classes;  // size modulus, indexed by k mod modulus

  Rat value_at(long k) const;
  // Same function re-expressed with a modulus that new_mod divides... the
  // other way around: expand to a larger modulus divisible by the old one.
  TailSpec expanded(long new_modulus, long new_start) const;
};

// An h*-weight for gl_infinity / sl_infinity: finitely many explicit
// coordinates and an eventually-affine rational tail.  In SL mode two
// weights are equal when they differ by a globally constant sequence.
class Weight {
public:
  Weight() { tail_.classes.push_back({Rat(0), Rat(0)}); }
  Weight(Algebra alg, std::map<long, Rat> overrides, TailSpec tail);

  Algebra algebra() const { return algebra_; }
  const std::map<long, Rat>& overrides() const { return overrides_; }
  const TailSpec& tail() const { return tail_; }

  Rat at(long k) const;

  // Pointwise ring operations (same algebra required).
  Weight plus(const Weight& o) const;
  Weight minus(const Weight& o) const;
  Weight shifted_by_constant(const Rat& c) const;

  // Replace finitely many coordinates.
  Weight with_values(const std::map<long, Rat>& values) const;

  // Smallest representation: minimal tail period, overrides that agree
  // with the tail absorbed into it.  SL weights are additionally shifted
  // so the first tail class has intercept 0.
  Weight canonical() const;

  bool operator==(const Weight& o) const;  // canonical-form equality
  bool operator<(const Weight& o) const;   // total order on canonical forms

  std::string literal() const;  // weight-grammar text
  static Weight parse(Algebra alg, const std::string& text);

private:
  Algebra algebra_ = Algebra::GL;
  std::map<long, Rat> overrides_;
  TailSpec tail_;
};

bool weight_eq(const Weight& a, const Weight& b);

// Element of the type A root lattice: finitely many integer entries
// summing to zero (sum checked where it matters, not on construction so
// that intermediate differences can be represented).
struct RootDelta {
  std::map<long, Int> entries;  // no zero entries stored

  static RootDelta root(long i, long j);  // eps_i - eps_j
  Int at(long k) const;
  void add(long k, const Int& v);
  bool is_zero() const { return entries.empty(); }
  Int total() const;
  std::string str() const;
  bool operator==(const RootDelta& o) const { return entries == o.entries; }
  bool operator<(const RootDelta& o) const { return entries < o.entries; }
};

// Splitting Borel order on Z_{>0}.  OneSided is 1 < 2 < 3 < ...,
// TwoSided is ... < 5 < 3 < 1 < 2 < 4 < 6 < ..., Layered stacks monotone
// arithmetic-progression chains that partition Z_{>0}.
struct BorelChain {
  long start = 1;
  long step = 1;
  bool ascending = true;
};

class BorelOrder {
public:
  enum class Kind { OneSided, TwoSided, Layered };

  static BorelOrder one_sided() { return BorelOrder(Kind::OneSided, {}); }
  static BorelOrder two_sided() { return BorelOrder(Kind::TwoSided, {}); }
  static BorelOrder layered(std::vector<BorelChain> chains);
  // "one-sided" | "two-sided" | "layered:<start>:<step>:<asc|desc>,..."
  static BorelOrder parse(const std::string& s);

  Kind kind() const { return kind_; }
  const std::vector<BorelChain>& chains() const { return chains_; }

  bool less(long i, long j) const;  // i < j in the order
  // Chain index containing a position (0 for non-layered orders).
  int chain_of(long k) const;
  // Modulus whose residue classes refine the order structure (1, 2, or
  // lcm of the chain steps).
  long residue_modulus() const;

  std::string str() const;

private:
  BorelOrder(Kind k, std::vector<BorelChain> chains)
      : kind_(k), chains_(std::move(chains)) {}

  Kind kind_;
  std::vector<BorelChain> chains_;
};

enum class RhoDiagram { A1sided, A2sided, Binf, Cinf, Dinf, GLinf1sided };

// Global half sums of positive roots, coordinate sequences per diagram.
Weight rho(RhoDiagram diagram, Algebra alg = Algebra::SL);
Weight rho(const BorelOrder& order, Algebra alg);
RhoDiagram rho_diagram_parse(const std::string& s);

}  // namespace oinf

#endif
