#ifndef OINF_CATEGORY_O_HPP
#define OINF_CATEGORY_O_HPP

#include "oinf/classify.hpp"
#include "oinf/hecke.hpp"
#include "oinf/weight.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace oinf {

// Category O-bar computations for gl/sl-infinity with the one-sided
// Dynkin Borel.  All operations below work against that order and its
// global half sum rho = (0,-1,-2,...).

// w . lambda = w(lambda + rho) - rho, left action (w applied to positions
// via w^{-1}).
Weight dot_act(const GroupElement& w, const Weight& lambda);

// Antidominant representative strongly linked to lambda, reached by
// reflecting in a minimal inversion root at each step; the chain lists
// the roots in application order.
std::pair<Weight, std::vector<RootDelta>> to_antidominant(const Weight& lambda);

// mu in W[lambda] . lambda
bool same_block(const Weight& lambda, const Weight& mu);

// Some(chain) iff mu is strongly linked to lambda (mu <= lambda through
// dot-reflections); the empty chain when they are equal.
std::optional<std::vector<RootDelta>> strongly_linked(const Weight& mu,
                                                      const Weight& lambda);

struct VermaStatus {
  bool simple = false;
  bool finite_length = false;
  std::optional<Weight> socle_highest_weight;
  std::optional<std::vector<RootDelta>> chain_to_antidominant;
};

VermaStatus verma_status(const Weight& lambda);

struct OrbitWindow {
  Weight base;                             // antidominant rep when it exists
  std::map<Weight, GroupElement> elements; // weight -> x with x . base = weight
  Weight lower, upper;
};

OrbitWindow orbit_window(const Weight& lambda, const Weight& lower, const Weight& upper);

// [M(lambda) : L(mu)] on a regular integral orbit via the parabolic
// Kazhdan-Lusztig evaluation P_{w0 x, w0 y}(1).
Int verma_multiplicity(const Weight& lambda, const Weight& mu, KLTable& table);

enum class BasisKind { Verma, Simple };

struct BasisSymbol {
  BasisKind kind = BasisKind::Verma;
  Weight weight;

  bool operator<(const BasisSymbol& o) const {
    if (kind != o.kind) return kind < o.kind;
    return weight < o.weight;
  }
};

using FormalSum = std::map<BasisSymbol, Int>;

FormalSum grothendieck_decompose(const BasisSymbol& symbol, BasisKind target,
                                 KLTable& table);

// dim of the mu weight space of M(lambda) or L(lambda).
Int weight_dim(const BasisSymbol& module, const Weight& mu, KLTable& table);

struct CharacterWindow {
  Weight lower, upper;
  std::map<Weight, Int> dims;
};

CharacterWindow character_window(const BasisSymbol& module, const Weight& lower,
                                 const Weight& upper, KLTable& table);

// Triangular multiplicity solve from a bounded character: descending from
// the top of the window, m(xi) = dim^xi - sum m(xi~) dim L(xi~)^xi.
std::map<Weight, Int> mults_from_character(
    const CharacterWindow& character, const std::map<Weight, CharacterWindow>& simples);

// nu |-> [M(nu) : L(mu)] over the orbit window [mu, cap]; simultaneously
// the co-Verma multiset of the truncated injective hull of L(mu) and the
// Verma multiset of its truncated projective cover (BGG reciprocity).
std::map<Weight, Int> trunc_reciprocity(const Weight& mu, const Weight& cap,
                                        KLTable& table);

struct HomologicalFlags {
  bool has_injective_hull = false;
  bool integrable_simple = false;
};

HomologicalFlags homological_flags(const Weight& lambda);

// The infinite-length filtration demo: nu_0 = (2,2,3,4,...) and
// nu_k = (k k+1) . nu_{k-1}.
std::vector<Weight> demo_verma_chain(int steps);

}  // namespace oinf

#endif
