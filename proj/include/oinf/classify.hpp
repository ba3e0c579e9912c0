#ifndef OINF_CLASSIFY_HPP
#define OINF_CLASSIFY_HPP

#include "oinf/weight.hpp"

#include <optional>
#include <vector>

namespace oinf {

struct Classification {
  bool integral = false;
  bool antidominant = false;
  bool almost_antidominant = false;
  bool dominant = false;
  bool almost_dominant = false;
  bool regular = false;
};

// Exact classification of lambda against the order's rho.  Violation
// pairs are analyzed per ordered pair of tail residue classes: each
// family (lambda+rho)(h_alpha) restricted to a class pair is an affine
// function f0 + alpha*s + beta*t on a quadrant grid with integer steps,
// so emptiness/finiteness of {f >= 1} and {f = 0} is decided by sign
// analysis of the step coefficients.  Rejects tails whose class steps
// are not integers (IndeterminateTail).
Classification classify(const Weight& lambda, const BorelOrder& order);

// Xi(lambda) = {alpha > 0 : (lambda+rho)(h_alpha) in Z_{>0}}, exactly.
// Throws InfiniteInversionSet when lambda is not almost antidominant.
std::vector<RootDelta> inversion_roots(const Weight& lambda, const BorelOrder& order);

// mu <= lambda iff lambda - mu is a nonnegative integer combination of
// order-positive roots: integer finite-support difference with total 0
// and all order-prefix sums >= 0.
bool order_leq(const Weight& mu, const Weight& lambda, const BorelOrder& order);

// lambda - mu as a root-lattice element (integer entries, finite support
// after SL constant normalization); nullopt when no such representative
// exists.  The total is not required to vanish here.
std::optional<RootDelta> as_difference(const Weight& mu, const Weight& lambda);

// True iff alpha = +-(eps_i - eps_j) has finitely many decompositions as
// a sum of order-positive roots.
bool finite_length_root(const RootDelta& alpha, const BorelOrder& order);

// Kostant partition function: the number of multisets of order-positive
// roots summing to delta.  Throws InfiniteInterval when the count is not
// finite (cross-chain flow in a layered order).
Int kostant_partition(const RootDelta& delta, const BorelOrder& order);

// All weights xi with mu <= xi <= lambda; empty when mu is not <= lambda.
// Throws WindowLimitExceeded beyond `limit` weights.
std::vector<Weight> enumerate_interval(const Weight& mu, const Weight& lambda,
                                       const BorelOrder& order, size_t limit);

// OINF_WINDOW_LIMIT env override, default 100000.
size_t window_limit();

}  // namespace oinf

#endif
