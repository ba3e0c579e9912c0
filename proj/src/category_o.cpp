#include "oinf/category_o.hpp"

#include "oinf/errors.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace oinf {

namespace {

const BorelOrder& one_sided() {
  static BorelOrder order = BorelOrder::one_sided();
  return order;
}

Weight rho_for(const Weight& w) { return rho(RhoDiagram::A1sided, w.algebra()); }

}  // namespace

Weight dot_act(const GroupElement& w, const Weight& lambda) {
  if (w.type().family != Family::A)
    throw type_mismatch("dot action needs a type A element");
  // phi values are taken pointwise so that SL representatives never mix
  // differently normalized constants
  Weight rho_w = rho_for(lambda);
  auto phi = [&](long k) { return lambda.at(k) + rho_w.at(k); };
  GroupElement winv = w.inverse();
  std::map<long, Rat> edits;
  for (const auto& [k, v] : w.images()) {
    (void)v;
    edits[k] = phi(winv.apply(k)) - rho_w.at(k);
  }
  return lambda.with_values(edits);
}

std::pair<Weight, std::vector<RootDelta>> to_antidominant(const Weight& lambda) {
  Classification cls = classify(lambda, one_sided());
  if (!cls.almost_antidominant)
    throw not_almost_antidominant("no antidominant representative below this weight");
  Weight rho_w = rho_for(lambda);
  Weight current = lambda;
  std::vector<RootDelta> chain;
  auto inv = inversion_roots(current, one_sided());
  size_t guard = inv.size() + 1;
  while (!inv.empty()) {
    if (chain.size() > guard * guard + 8)
      throw std::logic_error("to_antidominant failed to terminate");
    // minimal root of Xi: smallest height, then smallest start; a root of
    // minimal height cannot be a sum of two or more Xi elements
    const RootDelta* best = &inv.front();
    auto height = [](const RootDelta& r) {
      return r.entries.rbegin()->first - r.entries.begin()->first;
    };
    for (const auto& r : inv)
      if (height(r) < height(*best) ||
          (height(r) == height(*best) &&
           r.entries.begin()->first < best->entries.begin()->first))
        best = &r;
    long i = best->entries.begin()->first;
    long j = best->entries.rbegin()->first;
    auto phi = [&](long k) { return current.at(k) + rho_w.at(k); };
    std::map<long, Rat> edits;
    edits[i] = phi(j) - rho_w.at(i);
    edits[j] = phi(i) - rho_w.at(j);
    chain.push_back(*best);
    current = current.with_values(edits);
    inv = inversion_roots(current, one_sided());
  }
  return {current.canonical(), chain};
}

bool same_block(const Weight& lambda, const Weight& mu) {
  if (lambda.algebra() != mu.algebra()) return false;
  auto diff = as_difference(lambda, mu);  // mu - lambda, constant-normalized
  if (!diff || diff->total() != 0) return false;
  if (diff->is_zero()) return true;
  // deviation multisets of lambda+rho and mu+rho over the moved positions
  Weight phi = lambda.plus(rho_for(lambda));
  std::vector<Rat> before, after;
  for (const auto& [k, d] : diff->entries) {
    before.push_back(phi.at(k));
    after.push_back(phi.at(k) + Rat(d));
  }
  std::sort(before.begin(), before.end());
  std::sort(after.begin(), after.end());
  return before == after;
}

namespace {

// x with x . base = xi, matching equal phi values in position order.
GroupElement match_element(const Weight& base, const Weight& xi) {
  auto diff = as_difference(base, xi);
  if (!diff) throw std::logic_error("match_element: weights not in one block");
  Weight phi = base.plus(rho_for(base));
  std::vector<long> positions;
  for (const auto& [k, d] : diff->entries) {
    (void)d;
    positions.push_back(k);
  }
  std::map<int, int> images;
  std::vector<bool> used(positions.size(), false);
  for (long k : positions) {
    Rat target = phi.at(k) + Rat(diff->at(k));
    bool found = false;
    for (size_t s = 0; s < positions.size(); ++s) {
      if (used[s]) continue;
      if (phi.at(positions[s]) == target) {
        used[s] = true;
        images[static_cast<int>(positions[s])] = static_cast<int>(k);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("match_element: deviation multisets disagree");
  }
  GroupElement x(CoxeterType::a());
  std::vector<int> one_line;
  int n = 0;
  for (const auto& [p, q] : images) n = std::max({n, p, q});
  one_line.resize(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) one_line[static_cast<size_t>(k - 1)] = k;
  for (const auto& [p, q] : images) one_line[static_cast<size_t>(p - 1)] = q;
  return GroupElement::from_one_line(CoxeterType::a(), one_line);
}

}  // namespace

std::optional<std::vector<RootDelta>> strongly_linked(const Weight& mu,
                                                      const Weight& lambda) {
  if (weight_eq(mu, lambda)) return std::vector<RootDelta>{};
  if (!order_leq(mu, lambda, one_sided())) return std::nullopt;
  auto diff = as_difference(mu, lambda);  // lambda - mu
  std::vector<long> support;
  for (const auto& [k, v] : diff->entries) {
    (void)v;
    support.push_back(k);
  }
  long lo = *std::min_element(support.begin(), support.end());
  long hi = *std::max_element(support.begin(), support.end());

  Weight rho_w = rho_for(lambda);
  Weight mu_c = mu.canonical();

  // breadth-first search downward from lambda through dot-reflections
  // staying inside [mu, lambda]
  std::map<Weight, std::pair<Weight, RootDelta>> parent;
  std::deque<Weight> queue;
  Weight start = lambda.canonical();
  queue.push_back(start);
  std::map<Weight, bool> seen;
  seen[start] = true;
  while (!queue.empty()) {
    Weight cur = queue.front();
    queue.pop_front();
    if (weight_eq(cur, mu_c)) {
      std::vector<RootDelta> chain;
      Weight walk = cur;
      while (!weight_eq(walk, start)) {
        auto& [par, root] = parent.at(walk);
        chain.push_back(root);
        walk = par;
      }
      std::reverse(chain.begin(), chain.end());
      return chain;
    }
    auto phi = [&](long k) { return cur.at(k) + rho_w.at(k); };
    for (long i = lo; i <= hi; ++i)
      for (long j = i + 1; j <= hi; ++j) {
        Rat pairing = phi(i) - phi(j);
        if (!is_integer(pairing) || rat_num(pairing) < 1) continue;
        std::map<long, Rat> edits;
        edits[i] = phi(j) - rho_w.at(i);
        edits[j] = phi(i) - rho_w.at(j);
        Weight next = cur.with_values(edits).canonical();
        if (!order_leq(mu_c, next, one_sided())) continue;
        if (seen.count(next)) continue;
        seen[next] = true;
        parent.emplace(next, std::make_pair(cur, RootDelta::root(i, j)));
        queue.push_back(next);
      }
  }
  return std::nullopt;
}

VermaStatus verma_status(const Weight& lambda) {
  Classification cls = classify(lambda, one_sided());
  VermaStatus status;
  status.simple = cls.antidominant;
  status.finite_length = cls.almost_antidominant;
  if (cls.almost_antidominant) {
    auto [socle, chain] = to_antidominant(lambda);
    status.socle_highest_weight = socle;
    status.chain_to_antidominant = chain;
  }
  return status;
}

OrbitWindow orbit_window(const Weight& lambda, const Weight& lower, const Weight& upper) {
  OrbitWindow out;
  out.lower = lower.canonical();
  out.upper = upper.canonical();
  Classification cls = classify(lambda, one_sided());
  out.base = cls.almost_antidominant ? to_antidominant(lambda).first : lambda.canonical();
  for (const auto& xi : enumerate_interval(lower, upper, one_sided(), window_limit())) {
    if (!same_block(lambda, xi)) continue;
    out.elements.emplace(xi.canonical(), match_element(out.base, xi));
  }
  return out;
}

namespace {

// The KL evaluation is only valid when the standard parabolic S_m that
// the recursion runs in matches the block: the base's phi values on
// positions 1..m must be pairwise distinct (no stabilizer) and pairwise
// integrally linked (W[lambda] contains all of S_m).
void check_active_region(const Weight& base, int m) {
  Weight phi = base.plus(rho_for(base));
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      Rat d = phi.at(i) - phi.at(j);
      if (d == 0)
        throw singular_orbit("equal linked coordinates of lambda+rho at positions " +
                             std::to_string(i) + "," + std::to_string(j));
      if (!is_integer(d))
        throw singular_orbit(
            "positions " + std::to_string(i) + "," + std::to_string(j) +
            " are not integrally linked; the orbit is not a full parabolic orbit");
    }
}

struct OrbitPoint {
  Weight base;
  GroupElement x;
};

OrbitPoint locate(const Weight& lambda) {
  Classification cls = classify(lambda, one_sided());
  if (!cls.almost_antidominant)
    throw not_almost_antidominant("weight has no antidominant representative");
  Weight base = to_antidominant(lambda).first;
  GroupElement x = match_element(base, lambda);
  return {base, x};
}

}  // namespace

Int verma_multiplicity(const Weight& lambda, const Weight& mu, KLTable& table) {
  if (!order_leq(mu, lambda, one_sided())) return Int(0);
  if (!same_block(lambda, mu)) return Int(0);
  OrbitPoint at_lambda = locate(lambda);
  GroupElement y = match_element(at_lambda.base, mu);
  auto [m, w0] = parabolic_closure(at_lambda.x, y);
  check_active_region(at_lambda.base, m);
  LaurentV p = kl_poly(w0 * at_lambda.x, w0 * y, table);
  return p.eval_one();
}

FormalSum grothendieck_decompose(const BasisSymbol& symbol, BasisKind target,
                                 KLTable& table) {
  FormalSum out;
  if (symbol.kind == target) {
    out[BasisSymbol{target, symbol.weight.canonical()}] = Int(1);
    return out;
  }
  OrbitPoint at = locate(symbol.weight);
  auto [m_all, w0_all] = parabolic_closure(at.x, at.x);
  check_active_region(at.base, m_all);
  for (const auto& y : bruhat_lower_order_ideal(at.x)) {
    Weight wy = dot_act(y, at.base).canonical();
    auto [m, w0] = parabolic_closure(at.x, y);
    (void)m;
    Int coeff;
    if (symbol.kind == BasisKind::Verma) {
      // [M(x.base)] = sum P_{w0 x, w0 y}(1) [L(y.base)]
      coeff = kl_poly(w0 * at.x, w0 * y, table).eval_one();
    } else {
      // [L(x.base)] = sum (-1)^{l(x)-l(y)} P_{y,x}(1) [M(y.base)]
      Int p1 = kl_poly(y, at.x, table).eval_one();
      coeff = (length(at.x) - length(y)) % 2 == 0 ? p1 : -p1;
    }
    if (coeff == 0) continue;
    out[BasisSymbol{target, wy}] += coeff;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Int weight_dim(const BasisSymbol& module, const Weight& mu, KLTable& table) {
  if (module.kind == BasisKind::Verma) {
    auto diff = as_difference(mu, module.weight);  // lambda - mu
    if (!diff) return Int(0);
    return kostant_partition(*diff, one_sided());
  }
  // expand [L] into Verma classes and sum Kostant counts
  FormalSum expansion = grothendieck_decompose(module, BasisKind::Verma, table);
  Int total = 0;
  for (const auto& [sym, coeff] : expansion) {
    auto diff = as_difference(mu, sym.weight);
    if (!diff) continue;
    total += coeff * kostant_partition(*diff, one_sided());
  }
  if (total < 0) throw std::logic_error("negative simple weight-space dimension");
  return total;
}

CharacterWindow character_window(const BasisSymbol& module, const Weight& lower,
                                 const Weight& upper, KLTable& table) {
  if (!order_leq(lower, upper, one_sided()))
    throw unbounded_window("window lower bound is not <= upper bound");
  CharacterWindow out;
  out.lower = lower.canonical();
  out.upper = upper.canonical();
  for (const auto& xi : enumerate_interval(lower, upper, one_sided(), window_limit()))
    out.dims[xi.canonical()] = weight_dim(module, xi, table);
  return out;
}

std::map<Weight, Int> mults_from_character(
    const CharacterWindow& character, const std::map<Weight, CharacterWindow>& simples) {
  std::map<Weight, Int> mult;
  std::vector<Weight> todo;
  for (const auto& [w, d] : character.dims) {
    (void)d;
    todo.push_back(w);
  }
  std::vector<Weight> done;
  while (!todo.empty()) {
    // pick a maximal remaining weight
    size_t pick = todo.size();
    for (size_t i = 0; i < todo.size(); ++i) {
      bool maximal = true;
      for (size_t j = 0; j < todo.size() && maximal; ++j)
        if (i != j && order_leq(todo[i], todo[j], one_sided()) &&
            !weight_eq(todo[i], todo[j]))
          maximal = false;
      if (maximal) {
        pick = i;
        break;
      }
    }
    if (pick == todo.size())
      throw std::logic_error("mults_from_character: no maximal weight");
    Weight xi = todo[pick];
    todo.erase(todo.begin() + static_cast<long>(pick));
    Int residual = character.dims.at(xi);
    for (const Weight& prev : done) {
      Int m = mult.count(prev) ? mult.at(prev) : Int(0);
      if (m == 0) continue;
      auto sit = simples.find(prev);
      if (sit == simples.end())
        throw inconsistent_character("missing simple character for an active weight");
      auto dit = sit->second.dims.find(xi);
      Int dim = dit == sit->second.dims.end() ? Int(0) : dit->second;
      residual -= m * dim;
    }
    if (residual < 0)
      throw inconsistent_character("negative residual multiplicity");
    if (residual != 0) mult[xi] = residual;
    done.push_back(xi);
  }
  return mult;
}

std::map<Weight, Int> trunc_reciprocity(const Weight& mu, const Weight& cap,
                                        KLTable& table) {
  if (!order_leq(mu, cap, one_sided()))
    throw DomainError("NotComparable", "mu is not <= cap in the Borel order");
  OrbitWindow window = orbit_window(mu, mu, cap);
  std::map<Weight, Int> out;
  for (const auto& [nu, x] : window.elements) {
    (void)x;
    Int m = verma_multiplicity(nu, mu, table);
    if (m != 0) out[nu] = m;
  }
  return out;
}

HomologicalFlags homological_flags(const Weight& lambda) {
  Classification cls = classify(lambda, one_sided());
  HomologicalFlags flags;
  flags.has_injective_hull = cls.almost_dominant;
  flags.integrable_simple = cls.integral && cls.dominant;
  return flags;
}

std::vector<Weight> demo_verma_chain(int steps) {
  std::vector<Weight> chain;
  Weight nu = Weight::parse(Algebra::GL, "[2,2] ++ lin 1,0");
  chain.push_back(nu);
  for (int k = 1; k <= steps; ++k) {
    nu = dot_act(GroupElement::simple(CoxeterType::a(), k), nu);
    chain.push_back(nu);
  }
  return chain;
}

}  // namespace oinf
