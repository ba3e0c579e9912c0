#include "oinf/classify.hpp"

#include "oinf/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace oinf {

namespace {

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

// A weight realized against an analysis modulus M: explicit values below
// E, per-residue affine classes beyond.
struct Realized {
  long E = 1;               // first tail position
  long M = 1;               // analysis modulus
  std::vector<Rat> slope;   // per residue r = k mod M
  std::vector<Rat> icpt;
  std::map<long, Rat> head; // positions 1..E-1

  static Realized of(const Weight& w, long modulus) {
    Realized r;
    const TailSpec& t = w.tail();
    r.E = t.start;
    r.M = lcm_long(t.modulus, modulus);
    r.slope.resize(static_cast<size_t>(r.M));
    r.icpt.resize(static_cast<size_t>(r.M));
    for (long res = 0; res < r.M; ++res) {
      const TailClass& c = t.classes[static_cast<size_t>(res % t.modulus)];
      r.slope[static_cast<size_t>(res)] = c.slope;
      r.icpt[static_cast<size_t>(res)] = c.intercept;
    }
    for (long k = 1; k < r.E; ++k) r.head[k] = w.at(k);
    return r;
  }

  Rat at(long k) const {
    auto it = head.find(k);
    if (it != head.end()) return it->second;
    size_t res = static_cast<size_t>(k % M);
    return slope[res] * k + icpt[res];
  }

  // step of class r: value difference between consecutive class members
  Rat step(long r) const { return slope[static_cast<size_t>(r)] * M; }

  long first_tail_position(long r) const {
    long k = E + ((r - E) % M + M) % M;
    return k;
  }
};

enum class RegimeKind { None, Finite, Infinite };

struct Regime {
  RegimeKind kind = RegimeKind::None;
  std::vector<std::pair<long, long>> pairs;  // natural (i, j), i < j
};

// {t >= 0 : f0 + beta*t >= 1}, with the (i, j) pairs reconstructed by the
// caller via j = j0 + t*M.
Regime positivity_1d(const Rat& f0, const Int& beta) {
  Regime out;
  if (!is_integer(f0)) return out;
  Int f = rat_num(f0);
  if (beta > 0) {
    out.kind = RegimeKind::Infinite;
    return out;
  }
  if (f < 1) return out;
  if (beta == 0) {
    out.kind = RegimeKind::Infinite;
    return out;
  }
  out.kind = RegimeKind::Finite;
  for (Int t = 0; f + beta * t >= 1; ++t)
    out.pairs.emplace_back(static_cast<long>(t), 0);  // (t, unused)
  return out;
}

// {(s,t) >= 0 : f0 + alpha*s + beta*t >= 1}
Regime positivity_2d(const Rat& f0, const Int& alpha, const Int& beta) {
  Regime out;
  if (!is_integer(f0)) return out;
  Int f = rat_num(f0);
  if (alpha > 0 || beta > 0) {
    out.kind = RegimeKind::Infinite;
    return out;
  }
  if (f < 1) return out;
  if (alpha == 0 || beta == 0) {
    out.kind = RegimeKind::Infinite;
    return out;
  }
  out.kind = RegimeKind::Finite;
  for (Int s = 0; f + alpha * s >= 1; ++s)
    for (Int t = 0; f + alpha * s + beta * t >= 1; ++t)
      out.pairs.emplace_back(static_cast<long>(s), static_cast<long>(t));
  return out;
}

// Does f0 + alpha*s + beta*t = 0 have a solution with s, t >= 0?
bool has_zero_2d(const Rat& f0, const Int& alpha, const Int& beta) {
  if (!is_integer(f0)) return false;
  Int f = rat_num(f0);
  if (alpha == 0 && beta == 0) return f == 0;
  if (alpha == 0) return f % beta == 0 && -f / beta >= 0;
  if (beta == 0) return f % alpha == 0 && -f / alpha >= 0;
  if ((alpha > 0) == (beta > 0)) {
    // bounded search: |alpha*s| <= |f|
    for (Int s = 0; abs(alpha * s) <= abs(f); ++s) {
      Int rem = -f - alpha * s;
      if (rem % beta == 0 && rem / beta >= 0) return true;
    }
    return false;
  }
  // opposite signs: alpha*s + beta*t is surjective onto gcd multiples
  Int g = gcd(abs(alpha), abs(beta));
  return f % g == 0;
}

bool has_zero_1d(const Rat& f0, const Int& beta) {
  if (!is_integer(f0)) return false;
  Int f = rat_num(f0);
  if (beta == 0) return f == 0;
  return f % beta == 0 && -f / beta >= 0;
}

// Sign of the order orientation: +1 when i precedes j in the order.
int sigma(const BorelOrder& order, long i, long j) { return order.less(i, j) ? 1 : -1; }

struct Analysis {
  Realized phi;
  long M;
  const BorelOrder& order;

  // A "violation scan" over all positive roots alpha, testing whether
  // sign * phi(h_alpha) takes values in Z_{>=1}.  sign=+1 detects
  // antidominance failures, sign=-1 dominance failures.
  // Returns finite pairs and whether any family is infinite.
  struct ScanResult {
    bool infinite = false;
    std::vector<std::pair<long, long>> pairs;  // (i, j) natural order i<j
  };

  ScanResult scan(int flavor_sign, bool collect) const {
    ScanResult res;
    // explicit x explicit
    for (auto it = phi.head.begin(); it != phi.head.end(); ++it)
      for (auto jt = std::next(it); jt != phi.head.end(); ++jt) {
        long i = it->first, j = jt->first;
        Rat f = Rat(flavor_sign * sigma(order, i, j)) * (it->second - jt->second);
        if (is_integer(f) && rat_num(f) >= 1) res.pairs.emplace_back(i, j);
      }
    // explicit x tail class
    for (const auto& [i, vi] : phi.head) {
      for (long r = 0; r < M; ++r) {
        long j0 = phi.first_tail_position(r);
        int sg = flavor_sign * sigma(order, i, j0);
        Rat f0 = Rat(sg) * (vi - phi.at(j0));
        Int beta = -Int(sg) * rat_num(phi.step(r));  // step is integer here
        Regime reg = positivity_1d(f0, beta);
        if (reg.kind == RegimeKind::Infinite) {
          res.infinite = true;
          if (!collect) return res;
        } else if (reg.kind == RegimeKind::Finite) {
          for (const auto& [t, unused] : reg.pairs) {
            (void)unused;
            res.pairs.emplace_back(i, j0 + t * M);
          }
        }
      }
    }
    // tail class (at i) x tail class (at j), i < j
    for (long r = 0; r < M; ++r) {
      long i0 = phi.first_tail_position(r);
      for (long rp = 0; rp < M; ++rp) {
        long gap0 = ((rp - r) % M + M) % M;
        if (gap0 == 0) gap0 = M;
        long j0 = i0 + gap0;
        int sg = flavor_sign * sigma(order, i0, j0);
        Rat a_r = phi.slope[static_cast<size_t>(((i0 % M) + M) % M)];
        Rat a_rp = phi.slope[static_cast<size_t>(((j0 % M) + M) % M)];
        Rat f0 = Rat(sg) * (phi.at(i0) - phi.at(j0));
        Int alpha = Int(sg) * rat_num((a_r - a_rp) * M);
        Int beta = -Int(sg) * rat_num(a_rp * M);
        Regime reg = positivity_2d(f0, alpha, beta);
        if (reg.kind == RegimeKind::Infinite) {
          res.infinite = true;
          if (!collect) return res;
        } else if (reg.kind == RegimeKind::Finite) {
          for (const auto& [s, t] : reg.pairs) {
            long i = i0 + s * M;
            long j = i + gap0 + t * M;
            res.pairs.emplace_back(i, j);
          }
        }
      }
    }
    return res;
  }

  // Any two equal coordinates (automatically integrally linked)?
  bool has_equal_pair() const {
    for (auto it = phi.head.begin(); it != phi.head.end(); ++it)
      for (auto jt = std::next(it); jt != phi.head.end(); ++jt)
        if (it->second == jt->second) return true;
    for (const auto& [i, vi] : phi.head)
      for (long r = 0; r < M; ++r) {
        long j0 = phi.first_tail_position(r);
        Rat f0 = vi - phi.at(j0);
        Int beta = -rat_num(phi.step(r));
        if (has_zero_1d(f0, beta)) return true;
      }
    for (long r = 0; r < M; ++r) {
      long i0 = phi.first_tail_position(r);
      for (long rp = 0; rp < M; ++rp) {
        long gap0 = ((rp - r) % M + M) % M;
        if (gap0 == 0) gap0 = M;
        long j0 = i0 + gap0;
        Rat a_r = phi.slope[static_cast<size_t>(((i0 % M) + M) % M)];
        Rat a_rp = phi.slope[static_cast<size_t>(((j0 % M) + M) % M)];
        Rat f0 = phi.at(i0) - phi.at(j0);
        Int alpha = rat_num((a_r - a_rp) * M);
        Int beta = -rat_num(a_rp * M);
        if (has_zero_2d(f0, alpha, beta)) return true;
      }
    }
    return false;
  }

  // Are all coordinate differences integers?
  bool all_linked() const {
    // one base difference per family decides it, steps being integral
    std::vector<Rat> samples;
    for (const auto& [i, vi] : phi.head) {
      (void)i;
      samples.push_back(vi);
    }
    for (long r = 0; r < M; ++r) samples.push_back(phi.at(phi.first_tail_position(r)));
    for (size_t a = 0; a + 1 < samples.size(); ++a)
      if (!is_integer(samples[a] - samples[a + 1])) return false;
    return true;
  }
};

Analysis make_analysis(const Weight& lambda, const BorelOrder& order, const Weight& rho_w) {
  Weight phi_w = lambda.plus(rho_w);
  long M = lcm_long(phi_w.tail().modulus, order.residue_modulus());
  Realized phi = Realized::of(phi_w, M);
  // integer-step precondition on the analysis classes
  for (long r = 0; r < phi.M; ++r)
    if (!is_integer(phi.step(r)))
      throw indeterminate_tail("tail class step " + rat_str(phi.step(r)) +
                               " is not an integer; classification undefined");
  return Analysis{phi, phi.M, order};
}

}  // namespace

Classification classify(const Weight& lambda, const BorelOrder& order) {
  Analysis an = make_analysis(lambda, order, rho(order, lambda.algebra()));
  Classification out;

  auto anti = an.scan(+1, false);
  auto domv = an.scan(-1, false);
  out.antidominant = !anti.infinite && anti.pairs.empty();
  out.almost_antidominant = !anti.infinite;
  out.dominant = !domv.infinite && domv.pairs.empty();
  out.almost_dominant = !domv.infinite;
  out.regular = !an.has_equal_pair();

  // integrality is a property of lambda itself
  Realized lam = Realized::of(lambda, an.M);
  Analysis lam_an{lam, an.M, order};
  out.integral = lam_an.all_linked();
  return out;
}

std::vector<RootDelta> inversion_roots(const Weight& lambda, const BorelOrder& order) {
  Analysis an = make_analysis(lambda, order, rho(order, lambda.algebra()));
  auto anti = an.scan(+1, true);
  if (anti.infinite)
    throw infinite_inversion_set("weight is not almost antidominant");
  std::vector<RootDelta> roots;
  roots.reserve(anti.pairs.size());
  for (const auto& [i, j] : anti.pairs)
    roots.push_back(order.less(i, j) ? RootDelta::root(i, j) : RootDelta::root(j, i));
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::optional<RootDelta> as_difference(const Weight& mu, const Weight& lambda) {
  if (mu.algebra() != lambda.algebra()) return std::nullopt;
  Weight d = lambda.minus(mu);
  const TailSpec& t = d.tail();
  // tail must be constant (zero for GL, any constant for SL)
  Rat c;
  for (long r = 0; r < t.modulus; ++r) {
    const TailClass& cls = t.classes[static_cast<size_t>(r)];
    if (cls.slope != 0) return std::nullopt;
    if (r == 0)
      c = cls.intercept;
    else if (cls.intercept != c)
      return std::nullopt;
  }
  if (mu.algebra() == Algebra::GL && c != 0) return std::nullopt;
  RootDelta out;
  for (long k = 1; k < t.start; ++k) {
    Rat v = d.at(k) - c;
    if (!is_integer(v)) return std::nullopt;
    out.add(k, rat_num(v));
  }
  return out;
}

bool order_leq(const Weight& mu, const Weight& lambda, const BorelOrder& order) {
  auto diff = as_difference(mu, lambda);
  if (!diff) return false;
  if (diff->total() != 0) return false;
  // prefix sums along the order must stay nonnegative
  std::vector<long> positions;
  for (const auto& [k, v] : diff->entries) {
    (void)v;
    positions.push_back(k);
  }
  std::sort(positions.begin(), positions.end(),
            [&](long a, long b) { return order.less(a, b); });
  Int s = 0;
  for (long p : positions) {
    s += diff->at(p);
    if (s < 0) return false;
  }
  return true;
}

bool finite_length_root(const RootDelta& alpha, const BorelOrder& order) {
  if (alpha.entries.size() != 2)
    throw DomainError("NotARoot", alpha.str() + " is not of the form eps_i - eps_j");
  auto it = alpha.entries.begin();
  auto [i, vi] = *it;
  auto [j, vj] = *std::next(it);
  if (!((vi == 1 && vj == -1) || (vi == -1 && vj == 1)))
    throw DomainError("NotARoot", alpha.str() + " is not of the form eps_i - eps_j");
  if (order.kind() != BorelOrder::Kind::Layered) return true;
  return order.chain_of(i) == order.chain_of(j);
}

namespace {

// Positive-root multiset count within one totally ordered finite window,
// positions relabelled 1..n ascending.  delta is given against those
// labels.  Plain memoized knapsack over the root list.
Int kostant_window(const std::vector<Int>& delta) {
  size_t n = delta.size();
  std::vector<std::pair<size_t, size_t>> roots;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) roots.emplace_back(i, j);
  std::map<std::pair<size_t, std::vector<Int>>, Int> memo;

  auto feasible = [](const std::vector<Int>& d) {
    Int s = 0;
    for (const Int& x : d) {
      s += x;
      if (s < 0) return false;
    }
    return s == 0;
  };

  std::function<Int(size_t, std::vector<Int>&)> count = [&](size_t idx,
                                                            std::vector<Int>& d) -> Int {
    bool zero = std::all_of(d.begin(), d.end(), [](const Int& x) { return x == 0; });
    if (zero) return Int(1);
    if (idx == roots.size()) return Int(0);
    auto key = std::make_pair(idx, d);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;
    Int total = 0;
    std::vector<Int> cur = d;
    while (true) {
      total += count(idx + 1, cur);
      cur[roots[idx].first] -= 1;
      cur[roots[idx].second] += 1;
      if (!feasible(cur)) break;
    }
    memo[key] = total;
    return total;
  };

  std::vector<Int> d = delta;
  if (!feasible(d)) return Int(0);
  return count(0, d);
}

// Order-window of a set of positions: everything order-between the
// minimum and maximum.  Throws when the window is infinite.
std::vector<long> order_window(const std::vector<long>& support, const BorelOrder& order,
                               size_t limit) {
  if (support.empty()) return {};
  long lo = support[0], hi = support[0];
  for (long p : support) {
    if (order.less(p, lo)) lo = p;
    if (order.less(hi, p)) hi = p;
  }
  std::vector<long> window;
  switch (order.kind()) {
    case BorelOrder::Kind::OneSided:
      for (long k = lo; k <= hi; ++k) window.push_back(k);
      break;
    case BorelOrder::Kind::TwoSided: {
      auto rank = [](long k) { return k % 2 == 0 ? k / 2 : (1 - k) / 2; };
      auto unrank = [](long r) { return r >= 1 ? 2 * r : 1 - 2 * r; };
      for (long r = rank(lo); r <= rank(hi); ++r) window.push_back(unrank(r));
      break;
    }
    case BorelOrder::Kind::Layered: {
      if (order.chain_of(lo) != order.chain_of(hi))
        throw infinite_interval("window spans layered chains");
      const BorelChain& c = order.chains()[static_cast<size_t>(order.chain_of(lo))];
      long a = std::min(lo, hi), b = std::max(lo, hi);
      for (long k = a; k <= b; k += c.step) window.push_back(k);
      break;
    }
  }
  if (window.size() > limit) throw window_limit("order window too large");
  std::sort(window.begin(), window.end(),
            [&](long a, long b) { return order.less(a, b); });
  return window;
}

}  // namespace

Int kostant_partition(const RootDelta& delta, const BorelOrder& order) {
  if (delta.is_zero()) return Int(1);
  if (delta.total() != 0) return Int(0);
  // feasibility along the order
  std::vector<long> support;
  for (const auto& [k, v] : delta.entries) {
    (void)v;
    support.push_back(k);
  }
  std::sort(support.begin(), support.end(),
            [&](long a, long b) { return order.less(a, b); });
  Int s = 0;
  for (long p : support) {
    s += delta.at(p);
    if (s < 0) return Int(0);
  }

  if (order.kind() == BorelOrder::Kind::Layered) {
    // decompositions never cross chains when every chain sum vanishes;
    // a nonzero chain sum forces a cross root, which can be split
    // through unboundedly many intermediate positions
    std::map<int, Int> chain_sum;
    for (const auto& [k, v] : delta.entries) chain_sum[order.chain_of(k)] += v;
    for (const auto& [c, sum] : chain_sum) {
      (void)c;
      if (sum != 0)
        throw infinite_interval("cross-chain flow: infinitely many decompositions");
    }
    Int product(1);
    for (const auto& [c, sum] : chain_sum) {
      (void)sum;
      RootDelta part;
      for (const auto& [k, v] : delta.entries)
        if (order.chain_of(k) == c) part.add(k, v);
      std::vector<long> sup;
      for (const auto& [k, v] : part.entries) {
        (void)v;
        sup.push_back(k);
      }
      auto window = order_window(sup, order, window_limit());
      std::vector<Int> d;
      d.reserve(window.size());
      for (long p : window) d.push_back(part.at(p));
      product *= kostant_window(d);
    }
    return product;
  }

  auto window = order_window(support, order, window_limit());
  std::vector<Int> d;
  d.reserve(window.size());
  for (long p : window) d.push_back(delta.at(p));
  return kostant_window(d);
}

std::vector<Weight> enumerate_interval(const Weight& mu, const Weight& lambda,
                                       const BorelOrder& order, size_t limit) {
  std::vector<Weight> out;
  if (!order_leq(mu, lambda, order)) return out;
  auto diff = as_difference(mu, lambda);
  RootDelta delta = *diff;  // lambda - mu
  if (delta.is_zero()) {
    out.push_back(lambda.canonical());
    return out;
  }
  std::vector<long> support;
  for (const auto& [k, v] : delta.entries) {
    (void)v;
    support.push_back(k);
  }
  auto window = order_window(support, order, limit);
  // prefix sums of delta along the window
  std::vector<Int> pre;
  Int s = 0;
  for (long p : window) {
    s += delta.at(p);
    pre.push_back(s);
  }
  // every eta with 0 <= prefix_k(eta) <= prefix_k(delta) gives one weight
  // xi = lambda - (delta - eta)
  std::vector<Int> sigma(window.size(), Int(0));
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k + 1 == window.size()) {
      // last prefix forced to 0; realize the weight
      std::map<long, Rat> edits;
      Int run = 0;
      for (size_t idx = 0; idx < window.size(); ++idx) {
        Int target = idx + 1 == window.size() ? Int(0) : sigma[idx];
        Int eta_k = target - run;
        run = target;
        Rat v = lambda.at(window[idx]) - Rat(delta.at(window[idx]) - eta_k);
        edits[window[idx]] = v;
      }
      out.push_back(lambda.with_values(edits));
      if (out.size() > limit) throw window_limit("interval larger than the window limit");
      return;
    }
    for (Int c = 0; c <= pre[k]; ++c) {
      sigma[k] = c;
      rec(k + 1);
    }
  };
  if (window.size() == 1) {
    out.push_back(lambda.canonical());
    return out;
  }
  rec(0);
  return out;
}

size_t window_limit() {
  if (const char* env = std::getenv("OINF_WINDOW_LIMIT")) {
    long v = std::atol(env);
    if (v > 0) return static_cast<size_t>(v);
  }
  return 100000;
}

}  // namespace oinf
