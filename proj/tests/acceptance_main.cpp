// Acceptance suite: runs every criterion end to end and prints one
// PASS/FAIL line per criterion.  Exit status is the number of failures.

#include "oinf/category_o.hpp"
#include "oinf/classify.hpp"
#include "oinf/errors.hpp"
#include "oinf/hecke.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <queue>
#include <random>
#include <set>
#include <sstream>

using namespace oinf;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (exception: ") + e.what() + ")";
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label
            << " [" << ms << " ms]" << note << "\n";
  if (!ok) ++failures;
}

Weight gl(const std::string& s) { return Weight::parse(Algebra::GL, s); }
Weight sl(const std::string& s) { return Weight::parse(Algebra::SL, s); }

GroupElement perm(std::vector<int> ol) {
  return GroupElement::from_one_line(CoxeterType::a(), ol);
}

std::vector<GroupElement> enumerate_group(CoxeterType t, int rank) {
  std::set<GroupElement> seen;
  std::queue<GroupElement> queue;
  GroupElement e(t);
  seen.insert(e);
  queue.push(e);
  int lo = t.family == Family::A ? 1 : 0;
  while (!queue.empty()) {
    GroupElement w = queue.front();
    queue.pop();
    for (int i = lo; i < rank; ++i) {
      GroupElement ws = w * GroupElement::simple(t, i);
      if (seen.insert(ws).second) queue.push(ws);
    }
  }
  return {seen.begin(), seen.end()};
}

bool check(bool cond, const char* what) {
  if (!cond) std::cout << "  - failed: " << what << "\n";
  return cond;
}

const LaurentV kOne = LaurentV::one();
const LaurentV kQ = LaurentV::q_power(1);

bool r_identities(const GroupElement& x, const GroupElement& y, KLTable& table) {
  if (!bruhat_leq(x, y)) return r_poly(x, y, table).is_zero();
  long l = length(y) - length(x);
  LaurentV r = r_poly(x, y, table);
  bool ok = r.pure_q() && r.coeff(2 * l) == 1 && r.max_exp() == 2 * l;
  ok = ok && r.coeff(0) == (l % 2 == 0 ? Int(1) : Int(-1));
  if (x != y) ok = ok && r.eval_one() == 0;
  LaurentV flipped = r.bar().shifted(2 * l);
  ok = ok && flipped == (l % 2 == 0 ? r : -r);
  return ok;
}

bool kl_properties(const GroupElement& x, const GroupElement& y, KLTable& table) {
  if (!bruhat_leq(x, y)) return kl_poly(x, y, table).is_zero();
  LaurentV p = kl_poly(x, y, table);
  long l = length(y) - length(x);
  bool ok = p.coeff(0) == 1 && p.pure_q();
  if (l > 0) ok = ok && p.max_exp() <= l - 1;
  for (const auto& [e, c] : p.coeffs()) {
    (void)e;
    ok = ok && c > 0;
  }
  for (int i : descents(y, Side::Right)) {
    GroupElement xs = x * GroupElement::simple(y.type(), i);
    ok = ok && kl_poly(xs, y, table) == p;
  }
  return ok;
}

}  // namespace

int main() {
  KLTable table;

  // ------------------------------------------------------------------
  criterion(1, "sl3/gl3 golden composition series (6 factors, socle, length 6)", [&] {
    Weight lambda = gl("[1,0,-1] ++ lin 1,0");
    Weight socle = gl("[-3,0,3] ++ lin 1,0");
    VermaStatus status = verma_status(lambda);
    bool ok = check(status.finite_length, "finite length");
    ok &= check(status.socle_highest_weight &&
                    weight_eq(*status.socle_highest_weight, socle),
                "socle weight (-3,0,3,...)");
    OrbitWindow window = orbit_window(lambda, socle, lambda);
    ok &= check(window.elements.size() == 6, "six orbit weights");
    std::set<Weight> expected;
    for (const char* lit : {"[1,0,-1] ++ lin 1,0", "[-1,2,-1] ++ lin 1,0",
                            "[1,-2,1] ++ lin 1,0", "[-1,-2,3] ++ lin 1,0",
                            "[-3,2,1] ++ lin 1,0", "[-3,0,3] ++ lin 1,0"})
      expected.insert(gl(lit).canonical());
    std::set<Weight> got;
    Int total_length = 0;
    for (const auto& [mu, x] : window.elements) {
      (void)x;
      got.insert(mu);
      Int m = verma_multiplicity(lambda, mu, table);
      ok &= check(m == 1, "multiplicity 1");
      total_length += m;
    }
    ok &= check(got == expected, "factor list matches the worked example");
    ok &= check(total_length == 6, "length 6");
    return ok;
  });

  // ------------------------------------------------------------------
  criterion(2, "rho constructors match the half-sum formulas on positions 1-8", [&] {
    bool ok = true;
    auto seq = [&](const Weight& w, std::vector<Rat> expect) {
      for (size_t i = 0; i < expect.size(); ++i)
        if (w.at(static_cast<long>(i) + 1) != expect[i]) return false;
      return true;
    };
    auto ints = [](std::vector<long> v) {
      std::vector<Rat> out;
      for (long x : v) out.emplace_back(x);
      return out;
    };
    ok &= check(seq(rho(RhoDiagram::A1sided), ints({0, -1, -2, -3, -4, -5, -6, -7})),
                "b_1A");
    // eq:rho formula: -(-1)^k floor(k/2); the sequence display in the
    // source has odd/even swapped and fails the half-sum property
    ok &= check(seq(rho(RhoDiagram::A2sided), ints({0, -1, 1, -2, 2, -3, 3, -4})),
                "b_2A");
    std::vector<Rat> half;
    for (long k = 1; k <= 8; ++k) half.emplace_back(Rat(-(2 * k - 1), 2));
    ok &= check(seq(rho(RhoDiagram::Binf), half), "b_B");
    ok &= check(seq(rho(RhoDiagram::Cinf), ints({-1, -2, -3, -4, -5, -6, -7, -8})),
                "b_C");
    ok &= check(seq(rho(RhoDiagram::Dinf), ints({0, -1, -2, -3, -4, -5, -6, -7})),
                "b_D");
    ok &= check(seq(rho(RhoDiagram::GLinf1sided), ints({0, -1, -2, -3, -4, -5, -6, -7})),
                "gl 1-sided");
    BorelOrder b_si = BorelOrder::parse("layered:1:2:asc,2:2:desc");
    ok &= check(seq(rho(b_si, Algebra::SL), ints({-1, 1, -2, 2, -3, 3, -4, 4})),
                "rho~ for b_si");
    return ok;
  });

  // ------------------------------------------------------------------
  criterion(3, "classification suite: simplicity, reduction, infinite length, demo", [&] {
    bool ok = true;
    ok &= check(verma_status(gl("[] ++ lin 1,0")).simple, "(1,2,3,...) simple");
    Classification zero = classify(gl("[] ++ const 0"), BorelOrder::one_sided());
    ok &= check(zero.integral && zero.dominant && !zero.almost_antidominant,
                "(0,0,...) integral dominant, not almost antidominant");
    ok &= check(weight_eq(to_antidominant(gl("[1,0,-1,4] ++ lin 1,0")).first,
                          gl("[-3,0,3,4] ++ lin 1,0")),
                "(1,0,-1,4,5,...) reduces to (-3,0,3,4,5,...)");
    VermaStatus nu = verma_status(gl("[2,2] ++ lin 1,0"));
    ok &= check(!nu.finite_length && !nu.socle_highest_weight.has_value(),
                "(2,2,3,...) has infinite length and no socle");
    auto chain = demo_verma_chain(2);
    ok &= check(weight_eq(chain[1], gl("[1,3,3] ++ lin 1,0")), "demo weight (1,3,3,4,...)");
    ok &= check(weight_eq(chain[2], gl("[1,2,4,4] ++ lin 1,0")),
                "demo weight (1,2,4,4,...)");
    for (size_t i = 0; i + 1 < chain.size(); ++i)
      ok &= check(strongly_linked(chain[i + 1], chain[i]).has_value(),
                  "consecutive demo weights strongly linked");
    return ok;
  });

  // ------------------------------------------------------------------
  criterion(4, "Hecke/KL property suite over S4, B3 and S5, D4 samples", [&] {
    bool ok = true;
    auto s4 = enumerate_group(CoxeterType::a(), 4);
    auto b3 = enumerate_group(CoxeterType::b(), 3);
    for (const auto& elems : {s4, b3}) {
      for (const auto& x : elems)
        for (const auto& y : elems) {
          ok &= r_identities(x, y, table);
          ok &= kl_properties(x, y, table);
        }
      if (!ok) return check(false, "R/KL identities");
      // alternating-sum identity and the Bruhat Moebius function
      for (const auto& x : elems)
        for (const auto& y : elems) {
          if (!bruhat_leq(x, y)) continue;
          LaurentV total;
          for (const auto& w : bruhat_interval(x, y)) {
            LaurentV term = r_poly(x, w, table) * r_poly(w, y, table);
            total += (length(w) - length(x)) % 2 == 0 ? term : -term;
          }
          if (!(total == (x == y ? kOne : LaurentV()))) return check(false, "R sum");
        }
      // kl_poly == kl_oracle on every pair
      for (const auto& x : elems)
        for (const auto& y : elems)
          if (!(kl_poly(x, y, table) == kl_oracle(x, y, table)))
            return check(false, "dual-path equality");
      // bar invariance of C_g up to length 6
      for (const auto& g : elems) {
        if (length(g) > 6) continue;
        HeckeElt c = c_element(g, table);
        if (!(bar(c) == c)) return check(false, "bar-invariant C_g");
      }
    }
    // Moebius function of the Bruhat order on S4 is (-1)^{l(x,y)}
    for (const auto& x : s4)
      for (const auto& y : s4) {
        if (!bruhat_leq(x, y)) continue;
        std::map<GroupElement, Int> moebius;
        auto interval = bruhat_interval(x, y);
        std::sort(interval.begin(), interval.end(),
                  [](const GroupElement& a, const GroupElement& b) {
                    if (length(a) != length(b)) return length(a) < length(b);
                    return a < b;
                  });
        for (const auto& z : interval) {
          Int m = z == x ? Int(1) : Int(0);
          if (z != x)
            for (const auto& u : interval)
              if (!(u == z) && bruhat_leq(u, z) && moebius.count(u)) m -= moebius[u];
          moebius[z] = m;
        }
        Int expect = (length(y) - length(x)) % 2 == 0 ? Int(1) : Int(-1);
        if (!(moebius[y] == expect)) return check(false, "Moebius = (-1)^l");
      }
    // 500 sampled pairs of S5
    auto s5 = enumerate_group(CoxeterType::a(), 5);
    std::mt19937 rng(2024);
    for (int i = 0; i < 500; ++i) {
      const auto& x = s5[rng() % s5.size()];
      const auto& y = s5[rng() % s5.size()];
      ok &= r_identities(x, y, table);
      ok &= kl_properties(x, y, table);
      if (bruhat_leq(x, y) && length(y) - length(x) <= 7)
        ok &= kl_poly(x, y, table) == kl_oracle(x, y, table);
      if (!ok) return check(false, "S5 sample");
    }
    // a D4 sample of the same identities
    auto d4 = enumerate_group(CoxeterType::d(), 4);
    for (int i = 0; i < 120; ++i) {
      const auto& x = d4[rng() % d4.size()];
      const auto& y = d4[rng() % d4.size()];
      ok &= r_identities(x, y, table);
      ok &= kl_properties(x, y, table);
      if (bruhat_leq(x, y) && length(y) - length(x) <= 6)
        ok &= kl_poly(x, y, table) == kl_oracle(x, y, table);
      if (!ok) return check(false, "D4 sample");
    }
    return ok;
  });

  // ------------------------------------------------------------------
  criterion(5, "parabolic stabilization of P, R and multiplicities", [&] {
    bool ok = true;
    auto s4 = enumerate_group(CoxeterType::a(), 4);
    // embedding S4 into S5 by extending one-line forms with a fixed point
    for (const auto& x : s4)
      for (const auto& y : s4) {
        auto extend = [](const GroupElement& w) {
          auto ol = w.one_line(5);
          return GroupElement::from_one_line(CoxeterType::a(), ol);
        };
        KLTable fresh;
        if (!(kl_poly(x, y, table) == kl_poly(extend(x), extend(y), fresh)))
          return check(false, "P stable under embedding");
        if (!(r_poly(x, y, table) == r_poly(extend(x), extend(y), fresh)))
          return check(false, "R stable under embedding");
      }
    // w0-conjugated evaluations agree between ranks m and m+1
    GroupElement w0_4 = longest_element(CoxeterType::a(), 4);
    GroupElement w0_5 = longest_element(CoxeterType::a(), 5);
    Weight base = gl("[1,3,5,7] ++ lin 2,0");
    for (const auto& x : s4)
      for (const auto& y : s4) {
        if (!bruhat_leq(y, x)) continue;
        Int m4 = kl_poly(w0_4 * x, w0_4 * y, table).eval_one();
        Int m5 = kl_poly(w0_5 * x, w0_5 * y, table).eval_one();
        if (!(m4 == m5)) return check(false, "rank m vs m+1 multiplicity");
        Int direct = verma_multiplicity(dot_act(x, base), dot_act(y, base), table);
        if (!(direct == m4)) return check(false, "direct multiplicity agrees");
      }
    return ok;
  });

  // ------------------------------------------------------------------
  criterion(6, "character sum rule on gl3 and gl4 regular orbits", [&] {
    bool ok = true;
    for (const char* base_lit : {"[-3,0,3] ++ lin 1,0", "[1,3,5,7] ++ lin 2,0"}) {
      Weight base = gl(base_lit);
      int rank = base_lit[1] == '-' ? 3 : 4;
      GroupElement w0 = longest_element(CoxeterType::a(), rank);
      Weight top = dot_act(w0, base);
      OrbitWindow window = orbit_window(top, base, top);
      // Kostant dims of every Verma of the orbit at every window weight
      auto interval = enumerate_interval(base, top, BorelOrder::one_sided(), 100000);
      std::map<Weight, std::map<Weight, Int>> verma_dims;
      for (const auto& [nu, x] : window.elements) {
        (void)x;
        auto& row = verma_dims[nu];
        for (const auto& xi : interval) {
          auto diff = as_difference(xi, nu);
          row[xi.canonical()] =
              diff ? kostant_partition(*diff, BorelOrder::one_sided()) : Int(0);
        }
      }
      // simple characters through the alternating Verma expansion
      std::map<Weight, std::map<Weight, Int>> simple_dims;
      for (const auto& [mu, x] : window.elements) {
        (void)x;
        FormalSum expansion = grothendieck_decompose(BasisSymbol{BasisKind::Simple, mu},
                                                     BasisKind::Verma, table);
        auto& row = simple_dims[mu];
        for (const auto& xi : interval) {
          Int d = 0;
          for (const auto& [sym, c] : expansion)
            d += c * verma_dims.at(sym.weight.canonical()).at(xi.canonical());
          if (d < 0) return check(false, "nonnegative simple dimension");
          row[xi.canonical()] = d;
        }
      }
      // sum rule for every Verma in the orbit
      for (const auto& [nu, x] : window.elements) {
        (void)x;
        for (const auto& xi : interval) {
          Int lhs = verma_dims.at(nu).at(xi.canonical());
          Int rhs = 0;
          for (const auto& [mu, y] : window.elements) {
            (void)y;
            Int mult = verma_multiplicity(nu, mu, table);
            rhs += mult * simple_dims.at(mu).at(xi.canonical());
          }
          if (!(lhs == rhs)) return check(false, "dim M = sum mult * dim L");
        }
      }
      ok &= check(window.elements.size() == (rank == 3 ? 6u : 24u), "full orbit");
    }
    return ok;
  });

  // ------------------------------------------------------------------
  criterion(7, "BGG reciprocity: tilting example and gl3/gl4 columns", [&] {
    bool ok = true;
    // the tilting-module pair 0 -> V(mu) -> I(mu) -> V(lambda) -> 0,
    // realized with an affine tail
    Weight cap = sl("[0,0] ++ lin 2,1/4");
    Weight mu = dot_act(perm({2, 1}), cap);
    auto tilting = trunc_reciprocity(mu, cap, table);
    ok &= check(tilting.size() == 2, "two co-Verma factors");
    ok &= check(tilting.count(mu.canonical()) == 1 && tilting.count(cap.canonical()) == 1,
                "factors are V(mu) and V(lambda)");
    for (const auto& [nu, m] : tilting) {
      (void)nu;
      ok &= check(m == 1, "each factor once");
    }
    // gl3 and gl4 columns against independently computed multiplicities
    for (const char* base_lit : {"[-3,0,3] ++ lin 1,0", "[1,3,5,7] ++ lin 2,0"}) {
      Weight base = gl(base_lit);
      int rank = base_lit[1] == '-' ? 3 : 4;
      Weight top = dot_act(longest_element(CoxeterType::a(), rank), base);
      auto column = trunc_reciprocity(base, top, table);
      OrbitWindow window = orbit_window(top, base, top);
      ok &= check(column.size() == window.elements.size(), "column covers the orbit");
      for (const auto& [nu, x] : window.elements) {
        (void)x;
        Int direct = verma_multiplicity(nu, base, table);
        ok &= check(column.count(nu) == 1 && column.at(nu) == direct,
                    "column equals [M(nu):L(mu)]");
      }
    }
    // cross-check the gl3 column through the character solve
    {
      Weight base = gl("[-3,0,3] ++ lin 1,0");
      Weight top = gl("[1,0,-1] ++ lin 1,0");
      OrbitWindow window = orbit_window(top, base, top);
      std::map<Weight, CharacterWindow> simples;
      for (const auto& [m, x] : window.elements) {
        (void)x;
        simples[m] = character_window(BasisSymbol{BasisKind::Simple, m}, base, top, table);
      }
      for (const auto& [nu, x] : window.elements) {
        (void)x;
        CharacterWindow ch =
            character_window(BasisSymbol{BasisKind::Verma, nu}, base, top, table);
        auto solved = mults_from_character(ch, simples);
        Int col = solved.count(base.canonical()) ? solved.at(base.canonical()) : Int(0);
        ok &= check(col == verma_multiplicity(nu, base, table),
                    "character solve agrees with the KL column");
      }
    }
    return ok;
  });

  // ------------------------------------------------------------------
  criterion(8, "injective-hull criterion", [&] {
    bool ok = true;
    ok &= check(!homological_flags(gl("[] ++ lin 2,-2")).has_injective_hull,
                "(0,2,4,...) has no injective hull");
    HomologicalFlags zero = homological_flags(gl("[] ++ const 0"));
    ok &= check(zero.has_injective_hull, "(0,0,...) has one");
    ok &= check(zero.integrable_simple, "(0,0,...) is integral dominant");
    ok &= check(homological_flags(gl("[] ++ lin 1,0")).has_injective_hull,
                "(1,2,3,...) has one");
    return ok;
  });

  // ------------------------------------------------------------------
  criterion(9, "oracle equivalences: Bruhat, reduction, inverse matrices", [&] {
    bool ok = true;
    // subword brute force
    for (auto [type, rank] : std::vector<std::pair<CoxeterType, int>>{
             {CoxeterType::a(), 4}, {CoxeterType::b(), 3}}) {
      auto elems = enumerate_group(type, rank);
      for (const auto& y : elems) {
        auto word = reduced_word(y).letters;
        std::set<GroupElement> ideal;
        for (size_t mask = 0; mask < (size_t(1) << word.size()); ++mask) {
          GroupElement p(type);
          for (size_t i = 0; i < word.size(); ++i)
            if (mask & (size_t(1) << i)) p = p * GroupElement::simple(type, word[i]);
          ideal.insert(p);
        }
        for (const auto& x : elems)
          if (bruhat_leq(x, y) != (ideal.count(x) > 0))
            return check(false, "bruhat_leq vs subword enumeration");
      }
    }
    // reduction vs per-class sort oracle on 1000 random almost
    // antidominant weights
    std::mt19937 rng(515);
    std::uniform_int_distribution<int> coord(-5, 5);
    Weight rho_w = rho(RhoDiagram::A1sided, Algebra::GL);
    for (int trial = 0; trial < 1000; ++trial) {
      std::map<long, Rat> ov;
      for (long k = 1; k <= 6; ++k)
        ov[k] = Rat(coord(rng)) + (rng() % 4 == 0 ? Rat(1, 2) : Rat(0));
      TailSpec t;
      t.start = 7;
      t.modulus = 1;
      t.classes = {{Rat(1), Rat(6)}};
      Weight lambda(Algebra::GL, ov, t);
      auto [xi, chain] = to_antidominant(lambda);
      (void)chain;
      // per-linkage-class sort of the displaced coordinates of lambda+rho
      auto roots = inversion_roots(lambda, BorelOrder::one_sided());
      std::set<long> displaced;
      for (const auto& r : roots)
        for (const auto& [k, v] : r.entries) {
          (void)v;
          displaced.insert(k);
        }
      auto phi = [&](long k) { return lambda.at(k) + rho_w.at(k); };
      std::vector<long> todo(displaced.begin(), displaced.end());
      std::map<long, Rat> edits;
      while (!todo.empty()) {
        long seed = todo.front();
        std::vector<long> cls, rest;
        for (long p : todo)
          (is_integer(phi(p) - phi(seed)) ? cls : rest).push_back(p);
        todo = rest;
        std::vector<Rat> values;
        for (long p : cls) values.push_back(phi(p));
        std::sort(values.begin(), values.end());
        for (size_t i = 0; i < cls.size(); ++i)
          edits[cls[i]] = values[i] - rho_w.at(cls[i]);
      }
      if (!weight_eq(xi, lambda.with_values(edits)))
        return check(false, "to_antidominant equals the sort oracle");
    }
    // decompose direction matrices multiply to the identity on the gl4 orbit
    {
      Weight base = gl("[1,3,5,7] ++ lin 2,0");
      Weight top = dot_act(longest_element(CoxeterType::a(), 4), base);
      OrbitWindow window = orbit_window(top, base, top);
      for (const auto& [lam, x] : window.elements) {
        (void)x;
        FormalSum m_in_l = grothendieck_decompose(BasisSymbol{BasisKind::Verma, lam},
                                                  BasisKind::Simple, table);
        FormalSum composite;
        for (const auto& [sym, c] : m_in_l)
          for (const auto& [sym2, c2] :
               grothendieck_decompose(sym, BasisKind::Verma, table))
            composite[sym2] += c * c2;
        for (auto it = composite.begin(); it != composite.end();)
          it = it->second == 0 ? composite.erase(it) : std::next(it);
        if (composite.size() != 1 || !(composite.begin()->second == 1) ||
            !weight_eq(composite.begin()->first.weight, lam))
          return check(false, "direction matrices are mutually inverse");
      }
    }
    return ok;
  });

  // ------------------------------------------------------------------
  criterion(10, "nontrivial KL value 1+q and the gl4 multiplicity 2", [&] {
    bool ok = true;
    GroupElement x = perm({1, 3, 2, 4});
    GroupElement y = perm({3, 4, 1, 2});
    LaurentV expected = kOne + kQ;
    ok &= check(kl_poly(x, y, table) == expected, "recursion gives 1+q");
    KLTable fresh;
    ok &= check(kl_oracle(x, y, fresh) == expected, "oracle gives 1+q");
    Weight base = gl("[1,3,5,7] ++ lin 2,0");
    GroupElement w0 = longest_element(CoxeterType::a(), 4);
    Weight lambda = dot_act(w0 * x, base);
    Weight mu = dot_act(w0 * y, base);
    ok &= check(verma_multiplicity(lambda, mu, table) == 2, "multiplicity 2");
    return ok;
  });

  std::cout << (failures == 0 ? "all criteria passed" : "SOME CRITERIA FAILED") << "\n";
  return failures;
}
