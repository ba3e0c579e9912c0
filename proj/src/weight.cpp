#include "oinf/weight.hpp"

#include "oinf/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace oinf {

std::string algebra_str(Algebra a) { return a == Algebra::GL ? "gl" : "sl"; }

Algebra algebra_parse(const std::string& s) {
  if (s == "gl" || s == "GL") return Algebra::GL;
  if (s == "sl" || s == "SL") return Algebra::SL;
  throw std::invalid_argument("unknown algebra: " + s);
}

Rat TailSpec::value_at(long k) const {
  const TailClass& c = classes[static_cast<size_t>(((k % modulus) + modulus) % modulus)];
  return c.slope * k + c.intercept;
}

TailSpec TailSpec::expanded(long new_modulus, long new_start) const {
  if (new_modulus % modulus != 0 || new_start < start)
    throw std::logic_error("TailSpec::expanded: invalid target");
  TailSpec out;
  out.start = new_start;
  out.modulus = new_modulus;
  out.classes.resize(static_cast<size_t>(new_modulus));
  for (long r = 0; r < new_modulus; ++r)
    out.classes[static_cast<size_t>(r)] = classes[static_cast<size_t>(r % modulus)];
  return out;
}

Weight::Weight(Algebra alg, std::map<long, Rat> overrides, TailSpec tail)
    : algebra_(alg), overrides_(std::move(overrides)), tail_(std::move(tail)) {
  if (tail_.modulus < 1 || tail_.start < 1 ||
      tail_.classes.size() != static_cast<size_t>(tail_.modulus))
    throw std::invalid_argument("malformed tail spec");
  for (const auto& [k, v] : overrides_) {
    (void)v;
    if (k < 1) throw std::invalid_argument("weight positions start at 1");
    if (k >= tail_.start)
      throw std::invalid_argument("override beyond tail start");
  }
}

Rat Weight::at(long k) const {
  auto it = overrides_.find(k);
  if (it != overrides_.end()) return it->second;
  if (k >= tail_.start) return tail_.value_at(k);
  return Rat(0);  // positions below start with no override default to 0
}

namespace {

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

}  // namespace

Weight Weight::plus(const Weight& o) const {
  if (algebra_ != o.algebra_) throw type_mismatch("adding weights of different algebras");
  long m = lcm_long(tail_.modulus, o.tail_.modulus);
  long s = std::max(tail_.start, o.tail_.start);
  TailSpec a = tail_.expanded(m, s), b = o.tail_.expanded(m, s);
  TailSpec t;
  t.start = s;
  t.modulus = m;
  t.classes.resize(static_cast<size_t>(m));
  for (long r = 0; r < m; ++r)
    t.classes[static_cast<size_t>(r)] = {
        a.classes[static_cast<size_t>(r)].slope + b.classes[static_cast<size_t>(r)].slope,
        a.classes[static_cast<size_t>(r)].intercept +
            b.classes[static_cast<size_t>(r)].intercept};
  std::map<long, Rat> ov;
  for (long k = 1; k < s; ++k) ov[k] = at(k) + o.at(k);
  return Weight(algebra_, std::move(ov), std::move(t)).canonical();
}

Weight Weight::minus(const Weight& o) const {
  if (algebra_ != o.algebra_) throw type_mismatch("subtracting weights of different algebras");
  long m = lcm_long(tail_.modulus, o.tail_.modulus);
  long s = std::max(tail_.start, o.tail_.start);
  TailSpec a = tail_.expanded(m, s), b = o.tail_.expanded(m, s);
  TailSpec t;
  t.start = s;
  t.modulus = m;
  t.classes.resize(static_cast<size_t>(m));
  for (long r = 0; r < m; ++r)
    t.classes[static_cast<size_t>(r)] = {
        a.classes[static_cast<size_t>(r)].slope - b.classes[static_cast<size_t>(r)].slope,
        a.classes[static_cast<size_t>(r)].intercept -
            b.classes[static_cast<size_t>(r)].intercept};
  std::map<long, Rat> ov;
  for (long k = 1; k < s; ++k) ov[k] = at(k) - o.at(k);
  return Weight(algebra_, std::move(ov), std::move(t)).canonical();
}

Weight Weight::shifted_by_constant(const Rat& c) const {
  TailSpec t = tail_;
  for (auto& cls : t.classes) cls.intercept += c;
  std::map<long, Rat> ov;
  for (long k = 1; k < t.start; ++k) ov[k] = at(k) + c;
  return Weight(algebra_, std::move(ov), std::move(t));
}

Weight Weight::with_values(const std::map<long, Rat>& values) const {
  long s = tail_.start;
  for (const auto& [k, v] : values) {
    (void)v;
    if (k < 1) throw std::invalid_argument("weight positions start at 1");
    s = std::max(s, k + 1);
  }
  TailSpec t = tail_.expanded(tail_.modulus, tail_.start);
  t.start = s;
  std::map<long, Rat> ov;
  for (long k = 1; k < s; ++k) ov[k] = at(k);
  for (const auto& [k, v] : values) ov[k] = v;
  return Weight(algebra_, std::move(ov), std::move(t)).canonical();
}

namespace {

Weight trim(Algebra alg, const std::map<long, Rat>& overrides, const TailSpec& tail) {
  // minimal tail period
  long m = tail.modulus;
  long best = m;
  for (long d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    bool periodic = true;
    for (long r = 0; r < m && periodic; ++r)
      periodic = tail.classes[static_cast<size_t>(r)] ==
                 tail.classes[static_cast<size_t>(r % d)];
    if (periodic) {
      best = d;
      break;
    }
  }
  TailSpec t;
  t.modulus = best;
  t.start = tail.start;
  t.classes.assign(tail.classes.begin(), tail.classes.begin() + best);
  // keep the head dense: every position below start is explicit (missing
  // entries read as 0), so later coordinate-wise edits see all of them
  std::map<long, Rat> ov;
  for (long k = 1; k < t.start; ++k) {
    auto it = overrides.find(k);
    ov[k] = it == overrides.end() ? Rat(0) : it->second;
  }
  // absorb head entries that agree with the tail, shrinking the start
  while (t.start > 1) {
    long k = t.start - 1;
    auto it = ov.find(k);
    if (it != ov.end() && it->second == t.value_at(k)) {
      ov.erase(it);
      --t.start;
    } else {
      break;
    }
  }
  return Weight(alg, std::move(ov), std::move(t));
}

}  // namespace

Weight Weight::canonical() const {
  Weight w = trim(algebra_, overrides_, tail_);
  if (algebra_ == Algebra::SL) {
    // SL weights are classes modulo constant sequences; fix the
    // representative with intercept 0 in the tail class of `start`.
    Rat icpt = w.tail_.classes[static_cast<size_t>(w.tail_.start % w.tail_.modulus)]
                   .intercept;
    if (icpt != 0) {
      Weight shifted = w.shifted_by_constant(-icpt);
      return trim(shifted.algebra_, shifted.overrides_, shifted.tail_);
    }
  }
  return w;
}

bool weight_eq(const Weight& a, const Weight& b) {
  if (a.algebra() != b.algebra()) return false;
  long m = lcm_long(a.tail().modulus, b.tail().modulus);
  long s = std::max(a.tail().start, b.tail().start);
  if (a.algebra() == Algebra::GL) {
    for (long k = 1; k < s + 2 * m; ++k)
      if (a.at(k) != b.at(k)) return false;
    return true;
  }
  // SL: difference must be one global constant; two samples per residue
  // class pin the affine difference down to that constant.
  Rat c = a.at(1) - b.at(1);
  for (long k = 1; k < s + 2 * m; ++k)
    if (a.at(k) - b.at(k) != c) return false;
  return true;
}

bool Weight::operator==(const Weight& o) const { return weight_eq(*this, o); }

bool Weight::operator<(const Weight& o) const {
  Weight a = canonical(), b = o.canonical();
  if (a.algebra_ != b.algebra_) return a.algebra_ < b.algebra_;
  long m = lcm_long(a.tail_.modulus, b.tail_.modulus);
  long s = std::max(a.tail_.start, b.tail_.start);
  for (long k = 1; k < s + 2 * m; ++k) {
    Rat x = a.at(k), y = b.at(k);
    if (x != y) return x < y;
  }
  return false;
}

// ---------------------------------------------------------------------
// weight literal grammar

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool eat_word(const std::string& w) {
    skip_ws();
    if (s.compare(i, w.size(), w) == 0) {
      i += w.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("weight literal: " + msg + " at offset " +
                                std::to_string(i) + " in \"" + s + "\"");
  }
  Rat rational() {
    skip_ws();
    size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    size_t dstart = j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == dstart) fail("expected a number");
    Int num(s.substr(i, j - i));
    i = j;
    if (i < s.size() && s[i] == '/') {
      ++i;
      size_t k = i;
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
      if (k == i) fail("expected a denominator");
      Int den(s.substr(i, k - i));
      i = k;
      if (den == 0) fail("zero denominator");
      return Rat(num, den);
    }
    return Rat(num);
  }
  long integer() {
    Rat r = rational();
    if (!is_integer(r)) fail("expected an integer");
    return static_cast<long>(rat_num(r));
  }
  bool at_end() {
    skip_ws();
    return i == s.size();
  }
};

}  // namespace

Weight Weight::parse(Algebra alg, const std::string& text) {
  Cursor c{text};
  c.expect('[');
  std::vector<Rat> head;
  if (!c.eat(']')) {
    head.push_back(c.rational());
    while (c.eat(',')) head.push_back(c.rational());
    c.expect(']');
  }
  if (!(c.eat('+') && c.eat('+'))) c.fail("expected '++'");
  TailSpec tail;
  tail.start = static_cast<long>(head.size()) + 1;
  if (c.eat_word("const")) {
    tail.modulus = 1;
    tail.classes = {{Rat(0), c.rational()}};
  } else if (c.eat_word("lin")) {
    Rat slope = c.rational();
    c.expect(',');
    Rat icpt = c.rational();
    tail.modulus = 1;
    tail.classes = {{slope, icpt}};
  } else if (c.eat_word("mod")) {
    long m = c.integer();
    if (m < 1) c.fail("modulus must be positive");
    c.expect(':');
    tail.modulus = m;
    tail.classes.resize(static_cast<size_t>(m));
    for (long r = 0; r < m; ++r) {
      if (r > 0) c.expect(';');
      c.expect('(');
      Rat slope = c.rational();
      c.expect(',');
      Rat icpt = c.rational();
      c.expect(')');
      tail.classes[static_cast<size_t>(r)] = {slope, icpt};
    }
  } else {
    c.fail("expected const/lin/mod tail");
  }
  if (!c.at_end()) c.fail("trailing input");
  std::map<long, Rat> ov;
  for (size_t i = 0; i < head.size(); ++i) ov[static_cast<long>(i) + 1] = head[i];
  return Weight(alg, std::move(ov), std::move(tail));
}

std::string Weight::literal() const {
  Weight w = canonical();
  std::ostringstream os;
  os << "[";
  for (long k = 1; k < w.tail_.start; ++k) {
    if (k > 1) os << ",";
    os << rat_str(w.at(k));
  }
  os << "] ++ ";
  const TailSpec& t = w.tail_;
  if (t.modulus == 1) {
    if (t.classes[0].slope == 0)
      os << "const " << rat_str(t.classes[0].intercept);
    else
      os << "lin " << rat_str(t.classes[0].slope) << "," << rat_str(t.classes[0].intercept);
  } else {
    os << "mod " << t.modulus << ":";
    for (long r = 0; r < t.modulus; ++r) {
      if (r > 0) os << ";";
      os << "(" << rat_str(t.classes[static_cast<size_t>(r)].slope) << ","
         << rat_str(t.classes[static_cast<size_t>(r)].intercept) << ")";
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------
// RootDelta

RootDelta RootDelta::root(long i, long j) {
  RootDelta d;
  d.add(i, Int(1));
  d.add(j, Int(-1));
  return d;
}

Int RootDelta::at(long k) const {
  auto it = entries.find(k);
  return it == entries.end() ? Int(0) : it->second;
}

void RootDelta::add(long k, const Int& v) {
  if (v == 0) return;
  auto it = entries.find(k);
  if (it == entries.end()) {
    entries[k] = v;
  } else {
    it->second += v;
    if (it->second == 0) entries.erase(it);
  }
}

Int RootDelta::total() const {
  Int s = 0;
  for (const auto& [k, v] : entries) {
    (void)k;
    s += v;
  }
  return s;
}

std::string RootDelta::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [k, v] : entries) {
    if (!first) os << ",";
    os << k << ":" << v.str();
    first = false;
  }
  os << "}";
  return os.str();
}

// ---------------------------------------------------------------------
// Borel orders

BorelOrder BorelOrder::layered(std::vector<BorelChain> chains) {
  if (chains.empty()) throw std::invalid_argument("layered order needs chains");
  long L = 1;
  for (const auto& c : chains) {
    if (c.step < 1 || c.start < 1) throw std::invalid_argument("bad chain");
    L = lcm_long(L, c.step);
  }
  long horizon = 0;
  for (const auto& c : chains) horizon = std::max(horizon, c.start);
  horizon += 2 * L;
  for (long k = 1; k <= horizon; ++k) {
    int covered = 0;
    for (const auto& c : chains)
      if (k >= c.start && (k - c.start) % c.step == 0) ++covered;
    if (covered != 1)
      throw std::invalid_argument("layered chains must partition Z_{>0}");
  }
  return BorelOrder(Kind::Layered, std::move(chains));
}

BorelOrder BorelOrder::parse(const std::string& s) {
  if (s == "one-sided" || s == "1" || s.empty()) return one_sided();
  if (s == "two-sided" || s == "2") return two_sided();
  const std::string prefix = "layered:";
  if (s.rfind(prefix, 0) == 0) {
    std::vector<BorelChain> chains;
    std::istringstream is(s.substr(prefix.size()));
    std::string tok;
    while (std::getline(is, tok, ',')) {
      std::istringstream cs(tok);
      std::string a, b, c;
      if (!std::getline(cs, a, ':') || !std::getline(cs, b, ':') || !std::getline(cs, c))
        throw std::invalid_argument("bad layered chain: " + tok);
      BorelChain chain;
      chain.start = std::stol(a);
      chain.step = std::stol(b);
      if (c == "asc")
        chain.ascending = true;
      else if (c == "desc")
        chain.ascending = false;
      else
        throw std::invalid_argument("chain direction must be asc or desc");
      chains.push_back(chain);
    }
    return layered(std::move(chains));
  }
  throw std::invalid_argument("unknown order: " + s);
}

std::string BorelOrder::str() const {
  switch (kind_) {
    case Kind::OneSided:
      return "one-sided";
    case Kind::TwoSided:
      return "two-sided";
    case Kind::Layered: {
      std::ostringstream os;
      os << "layered:";
      for (size_t i = 0; i < chains_.size(); ++i) {
        if (i) os << ",";
        os << chains_[i].start << ":" << chains_[i].step << ":"
           << (chains_[i].ascending ? "asc" : "desc");
      }
      return os.str();
    }
  }
  return "?";
}

int BorelOrder::chain_of(long k) const {
  if (kind_ != Kind::Layered) return 0;
  for (size_t c = 0; c < chains_.size(); ++c)
    if (k >= chains_[c].start && (k - chains_[c].start) % chains_[c].step == 0)
      return static_cast<int>(c);
  throw std::logic_error("position not covered by any chain");
}

bool BorelOrder::less(long i, long j) const {
  if (i == j) return false;
  switch (kind_) {
    case Kind::OneSided:
      return i < j;
    case Kind::TwoSided: {
      auto rank = [](long k) { return k % 2 == 0 ? k / 2 : (1 - k) / 2; };
      return rank(i) < rank(j);
    }
    case Kind::Layered: {
      int ci = chain_of(i), cj = chain_of(j);
      if (ci != cj) return ci < cj;
      return chains_[static_cast<size_t>(ci)].ascending ? i < j : i > j;
    }
  }
  return false;
}

long BorelOrder::residue_modulus() const {
  switch (kind_) {
    case Kind::OneSided:
      return 1;
    case Kind::TwoSided:
      return 2;
    case Kind::Layered: {
      long L = 1;
      for (const auto& c : chains_) L = lcm_long(L, c.step);
      return L;
    }
  }
  return 1;
}

// ---------------------------------------------------------------------
// rho constructors

RhoDiagram rho_diagram_parse(const std::string& s) {
  if (s == "a1" || s == "A1" || s == "a1sided") return RhoDiagram::A1sided;
  if (s == "a2" || s == "A2" || s == "a2sided") return RhoDiagram::A2sided;
  if (s == "b" || s == "B") return RhoDiagram::Binf;
  if (s == "c" || s == "C") return RhoDiagram::Cinf;
  if (s == "d" || s == "D") return RhoDiagram::Dinf;
  if (s == "gl1" || s == "GL1" || s == "gl") return RhoDiagram::GLinf1sided;
  throw std::invalid_argument("unknown rho diagram: " + s);
}

Weight rho(RhoDiagram diagram, Algebra alg) {
  TailSpec t;
  t.start = 1;
  switch (diagram) {
    case RhoDiagram::A1sided:
    case RhoDiagram::GLinf1sided:
    case RhoDiagram::Dinf:
      // (0, -1, -2, -3, ...)
      t.modulus = 1;
      t.classes = {{Rat(-1), Rat(1)}};
      break;
    case RhoDiagram::A2sided:
      // (0, 1, -1, 2, -2, ...): even k -> -k/2, odd k -> (k-1)/2
      t.modulus = 2;
      t.classes = {{Rat(-1, 2), Rat(0)}, {Rat(1, 2), Rat(-1, 2)}};
      break;
    case RhoDiagram::Binf:
      // (-1/2, -3/2, -5/2, ...)
      t.modulus = 1;
      t.classes = {{Rat(-1), Rat(1, 2)}};
      break;
    case RhoDiagram::Cinf:
      // (-1, -2, -3, ...)
      t.modulus = 1;
      t.classes = {{Rat(-1), Rat(0)}};
      break;
  }
  return Weight(alg, {}, std::move(t));
}

Weight rho(const BorelOrder& order, Algebra alg) {
  switch (order.kind()) {
    case BorelOrder::Kind::OneSided:
      return rho(RhoDiagram::A1sided, alg);
    case BorelOrder::Kind::TwoSided:
      return rho(RhoDiagram::A2sided, alg);
    case BorelOrder::Kind::Layered: {
      // Within an ascending chain the k-th element from the bottom takes
      // value -k; within a descending chain the k-th element below the
      // top takes +k.  Reproduces rho~ = (-1,+1,-2,+2,...) for the
      // simplest ideal Borel order.
      long L = order.residue_modulus();
      TailSpec t;
      t.start = 1;
      t.modulus = L;
      t.classes.resize(static_cast<size_t>(L));
      for (long r = 0; r < L; ++r) {
        // A valid arithmetic-progression partition assigns every residue
        // class mod L entirely to one chain, so any covered
        // representative determines the formula for the whole class.
        long k = r == 0 ? L : r;
        const BorelChain& c = order.chains()[static_cast<size_t>(order.chain_of(k))];
        // chain index of k: k = start + (idx-1)*step; ascending chains
        // take value -idx, descending chains +idx
        Rat slope = Rat(c.ascending ? -1 : 1, c.step);
        Rat icpt = Rat(c.ascending ? -1 : 1) * (Rat(1) - Rat(c.start, c.step));
        t.classes[static_cast<size_t>(r)] = {slope, icpt};
      }
      return Weight(alg, {}, std::move(t));
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace oinf
