#include "oinf/hecke.hpp"

#include "oinf/errors.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>

namespace oinf {

HeckeElt HeckeElt::t_basis(const GroupElement& g, LaurentV c) {
  HeckeElt e(g.type());
  e.add_term(g, c);
  return e;
}

void HeckeElt::add_term(const GroupElement& g, const LaurentV& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_[g] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  if (!o.terms_.empty() && !terms_.empty() && type_ != o.type_)
    throw type_mismatch("adding Hecke elements of different type");
  if (terms_.empty()) type_ = o.type_;
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  if (!o.terms_.empty() && !terms_.empty() && type_ != o.type_)
    throw type_mismatch("subtracting Hecke elements of different type");
  if (terms_.empty()) type_ = o.type_;
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

HeckeElt HeckeElt::scaled(const LaurentV& c) const {
  HeckeElt r(type_);
  for (const auto& [g, t] : terms_) r.add_term(g, t * c);
  return r;
}

std::string HeckeElt::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")*T[" << g.str() << "]";
    first = false;
  }
  return os.str();
}

namespace {

// a * T_s expanded through the defining relations.
HeckeElt mul_simple(const HeckeElt& a, const GroupElement& s) {
  HeckeElt r(a.type());
  const LaurentV q = LaurentV::q_power(1);
  const LaurentV q_minus_1 = q - LaurentV::one();
  for (const auto& [g, c] : a.terms()) {
    GroupElement gs = g * s;
    if (length(gs) > length(g)) {
      r.add_term(gs, c);
    } else {
      r.add_term(gs, c * q);
      r.add_term(g, c * q_minus_1);
    }
  }
  return r;
}

}  // namespace

HeckeElt t_multiply(const HeckeElt& a, const HeckeElt& b) {
  if (!a.terms().empty() && !b.terms().empty() && a.type() != b.type())
    throw type_mismatch("multiplying Hecke elements of different type");
  HeckeElt acc(a.type());
  for (const auto& [g, c] : b.terms()) {
    HeckeElt part = a;
    for (int letter : reduced_word(g).letters)
      part = mul_simple(part, GroupElement::simple(a.type(), letter));
    acc += part.scaled(c);
  }
  return acc;
}

HeckeElt t_inverse(const GroupElement& g) {
  // T_g^{-1} = T_{s_k}^{-1} ... T_{s_1}^{-1} for g = s_1 ... s_k
  CoxeterType t = g.type();
  HeckeElt acc = HeckeElt::unit(t);
  auto word = reduced_word(g).letters;
  const LaurentV qinv = LaurentV::q_power(-1);
  const LaurentV qinv_minus_1 = qinv - LaurentV::one();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    GroupElement s = GroupElement::simple(t, *it);
    HeckeElt sinv = HeckeElt::t_basis(s, qinv);
    sinv.add_term(GroupElement(t), qinv_minus_1);
    acc = t_multiply(acc, sinv);
  }
  return acc;
}

HeckeElt bar(const HeckeElt& a) {
  HeckeElt acc(a.type());
  for (const auto& [g, c] : a.terms()) acc += t_inverse(g.inverse()).scaled(c.bar());
  return acc;
}

std::optional<LaurentV> KLTable::lookup_p(const Key& k) const {
  std::shared_lock lock(mutex_);
  auto it = p_table_.find(k);
  if (it == p_table_.end()) return std::nullopt;
  return it->second;
}

std::optional<LaurentV> KLTable::lookup_r(const Key& k) const {
  std::shared_lock lock(mutex_);
  auto it = r_table_.find(k);
  if (it == r_table_.end()) return std::nullopt;
  return it->second;
}

void KLTable::store_p(const Key& k, const LaurentV& v) {
  std::unique_lock lock(mutex_);
  p_table_.emplace(k, v);
}

void KLTable::store_r(const Key& k, const LaurentV& v) {
  std::unique_lock lock(mutex_);
  r_table_.emplace(k, v);
}

size_t KLTable::size() const {
  std::shared_lock lock(mutex_);
  return p_table_.size() + r_table_.size();
}

void KLTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;  // a missing cache is an empty cache
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream is(line);
    std::string kind, type, xs, ys, colon;
    if (!(is >> kind >> type >> xs >> ys >> colon) || colon != ":") continue;
    std::vector<Int> cs;
    std::string tok;
    while (is >> tok) cs.emplace_back(tok);
    // x and y are serialized without the leading "<type>:" in the record
    Key key{GroupElement::parse(type + ":" + xs), GroupElement::parse(type + ":" + ys)};
    LaurentV val = LaurentV::from_q_coeff_list(cs);
    if (kind == "P")
      store_p(key, val);
    else if (kind == "R")
      store_r(key, val);
  }
}

void KLTable::save(const std::string& path) const {
  std::vector<std::string> lines;
  {
    std::shared_lock lock(mutex_);
    auto emit = [&lines](const char* kind, const Key& k, const LaurentV& v) {
      std::ostringstream os;
      std::string xs = k.first.str(), ys = k.second.str();
      std::string type = xs.substr(0, xs.find(':'));
      os << kind << " " << type << " " << xs.substr(xs.find(':') + 1) << " "
         << ys.substr(ys.find(':') + 1) << " :";
      for (const Int& c : v.q_coeff_list()) os << " " << c.str();
      lines.push_back(os.str());
    };
    for (const auto& [k, v] : p_table_) emit("P", k, v);
    for (const auto& [k, v] : r_table_) emit("R", k, v);
  }
  std::sort(lines.begin(), lines.end());
  std::ofstream out(path);
  for (const auto& l : lines) out << l << "\n";
}

namespace {

int smallest_right_descent(const GroupElement& w) {
  auto ds = descents(w, Side::Right);
  return *ds.begin();
}

}  // namespace

LaurentV r_poly(const GroupElement& x, const GroupElement& y, KLTable& table) {
  if (x == y) return LaurentV::one();
  if (!bruhat_leq(x, y)) return LaurentV();
  KLTable::Key key{x, y};
  if (auto hit = table.lookup_r(key)) return *hit;

  int i = smallest_right_descent(y);
  GroupElement s = GroupElement::simple(y.type(), i);
  GroupElement ys = y * s, xs = x * s;
  LaurentV result;
  if (length(xs) < length(x)) {
    result = r_poly(xs, ys, table);
  } else {
    result = LaurentV::q_power(1) * r_poly(xs, ys, table) +
             (LaurentV::q_power(1) - LaurentV::one()) * r_poly(x, ys, table);
  }
  table.store_r(key, result);
  return result;
}

LaurentV kl_poly(const GroupElement& x_in, const GroupElement& y, KLTable& table) {
  if (!bruhat_leq(x_in, y)) return LaurentV();

  // Canonicalize: P_{xs,y} = P_{x,y} whenever ys < y, so push x up through
  // the descents of y.  This shrinks the memo table and fixes the
  // recursion pivot case to xs < x.
  GroupElement x = x_in;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : descents(y, Side::Right)) {
      GroupElement s = GroupElement::simple(y.type(), i);
      GroupElement xs = x * s;
      if (length(xs) > length(x)) {
        x = xs;  // lifting property keeps x <= y
        changed = true;
      }
    }
  }

  long lxy = length(y) - length(x);
  if (lxy <= 2) return LaurentV::one();

  KLTable::Key key{x, y};
  if (auto hit = table.lookup_p(key)) return *hit;

  int i = smallest_right_descent(y);
  GroupElement s = GroupElement::simple(y.type(), i);
  GroupElement ys = y * s, xs = x * s;

  LaurentV result = kl_poly(xs, ys, table) + LaurentV::q_power(1) * kl_poly(x, ys, table);
  for (const auto& z : bruhat_interval(x, ys)) {
    GroupElement zs = z * s;
    if (length(zs) >= length(z)) continue;
    long lz_ys = length(ys) - length(z);
    if (lz_ys % 2 == 0) continue;  // mu vanishes
    LaurentV pz = kl_poly(z, ys, table);
    Int kappa = pz.coeff(lz_ys - 1);  // v-exponent of q^{(l-1)/2}
    if (kappa == 0) continue;
    long lz_y = length(y) - length(z);  // even here
    result -= kl_poly(x, z, table).shifted(lz_y) * LaurentV(kappa);
  }
  table.store_p(key, result);
  return result;
}

Int mu(const GroupElement& x, const GroupElement& y, KLTable& table) {
  long lxy = length(y) - length(x);
  if (lxy % 2 == 0) return Int(0);  // half-integer exponent cannot occur
  LaurentV p = kl_poly(x, y, table);
  return p.coeff(lxy - 1);
}

HeckeElt c_element(const GroupElement& g, KLTable& table) {
  CoxeterType t = g.type();
  long lg = length(g);
  HeckeElt out(t);
  for (const auto& x : bruhat_lower_order_ideal(g)) {
    long lxg = lg - length(x);
    LaurentV p_bar = kl_poly(x, g, table).bar();  // q -> q^{-1}
    Int sign = lxg % 2 == 0 ? Int(1) : Int(-1);
    LaurentV coeff = p_bar.shifted(2 * lxg - lg);  // q^{l(x,g)} * q^{-l(g)/2}
    out.add_term(x, coeff * LaurentV(sign));
  }
  return out;
}

LaurentV kl_oracle(const GroupElement& x, const GroupElement& y, KLTable& table) {
  if (!bruhat_leq(x, y)) return LaurentV();
  auto interval = bruhat_interval(x, y);
  std::sort(interval.begin(), interval.end(),
            [](const GroupElement& a, const GroupElement& b) {
              long la = length(a), lb = length(b);
              if (la != lb) return la > lb;
              return a < b;
            });
  std::map<GroupElement, LaurentV> p;
  long ly = length(y);
  for (const auto& a : interval) {
    long la = length(a);
    if (a == y) {
      p[a] = LaurentV::one();
      continue;
    }
    long cap = ly - la;  // l(a,y)
    // S = sum over z in (a,y] of R_{a,z} P_{z,y}
    LaurentV s_poly;
    for (const auto& z : interval) {
      if (length(z) <= la) continue;
      auto it = p.find(z);
      if (it == p.end()) continue;  // z not >= a is fine: R is 0 there
      s_poly += r_poly(a, z, table) * it->second;
    }
    // q^L U(1/q) - U(q) = S.  deg U <= (L-1)/2 < L/2, so coefficients of
    // q^j in S for j > (L-1)/2 equal u_{L-j}; the rest is a consistency
    // check on the degree bound.
    LaurentV u;
    for (long j = cap; 2 * j > cap; --j) {
      Int c = s_poly.coeff(2 * j);  // q^j
      u.add_term(2 * (cap - j), c);
    }
    LaurentV check = u.bar().shifted(2 * cap) - u;
    if (check != s_poly)
      throw std::logic_error("kl_oracle: self-duality identity failed");
    p[a] = u;
  }
  return p.at(x);
}

}  // namespace oinf
