#include "oinf/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace oinf {

std::vector<Int> LaurentV::q_coeff_list() const {
  if (!pure_q() || (!coeff_.empty() && min_exp() < 0))
    throw std::logic_error("q_coeff_list: not a polynomial in q");
  std::vector<Int> cs;
  if (coeff_.empty()) return cs;
  cs.assign(static_cast<size_t>(max_exp() / 2) + 1, Int(0));
  for (const auto& [e, c] : coeff_) cs[static_cast<size_t>(e / 2)] = c;
  return cs;
}

LaurentV LaurentV::from_q_coeff_list(const std::vector<Int>& cs) {
  LaurentV p;
  for (size_t i = 0; i < cs.size(); ++i) p.add_term(2 * static_cast<long>(i), cs[i]);
  return p;
}

std::string LaurentV::str() const {
  if (coeff_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeff_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Int a = c < 0 ? Int(-c) : c;
    bool unit = (a == 1) && e != 0;
    if (!unit) os << a.str();
    if (e != 0) {
      if (!unit) os << "*";
      if (e % 2 == 0) {
        os << "q";
        if (e != 2) os << "^" << (e / 2);
      } else {
        os << "v";
        if (e != 1) os << "^" << e;
      }
    }
    first = false;
  }
  return os.str();
}

}  // namespace oinf
