// Python bindings: thin string/dict-centric wrappers over the main
// operations.  Weights travel as grammar literals, polynomials as lists
// of integer coefficient strings, group elements as one-line literals.

#include "oinf/category_o.hpp"
#include "oinf/classify.hpp"
#include "oinf/errors.hpp"
#include "oinf/hecke.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <mutex>

namespace py = pybind11;
using namespace oinf;

namespace {

KLTable& shared_table() {
  static KLTable table;
  return table;
}

Weight parse_weight_arg(const std::string& alg, const std::string& literal) {
  return Weight::parse(algebra_parse(alg), literal);
}

BorelOrder parse_order_arg(const std::string& order) { return BorelOrder::parse(order); }

py::dict classification_dict(const Classification& c) {
  py::dict d;
  d["integral"] = c.integral;
  d["antidominant"] = c.antidominant;
  d["almost_antidominant"] = c.almost_antidominant;
  d["dominant"] = c.dominant;
  d["almost_dominant"] = c.almost_dominant;
  d["regular"] = c.regular;
  return d;
}

py::list poly_coeffs(const LaurentV& p) {
  py::list out;
  for (const Int& c : p.q_coeff_list()) out.append(py::int_(py::str(c.str())));
  return out;
}

std::vector<std::pair<long, long>> chain_pairs(const std::vector<RootDelta>& chain) {
  std::vector<std::pair<long, long>> out;
  for (const auto& r : chain)
    out.emplace_back(r.entries.begin()->first, r.entries.rbegin()->first);
  return out;
}

RootDelta delta_from_dict(const py::dict& d) {
  RootDelta out;
  for (const auto& item : d)
    out.add(item.first.cast<long>(), Int(item.second.cast<long>()));
  return out;
}

}  // namespace

PYBIND11_MODULE(_oinf, m) {
  m.doc() = "exact category O-bar computations for gl/sl-infinity";

  py::register_exception<DomainError>(m, "DomainError");

  m.def(
      "parse_weight",
      [](const std::string& alg, const std::string& literal) {
        return parse_weight_arg(alg, literal).canonical().literal();
      },
      py::arg("alg"), py::arg("literal"),
      "parse a weight literal and return its canonical form");

  m.def(
      "weight_coords",
      [](const std::string& alg, const std::string& literal, long n) {
        Weight w = parse_weight_arg(alg, literal);
        std::vector<std::string> out;
        for (long k = 1; k <= n; ++k) out.push_back(rat_str(w.at(k)));
        return out;
      },
      py::arg("alg"), py::arg("literal"), py::arg("n") = 12);

  m.def(
      "rho",
      [](const std::string& diagram, long n) {
        Weight r = rho(rho_diagram_parse(diagram), Algebra::SL);
        std::vector<std::string> out;
        for (long k = 1; k <= n; ++k) out.push_back(rat_str(r.at(k)));
        return out;
      },
      py::arg("diagram"), py::arg("n") = 12);

  m.def(
      "rho_layered",
      [](const std::string& order, long n) {
        Weight r = rho(parse_order_arg(order), Algebra::SL);
        std::vector<std::string> out;
        for (long k = 1; k <= n; ++k) out.push_back(rat_str(r.at(k)));
        return out;
      },
      py::arg("order"), py::arg("n") = 12);

  m.def(
      "classify",
      [](const std::string& alg, const std::string& literal, const std::string& order) {
        return classification_dict(
            classify(parse_weight_arg(alg, literal), parse_order_arg(order)));
      },
      py::arg("alg"), py::arg("literal"), py::arg("order") = "one-sided");

  m.def(
      "order_leq",
      [](const std::string& alg, const std::string& mu, const std::string& lambda,
         const std::string& order) {
        return order_leq(parse_weight_arg(alg, mu), parse_weight_arg(alg, lambda),
                         parse_order_arg(order));
      },
      py::arg("alg"), py::arg("mu"), py::arg("lambda"), py::arg("order") = "one-sided");

  m.def(
      "weight_eq",
      [](const std::string& alg, const std::string& a, const std::string& b) {
        return weight_eq(parse_weight_arg(alg, a), parse_weight_arg(alg, b));
      },
      py::arg("alg"), py::arg("a"), py::arg("b"));

  m.def(
      "inversion_roots",
      [](const std::string& alg, const std::string& literal, const std::string& order) {
        return chain_pairs(
            inversion_roots(parse_weight_arg(alg, literal), parse_order_arg(order)));
      },
      py::arg("alg"), py::arg("literal"), py::arg("order") = "one-sided");

  m.def(
      "finite_length_root",
      [](long i, long j, const std::string& order) {
        return finite_length_root(RootDelta::root(i, j), parse_order_arg(order));
      },
      py::arg("i"), py::arg("j"), py::arg("order") = "one-sided");

  m.def(
      "kostant_partition",
      [](const py::dict& delta, const std::string& order) {
        Int count = kostant_partition(delta_from_dict(delta), parse_order_arg(order));
        return py::int_(py::str(count.str()));
      },
      py::arg("delta"), py::arg("order") = "one-sided");

  m.def(
      "dot",
      [](const std::string& alg, const std::string& perm, const std::string& literal) {
        return dot_act(GroupElement::parse(perm), parse_weight_arg(alg, literal))
            .canonical()
            .literal();
      },
      py::arg("alg"), py::arg("perm"), py::arg("literal"));

  m.def(
      "to_antidominant",
      [](const std::string& alg, const std::string& literal) {
        auto [xi, chain] = to_antidominant(parse_weight_arg(alg, literal));
        return py::make_tuple(xi.canonical().literal(), chain_pairs(chain));
      },
      py::arg("alg"), py::arg("literal"));

  m.def(
      "same_block",
      [](const std::string& alg, const std::string& a, const std::string& b) {
        return same_block(parse_weight_arg(alg, a), parse_weight_arg(alg, b));
      },
      py::arg("alg"), py::arg("a"), py::arg("b"));

  m.def(
      "strongly_linked",
      [](const std::string& alg, const std::string& mu, const std::string& lambda)
          -> py::object {
        auto chain =
            strongly_linked(parse_weight_arg(alg, mu), parse_weight_arg(alg, lambda));
        if (!chain) return py::none();
        return py::cast(chain_pairs(*chain));
      },
      py::arg("alg"), py::arg("mu"), py::arg("lambda"));

  m.def(
      "verma_status",
      [](const std::string& alg, const std::string& literal) {
        VermaStatus status = verma_status(parse_weight_arg(alg, literal));
        py::dict d;
        d["simple"] = status.simple;
        d["finite_length"] = status.finite_length;
        d["socle_highest_weight"] =
            status.socle_highest_weight
                ? py::object(py::str(status.socle_highest_weight->canonical().literal()))
                : py::object(py::none());
        if (status.chain_to_antidominant)
          d["chain_to_antidominant"] = chain_pairs(*status.chain_to_antidominant);
        return d;
      },
      py::arg("alg"), py::arg("literal"));

  m.def(
      "orbit_multiplicities",
      [](const std::string& alg, const std::string& literal) {
        Weight lambda = parse_weight_arg(alg, literal);
        auto [socle, chain] = to_antidominant(lambda);
        (void)chain;
        OrbitWindow window = orbit_window(lambda, socle, lambda);
        py::list out;
        for (const auto& [mu, x] : window.elements) {
          py::dict item;
          item["weight"] = mu.literal();
          item["x"] = x.str();
          item["mult"] =
              py::int_(py::str(verma_multiplicity(lambda, mu, shared_table()).str()));
          out.append(item);
        }
        return out;
      },
      py::arg("alg"), py::arg("literal"));

  m.def(
      "verma_multiplicity",
      [](const std::string& alg, const std::string& lambda, const std::string& mu) {
        Int v = verma_multiplicity(parse_weight_arg(alg, lambda),
                                   parse_weight_arg(alg, mu), shared_table());
        return py::int_(py::str(v.str()));
      },
      py::arg("alg"), py::arg("lambda"), py::arg("mu"));

  m.def(
      "decompose",
      [](const std::string& alg, const std::string& literal, const std::string& basis,
         const std::string& target) {
        BasisKind from = basis == "simple" ? BasisKind::Simple : BasisKind::Verma;
        BasisKind to = target == "simple" ? BasisKind::Simple : BasisKind::Verma;
        FormalSum sum = grothendieck_decompose(
            BasisSymbol{from, parse_weight_arg(alg, literal)}, to, shared_table());
        py::list out;
        for (const auto& [sym, coeff] : sum) {
          py::dict item;
          item["basis"] = sym.kind == BasisKind::Verma ? "M" : "L";
          item["weight"] = sym.weight.literal();
          item["coeff"] = py::int_(py::str(coeff.str()));
          out.append(item);
        }
        return out;
      },
      py::arg("alg"), py::arg("literal"), py::arg("basis") = "verma",
      py::arg("target") = "simple");

  m.def(
      "weight_dim",
      [](const std::string& alg, const std::string& module, const std::string& lambda,
         const std::string& mu) {
        BasisKind kind = module == "L" ? BasisKind::Simple : BasisKind::Verma;
        Int d = weight_dim(BasisSymbol{kind, parse_weight_arg(alg, lambda)},
                           parse_weight_arg(alg, mu), shared_table());
        return py::int_(py::str(d.str()));
      },
      py::arg("alg"), py::arg("module"), py::arg("lambda"), py::arg("mu"));

  m.def(
      "character_window",
      [](const std::string& alg, const std::string& module, const std::string& lambda,
         const std::string& lo, const std::string& hi) {
        BasisKind kind = module == "L" ? BasisKind::Simple : BasisKind::Verma;
        CharacterWindow cw = character_window(
            BasisSymbol{kind, parse_weight_arg(alg, lambda)}, parse_weight_arg(alg, lo),
            parse_weight_arg(alg, hi), shared_table());
        py::dict out;
        for (const auto& [xi, d] : cw.dims)
          out[py::str(xi.literal())] = py::int_(py::str(d.str()));
        return out;
      },
      py::arg("alg"), py::arg("module"), py::arg("lambda"), py::arg("lo"), py::arg("hi"));

  m.def(
      "trunc_reciprocity",
      [](const std::string& alg, const std::string& mu, const std::string& cap) {
        auto terms = trunc_reciprocity(parse_weight_arg(alg, mu),
                                       parse_weight_arg(alg, cap), shared_table());
        py::dict out;
        for (const auto& [nu, m_] : terms)
          out[py::str(nu.literal())] = py::int_(py::str(m_.str()));
        return out;
      },
      py::arg("alg"), py::arg("mu"), py::arg("cap"));

  m.def(
      "homological_flags",
      [](const std::string& alg, const std::string& literal) {
        HomologicalFlags flags = homological_flags(parse_weight_arg(alg, literal));
        py::dict d;
        d["has_injective_hull"] = flags.has_injective_hull;
        d["integrable_simple"] = flags.integrable_simple;
        return d;
      },
      py::arg("alg"), py::arg("literal"));

  m.def(
      "demo_verma_chain",
      [](int steps) {
        std::vector<std::string> out;
        for (const auto& w : demo_verma_chain(steps)) out.push_back(w.literal());
        return out;
      },
      py::arg("steps") = 2);

  // Coxeter / Hecke layer ------------------------------------------------
  m.def("length", [](const std::string& w) { return length(GroupElement::parse(w)); });

  m.def(
      "bruhat_leq",
      [](const std::string& x, const std::string& y) {
        return bruhat_leq(GroupElement::parse(x), GroupElement::parse(y));
      },
      py::arg("x"), py::arg("y"));

  m.def(
      "bruhat_interval",
      [](const std::string& x, const std::string& y) {
        std::vector<std::string> out;
        for (const auto& z : bruhat_interval(GroupElement::parse(x), GroupElement::parse(y)))
          out.push_back(z.str());
        return out;
      },
      py::arg("x"), py::arg("y"));

  m.def(
      "reduced_word",
      [](const std::string& w) { return reduced_word(GroupElement::parse(w)).letters; },
      py::arg("w"));

  m.def(
      "kl_poly",
      [](const std::string& x, const std::string& y) {
        return poly_coeffs(
            kl_poly(GroupElement::parse(x), GroupElement::parse(y), shared_table()));
      },
      py::arg("x"), py::arg("y"),
      "ascending q-coefficients of the Kazhdan-Lusztig polynomial");

  m.def(
      "r_poly",
      [](const std::string& x, const std::string& y) {
        return poly_coeffs(
            r_poly(GroupElement::parse(x), GroupElement::parse(y), shared_table()));
      },
      py::arg("x"), py::arg("y"));

  m.def(
      "mu_coefficient",
      [](const std::string& x, const std::string& y) {
        Int v = mu(GroupElement::parse(x), GroupElement::parse(y), shared_table());
        return py::int_(py::str(v.str()));
      },
      py::arg("x"), py::arg("y"));

  m.def(
      "load_cache", [](const std::string& path) { shared_table().load(path); },
      py::arg("path"));
  m.def(
      "save_cache", [](const std::string& path) { shared_table().save(path); },
      py::arg("path"));
}
