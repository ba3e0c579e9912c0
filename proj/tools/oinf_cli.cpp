// Batch command-line front end: every operation prints one
// machine-readable report (JSON by default, TSV rows on request) and
// exits 0, or reports a typed domain error and exits 2.  Usage errors
// exit 1.

#include "oinf/category_o.hpp"
#include "oinf/classify.hpp"
#include "oinf/errors.hpp"
#include "oinf/hecke.hpp"
#include "oinf/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

using namespace oinf;

namespace {

struct Common {
  std::string alg = "gl";
  std::string order = "one-sided";
  std::string format = "json";
  std::string cache;
};

void emit(const Common& common, const Json& report) {
  if (common.format == "tsv")
    std::cout << to_tsv(report);
  else
    std::cout << report.dump(2) << "\n";
}

Weight get_weight(const Common& common, const std::string& literal) {
  return Weight::parse(algebra_parse(common.alg), literal);
}

Json orbit_report(const OrbitWindow& window, KLTable& table,
                  const std::optional<Weight>& top) {
  Json elements = Json::array();
  for (const auto& [weight, x] : window.elements) {
    Json item;
    item["weight"] = weight_json(weight);
    item["x"] = x.str();
    if (top) item["mult"] = verma_multiplicity(*top, weight, table).str();
    elements.push_back(item);
  }
  Json j;
  j["base"] = weight_json(window.base);
  j["elements"] = elements;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact category O-bar computations for gl/sl-infinity"};
  app.require_subcommand(1);

  Common common;
  app.add_option("--alg", common.alg, "gl or sl")->capture_default_str();
  app.add_option("--order", common.order,
                 "one-sided | two-sided | layered:<start>:<step>:<asc|desc>,...")
      ->capture_default_str();
  app.add_option("--format", common.format, "json or tsv")->capture_default_str();
  app.add_option("--cache", common.cache, "KL cache file (loaded before, saved after)");

  std::string weight_arg, cap_arg, mu_arg, window_arg;
  std::string x_arg, y_arg, type_arg = "A", diagram_arg = "a1";
  std::string module_arg = "M", basis_arg = "verma", target_arg = "simple";
  std::string perm_arg;
  int steps = 2;

  auto* cmd_classify = app.add_subcommand("classify", "weight classification flags");
  cmd_classify->add_option("--weight", weight_arg)->required();

  auto* cmd_rho = app.add_subcommand("rho", "half sums of positive roots");
  cmd_rho->add_option("--diagram", diagram_arg, "a1|a2|b|c|d|gl1|layered (with --order)");

  auto* cmd_dot = app.add_subcommand("dot", "dot action of a permutation");
  cmd_dot->add_option("--perm", perm_arg)->required();
  cmd_dot->add_option("--weight", weight_arg)->required();

  auto* cmd_reduce = app.add_subcommand("reduce", "antidominant representative + chain");
  cmd_reduce->add_option("--weight", weight_arg)->required();

  auto* cmd_block = app.add_subcommand("block", "same integral Weyl dot-orbit?");
  cmd_block->add_option("--weight", weight_arg)->required();
  cmd_block->add_option("--cap", cap_arg)->required();

  auto* cmd_linkage = app.add_subcommand("linkage", "strong linkage chain mu -> cap");
  cmd_linkage->add_option("--weight", weight_arg, "mu")->required();
  cmd_linkage->add_option("--cap", cap_arg, "lambda")->required();

  auto* cmd_status = app.add_subcommand("status", "Verma module status");
  cmd_status->add_option("--weight", weight_arg)->required();

  auto* cmd_mult = app.add_subcommand("mult", "composition factor multiplicities");
  cmd_mult->add_option("--weight", weight_arg)->required();
  cmd_mult->add_option("--mu", mu_arg, "restrict to one factor");

  auto* cmd_decompose = app.add_subcommand("decompose", "Grothendieck-group change of basis");
  cmd_decompose->add_option("--weight", weight_arg)->required();
  cmd_decompose->add_option("--basis", basis_arg, "verma|simple");
  cmd_decompose->add_option("--target", target_arg, "verma|simple");

  auto* cmd_char = app.add_subcommand("char", "character window");
  cmd_char->add_option("--module", module_arg, "M|L");
  cmd_char->add_option("--weight", weight_arg)->required();
  cmd_char->add_option("--window", window_arg, "<lo literal>,<hi literal>")->required();

  auto* cmd_reciprocity = app.add_subcommand("reciprocity", "truncated BGG reciprocity");
  cmd_reciprocity->add_option("--weight", weight_arg, "mu")->required();
  cmd_reciprocity->add_option("--cap", cap_arg)->required();

  auto* cmd_klpoly = app.add_subcommand("klpoly", "Kazhdan-Lusztig polynomial");
  cmd_klpoly->add_option("--type", type_arg);
  cmd_klpoly->add_option("--x", x_arg)->required();
  cmd_klpoly->add_option("--y", y_arg)->required();

  auto* cmd_rpoly = app.add_subcommand("rpoly", "R-polynomial");
  cmd_rpoly->add_option("--type", type_arg);
  cmd_rpoly->add_option("--x", x_arg)->required();
  cmd_rpoly->add_option("--y", y_arg)->required();

  auto* cmd_bruhat = app.add_subcommand("bruhat", "Bruhat comparison and interval");
  cmd_bruhat->add_option("--type", type_arg);
  cmd_bruhat->add_option("--x", x_arg)->required();
  cmd_bruhat->add_option("--y", y_arg)->required();

  auto* cmd_demo = app.add_subcommand("demo-verma-chain", "the infinite Verma filtration");
  cmd_demo->add_option("--steps", steps);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  KLTable table;
  if (!common.cache.empty()) table.load(common.cache);

  int rc = 0;
  try {
    if (cmd_classify->parsed()) {
      Weight w = get_weight(common, weight_arg);
      BorelOrder order = BorelOrder::parse(common.order);
      Classification cls = classify(w, order);
      Json j = classification_json(cls);
      if (order.kind() == BorelOrder::Kind::OneSided) {
        HomologicalFlags flags = homological_flags(w);
        j["has_injective_hull"] = flags.has_injective_hull;
        j["integrable_simple"] = flags.integrable_simple;
      }
      emit(common, j);
    } else if (cmd_rho->parsed()) {
      Algebra alg = algebra_parse(common.alg);
      Weight r = diagram_arg == "layered"
                     ? rho(BorelOrder::parse(common.order), alg)
                     : rho(rho_diagram_parse(diagram_arg), alg);
      Json coords = Json::array();
      for (long k = 1; k <= 12; ++k) coords.push_back(rat_str(r.at(k)));
      emit(common, Json{{"diagram", diagram_arg},
                        {"coordinates", coords},
                        {"weight", weight_json(r)}});
    } else if (cmd_dot->parsed()) {
      Weight w = get_weight(common, weight_arg);
      GroupElement g = GroupElement::parse(perm_arg);
      emit(common, Json{{"weight", weight_json(dot_act(g, w))}});
    } else if (cmd_reduce->parsed()) {
      Weight w = get_weight(common, weight_arg);
      auto [xi, chain] = to_antidominant(w);
      Json roots = Json::array();
      for (const auto& r : chain) roots.push_back(root_json(r));
      emit(common, Json{{"antidominant", weight_json(xi)}, {"chain", roots}});
    } else if (cmd_block->parsed()) {
      Weight a = get_weight(common, weight_arg);
      Weight b = get_weight(common, cap_arg);
      emit(common, Json{{"same_block", same_block(a, b)}});
    } else if (cmd_linkage->parsed()) {
      Weight mu = get_weight(common, weight_arg);
      Weight lambda = get_weight(common, cap_arg);
      auto chain = strongly_linked(mu, lambda);
      Json j;
      j["linked"] = chain.has_value();
      j["hom_dim"] = chain.has_value() ? 1 : 0;
      if (chain) {
        Json roots = Json::array();
        for (const auto& r : *chain) roots.push_back(root_json(r));
        j["chain"] = roots;
      }
      emit(common, j);
    } else if (cmd_status->parsed()) {
      Weight w = get_weight(common, weight_arg);
      VermaStatus status = verma_status(w);
      Json j{{"simple", status.simple}, {"finite_length", status.finite_length}};
      if (status.socle_highest_weight)
        j["socle_highest_weight"] = weight_json(*status.socle_highest_weight);
      if (status.chain_to_antidominant) {
        Json roots = Json::array();
        for (const auto& r : *status.chain_to_antidominant)
          roots.push_back(root_json(r));
        j["chain_to_antidominant"] = roots;
      }
      emit(common, j);
    } else if (cmd_mult->parsed()) {
      Weight lambda = get_weight(common, weight_arg);
      if (!mu_arg.empty()) {
        Weight mu = get_weight(common, mu_arg);
        emit(common, Json{{"mult", verma_multiplicity(lambda, mu, table).str()}});
      } else {
        auto [socle, chain] = to_antidominant(lambda);
        (void)chain;
        OrbitWindow window = orbit_window(lambda, socle, lambda);
        emit(common, orbit_report(window, table, lambda));
      }
    } else if (cmd_decompose->parsed()) {
      Weight w = get_weight(common, weight_arg);
      BasisKind from = basis_arg == "simple" ? BasisKind::Simple : BasisKind::Verma;
      BasisKind to = target_arg == "simple" ? BasisKind::Simple : BasisKind::Verma;
      FormalSum sum = grothendieck_decompose(BasisSymbol{from, w}, to, table);
      Json terms = Json::array();
      for (const auto& [sym, coeff] : sum)
        terms.push_back(Json{{"basis", sym.kind == BasisKind::Verma ? "M" : "L"},
                             {"weight", weight_json(sym.weight)},
                             {"coeff", coeff.str()}});
      emit(common, Json{{"terms", terms}});
    } else if (cmd_char->parsed()) {
      Weight w = get_weight(common, weight_arg);
      // weight literals contain commas, but the hi literal always starts
      // with '[' and brackets never nest, so ",[" is the separator
      auto comma = window_arg.find(",[");
      if (comma == std::string::npos)
        throw std::invalid_argument("--window wants <lo literal>,<hi literal>");
      Weight lo = get_weight(common, window_arg.substr(0, comma));
      Weight hi = get_weight(common, window_arg.substr(comma + 1));
      BasisKind kind = module_arg == "L" ? BasisKind::Simple : BasisKind::Verma;
      CharacterWindow cw = character_window(BasisSymbol{kind, w}, lo, hi, table);
      Json dims = Json::array();
      for (const auto& [xi, d] : cw.dims)
        dims.push_back(Json::array({weight_json(xi), d.str()}));
      emit(common, Json{{"module", module_arg},
                        {"window", Json::array({weight_json(cw.lower), weight_json(cw.upper)})},
                        {"dims", dims}});
    } else if (cmd_reciprocity->parsed()) {
      Weight mu = get_weight(common, weight_arg);
      Weight cap = get_weight(common, cap_arg);
      auto terms = trunc_reciprocity(mu, cap, table);
      Json items = Json::array();
      for (const auto& [nu, m] : terms)
        items.push_back(Json{{"weight", weight_json(nu)}, {"mult", m.str()}});
      emit(common, Json{{"mu", weight_json(mu)}, {"cap", weight_json(cap)},
                        {"terms", items}});
    } else if (cmd_klpoly->parsed() || cmd_rpoly->parsed()) {
      // elements may carry their own type prefix ("A:[...]") or be bare
      // one-line lists qualified by --type
      auto element = [&](const std::string& arg) {
        if (arg.find(':') != std::string::npos) return GroupElement::parse(arg);
        return GroupElement::parse(type_arg + ":" + arg);
      };
      GroupElement x = element(x_arg);
      GroupElement y = element(y_arg);
      LaurentV p =
          cmd_klpoly->parsed() ? kl_poly(x, y, table) : r_poly(x, y, table);
      Json coeffs = Json::array();
      for (const Int& c : p.q_coeff_list()) coeffs.push_back(c.str());
      emit(common, Json{{"kind", cmd_klpoly->parsed() ? "P" : "R"},
                        {"x", x.str()},
                        {"y", y.str()},
                        {"coefficients", coeffs}});
    } else if (cmd_bruhat->parsed()) {
      GroupElement x = GroupElement::parse(x_arg);
      GroupElement y = GroupElement::parse(y_arg);
      Json j{{"leq_xy", bruhat_leq(x, y)},
             {"leq_yx", bruhat_leq(y, x)},
             {"length_x", length(x)},
             {"length_y", length(y)}};
      if (bruhat_leq(x, y))
        j["interval_size"] = bruhat_interval(x, y).size();
      emit(common, j);
    } else if (cmd_demo->parsed()) {
      auto chain = demo_verma_chain(steps);
      Json weights = Json::array();
      for (const auto& w : chain) weights.push_back(weight_json(w));
      Json linked = Json::array();
      for (size_t i = 0; i + 1 < chain.size(); ++i)
        linked.push_back(strongly_linked(chain[i + 1], chain[i]).has_value());
      emit(common, Json{{"weights", weights}, {"consecutive_linked", linked}});
    }
  } catch (const DomainError& e) {
    emit(common, Json{{"error", e.code()}, {"message", e.what()}});
    rc = 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    rc = 1;
  }

  if (!common.cache.empty()) table.save(common.cache);
  return rc;
}
