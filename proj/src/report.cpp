#include "oinf/report.hpp"

#include <sstream>

namespace oinf {

Json rational_json(const Rat& r) { return rat_str(r); }

Json weight_json(const Weight& w) {
  Weight c = w.canonical();
  Json j;
  j["algebra"] = algebra_str(c.algebra());
  Json ov = Json::array();
  for (const auto& [k, v] : c.overrides())
    ov.push_back(Json::array({k, rat_num(v).str(), rat_den(v).str()}));
  j["overrides"] = ov;
  Json classes = Json::array();
  for (const auto& cls : c.tail().classes)
    classes.push_back(Json::array({rat_num(cls.slope).str(), rat_den(cls.slope).str(),
                                   rat_num(cls.intercept).str(),
                                   rat_den(cls.intercept).str()}));
  j["tail"] = Json{{"start", c.tail().start}, {"mod", c.tail().modulus},
                   {"classes", classes}};
  j["literal"] = c.literal();
  return j;
}

Weight weight_from_json(const Json& j) {
  Algebra alg = algebra_parse(j.at("algebra").get<std::string>());
  std::map<long, Rat> overrides;
  for (const auto& entry : j.at("overrides")) {
    long pos = entry.at(0).get<long>();
    Int num(entry.at(1).get<std::string>());
    Int den(entry.at(2).get<std::string>());
    overrides[pos] = Rat(num, den);
  }
  TailSpec tail;
  const Json& t = j.at("tail");
  tail.start = t.at("start").get<long>();
  tail.modulus = t.at("mod").get<long>();
  for (const auto& entry : t.at("classes")) {
    Rat slope(Int(entry.at(0).get<std::string>()), Int(entry.at(1).get<std::string>()));
    Rat icpt(Int(entry.at(2).get<std::string>()), Int(entry.at(3).get<std::string>()));
    tail.classes.push_back({slope, icpt});
  }
  return Weight(alg, std::move(overrides), std::move(tail));
}

Json root_json(const RootDelta& d) {
  Json j = Json::array();
  for (const auto& [k, v] : d.entries) j.push_back(Json::array({k, v.str()}));
  return j;
}

Json classification_json(const Classification& c) {
  return Json{{"integral", c.integral},
              {"antidominant", c.antidominant},
              {"almost_antidominant", c.almost_antidominant},
              {"dominant", c.dominant},
              {"almost_dominant", c.almost_dominant},
              {"regular", c.regular}};
}

namespace {

void flatten(const Json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
  } else if (j.is_array()) {
    size_t i = 0;
    for (const auto& item : j) flatten(item, path + "[" + std::to_string(i++) + "]", os);
    if (j.empty()) os << path << "\t[]\n";
  } else {
    os << path << "\t" << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string to_tsv(const Json& j) {
  std::ostringstream os;
  flatten(j, "", os);
  return os.str();
}

}  // namespace oinf
