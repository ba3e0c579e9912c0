#ifndef OINF_REPORT_HPP
#define OINF_REPORT_HPP

#include "oinf/category_o.hpp"
#include "oinf/classify.hpp"
#include "oinf/weight.hpp"

#include <json.hpp>

#include <string>

namespace oinf {

using Json = nlohmann::json;

// {algebra, overrides:[[pos,num,den]...], tail:{start,mod,classes}} with
// classes as [slope_num, slope_den, icpt_num, icpt_den] quadruples.
Json weight_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json rational_json(const Rat& r);  // exact string form "a" or "a/b"
Json root_json(const RootDelta& d);
Json classification_json(const Classification& c);

// key<TAB>value rows, one per JSON leaf, dotted/indexed paths; equals the
// JSON payload field-for-field.
std::string to_tsv(const Json& j);

}  // namespace oinf

#endif
