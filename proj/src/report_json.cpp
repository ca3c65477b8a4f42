#include "hilbfam/report_json.hpp"

#include <limits>
#include <sstream>

namespace hilbfam {

using json = nlohmann::ordered_json;

namespace {

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string_view closed_form_name(ClosedForm c) {
  switch (c) {
    case ClosedForm::None: return "none";
    case ClosedForm::Wilson: return "wilson";
    case ClosedForm::ModQ: return "modq";
  }
  return "none";
}

json witness_json(const Witness& w) {
  json j = {{"kind", w.kind}};
  if (w.polynomial) j["polynomial"] = w.polynomial->render();
  if (w.point) j["point"] = *w.point;
  if (w.subset) j["subset"] = w.subset->members();
  j["degree_bound"] = w.degree_bound;
  if (w.value) j["value"] = *w.value;
  return j;
}

}  // namespace

json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return json(static_cast<std::int64_t>(v));
  }
  return json(v.str());
}

json to_json(const HilbertReport& r) {
  json j;
  j["n"] = r.n;
  j["d"] = optional_json(r.d);
  j["p"] = r.p;
  j["q"] = optional_json(r.q);
  j["m"] = r.m;
  j["cap"] = r.cap;
  j["h_oracle"] = r.h_oracle;
  j["h_closed_form"] = r.h_closed_form ? bigint_json(*r.h_closed_form) : json(nullptr);
  j["ideal_dim"] = r.ideal_dim;
  j["r"] = optional_json(r.r);
  j["match"] = optional_json(r.match);
  j["closed_form"] = closed_form_name(r.closed_form);
  j["columns"] = r.columns;
  return j;
}

json to_json(const VerificationReport& r, bool include_timing) {
  json j;
  j["claim"] = to_string(r.claim);
  j["params"] = r.params;
  j["status"] = to_string(r.status);
  j["witnesses"] = json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back(witness_json(w));
  j["metrics"] = r.metrics;
  if (r.empirical_status) j["metrics"]["empirical_status"] = to_string(*r.empirical_status);
  if (include_timing) j["timing"] = {{"wall_seconds", r.wall_seconds}};
  return j;
}

json to_json(const Subset& s) { return json(s.members()); }

json to_json(const SetFamily& family) {
  json sets = json::array();
  for (const auto& s : family) sets.push_back(to_json(s));
  return json{{"n", family.n()}, {"sets", sets}};
}

json to_json(const SearchResult& r) {
  json j;
  j["minimum_size"] = optional_json(r.minimum_size);
  j["witness_family"] = r.witness_family ? to_json(*r.witness_family) : json(nullptr);
  j["explored"] = r.explored;
  j["limit_hit"] = r.limit_hit;
  return j;
}

std::string series_csv(const std::vector<HilbertReport>& series) {
  std::ostringstream os;
  os << "m,h_oracle,h_closed_form,ideal_dim,match\n";
  for (const auto& r : series) {
    os << r.m << ',' << r.h_oracle << ',';
    if (r.h_closed_form) os << *r.h_closed_form;
    os << ',' << r.ideal_dim << ',';
    if (r.match) os << (*r.match ? "true" : "false");
    os << '\n';
  }
  return os.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hilbfam
