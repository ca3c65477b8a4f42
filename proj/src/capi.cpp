#include "hilbfam/hilbfam.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "hilbfam/balancing.hpp"
#include "hilbfam/batch.hpp"
#include "hilbfam/errors.hpp"
#include "hilbfam/hilbert.hpp"
#include "hilbfam/report_json.hpp"
#include "hilbfam/setfam.hpp"
#include "hilbfam/theorems.hpp"

using json = nlohmann::ordered_json;

struct hf_family {
  hilbfam::SetFamily family;
};

struct hf_report {
  json body;
  json timed_body;  // body plus wall-clock fields
  hf_verdict verdict = HF_VERDICT_OK;
  std::optional<std::string> csv;
  std::optional<std::string> json_cache;
  std::optional<std::string> timed_json_cache;
  std::string text_cache;
};

namespace {

thread_local std::string g_last_error;

template <class F>
hf_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return HF_OK;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return HF_ERR_DOMAIN;
  } catch (const std::length_error& e) {
    g_last_error = e.what();
    return HF_ERR_RESOURCE;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return HF_ERR_RESOURCE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HF_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return HF_ERR_INTERNAL;
  }
}

#define HF_REQUIRE(ptr)                         \
  do {                                          \
    if (!(ptr)) {                               \
      g_last_error = #ptr " must not be NULL";  \
      return HF_ERR_NULL_ARGUMENT;              \
    }                                           \
  } while (0)

#define HF_REQUIRE_ARRAY(ptr, len)               \
  do {                                           \
    if ((len) && !(ptr)) {                       \
      g_last_error = #ptr " must not be NULL";   \
      return HF_ERR_NULL_ARGUMENT;               \
    }                                            \
  } while (0)

hf_verdict verdict_of(hilbfam::Status s) {
  switch (s) {
    case hilbfam::Status::Pass: return HF_VERDICT_OK;
    case hilbfam::Status::Fail: return HF_VERDICT_FAIL;
    case hilbfam::Status::NotApplicable: return HF_VERDICT_NOT_APPLICABLE;
  }
  return HF_VERDICT_FAIL;
}

hf_report* make_report(json body, hf_verdict verdict) {
  auto* r = new hf_report;
  r->timed_body = body;
  r->body = std::move(body);
  r->verdict = verdict;
  return r;
}

hf_report* verification_report(const hilbfam::VerificationReport& rep) {
  auto* r = make_report(hilbfam::to_json(rep), verdict_of(rep.status));
  r->timed_body = hilbfam::to_json(rep, true);
  return r;
}

hf_report* series_report(const std::vector<hilbfam::HilbertReport>& series) {
  json rows = json::array();
  for (const auto& s : series) rows.push_back(hilbfam::to_json(s));
  json values = json::array();
  for (const auto& s : series) values.push_back(s.h_oracle);
  bool all_match = true;
  for (const auto& s : series) all_match = all_match && s.match.value_or(true);
  auto* r = make_report(json{{"series", values}, {"rows", rows}}, all_match ? HF_VERDICT_OK : HF_VERDICT_FAIL);
  r->csv = hilbfam::series_csv(series);
  return r;
}

hf_report* hilbert_report(const hilbfam::HilbertReport& rep) {
  return make_report(hilbfam::to_json(rep), rep.match.value_or(true) ? HF_VERDICT_OK : HF_VERDICT_FAIL);
}

std::vector<unsigned> copy_L(const uint32_t* L, size_t len) {
  if (len && !L) throw std::invalid_argument("L must not be NULL");
  return std::vector<unsigned>(L, L + len);
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string render_text(const json& j) {
  std::string out;
  if (j.contains("claim") && j.contains("status")) {
    out += scalar_text(j["claim"]) + " " + scalar_text(j["status"]) + "\n";
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "claim" || key == "status") continue;
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      out += key + ":\n";
      for (const auto& item : value) {
        const std::string nested = render_text(item);
        for (std::size_t start = 0; start < nested.size();) {
          const auto nl = nested.find('\n', start);
          out += "  " + nested.substr(start, nl - start) + "\n";
          start = nl + 1;
        }
        out += "  --\n";
      }
    } else {
      out += key + ": " + scalar_text(value) + "\n";
    }
  }
  return out;
}

}  // namespace

extern "C" {

const char* hf_version(void) { return "0.1.0"; }

const char* hf_last_error(void) { return g_last_error.c_str(); }

uint64_t hf_enumeration_cap(void) { return hilbfam::enumeration_cap(); }

void hf_set_enumeration_cap(uint64_t cap) { hilbfam::set_enumeration_cap(cap); }

hf_status hf_family_uniform(uint32_t n, uint32_t d, hf_family** out) {
  HF_REQUIRE(out);
  return guarded([&] { *out = new hf_family{hilbfam::make_uniform_family(n, static_cast<int>(d))}; });
}

hf_status hf_family_modq(uint32_t n, uint32_t d, uint32_t q, hf_family** out) {
  HF_REQUIRE(out);
  return guarded([&] { *out = new hf_family{hilbfam::make_modq_family(n, static_cast<int>(d), q)}; });
}

hf_status hf_family_parse(const char* text, hf_family** out) {
  HF_REQUIRE(text);
  HF_REQUIRE(out);
  return guarded([&] { *out = new hf_family{hilbfam::parse_family(text)}; });
}

hf_status hf_family_load(const char* path, hf_family** out) {
  HF_REQUIRE(path);
  HF_REQUIRE(out);
  return guarded([&] { *out = new hf_family{hilbfam::load_family(path)}; });
}

hf_status hf_family_size(const hf_family* family, size_t* out) {
  HF_REQUIRE(family);
  HF_REQUIRE(out);
  *out = family->family.size();
  return HF_OK;
}

hf_status hf_family_ground_size(const hf_family* family, uint32_t* out) {
  HF_REQUIRE(family);
  HF_REQUIRE(out);
  *out = family->family.n();
  return HF_OK;
}

hf_status hf_family_to_text(const hf_family* family, char** out) {
  HF_REQUIRE(family);
  HF_REQUIRE(out);
  return guarded([&] {
    const std::string text = hilbfam::format_family(family->family);
    char* buf = new char[text.size() + 1];
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
  });
}

void hf_family_free(hf_family* family) { delete family; }

void hf_string_free(char* s) { delete[] s; }

hf_status hf_hilbert_uniform(uint32_t n, uint32_t d, uint32_t p, uint32_t m, uint32_t cap, hf_report** out) {
  HF_REQUIRE(out);
  return guarded([&] { *out = hilbert_report(hilbfam::hilbert_report_uniform(n, d, p, m, cap)); });
}

hf_status hf_hilbert_modq(uint32_t n, uint32_t d, uint32_t q, uint32_t p, uint32_t m, uint32_t cap,
                          hf_report** out) {
  HF_REQUIRE(out);
  return guarded([&] { *out = hilbert_report(hilbfam::hilbert_report_modq(n, d, q, p, m, cap)); });
}

hf_status hf_hilbert_family(const hf_family* family, uint32_t p, uint32_t m, uint32_t cap, hf_report** out) {
  HF_REQUIRE(family);
  HF_REQUIRE(out);
  return guarded(
      [&] { *out = hilbert_report(hilbfam::hilbert_report_points(hilbfam::points_of(family->family), p, m, cap)); });
}

hf_status hf_series_uniform(uint32_t n, uint32_t d, uint32_t p, uint32_t cap, hf_report** out) {
  HF_REQUIRE(out);
  return guarded([&] { *out = series_report(hilbfam::hilbert_series_uniform(n, d, p, cap)); });
}

hf_status hf_series_modq(uint32_t n, uint32_t d, uint32_t q, uint32_t p, uint32_t cap, hf_report** out) {
  HF_REQUIRE(out);
  return guarded([&] { *out = series_report(hilbfam::hilbert_series_modq(n, d, q, p, cap)); });
}

hf_status hf_series_family(const hf_family* family, uint32_t p, uint32_t cap, hf_report** out) {
  HF_REQUIRE(family);
  HF_REQUIRE(out);
  return guarded(
      [&] { *out = series_report(hilbfam::hilbert_series_points(hilbfam::points_of(family->family), p, cap)); });
}

hf_status hf_ideal_family(const hf_family* family, uint32_t p, uint32_t m, uint32_t cap, hf_report** out) {
  HF_REQUIRE(family);
  HF_REQUIRE(out);
  return guarded([&] {
    const auto points = hilbfam::points_of(family->family);
    const auto basis = hilbfam::ideal_truncation_basis(points, m, p, cap);
    json polys = json::array();
    for (const auto& f : basis) polys.push_back(f.render());
    const std::size_t columns = hilbfam::monomials_upto(points.n, m, cap).size();
    *out = make_report(json{{"n", points.n},
                            {"p", p},
                            {"m", m},
                            {"cap", cap},
                            {"points", points.size()},
                            {"columns", columns},
                            {"h", columns - basis.size()},
                            {"ideal_dim", basis.size()},
                            {"basis", polys}},
                       HF_VERDICT_OK);
  });
}

hf_status hf_verify_main(const hf_family* inner, const hf_family* outer, uint32_t m, uint32_t p, uint32_t cap,
                         hf_report** out) {
  HF_REQUIRE(inner);
  HF_REQUIRE(outer);
  HF_REQUIRE(out);
  return guarded([&] {
    *out = verification_report(hilbfam::verify_ideal_truncation_equality(
        hilbfam::points_of(inner->family), hilbfam::points_of(outer->family), m, p, cap));
  });
}

hf_status hf_verify_main2(uint32_t n, uint32_t d, uint32_t q, uint32_t p, int force, hf_report** out) {
  HF_REQUIRE(out);
  return guarded([&] { *out = verification_report(hilbfam::verify_main2(n, d, q, p, force != 0)); });
}

hf_status hf_verify_hrubes(uint32_t p, hf_report** out) {
  HF_REQUIRE(out);
  return guarded([&] { *out = verification_report(hilbfam::verify_hrubes(p)); });
}

hf_status hf_verify_hlemma(uint32_t p, hf_report** out) {
  HF_REQUIRE(out);
  return guarded([&] { *out = verification_report(hilbfam::verify_hlemma(p)); });
}

hf_status hf_verify_grid(uint32_t p, uint32_t n, const uint32_t* set_sizes, const uint32_t* set_values,
                         const uint32_t* w, hf_report** out) {
  HF_REQUIRE(set_sizes);
  HF_REQUIRE(set_values);
  HF_REQUIRE(w);
  HF_REQUIRE(out);
  return guarded([&] {
    hilbfam::GridInstance g{p, {}, hilbfam::Point(w, w + n)};
    std::size_t offset = 0;
    for (uint32_t i = 0; i < n; ++i) {
      g.sets.emplace_back(set_values + offset, set_values + offset + set_sizes[i]);
      offset += set_sizes[i];
    }
    *out = verification_report(hilbfam::verify_grid_remark(g));
  });
}

hf_status hf_verify_all(uint32_t p_max, uint32_t n_max, uint32_t jobs, hf_report** out) {
  HF_REQUIRE(out);
  return guarded([&] {
    hilbfam::BatchOptions opts;
    opts.p_max = p_max;
    opts.n_max = n_max;
    opts.jobs = jobs;
    const auto results = hilbfam::run_batch(opts);
    json reports = json::array(), timed = json::array();
    std::size_t pass = 0, fail = 0, na = 0;
    for (const auto& r : results) {
      reports.push_back(hilbfam::to_json(r));
      timed.push_back(hilbfam::to_json(r, true));
      pass += r.status == hilbfam::Status::Pass;
      fail += r.status == hilbfam::Status::Fail;
      na += r.status == hilbfam::Status::NotApplicable;
    }
    json summary = {{"total", results.size()}, {"pass", pass}, {"fail", fail}, {"not_applicable", na}};
    json header = {{"p_max", p_max}, {"n_max", n_max}};
    *out = make_report(json{{"batch", header}, {"summary", summary}, {"reports", reports}},
                       fail ? HF_VERDICT_FAIL : HF_VERDICT_OK);
    (*out)->timed_body = json{{"batch", header}, {"summary", summary}, {"reports", timed}};
  });
}

hf_status hf_balance_is(uint32_t n, const uint32_t* L, size_t L_len, const hf_family* family, hf_report** out) {
  HF_REQUIRE(family);
  HF_REQUIRE(out);
  HF_REQUIRE_ARRAY(L, L_len);
  return guarded([&] {
    const hilbfam::BalancingInstance inst(n, copy_L(L, L_len), family->family);
    const auto check = hilbfam::is_balancing(inst);
    json body = {{"n", n},
                 {"L", inst.L},
                 {"m", inst.m()},
                 {"balancing", check.balancing},
                 {"uncovered", check.uncovered ? hilbfam::to_json(*check.uncovered) : json(nullptr)}};
    *out = make_report(std::move(body), check.balancing ? HF_VERDICT_OK : HF_VERDICT_NEGATIVE);
  });
}

hf_status hf_balance_check(uint32_t n, const uint32_t* L, size_t L_len, const hf_family* family, uint32_t p,
                           hf_report** out) {
  HF_REQUIRE(family);
  HF_REQUIRE(out);
  HF_REQUIRE_ARRAY(L, L_len);
  return guarded([&] {
    const hilbfam::BalancingInstance inst(n, copy_L(L, L_len), family->family);
    *out = verification_report(hilbfam::check_lower_bound(inst, p));
  });
}

hf_status hf_balance_witness(uint32_t n, const uint32_t* L, size_t L_len, const hf_family* family, uint32_t p,
                             hf_report** out) {
  HF_REQUIRE(family);
  HF_REQUIRE(out);
  HF_REQUIRE_ARRAY(L, L_len);
  return guarded([&] {
    const hilbfam::BalancingInstance inst(n, copy_L(L, L_len), family->family);
    const auto poly = hilbfam::witness_poly(inst, p);
    json body = {{"n", n},
                 {"p", p},
                 {"L", inst.L},
                 {"m", inst.m()},
                 {"degree", poly.degree()},
                 {"at_origin", poly.constant_term()},
                 {"terms", poly.terms().size()},
                 {"polynomial", poly.render()}};
    *out = make_report(std::move(body), HF_VERDICT_OK);
  });
}

hf_status hf_search_min(uint32_t n, const uint32_t* L, size_t L_len, uint32_t size_limit, const hf_family* pool,
                        hf_report** out) {
  HF_REQUIRE(out);
  HF_REQUIRE_ARRAY(L, L_len);
  return guarded([&] {
    std::optional<hilbfam::SetFamily> candidates;
    if (pool) candidates = pool->family;
    auto L_vec = copy_L(L, L_len);
    const auto result = hilbfam::min_balancing_size(n, L_vec, size_limit, candidates);
    std::sort(L_vec.begin(), L_vec.end());
    json body = {{"n", n}, {"L", L_vec}, {"size_limit", size_limit}};
    body.update(hilbfam::to_json(result));
    *out = make_report(std::move(body), result.minimum_size ? HF_VERDICT_OK : HF_VERDICT_NEGATIVE);
  });
}

hf_verdict hf_report_verdict(const hf_report* report) { return report ? report->verdict : HF_VERDICT_FAIL; }

const char* hf_report_json(hf_report* report, int include_timing) {
  if (!report) return nullptr;
  auto& cache = include_timing ? report->timed_json_cache : report->json_cache;
  if (!cache) cache = hilbfam::dump(include_timing ? report->timed_body : report->body);
  return cache->c_str();
}

const char* hf_report_csv(hf_report* report) {
  if (!report || !report->csv) return nullptr;
  return report->csv->c_str();
}

const char* hf_report_text(hf_report* report) {
  if (!report) return nullptr;
  if (report->text_cache.empty()) report->text_cache = render_text(report->body);
  return report->text_cache.c_str();
}

void hf_report_free(hf_report* report) { delete report; }

}  // extern "C"
