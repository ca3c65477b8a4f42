#include <doctest.h>

#include <json.hpp>
#include <memory>
#include <string>

#include "hilbfam/hilbfam.h"

namespace {

using json = nlohmann::ordered_json;

struct ReportDeleter {
  void operator()(hf_report* r) const { hf_report_free(r); }
};
struct FamilyDeleter {
  void operator()(hf_family* f) const { hf_family_free(f); }
};
using Report = std::unique_ptr<hf_report, ReportDeleter>;
using Family = std::unique_ptr<hf_family, FamilyDeleter>;

Family parse(const char* text) {
  hf_family* f = nullptr;
  REQUIRE(hf_family_parse(text, &f) == HF_OK);
  return Family(f);
}

json body(hf_report* r, bool timing = false) { return json::parse(hf_report_json(r, timing ? 1 : 0)); }

}  // namespace

TEST_CASE("version and last error") {
  CHECK(std::string(hf_version()) == "0.1.0");
  hf_report* r = nullptr;
  CHECK(hf_verify_hrubes(4, &r) == HF_ERR_DOMAIN);
  CHECK(r == nullptr);
  CHECK(std::string(hf_last_error()).find("prime") != std::string::npos);
  CHECK(hf_verify_hrubes(2, &r) == HF_OK);
  Report guard(r);
  CHECK(std::string(hf_last_error()).empty());
}

TEST_CASE("null arguments are rejected") {
  CHECK(hf_verify_hrubes(2, nullptr) == HF_ERR_NULL_ARGUMENT);
  CHECK(hf_family_parse(nullptr, nullptr) == HF_ERR_NULL_ARGUMENT);
  size_t size = 0;
  CHECK(hf_family_size(nullptr, &size) == HF_ERR_NULL_ARGUMENT);
  hf_report* r = nullptr;
  CHECK(hf_verify_main(nullptr, nullptr, 1, 2, 1, &r) == HF_ERR_NULL_ARGUMENT);
  CHECK(hf_report_verdict(nullptr) == HF_VERDICT_FAIL);
  hf_report_free(nullptr);
  hf_family_free(nullptr);
  hf_string_free(nullptr);
}

TEST_CASE("family handles") {
  hf_family* raw = nullptr;
  REQUIRE(hf_family_uniform(5, 2, &raw) == HF_OK);
  Family f(raw);
  size_t size = 0;
  uint32_t n = 0;
  CHECK(hf_family_size(f.get(), &size) == HF_OK);
  CHECK(size == 10);
  CHECK(hf_family_ground_size(f.get(), &n) == HF_OK);
  CHECK(n == 5);

  REQUIRE(hf_family_modq(6, 3, 3, &raw) == HF_OK);
  Family g(raw);
  CHECK(hf_family_size(g.get(), &size) == HF_OK);
  CHECK(size == 22);

  auto h = parse("n=4\n1,3\n1,2\n");
  char* text = nullptr;
  REQUIRE(hf_family_to_text(h.get(), &text) == HF_OK);
  CHECK(std::string(text) == "n=4\n1,2\n1,3\n");
  hf_string_free(text);

  CHECK(hf_family_parse("n=4\n1,5\n", &raw) == HF_ERR_DOMAIN);
  CHECK(hf_family_load("/nonexistent/fam.txt", &raw) == HF_ERR_DOMAIN);
}

TEST_CASE("resource cap surfaces as its own status") {
  const auto saved = hf_enumeration_cap();
  hf_set_enumeration_cap(100);
  CHECK(hf_enumeration_cap() == 100);
  hf_family* raw = nullptr;
  CHECK(hf_family_uniform(20, 10, &raw) == HF_ERR_RESOURCE);
  CHECK(std::string(hf_last_error()).size() > 0);
  hf_set_enumeration_cap(saved);
  CHECK(hf_enumeration_cap() == saved);
}

TEST_CASE("hilbert and series reports") {
  hf_report* raw = nullptr;
  REQUIRE(hf_hilbert_modq(6, 3, 3, 3, 2, 1, &raw) == HF_OK);
  Report r(raw);
  CHECK(hf_report_verdict(r.get()) == HF_VERDICT_OK);
  const auto j = body(r.get());
  CHECK(j["h_oracle"] == 15);
  CHECK(j["h_closed_form"] == 15);
  CHECK(j["match"] == true);
  CHECK(hf_report_csv(r.get()) == nullptr);
  CHECK(std::string(hf_report_text(r.get())).find("h_oracle: 15") != std::string::npos);

  REQUIRE(hf_series_modq(6, 3, 3, 3, 1, &raw) == HF_OK);
  Report s(raw);
  const char* csv = hf_report_csv(s.get());
  REQUIRE(csv != nullptr);
  CHECK(std::string(csv) ==
        "m,h_oracle,h_closed_form,ideal_dim,match\n0,1,1,0,true\n1,6,6,1,true\n2,15,15,7,true\n"
        "3,21,21,21,true\n4,22,22,35,true\n");

  // a mismatching closed form is reported, not hidden
  REQUIRE(hf_hilbert_modq(6, 0, 4, 2, 1, 1, &raw) == HF_OK);
  Report bad(raw);
  CHECK(hf_report_verdict(bad.get()) == HF_VERDICT_FAIL);
  CHECK(body(bad.get())["h_oracle"] == 6);
  CHECK(body(bad.get())["h_closed_form"] == 10);
}

TEST_CASE("verification verdicts") {
  hf_report* raw = nullptr;
  REQUIRE(hf_verify_main2(6, 3, 3, 3, 0, &raw) == HF_OK);
  Report a(raw);
  CHECK(hf_report_verdict(a.get()) == HF_VERDICT_OK);
  CHECK(body(a.get())["status"] == "PASS");

  REQUIRE(hf_verify_main2(3, 0, 2, 2, 0, &raw) == HF_OK);
  Report b(raw);
  CHECK(hf_report_verdict(b.get()) == HF_VERDICT_NOT_APPLICABLE);

  REQUIRE(hf_verify_hlemma(2, &raw) == HF_OK);
  Report c(raw);
  CHECK(hf_report_verdict(c.get()) == HF_VERDICT_OK);
  CHECK(body(c.get())["claim"] == "HLEMMA");

  const uint32_t sizes[] = {2, 3};
  const uint32_t values[] = {0, 1, 0, 1, 2};
  const uint32_t w[] = {1, 2};
  REQUIRE(hf_verify_grid(3, 2, sizes, values, w, &raw) == HF_OK);
  Report g(raw);
  CHECK(hf_report_verdict(g.get()) == HF_VERDICT_OK);
  CHECK(body(g.get())["metrics"]["expected"] == 5);

  auto inner = parse("n=3\n1\n2\n");
  auto outer = parse("n=3\n1\n2\n1,2\n");
  REQUIRE(hf_verify_main(inner.get(), outer.get(), 0, 2, 1, &raw) == HF_OK);
  Report m(raw);
  CHECK(hf_report_verdict(m.get()) == HF_VERDICT_OK);
  CHECK(hf_verify_main(outer.get(), inner.get(), 0, 2, 1, &raw) == HF_ERR_DOMAIN);
}

TEST_CASE("timing appears only on request") {
  hf_report* raw = nullptr;
  REQUIRE(hf_verify_hrubes(3, &raw) == HF_OK);
  Report r(raw);
  CHECK_FALSE(body(r.get()).contains("timing"));
  CHECK(body(r.get(), true).contains("timing"));
  CHECK(std::string(hf_report_json(r.get(), 0)) == hf_report_json(r.get(), 0));
}

TEST_CASE("batch report") {
  hf_report* raw = nullptr;
  REQUIRE(hf_verify_all(2, 5, 2, &raw) == HF_OK);
  Report r(raw);
  const auto j = body(r.get());
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["total"] == j["reports"].size());
  CHECK(hf_report_verdict(r.get()) == HF_VERDICT_OK);
  hf_report* again = nullptr;
  REQUIRE(hf_verify_all(2, 5, 1, &again) == HF_OK);
  Report r2(again);
  CHECK(std::string(hf_report_json(r.get(), 0)) == hf_report_json(r2.get(), 0));
}

TEST_CASE("balancing entry points") {
  auto fam = parse("n=4\n1,2\n1,3\n");
  const uint32_t L[] = {1};
  hf_report* raw = nullptr;
  REQUIRE(hf_balance_is(4, L, 1, fam.get(), &raw) == HF_OK);
  Report a(raw);
  CHECK(hf_report_verdict(a.get()) == HF_VERDICT_OK);
  CHECK(body(a.get())["uncovered"].is_null());

  REQUIRE(hf_balance_check(4, L, 1, fam.get(), 2, &raw) == HF_OK);
  Report b(raw);
  CHECK(body(b.get())["status"] == "PASS");

  REQUIRE(hf_balance_witness(4, L, 1, fam.get(), 2, &raw) == HF_OK);
  Report c(raw);
  CHECK(body(c.get())["degree"] == 2);
  CHECK(body(c.get())["at_origin"] == 1);

  auto half = parse("n=4\n1,2\n");
  REQUIRE(hf_balance_is(4, L, 1, half.get(), &raw) == HF_OK);
  Report d(raw);
  CHECK(hf_report_verdict(d.get()) == HF_VERDICT_NEGATIVE);
  CHECK(body(d.get())["uncovered"] == json::array({1, 2}));

  REQUIRE(hf_search_min(4, L, 1, 3, nullptr, &raw) == HF_OK);
  Report e(raw);
  CHECK(body(e.get())["minimum_size"] == 2);
  REQUIRE(hf_search_min(4, L, 1, 1, nullptr, &raw) == HF_OK);
  Report f(raw);
  CHECK(hf_report_verdict(f.get()) == HF_VERDICT_NEGATIVE);

  const uint32_t badL[] = {2};
  CHECK(hf_balance_is(4, badL, 1, fam.get(), &raw) == HF_ERR_DOMAIN);
  CHECK(hf_balance_is(4, nullptr, 1, fam.get(), &raw) == HF_ERR_NULL_ARGUMENT);
}
