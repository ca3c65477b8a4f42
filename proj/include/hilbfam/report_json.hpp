#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hilbfam/balancing.hpp"
#include "hilbfam/hilbert.hpp"
#include "hilbfam/theorems.hpp"

namespace hilbfam {

// Stable JSON encodings. Integers beyond 64 bits are emitted as decimal strings.
nlohmann::ordered_json to_json(const HilbertReport& report);
nlohmann::ordered_json to_json(const VerificationReport& report, bool include_timing = false);
nlohmann::ordered_json to_json(const SearchResult& result);
nlohmann::ordered_json to_json(const Subset& s);
nlohmann::ordered_json to_json(const SetFamily& family);
nlohmann::ordered_json bigint_json(const BigInt& v);

std::string series_csv(const std::vector<HilbertReport>& series);

// dump(2) plus trailing newline; the form the CLI prints.
std::string dump(const nlohmann::ordered_json& j);

}  // namespace hilbfam
