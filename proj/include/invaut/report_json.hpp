#pragma once

#include <string>

#include <json.hpp>

#include "invaut/verifier.hpp"

namespace invaut {

using Json = nlohmann::ordered_json;

/// Rows of the generator matrix as 0/1 strings.
Json code_rows(const LinearCode& code);

/// {generators: [rowstrings], reason}
Json to_json(const Counterexample& counterexample);

/// {theorem_id, n, k_range, scanned, counterexamples, witnesses_checked,
///  elapsed_ms, slice: {index, total}}. With `stable`, elapsed_ms is 0 so
/// equal runs give identical bytes.
Json to_json(const VerifyReport& report, bool stable = false);

std::string dump_report(const VerifyReport& report, bool stable = false);

}  // namespace invaut
