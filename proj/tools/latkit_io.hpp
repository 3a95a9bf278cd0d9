#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "latkit/av_forms.hpp"
#include "latkit/int_matrix.hpp"
#include "latkit/lattice.hpp"
#include "latkit/order.hpp"
#include "latkit/padic.hpp"
#include "latkit/suites.hpp"

namespace latkit::io {

using nlohmann::json;

/// Numbers when |x| <= 2^53, decimal strings beyond.
json to_json(const Int& x);
json to_json(const std::vector<Int>& xs);
json to_json(const IntMatrix& m);

/// Accepts integral numbers and decimal strings.
Int int_from_json(const json& j);
std::vector<Int> int_vector_from_json(const json& j);
/// Array of rows; rows must have equal length.
IntMatrix matrix_from_json(const json& j);
std::vector<IntMatrix> matrices_from_json(const json& j);

/// Throws InvalidInput on unreadable files or malformed JSON.
json read_json_file(const std::filesystem::path& path);

/// {"gram": [[...]]} or {"name": "<lattice expression>"}.
Lattice lattice_from_json(const json& j);
/// {"name": "<curated order>"} or {"blocks": [...], "representation": [...]}.
Order order_from_json(const json& j);
/// {"factors": [{"e", "d", "g", "m"}], "base_discr": n} or with "order" in place of base_discr.
EndData end_data_from_json(const json& j);
/// {"ell", "precision", "generators"}.
ActionData action_from_json(const json& j);

inline constexpr std::size_t kFullTrialListing = 1000;

/// Trials are listed in full up to kFullTrialListing, otherwise only failures.
json suite_to_json(const SuiteResult& r);

}  // namespace latkit::io
