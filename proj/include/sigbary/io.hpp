#pragma once

// JSON interchange. Rationals are always "p/q" strings.

#include "sigbary/matrix.hpp"
#include "sigbary/signatures.hpp"
#include "sigbary/tensor_algebra.hpp"

#include <json.hpp>

#include <filesystem>

namespace sigbary {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& value);
Rational rational_from_json(const Json& j);

/// {"dim": d, "level": k, "levels": [scalar, [d entries], [d^2 entries], ...]}
Json to_json(const TensorSeq& s);
TensorSeq tensor_from_json(const Json& j);

/// {"dim": d, "increments": [[col_1], ..., [col_m]]}
Json to_json(const PwlPath& path);
PwlPath path_from_json(const Json& j);

/// Array of rows.
Json to_json(const RationalMatrix& m);
Json to_json(const RationalVector& v);

/// Throws sigbary::Error("input not found: ...") for a missing file.
Json read_json_file(const std::filesystem::path& file);

/// A path document becomes its level-k signature; a tensor document is
/// truncated to level k (it must reach level k).
TensorSeq signature_from_json(const Json& j, std::size_t k);
bool is_path_json(const Json& j);

} // namespace sigbary
