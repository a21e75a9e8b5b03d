#include "sigbary/io.hpp"

#include <fstream>

namespace sigbary {

namespace {

std::size_t positive_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field \"") + key + "\"");
    const Json& v = j.at(key);
    if (!v.is_number_unsigned() || v.get<std::size_t>() == 0)
        throw Error(std::string("field \"") + key + "\" must be a positive integer");
    return v.get<std::size_t>();
}

const Json& array_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw Error(std::string("field \"") + key + "\" must be an array");
    return j.at(key);
}

std::vector<Rational> rationals_from_json(const Json& arr, std::size_t expected, const std::string& what) {
    if (!arr.is_array() || arr.size() != expected)
        throw Error(what + " must be an array of " + std::to_string(expected) + " rationals");
    std::vector<Rational> out;
    out.reserve(expected);
    for (const auto& e : arr) out.push_back(rational_from_json(e));
    return out;
}

} // namespace

Json to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw Error("rationals must be written as \"p/q\" strings");
}

Json to_json(const TensorSeq& s) {
    Json levels = Json::array();
    levels.push_back(to_json(s.constant()));
    for (std::size_t l = 1; l <= s.level(); ++l) {
        Json flat = Json::array();
        for (const auto& c : s.at_level(l)) flat.push_back(to_json(c));
        levels.push_back(std::move(flat));
    }
    Json out;
    out["dim"] = s.dim();
    out["level"] = s.level();
    out["levels"] = std::move(levels);
    return out;
}

TensorSeq tensor_from_json(const Json& j) {
    const std::size_t d = positive_field(j, "dim");
    const std::size_t k = positive_field(j, "level");
    const Json& levels = array_field(j, "levels");
    if (levels.size() != k + 1) throw Error("\"levels\" must hold level + 1 entries");
    std::vector<std::vector<Rational>> data;
    data.push_back({rational_from_json(levels[0])});
    std::size_t width = 1;
    for (std::size_t l = 1; l <= k; ++l) {
        width *= d;
        data.push_back(rationals_from_json(levels[l], width, "level " + std::to_string(l)));
    }
    return TensorSeq(d, k, std::move(data));
}

Json to_json(const PwlPath& path) {
    Json cols = Json::array();
    for (std::size_t c = 0; c < path.segments(); ++c) {
        Json col = Json::array();
        for (std::size_t r = 0; r < path.dim(); ++r) col.push_back(to_json(path.increments()(r, c)));
        cols.push_back(std::move(col));
    }
    Json out;
    out["dim"] = path.dim();
    out["increments"] = std::move(cols);
    return out;
}

PwlPath path_from_json(const Json& j) {
    const std::size_t d = positive_field(j, "dim");
    const Json& cols = array_field(j, "increments");
    if (cols.empty()) throw Error("a path needs at least one segment");
    RationalMatrix inc(d, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto col = rationals_from_json(cols[c], d, "increment " + std::to_string(c + 1));
        for (std::size_t r = 0; r < d; ++r) inc(r, c) = col[r];
    }
    return PwlPath(std::move(inc));
}

Json to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_json(m.row(r)));
    return rows;
}

Json to_json(const RationalVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Json read_json_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error("input not found: " + file.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error&) {
        throw Error("malformed JSON in " + file.string());
    }
}

bool is_path_json(const Json& j) { return j.is_object() && j.contains("increments"); }

TensorSeq signature_from_json(const Json& j, std::size_t k) {
    if (is_path_json(j)) return sig_pwl(path_from_json(j), k);
    TensorSeq s = tensor_from_json(j);
    if (s.level() < k)
        throw Error("input tensor has level " + std::to_string(s.level()) + ", below the requested " + std::to_string(k));
    return s.truncated(k);
}

} // namespace sigbary
