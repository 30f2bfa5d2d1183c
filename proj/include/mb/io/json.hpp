#pragma once

#include "mb/report/record.hpp"
#include "mb/simplicial/simplicial.hpp"

#include <json.hpp>

#include <stdexcept>

namespace mb {

using Json = nlohmann::ordered_json;

/// Malformed input; the CLI maps it to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// {"rows", "cols", "entries": [[i, j, "p/q"], ...]}, entries in column order.
Json to_json(const SparseMatrix& m);
SparseMatrix matrix_from_json(const Json& j);

/// {"ground": "Q"|"Z", "dims": [...], "d": [d_1, d_2, ...]} with d_n: C_n → C_{n−1}.
Json to_json(const ChainComplex& c);
ChainComplex complex_from_json(const Json& j);

/// {"ground", "N", "levels": [...], "faces": [[level 1 maps], ...], "degens": [[level 0 maps], ...]};
/// a map is the list of its components. {"constant": complex, "N": n} is accepted as shorthand.
Json to_json(const SimplicialChainComplex& x);
SimplicialChainComplex simplicial_from_json(const Json& j);

Json to_json(const CheckRecord& r);
/// One JSON object per record, then a footer {"summary": {...}}. No timestamps, so equal inputs give equal bytes.
std::string report_jsonl(const std::string& suite, const CheckReport& rep, const Json& footer_extra = Json::object());

}  // namespace mb
