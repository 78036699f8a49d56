#pragma once

// JSON rendering of core results. Matrices are embedded in the text matrix
// format so certificates can be re-read with parse_matrix.

#include <chrono>
#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sqzero/sqzero.hpp"

namespace sqzero::app {

using Json = nlohmann::ordered_json;

std::string sha256_hex(std::string_view bytes);
std::string read_file_bytes(const std::filesystem::path& path);

Json to_json(const Matrix& m);
Json to_json(const IndexSet& s);
Json to_json(const IndexPartition& p);
Json to_json(const CoverResult& c);
Json to_json(const NNRankBounds& b);
Json to_json(const SquareZeroWitness& w);
Json to_json(const WitnessCheck& c);
Json to_json(const Verdict& v);
Json to_json(const NecessaryCheck& c);
Json to_json(const CommutatorReport& r);

/// Adds `report_digest` (SHA-256 of the report without timing) and `timing`.
void finalize(Json& report, std::chrono::steady_clock::time_point start);

}  // namespace sqzero::app
