#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bimult/verification.hpp"

namespace bimult {

/// FNV-1a digest of a coefficient vector, rendered as hex. Used to fingerprint
/// witnesses in reports without serializing the full vectors.
std::string witness_digest(const std::vector<cplx>& f, const std::vector<cplx>& g);

/// Full-precision scientific formatting (17 significant digits, lossless
/// round trip).
std::string format_full(double v);

nlohmann::json to_json(const InequalityReport& rep);
nlohmann::json to_json(const NormEstimate& est);

/// Writes records either as a JSON array or as CSV with a fixed column set
/// {check, theorem_ref, lhs, rhs, constant, slack, pass, seed, trials,
/// witness_digest}.
void write_report(const std::string& path, const std::string& format,
                  const std::vector<nlohmann::json>& records);

/// CSV table writer for operator output dumps (x, re, im, abs columns etc).
void write_table(const std::string& path, const std::vector<std::string>& header,
                 const std::vector<std::vector<double>>& rows);

}  // namespace bimult
