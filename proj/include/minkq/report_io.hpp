#pragma once

#include <string>
#include <utility>
#include <vector>

#include "minkq/matrix.hpp"
#include "minkq/verification.hpp"

namespace minkq {

// Labeled-matrix witness blocks: "<label>:\n<matrix text>" concatenated.
std::string serialize_witness(const std::vector<std::pair<std::string, Mat>>& parts);
std::vector<std::pair<std::string, Mat>> parse_witness(const std::string& text);

// Human-readable rendering, one block per report.
std::string render_text(const CheckReport& report);
std::string render_text(const std::vector<CheckReport>& reports);

// Machine-readable report: {version, seed, checks: [{name, params, status,
// anchor, details, certificate?}], summary}. Key order is fixed and the
// output carries no timing data, so identical configurations render
// byte-identically.
std::string render_json(const std::vector<CheckReport>& reports, std::uint64_t seed);

}  // namespace minkq
