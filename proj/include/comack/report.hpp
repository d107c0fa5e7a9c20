#pragma once

// JSON serialization of DdimReport. The schema is stable and versioned;
// reports are emitted with a fixed key order and are byte-identical across
// runs with the same configuration (timing_ms is written as 0 unless timing
// emission was requested).

#include <string>

#include "comack/ddim.hpp"

namespace comack::report {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kArtifactVersion = "1.0.0";

std::string to_json(const ddim::DdimReport& r);

// One-line human summary for logs.
std::string summary_line(const ddim::DdimReport& r);

}  // namespace comack::report
