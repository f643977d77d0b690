#pragma once

#include <string>

#include "flatcheck/json_io.hpp"

namespace flatcheck {

// Full analysis of one module: cardinality, annihilator with idempotency
// data, invariant factors, flatness evidence, rank map when flat, and the
// projectivity verdict. The JSON value is a pure function of the inputs;
// elapsed time is reported alongside, never inside, so reports stay
// byte-identical across runs.
struct AnalysisReport {
  json document;
  double elapsed_seconds = 0.0;
};

AnalysisReport analyze_module(const PresentedModule& M,
                              std::size_t max_exterior);

// Human summary, derived from the JSON document only.
std::string render_analysis_text(const json& document);

}  // namespace flatcheck
