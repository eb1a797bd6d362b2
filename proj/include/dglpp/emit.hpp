#pragma once

#include <string>

#include "dglpp/distribution.hpp"
#include "dglpp/plancherel.hpp"

namespace dglpp {

enum class EmitFormat { Json, Csv };

EmitFormat parse_format(const std::string& text);

// {"m":..,"n":..,"q":[..],"provenance":..,"tail_bound":..,"entries":[{"lambda":[..],"p":..},..]}
// Entries ordered by partition key; exact modes serialize p as fraction
// strings, Monte Carlo as decimal numbers. Byte-stable for equal inputs.
std::string render_distribution(const JointDistribution& dist, EmitFormat format);

std::string render_convergence(const ConvergenceTable& table, EmitFormat format);

// Writes to `path`, or to stdout when path is empty.
void emit_output(const std::string& payload, const std::string& path);

}  // namespace dglpp
