#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "uopt/benchmark.hpp"

namespace uopt::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Parses and runs one invocation: props, sample, evolve or figure1.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Writes control.csv, operational.csv, front.csv and metrics.json into
/// `dir`, each through a temporary file and a rename. Throws on IO errors.
void write_outputs(const std::filesystem::path& dir, std::span<const bench::LabeledPoint> points,
                   const bench::Metrics& metrics);

/// `%.6g`
std::string format_number(double v);

/// Metrics as the JSON object written to metrics.json.
std::string metrics_json(const bench::Metrics& m);

}  // namespace uopt::cli
