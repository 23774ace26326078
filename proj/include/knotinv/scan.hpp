#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "knotinv/invariants.hpp"

namespace knotinv {

enum class ReportFormat { csv, json };

struct ScanConfig {
  std::uint64_t r_min = 1;
  std::uint64_t r_max = 1;
  unsigned parallelism = 1;
  bool emit_values = true;  // include the (possibly huge) n_r decimals
  std::string output_path;  // consumed by the CLI layer
  ReportFormat format = ReportFormat::csv;
};

struct ScanSummary {
  std::uint64_t total = 0;
  std::uint64_t even_count = 0;
  std::uint64_t even_integral_count = 0;
  double even_integral_fraction = 0.0;  // 0 when even_count == 0
  std::vector<std::uint64_t> disagreements;  // predictor != oracle
  std::vector<std::uint64_t> violations;     // theorem-falsifying r
};

struct ScanResult {
  std::vector<InvariantRecord> records;  // in r order; violating r omitted
  ScanSummary summary;
};

// Fans the per-r work over config.parallelism workers and merges results
// back in r order, so the output bytes never depend on the schedule.
// Requires 1 <= r_min <= r_max <= mobius.limit() and parallelism >= 1.
ScanResult run_scan(const ScanConfig& config, const MobiusTable& mobius);

// Fixed column order: r,n_r,v2_weighted_sum,nr_over_r,two_nr_over_r,
// predicted,agreement.  n_r is left empty when emit_values is false.
void write_csv(std::ostream& out, const std::vector<InvariantRecord>& records,
               bool emit_values);

// Array of objects keyed like InvariantRecord; numbers are decimal strings
// (n_r outgrows native integer formats), n_r is null when not emitted.
void write_json(std::ostream& out, const std::vector<InvariantRecord>& records,
                bool emit_values);

// Predictor-only sweep: no big integers, suitable for large ranges.  The
// even_integral fields count predicted-integral even r.
ScanSummary predictor_stats(std::uint64_t r_min, std::uint64_t r_max);

}  // namespace knotinv
