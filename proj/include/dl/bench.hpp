#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dl/generate.hpp"

namespace dl {

struct BenchRow {
  GenKind kind = GenKind::Chain;
  std::size_t size = 0;               // generator parameter
  std::size_t symbols = 0;            // size of the source theory
  std::size_t engine_symbols = 0;     // size after to_engine_form
  double parse_ms = 0;                // median, reported separately
  double transform_ms = 0;            // median
  double infer_ms = 0;                // median of build + initialize + run
  std::size_t peak_live_occurrences = 0;
  std::size_t occurrence_deletions = 0;
  std::size_t conclusions = 0;        // external conclusions over the source language
};

struct BenchReport {
  std::size_t repeats = 0;
  std::vector<BenchRow> rows;
  // ratios[i] = infer_ms(rows[i]) / infer_ms(rows[i-1]) within one kind;
  // 0 for the first row of each kind.
  std::vector<double> ratios;
};

// Times the linear engine on generated theories.  Repeats run sequentially.
BenchReport bench_linearity(const std::vector<GenKind>& kinds, const std::vector<std::size_t>& sizes,
                            std::size_t repeats);

// {"schema":"dl-bench/1", ...}
std::string to_json(const BenchReport& report);
std::string to_text(const BenchReport& report);

}  // namespace dl
