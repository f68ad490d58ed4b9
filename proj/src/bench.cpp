#include "dl/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <json.hpp>

#include "dl/linear_engine.hpp"
#include "dl/text_io.hpp"
#include "dl/transform.hpp"

namespace dl {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

BenchRow measure(GenKind kind, std::size_t size, std::size_t repeats) {
  const Theory source = generate({kind, size});
  const std::string text = print_theory(source);
  const auto language = source.language();

  BenchRow row{kind, size, source.symbol_count()};
  std::vector<double> parse, transform, infer;
  for (std::size_t i = 0; i < std::max<std::size_t>(1, repeats); ++i) {
    auto t0 = Clock::now();
    Theory parsed = parse_theory(text);
    parse.push_back(ms_since(t0));

    t0 = Clock::now();
    Theory engine_form = to_engine_form(parsed);
    transform.push_back(ms_since(t0));

    t0 = Clock::now();
    LinearEngine engine(engine_form);
    engine.run();
    infer.push_back(ms_since(t0));

    if (i == 0) {
      row.engine_symbols = engine_form.symbol_count();
      row.peak_live_occurrences = engine.stats().initial_occurrences;
      row.occurrence_deletions = engine.stats().occurrence_deletions;
      row.conclusions = engine.conclusions(language).size();
    }
  }
  row.parse_ms = median(parse);
  row.transform_ms = median(transform);
  row.infer_ms = median(infer);
  return row;
}

}  // namespace

BenchReport bench_linearity(const std::vector<GenKind>& kinds, const std::vector<std::size_t>& sizes,
                            std::size_t repeats) {
  BenchReport report;
  report.repeats = repeats;
  for (GenKind kind : kinds)
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      report.rows.push_back(measure(kind, sizes[i], repeats));
      const auto& rows = report.rows;
      report.ratios.push_back(i == 0 ? 0.0 : rows.back().infer_ms / rows[rows.size() - 2].infer_ms);
    }
  return report;
}

std::string to_json(const BenchReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& r = report.rows[i];
    rows.push_back({{"kind", std::string(to_string(r.kind))},
                    {"size", r.size},
                    {"symbols", r.symbols},
                    {"engine_symbols", r.engine_symbols},
                    {"parse_ms", r.parse_ms},
                    {"transform_ms", r.transform_ms},
                    {"infer_ms", r.infer_ms},
                    {"peak_live_occurrences", r.peak_live_occurrences},
                    {"occurrence_deletions", r.occurrence_deletions},
                    {"conclusions", r.conclusions},
                    {"ratio", report.ratios[i] == 0.0 ? nlohmann::json(nullptr) : nlohmann::json(report.ratios[i])}});
  }
  nlohmann::json doc{{"schema", "dl-bench/1"}, {"repeats", report.repeats}, {"rows", rows}};
  return doc.dump(2) + "\n";
}

std::string to_text(const BenchReport& report) {
  std::string out = "kind      size      symbols   parse_ms  transform_ms  infer_ms  ratio\n";
  char line[160];
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& r = report.rows[i];
    std::snprintf(line, sizeof line, "%-8s %9zu %10zu %9.3f %13.3f %9.3f  %s\n", std::string(to_string(r.kind)).c_str(),
                  r.size, r.symbols, r.parse_ms, r.transform_ms, r.infer_ms,
                  report.ratios[i] == 0.0 ? "-" : std::to_string(report.ratios[i]).substr(0, 5).c_str());
    out += line;
  }
  return out;
}

}  // namespace dl
