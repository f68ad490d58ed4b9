// dl: command-line front end for the defeasible logic engines.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 parse error,
// 3 invalid theory, 4 engine disagreement.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dl/bench.hpp"
#include "dl/generate.hpp"
#include "dl/linear_engine.hpp"
#include "dl/reference.hpp"
#include "dl/text_io.hpp"
#include "dl/transform.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kInvalid = 3, kDisagree = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

dl::Theory load(const std::string& path, bool allow_reserved) {
  return dl::parse_theory(read_file(path), {allow_reserved});
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct InferArgs {
  std::string file;
  std::string engine = "linear";
  bool all = false, extended = false, residue = false, stats = false, allow_reserved = false;
  std::string queries;
};

int cmd_infer(const InferArgs& a) {
  const dl::Theory source = load(a.file, a.allow_reserved);
  const auto sigma = source.language();
  dl::ConclusionSet result;
  std::optional<dl::Theory> residue;
  const auto t0 = std::chrono::steady_clock::now();

  if (a.engine == "linear") {
    const dl::Theory engine_form = dl::to_engine_form(source);
    const double transform_ms = ms_since(t0);
    const auto t1 = std::chrono::steady_clock::now();
    dl::LinearEngine engine(engine_form);
    engine.run();
    const double infer_ms = ms_since(t1);
    result = engine.conclusions(sigma, a.extended);
    if (a.residue) residue = engine.residue();
    if (a.stats) {
      const auto& s = engine.stats();
      std::cerr << "symbols " << source.symbol_count() << "\n"
                << "engine_symbols " << engine_form.symbol_count() << "\n"
                << "literals " << s.literals << "\n"
                << "rules " << s.rules << "\n"
                << "initial_occurrences " << s.initial_occurrences << "\n"
                << "occurrence_deletions " << s.occurrence_deletions << "\n"
                << "rule_deletions " << s.rule_deletions << "\n"
                << "enqueues " << s.enqueues << "\n"
                << "transform_ms " << transform_ms << "\n"
                << "infer_ms " << infer_ms << "\n";
    }
  } else if (a.engine == "transition") {
    dl::TransitionSystem ts(dl::to_engine_form(source));
    ts.run();
    auto all = ts.extended_conclusions();
    result = all.restricted_to(sigma, a.extended);
    if (a.residue) residue = ts.current_theory();
    if (a.stats) std::cerr << "transitions " << ts.transitions_applied() << "\n";
  } else if (a.engine == "oracle") {
    result = dl::run_oracle(source).conclusions.restricted_to(sigma);
    if (a.residue) std::cerr << "note: the oracle does not simplify the theory; no residue\n";
    if (a.stats) std::cerr << "conclusions " << result.size() << "\n";
  } else {
    throw UsageError("unknown engine '" + a.engine + "' (linear|transition|oracle)");
  }

  std::string text = dl::print_conclusions(result, a.all, a.extended);
  if (!a.queries.empty()) {
    std::set<std::string> wanted;
    for (const auto& q : split(a.queries, ',')) wanted.insert(dl::lit(q).str());
    std::string filtered;
    for (const auto& line : split(text, '\n'))
      if (wanted.count(line.substr(line.find(' ') + 1))) filtered += line + "\n";
    text = std::move(filtered);
  }
  std::cout << text;
  if (residue) std::cout << "# residue\n" << dl::print_theory(*residue);
  return kOk;
}

int cmd_transform(const std::string& file, const std::string& stage, const std::string& out, bool allow_reserved) {
  static const std::map<std::string, dl::Stage> stages{
      {"prune", dl::Stage::Prune}, {"dup", dl::Stage::Dup}, {"nosup", dl::Stage::NoSup}, {"engine", dl::Stage::Engine}};
  auto it = stages.find(stage);
  if (it == stages.end()) throw UsageError("unknown stage '" + stage + "' (prune|dup|nosup|engine)");
  write_output(out, dl::print_theory(dl::transform(load(file, allow_reserved), it->second)));
  return kOk;
}

int cmd_check(const std::string& file, bool allow_reserved) {
  const dl::Theory t = load(file, allow_reserved);
  std::cout << "ok: " << t.facts().size() << " facts, " << t.rules().size() << " rules, " << t.superiority().size()
            << " superiority pairs, " << t.symbol_count() << " symbols\n";
  return kOk;
}

int cmd_gen(const std::string& kind, std::size_t size, std::uint64_t seed, std::size_t branching,
            const std::string& out) {
  auto k = dl::parse_gen_kind(kind);
  if (!k) throw UsageError("unknown generator '" + kind + "' (chain|circle|tree|teams|dag|random)");
  dl::Theory t;
  try {
    t = dl::generate({*k, size, seed, branching});
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  write_output(out, dl::print_theory(t));
  return kOk;
}

int cmd_bench(const std::string& kinds, const std::string& sizes, std::size_t repeats, bool json) {
  std::vector<dl::GenKind> ks;
  for (const auto& k : split(kinds, ',')) {
    auto parsed = dl::parse_gen_kind(k);
    if (!parsed) throw UsageError("unknown generator '" + k + "'");
    ks.push_back(*parsed);
  }
  std::vector<std::size_t> ns;
  for (const auto& s : split(sizes, ',')) ns.push_back(std::stoull(s));
  if (ks.empty() || ns.empty()) throw UsageError("bench needs --kinds and --sizes");
  const auto report = dl::bench_linearity(ks, ns, repeats);
  std::cout << (json ? dl::to_json(report) : dl::to_text(report));
  return kOk;
}

int cmd_diff(const std::string& file, std::size_t corpus, std::uint64_t seed, bool allow_reserved) {
  if (file.empty() && corpus == 0) throw UsageError("diff needs a FILE or --seed-corpus N");
  if (!file.empty()) {
    const auto c = dl::compare_engines(load(file, allow_reserved));
    std::cout << dl::describe(c) << "\n";
    if (!c.agree) return kDisagree;
  }
  for (std::size_t i = 0; i < corpus; ++i) {
    const dl::Theory t = dl::random_theory(seed + i);
    const auto c = dl::compare_engines(t);
    if (!c.agree) {
      std::cout << "seed " << seed + i << ": " << dl::describe(c) << "\n" << dl::print_theory(t);
      return kDisagree;
    }
  }
  if (corpus) std::cout << corpus << " random theories: 3 engines agree (restricted to \xCE\xA3)\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear-time defeasible logic inference"};
  app.require_subcommand(1);
  bool allow_reserved = false;
  app.add_flag("--allow-reserved", allow_reserved, "Accept names containing '__' (generated theories)");

  InferArgs infer;
  auto* infer_cmd = app.add_subcommand("infer", "Compute the conclusions of a theory");
  infer_cmd->add_option("FILE", infer.file)->required();
  infer_cmd->add_option("--engine", infer.engine, "linear|transition|oracle");
  infer_cmd->add_flag("--all", infer.all, "Print ?D/?d for undetermined literals");
  infer_cmd->add_flag("--extended", infer.extended, "Include sigma/tau tags");
  infer_cmd->add_flag("--residue", infer.residue, "Print the simplified rules left after inference");
  infer_cmd->add_flag("--stats", infer.stats, "Work counters and timings on stderr");
  infer_cmd->add_option("--queries", infer.queries, "Comma-separated literals to report");

  std::string file, out, stage = "engine";
  auto* transform_cmd = app.add_subcommand("transform", "Rewrite a theory into engine form");
  transform_cmd->add_option("FILE", file)->required();
  transform_cmd->add_option("--stage", stage, "prune|dup|nosup|engine");
  transform_cmd->add_option("-o", out, "Output file (default stdout)");

  auto* check_cmd = app.add_subcommand("check", "Validate a theory file");
  check_cmd->add_option("FILE", file)->required();

  std::string kind;
  std::size_t size = 0, branching = 2;
  std::uint64_t seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a theory");
  gen_cmd->add_option("KIND", kind, "chain|circle|tree|teams|dag|random")->required();
  gen_cmd->add_option("--size", size)->required();
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--branching", branching);
  gen_cmd->add_option("-o", out, "Output file (default stdout)");

  std::string kinds = "chain", sizes;
  std::size_t repeats = 5;
  bool json = false;
  auto* bench_cmd = app.add_subcommand("bench", "Time the linear engine over doubling sizes");
  bench_cmd->add_option("--kinds", kinds);
  bench_cmd->add_option("--sizes", sizes)->required();
  bench_cmd->add_option("--repeat", repeats);
  bench_cmd->add_flag("--json", json);

  std::size_t corpus = 0;
  auto* diff_cmd = app.add_subcommand("diff", "Compare oracle, transition system and linear engine");
  diff_cmd->add_option("FILE", file);
  diff_cmd->add_option("--seed-corpus", corpus, "Also check N seeded random theories");
  diff_cmd->add_option("--seed", seed, "First corpus seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*infer_cmd) {
      infer.allow_reserved = allow_reserved;
      return cmd_infer(infer);
    }
    if (*transform_cmd) return cmd_transform(file, stage, out, allow_reserved);
    if (*check_cmd) return cmd_check(file, allow_reserved);
    if (*gen_cmd) return cmd_gen(kind, size, seed, branching, out);
    if (*bench_cmd) return cmd_bench(kinds, sizes, repeats, json);
    if (*diff_cmd) return cmd_diff(file, corpus, seed, allow_reserved);
  } catch (const UsageError& e) {
    std::cerr << "dl: " << e.what() << "\n";
    return kUsage;
  } catch (const dl::ParseError& e) {
    std::cerr << "dl: " << e.what() << " [" << dl::to_string(e.kind()) << "]\n";
    return e.kind() == dl::ParseErrorKind::Syntax ? kParse : kInvalid;
  } catch (const dl::TheoryError& e) {
    std::cerr << "dl: " << e.what() << " [" << dl::to_string(e.kind()) << "]\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "dl: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
