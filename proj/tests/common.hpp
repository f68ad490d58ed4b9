#pragma once

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "dl/reference.hpp"
#include "dl/text_io.hpp"
#include "dl/theory.hpp"

namespace dl {

// Readable gtest failure messages.
inline void PrintTo(const ConclusionSet& c, std::ostream* os) { *os << "\n" << print_conclusions(c, false, true); }
inline void PrintTo(const Theory& t, std::ostream* os) { *os << "\n" << print_theory(t); }

}  // namespace dl

namespace dl::test {

inline std::string read_theory_file(const std::string& name) {
  std::ifstream in(std::string(DL_THEORY_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Theory load(const std::string& name) { return parse_theory(read_theory_file(name)); }

inline Theory parse(const std::string& text) { return parse_theory(text); }

// External conclusions as printed lines, for compact comparisons.
inline std::string lines(const ConclusionSet& c) { return print_conclusions(c.external()); }

struct Run {
  int exit_code;
  std::string out;
};

// Runs the dl binary with the given argument string; stderr is discarded.
inline Run run_dl(const std::string& args) {
  const std::string cmd = std::string(DL_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  Run r{-1, {}};
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace dl::test
