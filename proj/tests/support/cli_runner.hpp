#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <sys/wait.h>

namespace octa::testing {

struct CliResult {
  std::string out;
  int exit_code = -1;
};

/// Runs `<binary> <args>` through the shell; `args` is already shell-quoted.
inline CliResult run_cli(const std::string& binary, const std::string& args, const std::string& stdin_text = {}) {
  std::string cmd = "'" + binary + "' " + args;
  if (!stdin_text.empty()) {
    cmd = "printf '%s' '" + stdin_text + "' | " + cmd;
  }
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + cmd);
  CliResult r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct GoldenCase {
  std::string name;
  std::string args;
};

/// Reads `name | args` lines; '#' starts a comment.
inline std::vector<GoldenCase> golden_cases(const std::string& dir) {
  std::ifstream in(dir + "/commands.txt");
  if (!in) throw std::runtime_error("missing " + dir + "/commands.txt");
  std::vector<GoldenCase> cases;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto bar = line.find('|');
    if (bar == std::string::npos) continue;
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(' '));
      s.erase(s.find_last_not_of(' ') + 1);
      return s;
    };
    cases.push_back({trim(line.substr(0, bar)), trim(line.substr(bar + 1))});
  }
  return cases;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace octa::testing
