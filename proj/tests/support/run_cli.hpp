#ifndef PCLIE_TESTS_SUPPORT_RUN_CLI_HPP
#define PCLIE_TESTS_SUPPORT_RUN_CLI_HPP

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>
#include <vector>

namespace pclie::testing {

struct CliResult {
  int status = -1;
  std::string out;
};

inline std::string shell_quote(const std::string& s) {
  std::string r = "'";
  for (char ch : s) r += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
  return r + "'";
}

/// Runs the binary with the given arguments; stderr is discarded.
inline CliResult run_cli(const std::string& binary, const std::vector<std::string>& args) {
  std::string cmd = shell_quote(binary);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace pclie::testing

#endif  // PCLIE_TESTS_SUPPORT_RUN_CLI_HPP
