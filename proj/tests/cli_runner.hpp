#pragma once

// Runs the a1u executable through the shell and captures stdout and the exit
// code. stderr is discarded.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace a1u::test {

struct CliRun {
  std::string out;
  int code = -1;
};

inline CliRun run_cli(const std::string& args) {
  const std::string command = std::string("'") + A1U_CLI_PATH + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("cannot start " + command);
  CliRun r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace a1u::test
