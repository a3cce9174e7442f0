#ifndef EQSTAB_TESTS_SUBPROCESS_HPP
#define EQSTAB_TESTS_SUBPROCESS_HPP

#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace testutil {

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

inline RunResult run_command(const std::string& cmd) {
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + cmd);
  std::string output;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, got);
  int status = pclose(pipe);
  int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {exit_code, output};
}

}  // namespace testutil

#endif
