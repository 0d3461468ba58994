#pragma once

#include <cstddef>
#include <ostream>
#include <string>

namespace phipade::cli {

struct SumJob {
  std::string series; // inline JSON, @file or -
  std::string builtin;
  std::size_t count = 0; // builtin coefficients; 0 means 2n
  std::string a = "1";
  std::string b = "1";
  int m = 1;
  int mu = 0;
  int n = 1;
  std::string grid = "0.01:100:81:log";
  unsigned precision = 50;
  std::string out;
  std::string format = "json";
};

int cmd_sum(const SumJob& job, std::ostream& out, std::ostream& diag);
int cmd_reproduce(const std::string& example, unsigned precision, const std::string& out_dir,
                  std::ostream& out, std::ostream& diag);
// fault = true corrupts a series coefficient before the matching check, as a
// negative control.
int cmd_verify(unsigned precision, bool fault, std::ostream& out);

} // namespace phipade::cli
