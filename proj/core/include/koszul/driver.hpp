#pragma once

#include <map>
#include <string>
#include <vector>

#include "koszul/report.hpp"

namespace koszul {

// One toolkit invocation after flag parsing: the command name, its
// positional arguments, and option values still in string form. The driver
// validates everything itself so front ends stay thin.
struct JobSpec {
  std::string command;
  std::vector<std::string> args;
  std::map<std::string, std::string> options;

  bool has(const std::string& key) const { return options.count(key) != 0; }
};

// Dispatches to the library and assembles the report. Throws Error; the
// caller maps ErrorKind to the process exit code.
Report run_job(const JobSpec& job);

}  // namespace koszul
