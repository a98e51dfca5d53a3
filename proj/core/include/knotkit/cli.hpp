#pragma once

#include <string>
#include <vector>

namespace knotkit::cli {

enum class Status { Ok, DomainFault, UsageFault };

// Outcome of one invocation. Successful commands carry exactly one JSON
// document (byte-deterministic for identical argv); failures carry
// diagnostics only. Exit codes: 0 ok, 1 domain error, 2 usage error.
struct CommandResult {
  Status status = Status::Ok;
  std::string payload_json;
  std::string payload_text;  // set for --format text and for help output
  std::vector<std::string> diagnostics;

  int exit_code() const;
};

// args excludes the program name.
CommandResult dispatch(const std::vector<std::string>& args);

// Prints the payload to stdout and diagnostics to stderr.
int run_main(int argc, char** argv);

}  // namespace knotkit::cli
