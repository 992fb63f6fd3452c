#pragma once

// Job descriptions for the command-line front end: validation and dispatch.

#include <optional>
#include <string>
#include <vector>

#include "injdim/io.hpp"

namespace injdim {

/// Schema violation; path is a JSON pointer such as "/algebra/p".
class InputError : public Error {
 public:
  InputError(std::string path, const std::string& what)
      : Error("at " + (path.empty() ? std::string("/") : path) + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

enum class Command { Resolve, Ext, Operators, Koszul, CheckFid, Verify };

struct JobSpec {
  Command command = Command::Resolve;
  std::string command_name;
  /// Null for a verify job without an explicit algebra.
  AlgebraPtr algebra;
  std::optional<Module> module;
  std::optional<Complex> complex;
  int bound = 12;
  std::uint64_t seed = 7;
  std::string format = "json";
  std::size_t count = 50;
  std::size_t complexes = 0;
  std::vector<std::string> zoo;  // empty selects the default zoo
  unsigned jobs = 1;
  OperatorFamily family = OperatorFamily::Auto;
  bool timings = false;
};

/// Throws InputError for malformed JSON, schema violations, unknown commands
/// and invalid algebras or modules.
JobSpec parse_input(const std::string& document);
JobSpec parse_input(const Json& document);

/// Splits "ci(2;2,2), group(2;4)" at the top-level commas.
std::vector<std::string> split_zoo_list(const std::string& list);

struct JobResult {
  /// 0 on success, 2 when a consistency violation was found.
  int exit_code = 0;
  Json document;
};

/// Throws Error when the requested computation does not apply to the input.
JobResult run(const JobSpec& job);

/// The document in the job's output format, newline terminated.
std::string render(const JobSpec& job, const JobResult& result);

}  // namespace injdim
