#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "postlie/json_io.hpp"

namespace postlie::cli {

enum class Status { Ok, Violation, Error };

std::string_view to_string(Status s);
/// 0, 1, 2.
int exit_code(Status s);

struct CommandReport {
  std::string command;
  Status status = Status::Ok;
  json_io::json payload;

  json_io::json to_json() const;
};

struct VerifyCanonOptions {
  /// Applied to each representative before checking; lets tests inject a defect.
  std::function<Mat3q(const FamilyTag&, Mat3q)> transform;
};

CommandReport cmd_verify_canon(const VerifyCanonOptions& opts = {});
CommandReport cmd_classify(const std::string& path, double tol, bool witness, std::uint64_t seed);
CommandReport cmd_postlie_check(const std::string& path);
CommandReport cmd_orbit_test(const std::string& path_a, const std::string& path_b, int budget, std::uint64_t seed);
CommandReport cmd_search(const SearchOptions& opts);
CommandReport cmd_random_so3(std::uint64_t seed, bool exact);
CommandReport cmd_adjoint_rep(const std::string& path);

/// Parses argv, runs one command, writes its JSON report to out and
/// diagnostics to err. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace postlie::cli
