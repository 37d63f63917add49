#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace qalg::cli {

enum class Status { Ok = 0, NoSolution = 1, InvalidInput = 2 };

/** Outcome of one command; payload is structured and schema-stable. */
struct CommandResult {
  Status status = Status::Ok;
  nlohmann::json payload = nlohmann::json::object();
  std::vector<std::string> citations;
  std::string error;  // nonempty iff status != Ok
};

/** Runs one command given argv-style arguments (program name excluded). */
CommandResult dispatch(const std::vector<std::string>& args);

/** Renders a result as a single JSON document or a text table. */
std::string render(const CommandResult& r, bool as_json);

/** Full CLI entry point: parse, dispatch, print, exit code. */
int run_main(int argc, char** argv);

}  // namespace qalg::cli
