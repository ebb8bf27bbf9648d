#pragma once

// Command-line frontend: one subcommand per invocation, or JSON requests
// read line by line from an input stream in batch mode.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bsn::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kInternalError = 3,
};

struct Request {
    std::string cmd;
    std::int64_t n = 2;
    std::vector<std::string> args;
    std::optional<std::string> endo;
    std::optional<std::string> alpha;
    std::optional<std::string> u;
    std::optional<std::string> v;
    std::optional<std::string> afix;
    std::optional<std::string> g1;
    std::optional<std::string> g2;
    std::optional<std::string> A;
    std::optional<std::string> B;
    std::optional<std::string> C;
    std::optional<std::string> box;
    bool json = false;
};

struct Response {
    int code = kOk;
    std::string text;     // text-mode rendering
    nlohmann::json body;  // JSON-mode rendering
};

/// Reads a batch line {"cmd": .., "n": .., "args": [..], "endo": .., ...}.
/// Numbers are accepted for n, A, B, C; everything else is a string.
Request request_from_json(const nlohmann::json& j, std::int64_t default_n);

/// Runs one request. Never throws: errors become nonzero codes with a
/// message in text and {"error": ..} in body.
Response execute(const Request& req);

/// Full command line; argv[0] is the program name.
int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace bsn::cli
