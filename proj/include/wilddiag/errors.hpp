#pragma once

#include <stdexcept>
#include <string>

namespace wilddiag {

// Exit-code mapping used by the CLI: parse=1, validation=2, internal=3.

struct parse_error : std::runtime_error {
    int line;
    int column;
    std::string message;

    parse_error(int line_, int column_, std::string message_)
        : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                             std::to_string(column_) + ": " + message_),
          line(line_),
          column(column_),
          message(std::move(message_)) {}
};

struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A broken internal invariant (evenness/divisibility assertions); always a bug.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace wilddiag
