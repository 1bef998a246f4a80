#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uswsim {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Contract violation on a graph operation: dead or unknown vertex,
// self loop, removing an edge that is not there, and the like.
class GraphError : public Error {
public:
    using Error::Error;
};

// Malformed edge list or config input. line() is 1-based, 0 if unknown.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
    ParseError(const std::string& msg, std::size_t line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    // rewraps an already formatted message without tagging the line again
    static ParseError wrap(const std::string& formatted, std::size_t line) {
        ParseError e(formatted);
        e.line_ = line;
        return e;
    }
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_ = 0;
};

// An operation that requires a connected graph got a disconnected one.
class DisconnectedInput : public Error {
public:
    using Error::Error;
};

// Attack profile token that does not name a valid strategy, e.g. "D-E-H".
class InvalidProfile : public Error {
public:
    using Error::Error;
};

// A generator kept producing disconnected graphs until its retry budget
// ran out.
class RetryExhausted : public Error {
public:
    using Error::Error;
};

// attack_until_disconnected hit its shot budget (or ran out of targets)
// with the graph still connected. Carries how many shots were fired.
class ShotLimitExceeded : public Error {
public:
    explicit ShotLimitExceeded(std::size_t shots)
        : Error("graph still connected after " + std::to_string(shots) + " removals"),
          shots_(shots) {}
    std::size_t shots_taken() const noexcept { return shots_; }

private:
    std::size_t shots_;
};

// A repair policy asked for the rewiring strategy on a graph whose
// construction parameters are unknown.
class MissingUswParams : public Error {
public:
    using Error::Error;
};

// A value outside an operation's domain: metric on too few vertices,
// unknown family token, bad policy name, and the like.
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace uswsim
