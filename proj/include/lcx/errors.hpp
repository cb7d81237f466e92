#pragma once

#include <stdexcept>
#include <string>

namespace lcx {

// Instance-file rejection; line is 1-based within the parsed text.
class ParseError : public std::runtime_error {
public:
    ParseError(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    int line;
};

// Refusal of an exhaustive computation whose input exceeds its budget.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// A broken internal invariant, i.e. a solver bug.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace lcx
