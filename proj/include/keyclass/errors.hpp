#pragma once

#include <stdexcept>
#include <string>

namespace keyclass {

// Base for all errors raised by the library. The CLI maps these to exit
// code 1 (input error) unless a more specific subclass says otherwise.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad argument to a library operation (empty graph, mismatched table sizes, ...).
class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& msg) : Error(msg) {}
};

// Malformed input text. Carries the source file (may be empty for in-memory
// text) and the 1-based line the scanner was on.
class ParseError : public Error {
public:
    ParseError(std::string file, int line, const std::string& msg)
        : Error(format(file, line, msg)), file_(std::move(file)), line_(line) {}

    const std::string& file() const { return file_; }
    int line() const { return line_; }

private:
    static std::string format(const std::string& file, int line, const std::string& msg) {
        std::string where = file.empty() ? std::string("<input>") : file;
        return where + ":" + std::to_string(line) + ": " + msg;
    }

    std::string file_;
    int line_;
};

// Inconsistent class model (duplicate qualified names, inheritance cycles, ...).
class ModelError : public Error {
public:
    explicit ModelError(const std::string& msg) : Error(msg) {}
};

// Input was syntactically fine but there is nothing to analyze. Exit code 2.
class EmptyInputError : public Error {
public:
    explicit EmptyInputError(const std::string& msg) : Error(msg) {}
};

// A cross-check inside the tool failed. Exit code 3.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace keyclass
