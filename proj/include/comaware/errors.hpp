#ifndef COMAWARE_ERRORS_HPP
#define COMAWARE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace comaware {

/// Parameter validation failure. Carries one message per violated invariant,
/// each prefixed with the offending field name.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(std::vector<std::string> issues)
        : std::invalid_argument(join(issues)), issues_(std::move(issues)) {}

    const std::vector<std::string>& issues() const noexcept { return issues_; }

private:
    static std::string join(const std::vector<std::string>& issues) {
        std::string out = "invalid parameters:";
        for (const auto& s : issues) {
            out += "\n  ";
            out += s;
        }
        return out;
    }

    std::vector<std::string> issues_;
};

/// A statistic is not defined for the given input (e.g. APL of an edgeless graph).
class UndefinedValueError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Too few samples in the tail for a power-law fit.
class InsufficientDataError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Growth did not reach m edges within the timestep budget.
class NonConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Well-formed input that violates graph invariants (self-loops, duplicate edges).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace comaware

#endif // COMAWARE_ERRORS_HPP
