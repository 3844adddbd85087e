#pragma once

#include <stdexcept>
#include <string>

namespace mvlab {

// A parameter tuple violates a structural constraint (family ranges, k >= 2, ...).
class ConstraintError : public std::invalid_argument {
public:
    ConstraintError(std::string constraint, const std::string& detail)
        : std::invalid_argument(constraint + ": " + detail), constraint_(std::move(constraint)) {}

    const std::string& constraint() const noexcept { return constraint_; }

private:
    std::string constraint_;
};

// An object is used outside the domain it belongs to (foreign vertex, wrong family kind).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A closed formula is queried outside the parameter range it is proven for.
class PreconditionError : public std::invalid_argument {
public:
    PreconditionError(std::string clause, const std::string& detail)
        : std::invalid_argument(clause + ": " + detail), clause_(std::move(clause)) {}

    const std::string& clause() const noexcept { return clause_; }

private:
    std::string clause_;
};

} // namespace mvlab
