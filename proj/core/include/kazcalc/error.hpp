#ifndef KAZCALC_ERROR_HPP
#define KAZCALC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace kazcalc
{

// Caller supplied an argument outside an operation's precondition.
class UsageError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A requested degree lies beyond the truncation of the series involved.
class TruncationError : public UsageError
{
public:
    TruncationError(int truncation, int required)
        : UsageError("truncation " + std::to_string(truncation) + " is too small; need at least "
                     + std::to_string(required)),
          truncation_(truncation), required_(required)
    {
    }

    int truncation() const noexcept { return truncation_; }
    int required() const noexcept { return required_; }

private:
    int truncation_;
    int required_;
};

// Two routes that must agree exactly did not (e.g. a d1 image does not match its target).
class ConsistencyError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace kazcalc

#endif
