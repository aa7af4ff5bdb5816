#ifndef HIRZ_ERROR_HPP_
#define HIRZ_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace hirz {

/// Exit-code class carried by every engine error.
enum class ErrorClass : int {
    invalid_input = 1,
    hypotheses = 2,
    consistency = 3,
};

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, const std::string& what)
        : std::runtime_error(what), cls_(cls) {}

    ErrorClass error_class() const noexcept { return cls_; }
    int exit_code() const noexcept { return static_cast<int>(cls_); }

private:
    ErrorClass cls_;
};

/// Raised for out-of-domain arguments (negative e, a < 0 for a pushforward, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what)
        : Error(ErrorClass::invalid_input, what) {}
};

/// The inequality a rejected family parameter triple violates.
enum class ParamViolation {
    negative_e,
    negative_t,
    b_at_most_minus_two,
    b_upper_bound,
    ampleness,
};

class InvalidParams : public Error {
public:
    InvalidParams(ParamViolation v, const std::string& what)
        : Error(ErrorClass::invalid_input, what), violation_(v) {}

    ParamViolation violation() const noexcept { return violation_; }

private:
    ParamViolation violation_;
};

/// A dimension or tangent computation was requested where its vanishing hypotheses fail.
class HypothesisError : public Error {
public:
    HypothesisError(std::vector<std::string> failing, const std::string& what)
        : Error(ErrorClass::hypotheses, what), failing_(std::move(failing)) {}

    const std::vector<std::string>& failing_flags() const noexcept { return failing_; }

private:
    std::vector<std::string> failing_;
};

/// Two independent computation routes disagreed, or a fixture failed.
class ConsistencyError : public Error {
public:
    explicit ConsistencyError(const std::string& what)
        : Error(ErrorClass::consistency, what) {}
};

class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what)
        : Error(ErrorClass::consistency, "integer overflow in " + what) {}
};

inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw ConsistencyError(what);
}

} // namespace hirz

#endif // HIRZ_ERROR_HPP_
