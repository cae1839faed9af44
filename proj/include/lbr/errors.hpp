#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lbr {

enum class ErrorKind {
    ZeroDenominator,
    DivisionByZero,
    OutsideDomain,
    IdenticallyZeroDenominator,
    UnsupportedDimension,
    IncompatibleTowers,
    ConstantArc,
    UnboundedArc,
    ArcInsideIndeterminacy,
    NotLocallyBounded,
    NotIndeterminate,
    Precondition,
    DepthExceeded,
    Exhausted,
    Syntax,
    InternalInvariant,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& what)
        : Error(ErrorKind::Syntax, what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class DepthExceeded : public Error {
public:
    explicit DepthExceeded(unsigned limit)
        : Error(ErrorKind::DepthExceeded, "resolution depth limit " + std::to_string(limit) + " exceeded"),
          limit_(limit) {}
    unsigned limit() const noexcept { return limit_; }

private:
    unsigned limit_;
};

[[noreturn]] inline void invariant_failure(const std::string& what) {
    throw Error(ErrorKind::InternalInvariant, "internal invariant violated: " + what);
}

#define LBR_ENSURE(cond, msg)                                 \
    do {                                                      \
        if (!(cond)) ::lbr::invariant_failure(msg);           \
    } while (false)

}  // namespace lbr
