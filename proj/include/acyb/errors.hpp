#pragma once

#include <stdexcept>
#include <string>

namespace acyb {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct IncompatibleCyclotomicOrders : Error {
    IncompatibleCyclotomicOrders(unsigned a, unsigned b)
        : Error("incompatible cyclotomic orders " + std::to_string(a) + " and " + std::to_string(b)) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

struct InvalidMetric : Error {
    explicit InvalidMetric(const std::string& what) : Error("invalid metric: " + what) {}
};

struct SingularGram : Error {
    SingularGram() : Error("gram matrix is singular") {}
};

struct SingularSystem : Error {
    SingularSystem() : Error("linear system is singular or inconsistent") {}
};

struct IncompatibleCoefficients : Error {
    explicit IncompatibleCoefficients(const std::string& what) : Error("incompatible coefficients: " + what) {}
};

struct NotAUnit : Error {
    NotAUnit() : Error("series is not a unit: constant term vanishes") {}
};

struct NonvanishingConstantTerm : Error {
    NonvanishingConstantTerm() : Error("substitution series has nonvanishing constant term") {}
};

struct NotDivisible : Error {
    explicit NotDivisible(const std::string& what) : Error("not divisible: " + what) {}
};

struct ParameterMismatch : Error {
    explicit ParameterMismatch(const std::string& what) : Error("parameter mismatch: " + what) {}
};

struct WindowTooSmall : Error {
    explicit WindowTooSmall(const std::string& what) : Error("window too small: " + what) {}
};

struct TruncationTooSmall : Error {
    explicit TruncationTooSmall(const std::string& what) : Error("truncation too small: " + what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error("index out of range: " + what) {}
};

struct DiagonalVanishes : Error {
    DiagonalVanishes() : Error("diagonal restriction vanishes through the truncation order") {}
};

struct NonPolynomialTail : Error {
    explicit NonPolynomialTail(const std::string& what) : Error("non-polynomial tail: " + what) {}
};

struct EigencomponentMismatch : Error {
    explicit EigencomponentMismatch(const std::string& what) : Error("eigencomponent mismatch: " + what) {}
};

struct PoleDoesNotCancel : Error {
    explicit PoleDoesNotCancel(const std::string& what) : Error("pole does not cancel: " + what) {}
};

struct CategoryMismatch : Error {
    explicit CategoryMismatch(const std::string& what) : Error("category mismatch: " + what) {}
};

struct NotComplementary : Error {
    explicit NotComplementary(const std::string& what) : Error("not complementary: " + what) {}
};

struct InvalidPair : Error {
    explicit InvalidPair(const std::string& what) : Error("invalid pair: " + what) {}
};

struct NotInOrder : Error {
    explicit NotInOrder(const std::string& what) : Error("not contained in the order: " + what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

} // namespace acyb
