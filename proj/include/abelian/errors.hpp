#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace abelian {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A claimed prime modulus failed the primality check.
class NotPrime : public Error {
public:
    using Error::Error;
};

/// A radix shares a factor with the field characteristic, so the required
/// roots of unity do not exist.
class NonCoprime : public Error {
public:
    using Error::Error;
};

/// The requested multiplicative order does not divide the group order.
class OrderUnavailable : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Operands belong to different fields.
class FieldMismatch : public Error {
public:
    using Error::Error;
};

/// An element expected to lie in the base field has a nonzero component
/// outside it.
class NotInBaseField : public Error {
public:
    using Error::Error;
};

/// Polynomial text that violates the grammar. Carries the byte offset of
/// the offending character.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class VariableIndexOutOfRange : public Error {
public:
    using Error::Error;
};

class CoefficientOutOfField : public Error {
public:
    using Error::Error;
};

class ZeroPolynomial : public Error {
public:
    using Error::Error;
};

class ZeroDivisor : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

/// gcd(n, q) != 1: the quotient algebra is not semisimple.
class NotSemisimple : public Error {
public:
    using Error::Error;
};

/// Operands belong to different algebra contexts.
class ContextMismatch : public Error {
public:
    using Error::Error;
};

/// An index tuple lies outside the box Z_{r_1} x ... x Z_{r_s}.
class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// A quantity exceeded the desk-scale bounds this library is built for.
class Overflow : public Error {
public:
    using Error::Error;
};

/// An input document failed schema validation.
class SchemaError : public Error {
public:
    using Error::Error;
};

}  // namespace abelian
