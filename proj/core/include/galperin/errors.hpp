#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace galperin {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad argument or violated precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An interval predicate (sign, comparison, floor) cannot be decided at the
/// current working precision. Callers that own a precision loop catch this
/// and retry with more bits.
class AmbiguousPredicate : public Error {
public:
    using Error::Error;
};

/// Precision escalation reached the configured cap without a decision.
class PrecisionExhausted : public Error {
public:
    PrecisionExhausted(const std::string& what, long cap_bits)
        : Error(what), cap_bits_(cap_bits) {}
    long cap_bits() const noexcept { return cap_bits_; }

private:
    long cap_bits_;
};

/// pi / arctan(b^-N) is an integer (certified) or indistinguishable from one
/// at the precision cap. The counting formula then exceeds the physical count
/// by one; formula_value() is the formula result.
class SubmultipleDegeneracy : public Error {
public:
    SubmultipleDegeneracy(const std::string& what, mpz_class formula_value, bool certified)
        : Error(what), value_(std::move(formula_value)), certified_(certified) {}
    const mpz_class& formula_value() const noexcept { return value_; }
    bool certified() const noexcept { return certified_; }

private:
    mpz_class value_;
    bool certified_;
};

/// A digit of a positional expansion sits on a boundary that cannot be
/// resolved below the precision cap.
class FloorAmbiguity : public Error {
public:
    FloorAmbiguity(const std::string& what, long position)
        : Error(what), position_(position) {}
    long position() const noexcept { return position_; }

private:
    long position_;
};

/// A collision routine was handed a state that is not at the matching contact.
class NotCollisionInstant : public Error {
public:
    using Error::Error;
};

/// Ball-ball and ball-wall contacts happen at the same instant.
class TripleCollision : public Error {
public:
    using Error::Error;
};

}  // namespace galperin
