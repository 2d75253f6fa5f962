#pragma once

#include <stdexcept>
#include <string>

namespace qca {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (shape, range, missing data).
class PreconditionViolation : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public PreconditionViolation {
public:
  using PreconditionViolation::PreconditionViolation;
};

/// A mathematical statement failed: the input is well-formed but the
/// requested object does not exist, or an identity that should hold did not.
class MathError : public Error {
public:
  using Error::Error;
};

#define QCA_DECLARE_MATH_ERROR(Name)                                            \
  class Name : public MathError {                                              \
  public:                                                                      \
    using MathError::MathError;                                                \
  }

QCA_DECLARE_MATH_ERROR(DivisionByZero);
QCA_DECLARE_MATH_ERROR(ZeroElement);
QCA_DECLARE_MATH_ERROR(Inhomogeneous);
QCA_DECLARE_MATH_ERROR(KernelVector);
QCA_DECLARE_MATH_ERROR(PositiveDegree);
QCA_DECLARE_MATH_ERROR(NotDivisible);
QCA_DECLARE_MATH_ERROR(NonIntegralQuotient);
QCA_DECLARE_MATH_ERROR(InvalidDirection);
QCA_DECLARE_MATH_ERROR(NotSkewSymmetrizable);
QCA_DECLARE_MATH_ERROR(NotCompatible);
QCA_DECLARE_MATH_ERROR(NonPositiveD);
QCA_DECLARE_MATH_ERROR(NotGraded);
QCA_DECLARE_MATH_ERROR(NoSolution);
QCA_DECLARE_MATH_ERROR(NonInvertibleEntry);
QCA_DECLARE_MATH_ERROR(LaurentViolation);
QCA_DECLARE_MATH_ERROR(ShapeViolation);
QCA_DECLARE_MATH_ERROR(BarViolation);
QCA_DECLARE_MATH_ERROR(NotCartan);
QCA_DECLARE_MATH_ERROR(NotSymmetrizable);
QCA_DECLARE_MATH_ERROR(IdentityFailure);
QCA_DECLARE_MATH_ERROR(InvariantViolation);
QCA_DECLARE_MATH_ERROR(Overflow);

#undef QCA_DECLARE_MATH_ERROR

/// Broken internal invariant; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace qca
