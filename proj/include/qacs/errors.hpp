#ifndef QACS_ERRORS_HPP
#define QACS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qacs {

/* Base class for all arithmetic and verification errors thrown by the
 * library. Precondition violations on plain arguments (negative orders,
 * empty value lists, ...) throw std::invalid_argument instead. */
class Error : public std::runtime_error {
  public:
	explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/* Inverting zero, dividing by zero, or a vanishing denominator. */
class DivisionByZero : public Error {
  public:
	explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/* invert_unit on a series whose constant coefficient is not invertible. */
class NonUnitConstant : public Error {
  public:
	explicit NonUnitConstant(const std::string& what) : Error(what) {}
};

/* rational_part on a cyclotomic number with a nonzero power of the root. */
class NonRationalValue : public Error {
  public:
	explicit NonRationalValue(const std::string& what) : Error(what) {}
};

/* A series that is provably Galois-symmetric failed to project onto the
 * rationals; always an implementation bug, never a math failure. */
class SymmetrizationFailure : public Error {
  public:
	explicit SymmetrizationFailure(const std::string& what) : Error(what) {}
};

/* A recurrence driver handed to an operation that cannot evaluate it. */
class UnsupportedDriver : public Error {
  public:
	explicit UnsupportedDriver(const std::string& what) : Error(what) {}
};

} // namespace qacs

#endif
