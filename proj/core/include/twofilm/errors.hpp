#pragma once

#include <stdexcept>
#include <string>

namespace twofilm {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A state component is outside the domain of a formula (non-positive height
/// or concentration gradient, non-finite value).
class DomainError : public Error {
public:
  using Error::Error;
};

/// An argument is outside the accepted range (bad field index, non-positive
/// curve parameter, invalid grid or scheme setting).
class ArgumentError : public Error {
public:
  using Error::Error;
};

/// A wave-curve parameter lies on the wrong side of the left state, e.g. a
/// 2-rarefaction towards smaller fb.
class BranchError : public Error {
public:
  using Error::Error;
};

/// No sign change could be established for a scalar root problem. Carries
/// the residuals at the bracket ends that were last tried.
class NoRootError : public Error {
public:
  NoRootError(const std::string& what, double lo, double hi, double f_lo, double f_hi)
      : Error(what), lo_(lo), hi_(hi), f_lo_(f_lo), f_hi_(f_hi) {}

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double f_lo() const noexcept { return f_lo_; }
  double f_hi() const noexcept { return f_hi_; }

private:
  double lo_, hi_, f_lo_, f_hi_;
};

/// The invariant coordinates admit no state on the hyperbolic branch.
class InversionError : public Error {
public:
  using Error::Error;
};

/// Wave speeds of an assembled Riemann fan are not monotone.
class OrderingError : public Error {
public:
  OrderingError(const std::string& what, int wave_before, int wave_after)
      : Error(what), before_(wave_before), after_(wave_after) {}

  int wave_before() const noexcept { return before_; }
  int wave_after() const noexcept { return after_; }

private:
  int before_, after_;
};

/// A finite-volume update produced a cell that is not Positive-admissible.
class AdmissibilityAbort : public Error {
public:
  AdmissibilityAbort(const std::string& what, int cell, double time)
      : Error(what), cell_(cell), time_(time) {}

  int cell() const noexcept { return cell_; }
  double time() const noexcept { return time_; }

private:
  int cell_;
  double time_;
};

}  // namespace twofilm
