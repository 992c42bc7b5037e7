#ifndef LOWMACH_CORE_ERRORS_HPP
#define LOWMACH_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lowmach {

// Non-positive density or internal energy detected in a field.
class AdmissibilityError : public std::runtime_error {
public:
  AdmissibilityError(const std::string& what, long cell)
      : std::runtime_error(what), cell_(cell) {}
  long cell() const { return cell_; }

private:
  long cell_;
};

// A Riemann fan produced a non-positive star specific volume or internal
// energy. Signals that the relaxation parameter was too small for the data.
class PositivityBreach : public std::runtime_error {
public:
  PositivityBreach(const std::string& what, long interface_index)
      : std::runtime_error(what), interface_(interface_index) {}
  long interface_index() const { return interface_; }

private:
  long interface_;
};

// Linear solver failed to reach the requested residual.
class SolverError : public std::runtime_error {
public:
  SolverError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

private:
  double residual_;
};

class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lowmach

#endif
