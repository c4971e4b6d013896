#pragma once

#include <stdexcept>
#include <string>

namespace paulidyn {

class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
  using Error::Error;
};

class ValidationError : public Error {
  using Error::Error;
};

// Raised where the logarithmic-derivative vector is undefined because some
// lambda component vanishes (or changes sign across a finite-difference
// stencil). Carries the offending axis, 0-based.
class SingularPoint : public Error {
public:
  SingularPoint(int axis, double time)
      : Error("lambda" + std::to_string(axis + 1) +
              " vanishes near t=" + std::to_string(time)),
        axis_(axis), time_(time) {}
  int axis() const { return axis_; }
  double time() const { return time_; }

private:
  int axis_;
  double time_;
};

// Tomography target is not diagonal in the Pauli basis (or not unital).
class NonPauliChannel : public Error {
public:
  explicit NonPauliChannel(double deviation)
      : Error("channel is not Pauli-diagonal (max overlap deviation " +
              std::to_string(deviation) + ")"),
        deviation_(deviation) {}
  double deviation() const { return deviation_; }

private:
  double deviation_;
};

class ScheduleError : public Error {
  using Error::Error;
};

// Synthesis target leaves the completely positive region.
class NonCpTarget : public Error {
public:
  explicit NonCpTarget(double t_first)
      : Error("target is not completely positive at t=" +
              std::to_string(t_first)),
        t_first_(t_first) {}
  double t_first() const { return t_first_; }

private:
  double t_first_;
};

} // namespace paulidyn
