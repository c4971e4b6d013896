#include "paulidyn/trajectory.hpp"

#include <algorithm>
#include <cmath>

#include "paulidyn/errors.hpp"

namespace paulidyn {

Trajectory Trajectory::checked(std::vector<double> times,
                               std::vector<PauliTriple> samples) {
  if (times.size() != samples.size())
    throw ValidationError("trajectory times and samples differ in length");
  if (times.size() < 1)
    throw ValidationError("trajectory must have at least one sample");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw ValidationError("trajectory times must be strictly increasing");
  if (times.front() == 0.0) {
    const PauliTriple& s0 = samples.front();
    if (std::abs(s0.lambda1 - 1.0) > 1e-12 ||
        std::abs(s0.lambda2 - 1.0) > 1e-12 ||
        std::abs(s0.lambda3 - 1.0) > 1e-12)
      throw ValidationError(
          "trajectory starting at t=0 must begin at the identity triple");
  }
  return Trajectory{std::move(times), std::move(samples)};
}

PauliTriple Trajectory::interpolate(double t) const {
  if (times.empty())
    throw ValidationError("cannot interpolate an empty trajectory");
  if (t <= times.front())
    return samples.front();
  if (t >= times.back())
    return samples.back();
  auto it = std::upper_bound(times.begin(), times.end(), t);
  std::size_t hi = static_cast<std::size_t>(it - times.begin());
  std::size_t lo = hi - 1;
  double w = (t - times[lo]) / (times[hi] - times[lo]);
  PauliTriple out;
  for (int a = 0; a < 3; ++a)
    out[a] = (1.0 - w) * samples[lo][a] + w * samples[hi][a];
  return out;
}

} // namespace paulidyn
