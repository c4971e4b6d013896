#include "paulidyn/synthesis.hpp"

#include <cmath>
#include <utility>

#include <nlohmann/json.hpp>

#include "paulidyn/version.hpp"

namespace paulidyn {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kPi = 3.141592653589793238462643383279502884;

// Continuation of the unwrapped phase: cos(theta) = f with theta nearest
// the linear trend extrapolation. Both fold-back and pass-through branches
// reproduce the same coherence values (cos is even); the trend keeps a
// monotone phase monotone through |f| = 1 crossings, which is what pins
// down the canonical all-zero-bit schedule for f = cos(2gt).
double unwrap_next(double theta_prev, double trend, double f) {
  const double c = f > 1.0 ? 1.0 : f < -1.0 ? -1.0 : f;
  const double base = std::acos(c);
  const double predicted = theta_prev + trend;
  double best = 0.0;
  double best_dist = -1.0;
  for (double s : {1.0, -1.0}) {
    const double j = std::round((predicted - s * base) / (2.0 * kPi));
    const double cand = s * base + 2.0 * kPi * j;
    const double dist = std::abs(cand - predicted);
    if (best_dist < 0.0 || dist < best_dist) {
      best_dist = dist;
      best = cand;
    }
  }
  return best;
}

} // namespace

DephasingSchedule
schedule_dephasing_at(const std::function<double(double)>& f, double g,
                      double tau, std::vector<double> slot_times, int axis) {
  if (!(g > 0.0) || !(tau > 0.0))
    throw ScheduleError("schedule requires g > 0 and tau > 0");
  if (axis < 0 || axis > 2)
    throw ScheduleError("axis must be 0, 1 or 2");
  double prev_t = 0.0;
  for (double t : slot_times) {
    if (!(t > prev_t))
      throw ScheduleError("slot times must be positive and increasing");
    prev_t = t;
  }
  if (std::abs(f(0.0) - 1.0) > 1e-9)
    throw ScheduleError("target coherence must start at f(0) = 1");

  DephasingSchedule s;
  s.axis = axis;
  s.g = g;
  s.tau = tau;
  s.slot_times = std::move(slot_times);
  const std::size_t n = s.slot_times.size();
  s.bits.resize(n);
  s.achieved_f.resize(n);
  s.target_f.resize(n);

  const double step = 2.0 * g * tau; // phase capacity of one collision
  // Total phase budget of the run: |m| <= n, so |2 g tau m| <= step * n.
  // A target whose unwrapped phase ever exceeds it is unrepresentable with
  // this coupling; transient per-slot lag is recoverable and only flagged.
  const double budget = step * static_cast<double>(n);
  double theta = 0.0;
  double trend = 0.0;
  long long m = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(s.slot_times[k]);
    if (std::abs(fk) > 1.0 + 1e-12)
      throw ScheduleError("target coherence leaves [-1,1] at t=" +
                          std::to_string(s.slot_times[k]));
    const double theta_next = unwrap_next(theta, trend, fk);
    trend = theta_next - theta;
    if (std::abs(theta_next - theta) > step * (1.0 + 1e-9))
      s.lagging_slots.push_back(k);
    theta = theta_next;
    if (std::abs(theta) > budget * (1.0 + 1e-9) + 0.5 * step)
      throw ScheduleError(
          "unwrapped phase outgrows the total coupling budget at t=" +
          std::to_string(s.slot_times[k]) +
          "; raise g (or rescale g ~ 1/sqrt(tau))");

    const double up = std::abs(step * static_cast<double>(m + 1) - theta);
    const double down = std::abs(step * static_cast<double>(m - 1) - theta);
    if (up <= down) { // ties break toward bit 0
      ++m;
      s.bits[k] = 0;
    } else {
      --m;
      s.bits[k] = 1;
    }
    s.target_f[k] = fk;
    s.achieved_f[k] = std::cos(step * static_cast<double>(m));
  }
  return s;
}

DephasingSchedule schedule_dephasing(const std::function<double(double)>& f,
                                     double g, double tau, int n, int axis) {
  if (n < 1)
    throw ScheduleError("schedule needs at least one slot");
  std::vector<double> slot_times(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    slot_times[static_cast<std::size_t>(k)] = static_cast<double>(k + 1) * tau;
  return schedule_dephasing_at(f, g, tau, std::move(slot_times), axis);
}

double w0_profile(const std::function<double(double)>& f,
                  const std::function<double(double)>& fprime, double g,
                  double t) {
  if (!(g > 0.0))
    throw ScheduleError("w0_profile requires g > 0");
  const double ft = f(t);
  const double dft = fprime(t);
  if (std::abs(ft) >= 1.0 - 1e-12) {
    if (std::abs(dft) <= 1e-12)
      return 0.5;
    throw ScheduleError("|f| = 1 with f' != 0: stroboscopic rescaling "
                        "g -> g/sqrt(tau) required");
  }
  return -dft / (4.0 * g * std::sqrt(1.0 - ft * ft)) + 0.5;
}

PauliSchedule schedule_pauli(const LambdaFn& target, double g, double tau,
                             int n_slots, std::string target_name) {
  if (n_slots < 3)
    throw ScheduleError("pauli schedule needs at least one slot per axis");

  // CP precondition: every Kraus probability stays nonnegative on the grid.
  auto q_at = [&target](double t) { return q_from_lambda(target(t)); };
  for (int k = 0; k <= n_slots; ++k) {
    const double t = static_cast<double>(k) * tau;
    const QVector q = q_at(t);
    if (!q.nonnegative(1e-12))
      throw NonCpTarget(t);
  }

  PauliSchedule s;
  s.g = g;
  s.tau = tau;
  s.n_slots = n_slots;
  s.target_name = std::move(target_name);
  for (int axis = 0; axis < 3; ++axis) {
    std::vector<double> slot_times;
    for (int k = axis; k < n_slots; k += 3)
      slot_times.push_back(static_cast<double>(k + 1) * tau);
    // f_m = 1 - 2 q_m at this axis's own global slot times.
    auto f = [q_at, axis](double t) {
      return 1.0 - 2.0 * q_at(t)[axis + 1];
    };
    s.axis_schedules[static_cast<std::size_t>(axis)] =
        schedule_dephasing_at(f, g, tau, std::move(slot_times), axis);
  }
  return s;
}

PauliSchedule schedule_pauli(const Trajectory& target, double g, double tau,
                             int n_slots, std::string target_name) {
  LambdaFn fn = [target](double t) { return target.interpolate(t); };
  return schedule_pauli(fn, g, tau, n_slots, std::move(target_name));
}

Trajectory verify_schedule(const DephasingSchedule& s) {
  const int n = static_cast<int>(s.bits.size());
  Trajectory traj = run_branch_correlated({Branch{1.0, s.bits}},
                                          ControlledAxis{s.axis, s.g}, s.tau, n);
  for (std::size_t k = 1; k < traj.size(); ++k)
    traj.times[k] = s.slot_times[k - 1];
  return traj;
}

Trajectory verify_schedule(const PauliSchedule& s) {
  // Coherence sequences per axis, through the collision machinery.
  std::array<std::vector<double>, 3> f;
  for (int axis = 0; axis < 3; ++axis) {
    const auto& ax = s.axis_schedules[static_cast<std::size_t>(axis)];
    const int n = static_cast<int>(ax.bits.size());
    Trajectory t = run_branch_correlated({Branch{1.0, ax.bits}},
                                         ControlledAxis{axis, ax.g}, ax.tau, n);
    const int off = axis == 0 ? 1 : 0; // any component orthogonal to axis
    f[static_cast<std::size_t>(axis)].resize(t.size());
    for (std::size_t k = 0; k < t.size(); ++k)
      f[static_cast<std::size_t>(axis)][k] = t.samples[k][off];
  }

  // Assemble at completed round-robin windows t = 3 k tau, where every axis
  // has had exactly k collisions. The three dephasing factors commute, so
  // the slot order inside a window is immaterial.
  const std::size_t windows = static_cast<std::size_t>(s.n_slots) / 3;
  std::vector<double> times(windows + 1);
  std::vector<PauliTriple> samples(windows + 1);
  for (std::size_t w = 0; w <= windows; ++w) {
    times[w] = 3.0 * static_cast<double>(w) * s.tau;
    const double f1 = f[0][w];
    const double f2 = f[1][w];
    const double f3 = f[2][w];
    samples[w] = PauliTriple{f2 + f3 - 1.0, f1 + f3 - 1.0, f1 + f2 - 1.0};
  }
  return Trajectory{std::move(times), std::move(samples)};
}

namespace {

ordered_json axis_to_json(const DephasingSchedule& s) {
  ordered_json j;
  j["axis"] = s.axis;
  j["g"] = s.g;
  j["tau"] = s.tau;
  j["slot_times"] = s.slot_times;
  j["bits"] = s.bits;
  j["achieved_f"] = s.achieved_f;
  j["target_f"] = s.target_f;
  j["lagging_slots"] = s.lagging_slots;
  return j;
}

DephasingSchedule axis_from_json(const ordered_json& j) {
  DephasingSchedule s;
  s.axis = j.at("axis").get<int>();
  s.g = j.at("g").get<double>();
  s.tau = j.at("tau").get<double>();
  s.slot_times = j.at("slot_times").get<std::vector<double>>();
  s.bits = j.at("bits").get<std::vector<std::uint8_t>>();
  s.achieved_f = j.at("achieved_f").get<std::vector<double>>();
  s.target_f = j.at("target_f").get<std::vector<double>>();
  s.lagging_slots = j.at("lagging_slots").get<std::vector<std::size_t>>();
  return s;
}

} // namespace

std::string schedule_to_json(const PauliSchedule& s) {
  ordered_json j;
  j["format"] = "paulidyn-schedule";
  j["version"] = PAULIDYN_VERSION;
  j["target"] = s.target_name;
  j["g"] = s.g;
  j["tau"] = s.tau;
  j["n_slots"] = s.n_slots;
  j["slot_assignment"] = "round-robin-xyz";
  j["axes"] = ordered_json::array();
  for (const auto& ax : s.axis_schedules)
    j["axes"].push_back(axis_to_json(ax));
  return j.dump(2) + "\n";
}

PauliSchedule schedule_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  if (j.at("format").get<std::string>() != "paulidyn-schedule")
    throw ValidationError("not a paulidyn schedule document");
  PauliSchedule s;
  s.target_name = j.at("target").get<std::string>();
  s.g = j.at("g").get<double>();
  s.tau = j.at("tau").get<double>();
  s.n_slots = j.at("n_slots").get<int>();
  const auto& axes = j.at("axes");
  if (!axes.is_array() || axes.size() != 3)
    throw ValidationError("schedule document must carry three axis blocks");
  for (std::size_t a = 0; a < 3; ++a)
    s.axis_schedules[a] = axis_from_json(axes[a]);
  return s;
}

} // namespace paulidyn
