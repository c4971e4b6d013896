#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "paulidyn/collision.hpp"
#include "paulidyn/families.hpp"
#include "paulidyn/trajectory.hpp"

namespace paulidyn {

/// Compiled single-axis dephasing schedule. Each slot flips the running
/// integer m = n0 - n1 by +-1, so the achieved coherence at slot k is
/// exactly cos(2 m(k) g tau) -- representability is structural. Slots where
/// the target phase moved faster than the +-2 g tau capacity are listed in
/// lagging_slots (the greedy compiler catches up; the per-slot error bound
/// holds only outside these transients).
struct DephasingSchedule {
  int axis = 2;
  double g = 0.0;
  double tau = 0.0;
  std::vector<double> slot_times; // global end-of-slot times, one per collision
  std::vector<std::uint8_t> bits; // primary-branch control bits
  std::vector<double> achieved_f; // cos(2 m(k) g tau) after slot k
  std::vector<double> target_f;   // target coherence at slot_times
  std::vector<std::size_t> lagging_slots;
};

/// Greedy bit compiler for a target coherence function f with f(0)=1 and
/// |f|<=1. Maintains a continuous unwrapped phase theta with
/// cos(theta(t)) = f(t) (branch tracking through |f|=1 tangencies) and picks
/// each bit to keep 2 g tau m(k) closest to theta(k tau); ties break toward
/// bit 0. Throws ScheduleError when |f| > 1 on the grid or when the
/// unwrapped phase is unreachable even with all-equal bits (|theta(t_k)| >
/// 2 g tau k: coupling too weak, raise g or rescale g ~ 1/sqrt(tau)).
DephasingSchedule schedule_dephasing(const std::function<double(double)>& f,
                                     double g, double tau, int n, int axis = 2);

/// Same compiler with explicit global slot times (used per axis by
/// schedule_pauli). slot_times must be strictly increasing and positive.
DephasingSchedule
schedule_dephasing_at(const std::function<double(double)>& f, double g,
                      double tau, std::vector<double> slot_times, int axis);

/// Continuous-limit probability of a 0 bit: -f'/(4 g sqrt(1-f^2)) + 1/2.
/// Diagnostic only; the executable schedule is the deterministic bit string.
/// Throws ScheduleError at |f(t)| = 1 with f'(t) != 0 (stroboscopic
/// rescaling g -> g/sqrt(tau) required); returns 1/2 at a tangency with
/// f' = 0.
double w0_profile(const std::function<double(double)>& f,
                  const std::function<double(double)>& fprime, double g,
                  double t);

/// Three single-axis schedules on a round-robin x,y,z slot partition.
/// Axis m owns global slots {k : k mod 3 == m}, so the assignment sets are
/// disjoint and cover all slots.
struct PauliSchedule {
  double g = 0.0;
  double tau = 0.0;
  int n_slots = 0;
  std::array<DephasingSchedule, 3> axis_schedules;
  std::string target_name;
};

/// Compiles a CP Pauli trajectory into three interleaved dephasing
/// schedules: q_m(t) from the Kraus-probability transform, coherence
/// targets f_m = 1 - 2 q_m, greedy bits per axis at that axis's own global
/// slot times. Throws NonCpTarget (with the first violation time) when some
/// q_m(t) < 0.
PauliSchedule schedule_pauli(const LambdaFn& target, double g, double tau,
                             int n_slots, std::string target_name = "");
PauliSchedule schedule_pauli(const Trajectory& target, double g, double tau,
                             int n_slots, std::string target_name = "");

/// Executes one axis schedule through the branch-correlated collision
/// machinery and returns the achieved dephasing trajectory (lambda_axis = 1,
/// coherence on the two other components), sampled at t=0 and the slot
/// boundaries.
Trajectory verify_schedule(const DephasingSchedule& s);

/// Executes all three axis schedules and assembles the achieved map at each
/// completed round-robin window t = 3 k tau via the reconstruction
/// identities lambda_1 = f_2 + f_3 - 1 (cyclically). The three dephasing
/// factors commute, so slot ordering inside a window does not affect the
/// result.
Trajectory verify_schedule(const PauliSchedule& s);

/// Byte-stable JSON round trip for schedules (fixed key order, 17
/// significant digits).
std::string schedule_to_json(const PauliSchedule& s);
PauliSchedule schedule_from_json(const std::string& text);

} // namespace paulidyn
