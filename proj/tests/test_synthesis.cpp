#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "paulidyn/synthesis.hpp"
#include "support/oracles.hpp"

using namespace paulidyn;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

// Window-ordered executor used as an independent check of the assembly in
// verify_schedule: walks global slots in an arbitrary order inside each
// 3-slot window, tracking each axis's phase counter.
Trajectory execute_windowed(const PauliSchedule& s,
                            const std::array<int, 3>& window_order) {
  std::array<long long, 3> m{0, 0, 0};
  std::array<std::size_t, 3> next{0, 0, 0};
  std::array<double, 3> f{1.0, 1.0, 1.0};
  const std::size_t windows = static_cast<std::size_t>(s.n_slots) / 3;
  std::vector<double> times(windows + 1);
  std::vector<PauliTriple> samples(windows + 1);
  times[0] = 0.0;
  samples[0] = PauliTriple::identity();
  for (std::size_t w = 1; w <= windows; ++w) {
    for (int slot : window_order) {
      const auto& ax = s.axis_schedules[static_cast<std::size_t>(slot)];
      m[static_cast<std::size_t>(slot)] +=
          ax.bits[next[static_cast<std::size_t>(slot)]] == 0 ? 1 : -1;
      ++next[static_cast<std::size_t>(slot)];
      f[static_cast<std::size_t>(slot)] =
          std::cos(2.0 * static_cast<double>(m[static_cast<std::size_t>(slot)]) *
                   ax.g * ax.tau);
    }
    times[w] = 3.0 * static_cast<double>(w) * s.tau;
    samples[w] = PauliTriple{f[1] + f[2] - 1.0, f[0] + f[2] - 1.0,
                             f[0] + f[1] - 1.0};
  }
  return Trajectory{std::move(times), std::move(samples)};
}

} // namespace

TEST_CASE("dephasing schedule tracks cos(2gt) exactly with all-zero bits") {
  const double g = 1.0;
  const double tau = 0.1;
  const int n = 40; // phase runs to 8 rad, through the first fold
  auto f = [g](double t) { return std::cos(2.0 * g * t); };
  const DephasingSchedule s = schedule_dephasing(f, g, tau, n);
  for (int k = 0; k < n; ++k) {
    REQUIRE(s.bits[static_cast<std::size_t>(k)] == 0);
    REQUIRE(std::abs(s.achieved_f[static_cast<std::size_t>(k)] -
                     s.target_f[static_cast<std::size_t>(k)]) <= 1e-12);
  }
  CHECK(s.lagging_slots.empty());
}

TEST_CASE("constant coherence compiles to alternating bits") {
  const double g = 0.5;
  const double tau = 0.2;
  auto f = [](double) { return 1.0; };
  const DephasingSchedule s = schedule_dephasing(f, g, tau, 10);
  const double floor = std::cos(2.0 * g * tau);
  for (int k = 0; k < 10; ++k) {
    CHECK(s.bits[static_cast<std::size_t>(k)] == (k % 2 == 0 ? 0 : 1));
    CHECK(s.achieved_f[static_cast<std::size_t>(k)] >= floor - 1e-15);
  }
}

TEST_CASE("exponential coherence stays within the quantization budget") {
  const double gamma = 1.0;
  const double g = 10.0 * std::sqrt(gamma);
  const double tau = 1e-3 / gamma;
  const int n = 1000;
  auto f = [gamma](double t) { return std::exp(-2.0 * gamma * t); };
  const DephasingSchedule s = schedule_dephasing(f, g, tau, n);
  double worst = 0.0;
  for (int k = 0; k < n; ++k)
    worst = std::max(worst, std::abs(s.achieved_f[static_cast<std::size_t>(k)] -
                                     s.target_f[static_cast<std::size_t>(k)]));
  CHECK(worst <= 0.02);
  // The sqrt-like start outruns one slot's phase step; later slots recover.
  CHECK_FALSE(s.lagging_slots.empty());
  CHECK(s.lagging_slots.front() == 0);
}

TEST_CASE("schedule compiler input validation") {
  CHECK_THROWS_AS(
      schedule_dephasing([](double) { return 1.2; }, 1.0, 0.1, 5),
      ScheduleError);
  CHECK_THROWS_AS(
      schedule_dephasing([](double t) { return std::cos(2.0 * t); }, 1.0, 0.1,
                         5, 7),
      ScheduleError); // bad axis
  // Unrepresentable phase: total demand 5t outgrows the 2g budget.
  auto fast = [](double t) { return std::cos(5.0 * t); };
  CHECK_THROWS_AS(schedule_dephasing(fast, 1.0, 0.1, 20), ScheduleError);
}

TEST_CASE("w0 profile") {
  const double g = 2.0;
  auto f = [g](double t) { return std::cos(2.0 * g * t); };
  auto df = [g](double t) { return -2.0 * g * std::sin(2.0 * g * t); };
  CHECK(w0_profile(f, df, g, 0.3) == Catch::Approx(1.0).margin(1e-12));

  auto flat = [](double) { return 0.5; };
  auto dflat = [](double) { return 0.0; };
  CHECK(w0_profile(flat, dflat, g, 1.0) == Catch::Approx(0.5).margin(1e-15));

  // f = e^{-2 gamma t} at the half-coherence point.
  const double gamma = 0.5;
  auto fexp = [gamma](double t) { return std::exp(-2.0 * gamma * t); };
  auto dfexp = [gamma](double t) {
    return -2.0 * gamma * std::exp(-2.0 * gamma * t);
  };
  const double t_half = std::log(2.0) / (2.0 * gamma);
  CHECK(w0_profile(fexp, dfexp, g, t_half) ==
        Catch::Approx(0.5 + gamma / (2.0 * std::sqrt(3.0) * g)).margin(1e-12));

  // Markov-like start: |f| = 1 with nonzero slope.
  CHECK_THROWS_AS(w0_profile(fexp, dfexp, g, 0.0), ScheduleError);
}

TEST_CASE("pauli schedule targets per-axis Kraus coherences") {
  const double gamma = 0.7;
  // Pure z dephasing: f1 = f2 = 1, f3 = e^{-2 gamma t}.
  LambdaFn target = [gamma](double t) {
    const double u = std::exp(-2.0 * gamma * t);
    return PauliTriple{u, u, 1.0};
  };
  const PauliSchedule s = schedule_pauli(target, 20.0, 1e-3, 300, "zdeph");
  for (std::size_t k = 0; k < s.axis_schedules[0].target_f.size(); ++k)
    CHECK(std::abs(s.axis_schedules[0].target_f[k] - 1.0) <= 1e-12);
  for (std::size_t k = 0; k < s.axis_schedules[2].target_f.size(); ++k) {
    const double t = s.axis_schedules[2].slot_times[k];
    CHECK(std::abs(s.axis_schedules[2].target_f[k] -
                   std::exp(-2.0 * gamma * t)) <= 1e-12);
  }

  // Identity target compiles every axis to f = 1.
  const PauliSchedule id =
      schedule_pauli([](double) { return PauliTriple{1, 1, 1}; }, 5.0, 1e-2,
                     30, "id");
  for (const auto& ax : id.axis_schedules)
    for (double tf : ax.target_f)
      CHECK(tf == 1.0);

  // Non-CP target is rejected with the first violation time.
  LambdaFn bad = [](double t) {
    return t < 0.05 ? PauliTriple{1, 1, 1} : PauliTriple{1, 1, -1};
  };
  CHECK_THROWS_AS(schedule_pauli(bad, 5.0, 1e-2, 30, "bad"), NonCpTarget);
}

TEST_CASE("verify_schedule reproduces single-axis runs") {
  // Zero-phase schedule: identity trajectory.
  const PauliSchedule id =
      schedule_pauli([](double) { return PauliTriple{1, 1, 1}; }, 5.0, 1e-2,
                     60, "id");
  const Trajectory idt = verify_schedule(id);
  const double floor = std::cos(2.0 * 5.0 * 1e-2);
  for (const auto& l : idt.samples) {
    CHECK(l.lambda1 >= 2.0 * floor - 1.0 - 1e-12);
    CHECK(l.lambda3 >= 2.0 * floor - 1.0 - 1e-12);
  }

  // A single-axis schedule executed through the collision machinery matches
  // the oscillatory dephasing profile when the bits are all zero.
  const double g = 0.4;
  const double tau = 0.3;
  auto f = [g](double t) { return std::cos(2.0 * g * t); };
  const DephasingSchedule s = schedule_dephasing(f, g, tau, 12, 2);
  const Trajectory traj = verify_schedule(s);
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const double want = std::cos(2.0 * g * traj.times[k]);
    CHECK(std::abs(traj.samples[k].lambda1 - want) <= 1e-12);
    CHECK(traj.samples[k].lambda3 == 1.0);
  }
}

TEST_CASE("slot order inside a window does not change the trajectory") {
  const AnalyticFamily fam = eternal_family(
      MixtureWeights::checked(1.0 / 3, 1.0 / 3, 1.0 / 3), 1.0, 1.0,
      AxisTriple::checked(0, 1, 2));
  const PauliSchedule s = schedule_pauli(fam.lambda, 25.0, 1e-3, 900, "et");
  const Trajectory ref = verify_schedule(s);
  for (const std::array<int, 3>& order :
       {std::array<int, 3>{0, 1, 2}, {2, 1, 0}, {1, 2, 0}}) {
    const Trajectory perm = execute_windowed(s, order);
    REQUIRE(perm.size() == ref.size());
    for (std::size_t k = 0; k < ref.size(); ++k)
      for (int ax = 0; ax < 3; ++ax)
        REQUIRE(std::abs(perm.samples[k][ax] - ref.samples[k][ax]) <= 1e-12);
  }
}

TEST_CASE("achieved coherences sit on the quantized grid and stay physical") {
  const AnalyticFamily fam = volume_example();
  const double g = 40.0;
  const double tau = 5e-5;
  const PauliSchedule s = schedule_pauli(fam.lambda, g, tau, 6000, "vol");
  for (const auto& ax : s.axis_schedules) {
    long long m = 0;
    const double step = 2.0 * ax.g * ax.tau;
    for (std::size_t k = 0; k < ax.bits.size(); ++k) {
      m += ax.bits[k] == 0 ? 1 : -1;
      REQUIRE(ax.achieved_f[k] == std::cos(step * static_cast<double>(m)));
      REQUIRE(std::abs(ax.target_f[k]) <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("axis schedules are independent") {
  const AnalyticFamily fam = eternal_family(
      MixtureWeights::checked(0.4, 0.3, 0.3), 1.0, 0.8,
      AxisTriple::checked(0, 1, 2));
  PauliSchedule s = schedule_pauli(fam.lambda, 25.0, 1e-3, 600, "et");
  const Trajectory before = verify_schedule(s);

  // Zeroing the x-axis bits changes f_x only, i.e. lambda_2 and lambda_3.
  std::fill(s.axis_schedules[0].bits.begin(), s.axis_schedules[0].bits.end(),
            static_cast<std::uint8_t>(0));
  const Trajectory after = verify_schedule(s);
  bool changed23 = false;
  for (std::size_t k = 0; k < before.size(); ++k) {
    REQUIRE(std::abs(after.samples[k].lambda1 - before.samples[k].lambda1) <=
            1e-15);
    changed23 = changed23 ||
                std::abs(after.samples[k].lambda2 -
                         before.samples[k].lambda2) > 1e-6 ||
                std::abs(after.samples[k].lambda3 -
                         before.samples[k].lambda3) > 1e-6;
  }
  CHECK(changed23);
}

TEST_CASE("schedule JSON round trip is stable") {
  const AnalyticFamily fam = eternal_family(
      MixtureWeights::checked(1.0 / 3, 1.0 / 3, 1.0 / 3), 1.0, 1.0,
      AxisTriple::checked(0, 1, 2));
  const PauliSchedule s = schedule_pauli(fam.lambda, 25.0, 1e-3, 90, "et");
  const std::string text = schedule_to_json(s);
  const PauliSchedule back = schedule_from_json(text);
  CHECK(schedule_to_json(back) == text);
  CHECK(back.n_slots == s.n_slots);
  CHECK(back.axis_schedules[1].bits == s.axis_schedules[1].bits);
  CHECK(back.axis_schedules[2].achieved_f == s.axis_schedules[2].achieved_f);
}
