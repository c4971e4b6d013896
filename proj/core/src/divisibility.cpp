#include "paulidyn/divisibility.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "paulidyn/errors.hpp"

namespace paulidyn {

std::string to_string(DivClass c) {
  switch (c) {
  case DivClass::CPDivisible:
    return "CPDivisible";
  case DivClass::PDivisibleOnly:
    return "PDivisibleOnly";
  case DivClass::VolumeShrinkingOnly:
    return "VolumeShrinkingOnly";
  default:
    return "Indivisible";
  }
}

DivisibilityClass classify_point(const KappaVector& k, double tol) {
  if (!std::isfinite(k.kappa1) || !std::isfinite(k.kappa2) ||
      !std::isfinite(k.kappa3))
    throw ValidationError("classify_point requires finite kappa");

  DivisibilityClass out;
  out.kappa = k;
  out.kappa_sum = k.sum();
  out.cp_slack = {-k.kappa1 + k.kappa2 + k.kappa3,
                  k.kappa1 - k.kappa2 + k.kappa3,
                  k.kappa1 + k.kappa2 - k.kappa3};

  out.cp_holds = out.cp_slack[0] <= tol && out.cp_slack[1] <= tol &&
                 out.cp_slack[2] <= tol;
  // Nesting is enforced: within-tolerance boundary jitter must never yield a
  // class whose weaker condition fails.
  out.p_holds =
      out.cp_holds || (k.kappa1 <= tol && k.kappa2 <= tol && k.kappa3 <= tol);
  out.volume_holds = out.p_holds || out.kappa_sum <= tol;

  out.kind = out.cp_holds        ? DivClass::CPDivisible
             : out.p_holds       ? DivClass::PDivisibleOnly
             : out.volume_holds  ? DivClass::VolumeShrinkingOnly
                                 : DivClass::Indivisible;
  return out;
}

KappaVector kappa_analytic(const LambdaFn& lambda, const DLambdaFn& dlambda,
                           double t) {
  const PauliTriple l = lambda(t);
  const std::array<double, 3> d = dlambda(t);
  KappaVector k;
  for (int a = 0; a < 3; ++a) {
    if (l[a] == 0.0)
      throw SingularPoint(a, t);
    double v = d[a] / l[a];
    if (!std::isfinite(v))
      throw SingularPoint(a, t);
    (a == 0 ? k.kappa1 : a == 1 ? k.kappa2 : k.kappa3) = v;
  }
  return k;
}

namespace {

int sign_of(double x) { return x > 0.0 ? 1 : x < 0.0 ? -1 : 0; }

// Derivative of ln|lambda| from samples at (t0,f0), (t1,f1) [, (t2,f2)].
// Three-point form handles nonuniform grids with O(dt^2) error.
double log_central(double t0, double f0, double t1, double f1, double t2,
                   double f2) {
  const double hm = t1 - t0;
  const double hp = t2 - t1;
  const double g0 = std::log(std::abs(f0));
  const double g1 = std::log(std::abs(f1));
  const double g2 = std::log(std::abs(f2));
  return (hm * hm * g2 + (hp * hp - hm * hm) * g1 - hp * hp * g0) /
         (hp * hm * (hp + hm));
}

} // namespace

SampledKappa kappa_sampled(const Trajectory& traj, std::size_t index) {
  const std::size_t n = traj.size();
  if (n < 2)
    throw ValidationError("kappa_sampled needs at least two samples");
  if (index >= n)
    throw ValidationError("kappa_sampled index out of range");

  const bool at_start = index == 0;
  const bool at_end = index + 1 == n;
  const std::size_t lo = at_start ? index : index - 1;
  const std::size_t hi = at_end ? index : index + 1;

  SampledKappa out;
  out.one_sided = at_start || at_end;
  for (int a = 0; a < 3; ++a) {
    // Any zero or sign change across the stencil makes ln|lambda| invalid.
    const int s = sign_of(traj.samples[lo][a]);
    if (s == 0)
      throw SingularPoint(a, traj.times[index]);
    for (std::size_t m = lo; m <= hi; ++m)
      if (sign_of(traj.samples[m][a]) != s)
        throw SingularPoint(a, traj.times[index]);

    double v;
    if (out.one_sided) {
      v = (std::log(std::abs(traj.samples[hi][a])) -
           std::log(std::abs(traj.samples[lo][a]))) /
          (traj.times[hi] - traj.times[lo]);
    } else {
      v = log_central(traj.times[lo], traj.samples[lo][a], traj.times[index],
                      traj.samples[index][a], traj.times[hi],
                      traj.samples[hi][a]);
    }
    if (!std::isfinite(v))
      throw SingularPoint(a, traj.times[index]);
    (a == 0 ? out.kappa.kappa1 : a == 1 ? out.kappa.kappa2 : out.kappa.kappa3) =
        v;
  }
  return out;
}

TrajectorySegmentReport classify_trajectory(const Trajectory& traj) {
  if (traj.size() < 3)
    throw ValidationError("classify_trajectory needs at least three samples");

  TrajectorySegmentReport report;
  bool open = false;
  TrajectorySegmentReport::Segment cur{};

  auto close = [&]() {
    if (open)
      report.segments.push_back(cur);
    open = false;
  };

  for (std::size_t i = 0; i < traj.size(); ++i) {
    DivisibilityClass cls;
    try {
      cls = classify_point(kappa_sampled(traj, i).kappa);
    } catch (const SingularPoint& sp) {
      report.singular.push_back({traj.times[i], sp.axis()});
      close();
      continue;
    }
    if (open && cls.kind == cur.kind) {
      cur.t_end = traj.times[i];
      cur.p_holds = cur.p_holds && cls.p_holds;
      cur.volume_holds = cur.volume_holds && cls.volume_holds;
    } else {
      close();
      cur = {traj.times[i], traj.times[i], cls.kind, cls.p_holds,
             cls.volume_holds};
      open = true;
    }
  }
  close();
  return report;
}

std::vector<Permutation> ultimate_cp_permutations(const PauliTriple& t,
                                                  double tol) {
  std::vector<Permutation> out;
  static constexpr std::array<Permutation, 3> perms = {
      Permutation{0, 1, 2}, Permutation{0, 2, 1}, Permutation{1, 2, 0}};
  for (const auto& p : perms)
    if (std::abs(t[p[0]] * t[p[1]] - t[p[2]]) <= tol)
      out.push_back(p);
  return out;
}

std::optional<Permutation> is_ultimate_cp_triple(const PauliTriple& t,
                                                 double tol) {
  std::optional<Permutation> best;
  double best_res = tol;
  static constexpr std::array<Permutation, 3> perms = {
      Permutation{0, 1, 2}, Permutation{0, 2, 1}, Permutation{1, 2, 0}};
  for (const auto& p : perms) {
    double res = std::abs(t[p[0]] * t[p[1]] - t[p[2]]);
    if (res <= best_res) {
      best = p;
      best_res = res;
    }
  }
  return best;
}

bool in_markovian_body(const PauliTriple& t, double tol) {
  for (int a = 0; a < 3; ++a)
    if (!(t[a] > 0.0 && t[a] <= 1.0 + tol))
      return false;
  return t.lambda1 * t.lambda2 <= t.lambda3 + tol &&
         t.lambda1 * t.lambda3 <= t.lambda2 + tol &&
         t.lambda2 * t.lambda3 <= t.lambda1 + tol;
}

BodyFractionEstimate mc_body_fraction(std::uint64_t n_samples,
                                      std::uint64_t seed) {
  if (n_samples < 1)
    throw ValidationError("mc_body_fraction requires n_samples >= 1");

  std::mt19937_64 rng(seed);
  // Platform-stable uniform in [0,1): top 53 bits of the raw output.
  auto uniform = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };

  std::uint64_t accepted = 0;
  std::uint64_t body = 0;
  std::uint64_t draws = 0;
  while (accepted < n_samples) {
    ++draws;
    PauliTriple t{2.0 * uniform() - 1.0, 2.0 * uniform() - 1.0,
                  2.0 * uniform() - 1.0};
    if (!is_cp(t, 0.0))
      continue;
    ++accepted;
    if (in_markovian_body(t))
      ++body;
  }

  BodyFractionEstimate est;
  est.n_samples = n_samples;
  est.n_draws = draws;
  est.seed = seed;
  est.fraction = static_cast<double>(body) / static_cast<double>(n_samples);
  est.std_error = std::sqrt(est.fraction * (1.0 - est.fraction) /
                            static_cast<double>(n_samples));
  return est;
}

} // namespace paulidyn
