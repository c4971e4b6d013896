#include "paulidyn/props.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

#include "paulidyn/channel.hpp"

namespace paulidyn {

double volume(const PauliTriple& t) {
  return std::abs(t.lambda1 * t.lambda2 * t.lambda3);
}

namespace {

double binary_entropy(double x) {
  double h = 0.0;
  if (x > 0.0)
    h -= x * std::log2(x);
  if (x < 1.0)
    h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

} // namespace

double classical_capacity(const PauliTriple& t) {
  if (!is_positive(t))
    throw ValidationError("classical capacity needs a positive-map triple");
  double m = std::max({std::abs(t.lambda1), std::abs(t.lambda2),
                       std::abs(t.lambda3)});
  m = std::min(m, 1.0);
  return 1.0 - binary_entropy(0.5 * (1.0 - m));
}

double trace_distance(const Matrix& r1, const Matrix& r2) {
  if (r1.rows() != r2.rows() || r1.cols() != r2.cols())
    throw DimensionError("trace distance needs equal-dimension states");
  Eigen::SelfAdjointEigenSolver<Matrix> es(r1 - r2, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double relative_entropy(const Matrix& r1, const Matrix& r2) {
  if (r1.rows() != r2.rows() || r1.cols() != r2.cols())
    throw DimensionError("relative entropy needs equal-dimension states");

  Eigen::SelfAdjointEigenSolver<Matrix> e1(r1);
  Eigen::SelfAdjointEigenSolver<Matrix> e2(r2);

  // tr[r1 ln r1]: clip eigenvalue drift below zero, 0 ln 0 = 0.
  double s = 0.0;
  for (Eigen::Index i = 0; i < e1.eigenvalues().size(); ++i) {
    double p = e1.eigenvalues()(i);
    if (p < -1e-10)
      throw ValidationError("relative entropy input is not a state");
    p = std::max(p, 0.0);
    if (p > 0.0)
      s += p * std::log(p);
  }

  // -tr[r1 ln r2]: +infinity when r1 has weight outside supp(r2).
  for (Eigen::Index i = 0; i < e2.eigenvalues().size(); ++i) {
    double q = std::max(e2.eigenvalues()(i), 0.0);
    const auto v = e2.eigenvectors().col(i);
    const double w = std::real((v.adjoint() * r1 * v)(0, 0));
    if (q <= 1e-15) {
      if (w > 1e-12)
        return std::numeric_limits<double>::infinity();
      continue;
    }
    s -= w * std::log(q);
  }
  return s;
}

bool is_entanglement_annihilating_2copy(const PauliTriple& t, double tol) {
  return t.lambda1 * t.lambda1 + t.lambda2 * t.lambda2 +
             t.lambda3 * t.lambda3 <=
         1.0 + tol;
}

std::optional<double> t_ea_dephasing_mixture(const MixtureWeights& p,
                                             double gamma) {
  if (!(gamma > 0.0))
    throw ValidationError("t_ea requires gamma > 0");
  const double s = p.p1 * p.p1 + p.p2 * p.p2 + p.p3 * p.p3;
  // RHS spans (-1, 1) as u = gamma*t runs over (0, inf); no root when the
  // weight vector is degenerate (s = 1, reached only as t -> inf).
  if (s >= 1.0 - 1e-15)
    return std::nullopt;

  auto rhs = [](double u) {
    const double x = std::exp(-u);
    const double x2 = std::exp(-2.0 * u);
    return (1.0 - x - x2) / (1.0 - x + x2);
  };

  // rhs is increasing in u, from -1 to 1: bracket then bisect on u = gamma t.
  double lo = 1e-12;
  double hi = 1.0;
  while (rhs(hi) < s) {
    hi *= 2.0;
    if (hi > 1e6)
      return std::nullopt;
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (rhs(mid) < s)
      lo = mid;
    else
      hi = mid;
    if ((hi - lo) <= 1e-12 * hi)
      break;
  }
  return 0.5 * (lo + hi) / gamma;
}

std::string to_string(MonotoneQuantity q) {
  switch (q) {
  case MonotoneQuantity::TraceDistance:
    return "trace_distance";
  case MonotoneQuantity::RelativeEntropy:
    return "relative_entropy";
  case MonotoneQuantity::Capacity:
    return "capacity";
  default:
    return "volume";
  }
}

MonotonicityReport monotonicity_scan(const Trajectory& traj, const Matrix& rho1,
                                     const Matrix& rho2, MonotoneQuantity q,
                                     double tol) {
  MonotonicityReport rep;
  rep.quantity = to_string(q);
  rep.times = traj.times;
  rep.values.resize(traj.size());

  for (std::size_t k = 0; k < traj.size(); ++k) {
    const PauliTriple& l = traj.samples[k];
    switch (q) {
    case MonotoneQuantity::TraceDistance:
      rep.values[k] = trace_distance(apply_pauli_channel(l, rho1),
                                     apply_pauli_channel(l, rho2));
      break;
    case MonotoneQuantity::RelativeEntropy:
      rep.values[k] = relative_entropy(apply_pauli_channel(l, rho1),
                                       apply_pauli_channel(l, rho2));
      break;
    case MonotoneQuantity::Capacity:
      rep.values[k] = classical_capacity(l);
      break;
    case MonotoneQuantity::Volume:
      rep.values[k] = volume(l);
      break;
    }
  }

  bool open = false;
  MonotonicityReport::Interval cur{};
  for (std::size_t k = 1; k < traj.size(); ++k) {
    const bool rising = rep.values[k] > rep.values[k - 1] + tol;
    if (rising && !open) {
      cur = {traj.times[k - 1], traj.times[k]};
      open = true;
    } else if (rising) {
      cur.t_end = traj.times[k];
    } else if (open) {
      rep.violations.push_back(cur);
      open = false;
    }
  }
  if (open)
    rep.violations.push_back(cur);
  return rep;
}

} // namespace paulidyn
