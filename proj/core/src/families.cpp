#include "paulidyn/families.hpp"

#include <cmath>

#include "paulidyn/errors.hpp"

namespace paulidyn {

RateTriple gamma_from_Gamma(const RateTriple& G) {
  return {0.5 * (-G[0] + G[1] + G[2]), 0.5 * (G[0] - G[1] + G[2]),
          0.5 * (G[0] + G[1] - G[2])};
}

RateTriple Gamma_from_gamma(const RateTriple& g) {
  return {g[1] + g[2], g[0] + g[2], g[0] + g[1]};
}

MixtureWeights MixtureWeights::checked(double p1, double p2, double p3) {
  if (p1 < 0.0 || p2 < 0.0 || p3 < 0.0)
    throw ValidationError("mixture weights must be nonnegative");
  if (std::abs(p1 + p2 + p3 - 1.0) > 1e-12)
    throw ValidationError("mixture weights must sum to 1 within 1e-12");
  return MixtureWeights{p1, p2, p3};
}

AxisTriple AxisTriple::checked(int i, int j, int k) {
  if (i < 0 || j < 0 || k < 0 || i > 2 || j > 2 || k > 2 || i == j || j == k ||
      i == k)
    throw ValidationError("axes must be a permutation of {0,1,2}");
  return AxisTriple{i, j, k};
}

KappaVector family_kappa(const AnalyticFamily& f, double t) {
  if (f.kappa)
    return f.kappa(t);
  return kappa_analytic(f.lambda, f.dlambda, t);
}

AnalyticFamily pauli_semigroup(const RateTriple& Gamma) {
  for (double g : Gamma)
    if (g < 0.0)
      throw ValidationError("semigroup decoherence rates must be >= 0");
  const RateTriple diss = gamma_from_Gamma(Gamma);
  AnalyticFamily f;
  f.name = "semigroup";
  f.cp_generating = diss[0] >= 0.0 && diss[1] >= 0.0 && diss[2] >= 0.0;
  f.lambda = [Gamma](double t) {
    return PauliTriple{std::exp(-Gamma[0] * t), std::exp(-Gamma[1] * t),
                       std::exp(-Gamma[2] * t)};
  };
  f.dlambda = [Gamma](double t) {
    return std::array<double, 3>{-Gamma[0] * std::exp(-Gamma[0] * t),
                                 -Gamma[1] * std::exp(-Gamma[1] * t),
                                 -Gamma[2] * std::exp(-Gamma[2] * t)};
  };
  f.kappa = [Gamma](double) {
    return KappaVector{-Gamma[0], -Gamma[1], -Gamma[2]};
  };
  return f;
}

AnalyticFamily ultimate_semigroup(double gi, double gj,
                                  const AxisTriple& axes) {
  if (gi < 0.0 || gj < 0.0)
    throw ValidationError("ultimate semigroup rates must be >= 0");
  RateTriple Gamma{};
  Gamma[axes.i] = gj;
  Gamma[axes.j] = gi;
  Gamma[axes.k] = gi + gj;
  AnalyticFamily f = pauli_semigroup(Gamma);
  f.name = "ultimate";
  return f;
}

AnalyticFamily dephasing_mixture(const MixtureWeights& p, double gamma) {
  AnalyticFamily f;
  f.name = "dephasing_mixture";
  // Each constituent leaves its own axis intact and damps the other two at
  // rate 2*gamma, so the mixture is componentwise
  //   lambda_i(t) = p_i + (1 - p_i) e^{-2 gamma t}.
  f.lambda = [p, gamma](double t) {
    const double u = std::exp(-2.0 * gamma * t);
    return PauliTriple{p.p1 + (1.0 - p.p1) * u, p.p2 + (1.0 - p.p2) * u,
                       p.p3 + (1.0 - p.p3) * u};
  };
  f.dlambda = [p, gamma](double t) {
    const double du = -2.0 * gamma * std::exp(-2.0 * gamma * t);
    return std::array<double, 3>{(1.0 - p.p1) * du, (1.0 - p.p2) * du,
                                 (1.0 - p.p3) * du};
  };
  return f;
}

AnalyticFamily eternal_family(const MixtureWeights& p, double gi, double gj,
                              const AxisTriple& axes) {
  if (!(gi > 0.0) || !(gj > 0.0))
    throw ValidationError("eternal family requires gi, gj > 0");
  AnalyticFamily f;
  f.name = "eternal";
  const double p1 = p.p1, p2 = p.p2, p3 = p.p3;
  const AxisTriple ax = axes;
  f.lambda = [=](double t) {
    PauliTriple l;
    l[ax.i] = (p1 + p3) * std::exp(-gj * t) + p2;
    l[ax.j] = (p1 + p2) * std::exp(-gi * t) + p3;
    l[ax.k] = p1 * std::exp(-(gi + gj) * t) + p2 * std::exp(-gi * t) +
              p3 * std::exp(-gj * t);
    return l;
  };
  f.dlambda = [=](double t) {
    std::array<double, 3> d{};
    d[ax.i] = -gj * (p1 + p3) * std::exp(-gj * t);
    d[ax.j] = -gi * (p1 + p2) * std::exp(-gi * t);
    d[ax.k] = -p1 * (gi + gj) * std::exp(-(gi + gj) * t) -
              p2 * gi * std::exp(-gi * t) - p3 * gj * std::exp(-gj * t);
    return d;
  };
  f.kappa = [=](double t) {
    const double ei = std::exp(gi * t);
    const double ej = std::exp(gj * t);
    double ki = -gj * (p1 + p3) / (p1 + p3 + p2 * ej);
    double kj = -gi * (p1 + p2) / (p1 + p2 + p3 * ei);
    double kk = -(gi * (p1 + p2 * ej) + gj * (p1 + p3 * ei)) /
                (p1 + p2 * ej + p3 * ei);
    KappaVector out;
    (ax.i == 0   ? out.kappa1
     : ax.i == 1 ? out.kappa2
                 : out.kappa3) = ki;
    (ax.j == 0   ? out.kappa1
     : ax.j == 1 ? out.kappa2
                 : out.kappa3) = kj;
    (ax.k == 0   ? out.kappa1
     : ax.k == 1 ? out.kappa2
                 : out.kappa3) = kk;
    return out;
  };
  return f;
}

AnalyticFamily oscillatory_dephasing(double g, int axis) {
  if (!(g > 0.0))
    throw ValidationError("oscillatory dephasing requires g > 0");
  if (axis < 0 || axis > 2)
    throw ValidationError("axis must be 0, 1 or 2");
  AnalyticFamily f;
  f.name = "oscillatory_dephasing";
  f.lambda = [g, axis](double t) {
    const double c = std::cos(2.0 * g * t);
    PauliTriple l{c, c, c};
    l[axis] = 1.0;
    return l;
  };
  f.dlambda = [g, axis](double t) {
    const double d = -2.0 * g * std::sin(2.0 * g * t);
    std::array<double, 3> out{d, d, d};
    out[axis] = 0.0;
    return out;
  };
  return f;
}

AnalyticFamily oscillatory_depolarizing(double g) {
  if (!(g > 0.0))
    throw ValidationError("oscillatory depolarizing requires g > 0");
  AnalyticFamily f;
  f.name = "oscillatory_depolarizing";
  f.lambda = [g](double t) {
    const double v = (1.0 + 2.0 * std::cos(2.0 * g * t)) / 3.0;
    return PauliTriple{v, v, v};
  };
  f.dlambda = [g](double t) {
    const double d = -(4.0 * g / 3.0) * std::sin(2.0 * g * t);
    return std::array<double, 3>{d, d, d};
  };
  return f;
}

AnalyticFamily volume_example() {
  AnalyticFamily f;
  f.name = "volume_example";
  f.lambda = [](double t) {
    const double e2 = std::exp(-2.0 * t);
    return PauliTriple{e2 * (1.0 - 0.1 * (1.0 - std::cos(40.0 * t))),
                       e2 * (1.0 - 0.1 * std::sin(40.0 * t)),
                       std::exp(-4.0 * t)};
  };
  f.dlambda = [](double t) {
    const double e2 = std::exp(-2.0 * t);
    return std::array<double, 3>{
        e2 * (-2.0 * (0.9 + 0.1 * std::cos(40.0 * t)) -
              4.0 * std::sin(40.0 * t)),
        e2 * (-2.0 * (1.0 - 0.1 * std::sin(40.0 * t)) -
              4.0 * std::cos(40.0 * t)),
        -4.0 * std::exp(-4.0 * t)};
  };
  return f;
}

Trajectory sample_family(const AnalyticFamily& f, double t_max,
                         std::size_t n_points) {
  if (n_points < 2)
    throw ValidationError("sample_family requires n_points >= 2");
  if (!(t_max > 0.0))
    throw ValidationError("sample_family requires t_max > 0");
  std::vector<double> times(n_points);
  std::vector<PauliTriple> samples(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    times[i] = t_max * static_cast<double>(i) /
               static_cast<double>(n_points - 1);
    samples[i] = f.lambda(times[i]);
  }
  return Trajectory::checked(std::move(times), std::move(samples));
}

} // namespace paulidyn
