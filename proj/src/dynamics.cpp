#include "drugdyn/dynamics.hpp"

namespace drugdyn {

std::array<double, 5> full_rhs(const ValidatedParameters& vp, const PopulationState& x) {
  const auto& p = vp.get();
  const double n = p.n_total;

  // Each flow is computed once so that it enters the source and sink
  // components with the same rounded value.
  const double infl1 = p.beta1 * x.s * x.d1 / n;   // S -> D1
  const double infl2 = p.beta2 * x.s * x.d2 / n;   // S -> D2
  const double rec1 = p.gamma1 * x.d1;             // D1 -> R1
  const double rec2 = p.gamma2 * x.d2;             // D2 -> R2
  const double rel1 = p.delta1 * x.r1;             // R1 -> D1
  const double rel2 = p.delta2 * x.r2;             // R2 -> D2
  const double sw = (p.alpha1 - p.alpha2) * x.d1 * x.d2 / n;  // net D2 -> D1

  return {
      p.mu * n - p.mu * x.s - infl1 - infl2,
      infl1 + rel1 + sw - rec1 - p.mu * x.d1,
      infl2 + rel2 - sw - rec2 - p.mu * x.d2,
      rec1 - rel1 - p.mu * x.r1,
      rec2 - rel2 - p.mu * x.r2,
  };
}

std::array<double, 4> exact4_rhs(const ValidatedParameters& vp, const Exact4State& x) {
  const auto& p = vp.get();
  const double n = p.n_total;

  const double bracket1 = p.beta1 * x.d1 + (p.alpha2 - p.alpha1 + p.beta1) * x.d2 +
                          p.beta1 * x.r1 + p.beta1 * x.r2;
  const double bracket2 = (p.alpha1 - p.alpha2 + p.beta2) * x.d1 + p.beta2 * x.d2 +
                          p.beta2 * x.r1 + p.beta2 * x.r2;

  return {
      (p.beta1 - p.gamma1 - p.mu) * x.d1 + p.delta1 * x.r1 - (x.d1 / n) * bracket1,
      (p.beta2 - p.gamma2 - p.mu) * x.d2 + p.delta2 * x.r2 - (x.d2 / n) * bracket2,
      p.gamma1 * x.d1 - (p.delta1 + p.mu) * x.r1,
      p.gamma2 * x.d2 - (p.delta2 + p.mu) * x.r2,
  };
}

std::pair<double, double> qss_recovered(const ValidatedParameters& vp,
                                        const ReducedState& d) {
  const auto& p = vp.get();
  return {p.gamma1 * d.d1 / (p.delta1 + p.mu), p.gamma2 * d.d2 / (p.delta2 + p.mu)};
}

std::array<double, 2> reduced_rhs(const LVCoefficients& c, const ReducedState& d) {
  // Factored form: D_i == 0 gives an exact zero, so the axes are invariant
  // to the bit.
  return {
      d.d1 * (c.r1 - (c.a11 * d.d1 + c.a12 * d.d2) / c.n_total),
      d.d2 * (c.r2 - (c.a21 * d.d1 + c.a22 * d.d2) / c.n_total),
  };
}

}  // namespace drugdyn
