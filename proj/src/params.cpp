#include "drugdyn/params.hpp"

#include <cmath>

namespace drugdyn {

namespace {

struct RateRef {
  const char* name;
  double value;
};

}  // namespace

Validation validate_parameters(const ModelParameters& raw) {
  Validation v;

  const RateRef rates[] = {
      {"beta1", raw.beta1},   {"beta2", raw.beta2},   {"gamma1", raw.gamma1},
      {"gamma2", raw.gamma2}, {"delta1", raw.delta1}, {"delta2", raw.delta2},
      {"alpha1", raw.alpha1}, {"alpha2", raw.alpha2}, {"mu", raw.mu},
  };

  for (const auto& r : rates) {
    // Written so that NaN fails the check.
    if (!(r.value >= 0.0 && r.value <= 1.0)) {
      v.errors.push_back({ValidationErrorCode::RateOutOfRange, r.name,
                          std::string(r.name) + " must lie in [0, 1]"});
    }
  }
  if (!(raw.n_total > 0.0) || !std::isfinite(raw.n_total)) {
    v.errors.push_back({ValidationErrorCode::NonPositivePopulation, "N",
                        "population size N must be positive"});
  }
  if (raw.delta1 + raw.mu == 0.0 && raw.delta1 >= 0.0 && raw.mu >= 0.0) {
    v.errors.push_back({ValidationErrorCode::SingularClosure, "delta1",
                        "delta1 + mu must be positive (recovered-group closure "
                        "divides by it)"});
  }
  if (raw.delta2 + raw.mu == 0.0 && raw.delta2 >= 0.0 && raw.mu >= 0.0) {
    v.errors.push_back({ValidationErrorCode::SingularClosure, "delta2",
                        "delta2 + mu must be positive (recovered-group closure "
                        "divides by it)"});
  }

  if (!v.errors.empty()) return v;

  for (const auto& r : rates) {
    if (r.value == 0.0) v.special_cases.push_back({SpecialCaseFlag::ZeroRate, r.name});
  }
  if (raw.alpha1 == 0.0)
    v.special_cases.push_back({SpecialCaseFlag::OneWaySwitching1, "alpha1"});
  if (raw.alpha2 == 0.0)
    v.special_cases.push_back({SpecialCaseFlag::OneWaySwitching2, "alpha2"});
  if (raw.gamma1 == 0.0 && raw.delta1 == 0.0)
    v.special_cases.push_back({SpecialCaseFlag::FatalDrug1, "gamma1,delta1"});
  if (raw.gamma2 == 0.0 && raw.delta2 == 0.0)
    v.special_cases.push_back({SpecialCaseFlag::FatalDrug2, "gamma2,delta2"});

  v.params = ValidatedParameters(raw);
  return v;
}

// theta_i = beta_i - gamma_i + delta_i gamma_i / (delta_i + mu). The origin
// eigenvalue for drug i is theta_i - mu.
static double theta(double beta, double gamma, double delta, double mu) {
  return beta - gamma + delta * gamma / (delta + mu);
}

double theta1(const ValidatedParameters& p) {
  const auto& m = p.get();
  return theta(m.beta1, m.gamma1, m.delta1, m.mu);
}

double theta2(const ValidatedParameters& p) {
  const auto& m = p.get();
  return theta(m.beta2, m.gamma2, m.delta2, m.mu);
}

LVCoefficients reduced_coefficients(const ValidatedParameters& p) {
  const auto& m = p.get();
  const double k1 = m.gamma1 / (m.delta1 + m.mu);  // steady R1 per addict
  const double k2 = m.gamma2 / (m.delta2 + m.mu);

  LVCoefficients c;
  c.r1 = theta1(p) - m.mu;
  c.r2 = theta2(p) - m.mu;
  c.a11 = m.beta1 * (1.0 + k1);
  c.a12 = m.beta1 * (1.0 + k2) + m.alpha2 - m.alpha1;
  c.a21 = m.beta2 * (1.0 + k1) + m.alpha1 - m.alpha2;
  c.a22 = m.beta2 * (1.0 + k2);
  c.n_total = m.n_total;
  return c;
}

const char* to_string(ValidationErrorCode code) {
  switch (code) {
    case ValidationErrorCode::RateOutOfRange: return "rate-out-of-range";
    case ValidationErrorCode::NonPositivePopulation: return "non-positive-population";
    case ValidationErrorCode::SingularClosure: return "singular-closure";
  }
  return "?";
}

const char* to_string(SpecialCaseFlag flag) {
  switch (flag) {
    case SpecialCaseFlag::ZeroRate: return "zero-rate";
    case SpecialCaseFlag::OneWaySwitching1: return "no-switching-to-drug-1";
    case SpecialCaseFlag::OneWaySwitching2: return "no-switching-to-drug-2";
    case SpecialCaseFlag::FatalDrug1: return "fatal-drug-1";
    case SpecialCaseFlag::FatalDrug2: return "fatal-drug-2";
  }
  return "?";
}

}  // namespace drugdyn
