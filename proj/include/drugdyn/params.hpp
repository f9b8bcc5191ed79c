#pragma once

#include <optional>
#include <string>
#include <vector>

namespace drugdyn {

// The nine per-year fractional rates of the two-drug model plus the constant
// population size N. All rates live in [0, 1]; see validate_parameters().
struct ModelParameters {
  double beta1 = 0.0;    // influence rate of drug 1 on never-users
  double beta2 = 0.0;    // influence rate of drug 2
  double gamma1 = 0.0;   // recovery rate, drug 1
  double gamma2 = 0.0;   // recovery rate, drug 2
  double delta1 = 0.0;   // relapse rate, drug 1
  double delta2 = 0.0;   // relapse rate, drug 2
  double alpha1 = 0.0;   // switchover rate toward drug 1
  double alpha2 = 0.0;   // switchover rate toward drug 2
  double mu = 0.0;       // mortality (= birth) rate
  double n_total = 0.0;  // population size, persons
};

enum class ValidationErrorCode {
  RateOutOfRange,         // a rate is outside [0, 1] or not finite
  NonPositivePopulation,  // N <= 0 or not finite
  SingularClosure,        // delta_i + mu == 0: the recovered-group closure
                          // R_i = gamma_i D_i / (delta_i + mu) is undefined
};

struct ValidationError {
  ValidationErrorCode code;
  std::string field;
  std::string message;
};

// Legal parameter regimes that switch off part of the dynamics. Informational.
enum class SpecialCaseFlag {
  ZeroRate,          // the named rate is exactly zero
  OneWaySwitching1,  // alpha1 == 0: users never switch back to drug 1
  OneWaySwitching2,  // alpha2 == 0
  FatalDrug1,        // gamma1 == delta1 == 0: no recovery and no relapse
  FatalDrug2,
};

struct SpecialCase {
  SpecialCaseFlag flag;
  std::string field;
};

class ValidatedParameters;

struct Validation {
  std::optional<ValidatedParameters> params;
  std::vector<ValidationError> errors;
  std::vector<SpecialCase> special_cases;
  bool ok() const { return errors.empty(); }
};

// Checks every rate against [0, 1], N > 0 and delta_i + mu > 0, and collects
// all violations instead of stopping at the first.
Validation validate_parameters(const ModelParameters& raw);

// Parameter set that passed validation. Immutable.
class ValidatedParameters {
 public:
  const ModelParameters& get() const { return p_; }
  double n_total() const { return p_.n_total; }

 private:
  friend Validation validate_parameters(const ModelParameters&);
  explicit ValidatedParameters(const ModelParameters& p) : p_(p) {}
  ModelParameters p_;
};

// Coefficients of the reduced two-species competition system written in the
// standard form
//
//   dD_i/dt = D_i * (r_i - (a_i1 D1 + a_i2 D2) / N).
//
// Derived from the four-dimensional model by holding the recovered groups at
// their steady values R_i = gamma_i D_i / (delta_i + mu); see docs/model.md
// for the full derivation:
//
//   r_i  = beta_i - gamma_i - mu + delta_i gamma_i / (delta_i + mu)
//   a_ii = beta_i (1 + gamma_i / (delta_i + mu))
//   a_12 = beta_1 (1 + gamma_2 / (delta_2 + mu)) + alpha_2 - alpha_1
//   a_21 = beta_2 (1 + gamma_1 / (delta_1 + mu)) + alpha_1 - alpha_2
struct LVCoefficients {
  double r1 = 0.0;
  double r2 = 0.0;
  double a11 = 0.0;
  double a12 = 0.0;
  double a21 = 0.0;
  double a22 = 0.0;
  double n_total = 0.0;
};

// theta_i = beta_i - gamma_i + delta_i gamma_i / (delta_i + mu). Comparing
// theta_i against mu classifies the drug-free state: r_i = theta_i - mu is
// the origin eigenvalue for drug i. reduced_coefficients() and
// origin_analysis() share these, so the identity r_i == theta_i - mu holds
// exactly.
double theta1(const ValidatedParameters& p);
double theta2(const ValidatedParameters& p);

LVCoefficients reduced_coefficients(const ValidatedParameters& p);

const char* to_string(ValidationErrorCode code);
const char* to_string(SpecialCaseFlag flag);

}  // namespace drugdyn
