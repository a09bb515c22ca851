#include "bmw/rate_engine.hpp"

#include <algorithm>
#include <cmath>

namespace bmw {

void ChannelParams::validate() const {
  detail::check_finite(lambda_m, "lambda_m");
  detail::check_finite(lambda_w, "lambda_w");
  detail::check_finite(power_p, "power_p");
  detail::check_finite(jam_j, "jam_j");
  detail::check_finite(noise_var, "noise_var");
  if (!(lambda_m > 0.0)) throw std::domain_error("lambda_m must be > 0");
  if (!(lambda_w > 0.0)) throw std::domain_error("lambda_w must be > 0");
  if (power_p < 0.0) throw std::domain_error("power_p must be >= 0");
  if (jam_j < 0.0) throw std::domain_error("jam_j must be >= 0");
  if (!(noise_var > 0.0)) throw std::domain_error("noise_var must be > 0");
}

void CodeDesign::validate() const {
  if (n < 1) throw std::invalid_argument("level count must be >= 1");
  if (static_cast<int>(thresholds.size()) != n - 1) {
    throw std::invalid_argument("need exactly n-1 listening thresholds");
  }
  if (static_cast<int>(alphas.size()) != n - 1) {
    throw std::invalid_argument("need exactly n-1 power-split factors");
  }
  double prev = 0.0;
  for (double q : thresholds) {
    detail::check_finite(q, "threshold");
    if (!(q > 0.0) || !(q < 1.0)) {
      throw std::invalid_argument("thresholds must lie strictly in (0,1)");
    }
    if (!(q > prev)) {
      throw std::invalid_argument("thresholds must be strictly increasing");
    }
    prev = q;
  }
  for (double a : alphas) {
    detail::check_finite(a, "alpha");
    if (a < 0.0 || a > 1.0) {
      throw std::invalid_argument("power splits must lie in [0,1]");
    }
  }
}

double CodeDesign::threshold(int i) const {
  if (i < 0 || i > n) throw std::invalid_argument("threshold index out of range");
  if (i == 0) return 0.0;
  if (i == n) return 1.0;
  return thresholds[i - 1];
}

std::vector<double> CodeDesign::level_powers(double total_power) const {
  if (total_power < 0.0) throw std::domain_error("total power must be >= 0");
  std::vector<double> powers(n);
  double carried = total_power; // power shared by levels >= i
  for (int i = 1; i < n; ++i) {
    powers[i - 1] = (1.0 - alphas[i - 1]) * carried;
    carried *= alphas[i - 1];
  }
  powers[n - 1] = carried; // deepest level keeps the remainder (alpha_n = 0)
  return powers;
}

double CodeDesign::residual_power(int i, double total_power) const {
  if (i < 0 || i > n) throw std::invalid_argument("level index out of range");
  if (i == n) return 0.0;
  double carried = total_power;
  for (int j = 1; j <= i; ++j) carried *= alphas[j - 1];
  return carried;
}

double wcs_secrecy_rate(const ChannelParams& params, double jam_eff) {
  params.validate();
  detail::check_finite(jam_eff, "jam_eff");
  if (jam_eff < 0.0) throw std::domain_error("jam_eff must be >= 0");
  if (params.power_p == 0.0) return 0.0;
  const double bob = fading_log_rate(params.lambda_m, params.power_p,
                                     params.noise_var + jam_eff, 0.0);
  const double eve = fading_log_rate(params.lambda_w, params.power_p,
                                     params.noise_var, 0.0);
  return std::max(0.0, bob - eve);
}

double wcs_secrecy_rate(const ChannelParams& params) {
  return wcs_secrecy_rate(params, params.jam_j);
}

double level_rate_at(const ChannelParams& params, const CodeDesign& design,
                     int i, double q) {
  params.validate();
  design.validate();
  if (i < 1 || i > design.n) throw std::invalid_argument("level index out of range");
  if (q < 0.0 || q > 1.0) throw std::domain_error("q must lie in [0,1]");

  const double p_level = design.level_powers(params.power_p)[i - 1];
  const double p_above = design.residual_power(i, params.power_p);
  if (p_level == 0.0) return 0.0;

  // Fraction q of the time the adversary listens (no jamming): clean mode.
  // The rest of the time the jam budget concentrates into the 1-q fraction.
  const double clean =
      (q > 0.0)
          ? fading_log_rate(params.lambda_m, p_level, params.noise_var, p_above)
          : 0.0;
  if (q == 1.0) return clean;
  const double jam_eff = params.jam_j / (1.0 - q);
  const double jammed = fading_log_rate(params.lambda_m, p_level,
                                        params.noise_var + jam_eff, p_above);
  return q * clean + (1.0 - q) * jammed;
}

LevelRates level_rates(const ChannelParams& params, const CodeDesign& design) {
  LevelRates rates(design.n);
  for (int i = 1; i <= design.n; ++i) {
    rates[i - 1] = level_rate_at(params, design, i, design.threshold(i - 1));
  }
  return rates;
}

double forwarding_rate(const LevelRates& levels, int i) {
  if (i < 1 || i > static_cast<int>(levels.size())) {
    throw std::invalid_argument("interval index out of range");
  }
  double sum = 0.0;
  for (int j = 0; j < i; ++j) sum += levels[j];
  return sum;
}

} // namespace bmw
