#include "bmw/fading.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace bmw {

namespace detail {
void check_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw std::domain_error(std::string(name) + " must be finite");
  }
}
} // namespace detail

namespace {

constexpr double kInvLn2 = 1.4426950408889634074; // 1/ln(2)

// Quadrature termination target. Empirically tanh_sinh lands near 1e-14
// relative error on this family; the acceptance gate only needs 1e-8.
constexpr double kQuadTol = 1e-10;

struct IntegralKey {
  double lambda, a, b, c;
  bool operator==(const IntegralKey& o) const {
    return lambda == o.lambda && a == o.a && b == o.b && c == o.c;
  }
};

struct IntegralKeyHash {
  static std::uint64_t mix(std::uint64_t h, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    h ^= bits + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
  std::size_t operator()(const IntegralKey& k) const {
    std::uint64_t h = 0;
    h = mix(h, k.lambda);
    h = mix(h, k.a);
    h = mix(h, k.b);
    h = mix(h, k.c);
    return static_cast<std::size_t>(h);
  }
};

std::unordered_map<IntegralKey, double, IntegralKeyHash> g_cache;
std::shared_mutex g_cache_mutex;

// One integrator per thread; tanh_sinh caches its abscissa tables lazily.
boost::math::quadrature::tanh_sinh<double>& integrator() {
  static thread_local boost::math::quadrature::tanh_sinh<double> ts;
  return ts;
}

} // namespace

double log2_1p(double x) { return std::log1p(x) * kInvLn2; }

double fading_log_rate(double lambda, double a, double b, double c) {
  detail::check_finite(lambda, "lambda");
  detail::check_finite(a, "a");
  detail::check_finite(b, "b");
  detail::check_finite(c, "c");
  if (!(lambda > 0.0)) throw std::domain_error("lambda must be > 0");
  if (!(b > 0.0)) throw std::domain_error("b must be > 0");
  if (a < 0.0) throw std::domain_error("a must be >= 0");
  if (c < 0.0) throw std::domain_error("c must be >= 0");
  if (a == 0.0) return 0.0;

  const IntegralKey key{lambda, a, b, c};
  {
    std::shared_lock lock(g_cache_mutex);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }

  // u = e^{-lambda h} maps the Exp(lambda) expectation onto (0,1] with a
  // flat density. The integrand is bounded for c > 0 and has only a log
  // endpoint singularity for c = 0, which tanh_sinh absorbs.
  auto integrand = [=](double u) {
    if (u <= 0.0) u = std::numeric_limits<double>::denorm_min();
    const double h = -std::log(u) / lambda;
    return log2_1p(a * h / (b + c * h));
  };

  double err = 0.0, l1 = 0.0;
  std::size_t levels = 0;
  double value = 0.0;
  try {
    value = integrator().integrate(integrand, 0.0, 1.0, kQuadTol, &err, &l1, &levels);
  } catch (const std::exception& e) {
    throw convergence_error(std::string("fading rate quadrature failed: ") + e.what());
  }
  // err is tanh_sinh's a posteriori relative-error estimate.
  if (!(std::isfinite(value)) || err > 1e-7) {
    throw convergence_error("fading rate quadrature did not reach tolerance");
  }

  {
    std::unique_lock lock(g_cache_mutex);
    if (g_cache.size() > (1u << 22)) g_cache.clear();
    g_cache.emplace(key, value);
  }
  return value;
}

double mode_mix_rate(double q, double x, double y) {
  detail::check_finite(q, "q");
  detail::check_finite(x, "x");
  detail::check_finite(y, "y");
  if (q < 0.0 || q > 1.0) throw std::domain_error("q must lie in [0,1]");
  if (!(x > 0.0)) throw std::domain_error("x must be > 0");
  if (!(y > 0.0)) throw std::domain_error("y must be > 0");
  if (q == 1.0) return log2_1p(x);
  const double jammed = log2_1p(x / (1.0 + y / (1.0 - q)));
  return q * log2_1p(x) + (1.0 - q) * jammed;
}

void fading_cache_clear() {
  std::unique_lock lock(g_cache_mutex);
  g_cache.clear();
}

std::size_t fading_cache_size() {
  std::shared_lock lock(g_cache_mutex);
  return g_cache.size();
}

} // namespace bmw
