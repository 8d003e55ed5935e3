#pragma once

// Independent reference computations and random generators shared by the
// test binaries. Nothing here calls into the library's numerics.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// Truncated-power form of the centred B-spline of order n.
inline double bspline_truncated_power(int n, double x) {
  if (std::fabs(x) >= 0.5 * n) return n == 1 && std::fabs(x) == 0.5 ? 1.0 : 0.0;
  double s = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double t = x + 0.5 * n - k;
    if (t > 0.0) s += (k % 2 ? -1.0 : 1.0) * binomial(n, k) * std::pow(t, n - 1);
  }
  return s / factorial(n - 1);
}

// g_n(x) = integral over t in [x - 1/2, x + 1/2] of g_{n-1}(t), by 8-point
// Gauss-Legendre on each stretch between knots of g_{n-1}.
inline double bspline_quadrature(int n, double x) {
  if (n == 1) return std::fabs(x) <= 0.5 ? 1.0 : 0.0;
  static constexpr std::array<double, 4> node{0.1834346424956498, 0.5255324099163290,
                                              0.7966664774136267, 0.9602898564975363};
  static constexpr std::array<double, 4> weight{0.3626837833783620, 0.3137066458778873,
                                                0.2223810344533745, 0.1012285362903763};
  const double lo = x - 0.5;
  const double hi = x + 0.5;
  std::vector<double> cuts{lo, hi};
  const double half = 0.5 * (n - 1);
  for (int j = 0; j <= n - 1; ++j) {
    const double knot = -half + j;
    if (knot > lo && knot < hi) cuts.push_back(knot);
  }
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    const double rad = 0.5 * (cuts[i + 1] - cuts[i]);
    for (std::size_t q = 0; q < node.size(); ++q)
      total += rad * weight[q] *
               (bspline_truncated_power(n - 1, mid - rad * node[q]) +
                bspline_truncated_power(n - 1, mid + rad * node[q]));
  }
  return total;
}

struct Interval {
  double lo;
  double hi;
  bool hi_closed;
};

// b-range of T_m written out from the endpoint formulas.
inline std::optional<Interval> tm_interval(double N, double a, int m) {
  if (!(a > 0.0 && a < N / 2.0)) return std::nullopt;
  if (m >= 2 && !(a > N * (m - 2) / (2.0 * m - 3))) return std::nullopt;
  const double lo = m == 1 ? 0.0 : 2.0 * (m - 1) / (N + (2 * m - 3) * a);
  double hi = 2.0 * m / (N + (2 * m - 1) * a);
  bool closed = true;
  if (hi >= 2.0 / N) {
    hi = 2.0 / N;
    closed = false;
  }
  if (!(lo < hi)) return std::nullopt;
  return Interval{lo, hi, closed};
}

// Every m in 1..64 whose interval contains b.
inline std::vector<int> tm_scan(double N, double a, double b) {
  std::vector<int> hits;
  for (int m = 1; m <= 64; ++m)
    if (auto iv = tm_interval(N, a, m))
      if (b > iv->lo && (iv->hi_closed ? b <= iv->hi : b < iv->hi)) hits.push_back(m);
  return hits;
}

struct Rng {
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine); }
  std::mt19937_64 engine;
};

// (a, b) strictly inside T_m: fa, fb in (0, 1) pick the fraction of the a-range
// and of the b-range at that a.
inline std::pair<double, double> tm_point(double N, int m, double fa, double fb) {
  const double a_lo = m == 1 ? 0.0 : N * (m - 2) / (2.0 * m - 3);
  const double a = a_lo + fa * (N / 2.0 - a_lo);
  const auto iv = tm_interval(N, a, m);
  return {a, iv->lo + fb * (iv->hi - iv->lo)};
}

}  // namespace oracle
