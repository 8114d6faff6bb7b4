#include "revolve/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace revolve {

namespace {

// 15-point Kronrod abscissae on [-1, 1]; odd indices are the embedded
// 7-point Gauss nodes, index 7 is the center.
constexpr double kNodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};

constexpr double kKronrodWeights[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};

constexpr double kGaussWeights[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct Panel {
  double value = 0.0;
  double error = 0.0;
};

constexpr int kMaxDepth = 60;

class Integrator {
 public:
  Integrator(const std::function<double(double)>& f, double rel_tol,
             double abs_tol)
      : f_(f), rel_tol_(rel_tol), abs_tol_(abs_tol) {}

  QuadratureResult run(double a, double b) {
    Panel whole = gauss_kronrod(a, b);
    tolerance_ = std::max(abs_tol_, rel_tol_ * std::fabs(whole.value));
    recurse(a, b, whole, tolerance_, 0);
    return {sum_, error_sum_, evaluations_};
  }

 private:
  const std::function<double(double)>& f_;
  double rel_tol_;
  double abs_tol_;
  double tolerance_ = 0.0;
  double sum_ = 0.0;
  double error_sum_ = 0.0;
  std::int64_t evaluations_ = 0;

  Panel gauss_kronrod(double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f_(center);
    double kronrod = kKronrodWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    for (int i = 0; i < 7; ++i) {
      const double dx = half * kNodes[i];
      const double f1 = f_(center - dx);
      const double f2 = f_(center + dx);
      kronrod += kKronrodWeights[i] * (f1 + f2);
      if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (f1 + f2);
    }
    evaluations_ += 15;
    return {kronrod * half, std::fabs((kronrod - gauss) * half)};
  }

  void recurse(double a, double b, const Panel& panel, double tol, int depth) {
    const double mid = 0.5 * (a + b);
    if (panel.error <= tol || mid <= a || mid >= b) {
      sum_ += panel.value;
      error_sum_ += panel.error;
      return;
    }
    if (depth >= kMaxDepth) throw MaxSubdivisions(a, b);
    // Left-to-right accumulation keeps the sum deterministic.
    recurse(a, mid, gauss_kronrod(a, mid), 0.5 * tol, depth + 1);
    recurse(mid, b, gauss_kronrod(mid, b), 0.5 * tol, depth + 1);
  }
};

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double rel_tol, double abs_tol) {
  if (!(a <= b)) throw Error("integration bounds must satisfy a <= b");
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw Error("integration tolerances must be positive");
  }
  if (a == b) return {0.0, 0.0, 0};
  return Integrator(f, rel_tol, abs_tol).run(a, b);
}

namespace {

double bisect(const std::function<double(double)>& g, double lo, double hi,
              double g_lo, double width_tol) {
  while (hi - lo > width_tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double g_mid = g(mid);
    if (g_mid == 0.0) return mid;
    if ((g_lo < 0.0) == (g_mid < 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> find_sign_changes(const std::function<double(double)>& g,
                                      double a, double b,
                                      std::size_t grid_size) {
  if (grid_size < 2) throw Error("sign-change grid needs at least 2 cells");
  const double width_tol = 1e-13 * (1.0 + std::fabs(a) + std::fabs(b));
  const std::size_t n = grid_size;
  std::vector<double> xs(n + 1), vs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    xs[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n);
    vs[i] = g(xs[i]);
  }
  std::vector<double> roots;
  for (std::size_t i = 0; i < n; ++i) {
    if (vs[i] * vs[i + 1] < 0.0) {
      roots.push_back(bisect(g, xs[i], xs[i + 1], vs[i], width_tol));
    } else if (vs[i] == 0.0 && i > 0) {
      // Exact zero at an interior grid point: a crossing only when the
      // nearest nonzero neighbors have opposite signs.
      std::size_t left = i;
      while (left > 0 && vs[left - 1] == 0.0) --left;
      std::size_t right = i;
      while (right < n && vs[right + 1] == 0.0) ++right;
      if (left > 0 && right < n && vs[left - 1] * vs[right + 1] < 0.0 &&
          i == left) {
        roots.push_back(xs[i]);
      }
    }
  }
  roots.erase(std::remove_if(roots.begin(), roots.end(),
                             [&](double r) { return r <= a || r >= b; }),
              roots.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace revolve
