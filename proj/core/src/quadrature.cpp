#include "d2dcell/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace d2dcell {

namespace {

// 15-point Kronrod extension of 7-point Gauss-Legendre on [-1, 1].
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0};
constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
};

struct PanelErrorLess {
  bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

Panel evaluate_panel(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double fv[15];
  fv[7] = f(center);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    fv[j] = f(center - dx);
    fv[14 - j] = f(center + dx);
  }
  double kronrod = kKronrodWeights[7] * fv[7];
  for (int j = 0; j < 7; ++j) kronrod += kKronrodWeights[j] * (fv[j] + fv[14 - j]);
  // The embedded 7-point Gauss rule uses the odd Kronrod nodes plus the center.
  double gauss = kGaussWeights[3] * fv[7];
  for (int j = 0; j < 3; ++j) gauss += kGaussWeights[j] * (fv[2 * j + 1] + fv[13 - 2 * j]);

  Panel p;
  p.a = a;
  p.b = b;
  p.value = kronrod * half;
  p.error = std::fabs((kronrod - gauss) * half);
  if (!std::isfinite(p.value)) {
    p.error = std::numeric_limits<double>::infinity();
  }
  return p;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(relative_tolerance > 0.0)) {
    throw std::invalid_argument("QuadratureSpec: relative_tolerance must be > 0");
  }
  if (!(absolute_tolerance > 0.0)) {
    throw std::invalid_argument("QuadratureSpec: absolute_tolerance must be > 0");
  }
  if (max_subdivisions < 10) {
    throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 10");
  }
}

double integrate_finite(const Integrand& f, double lower, double upper,
                        const QuadratureSpec& spec) {
  spec.validate();
  if (!(lower <= upper)) {
    throw std::invalid_argument("integrate_finite: lower must be <= upper");
  }
  if (lower == upper) return 0.0;

  std::vector<Panel> heap;
  heap.reserve(static_cast<std::size_t>(spec.max_subdivisions) + 2);
  heap.push_back(evaluate_panel(f, lower, upper));

  double total_value = heap.front().value;
  double total_error = heap.front().error;
  const auto recompute_totals = [&heap, &total_value, &total_error]() {
    total_value = 0.0;
    total_error = 0.0;
    for (const Panel& p : heap) {
      total_value += p.value;
      total_error += p.error;
    }
  };

  for (int split = 0; split < spec.max_subdivisions; ++split) {
    const double tol =
        std::max(spec.absolute_tolerance, spec.relative_tolerance * std::fabs(total_value));
    if (total_error <= tol) return total_value;

    std::pop_heap(heap.begin(), heap.end(), PanelErrorLess{});
    const Panel worst = heap.back();
    heap.pop_back();

    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b)) {
      throw ConvergenceError(
          "integrate_finite: interval collapsed before reaching tolerance "
          "(non-integrable singularity?)");
    }
    const Panel left = evaluate_panel(f, worst.a, mid);
    const Panel right = evaluate_panel(f, mid, worst.b);
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), PanelErrorLess{});
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), PanelErrorLess{});

    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    if (!std::isfinite(total_value) || !std::isfinite(total_error)) {
      recompute_totals();
    }
  }

  const double tol =
      std::max(spec.absolute_tolerance, spec.relative_tolerance * std::fabs(total_value));
  if (total_error <= tol) return total_value;
  throw ConvergenceError("integrate_finite: max_subdivisions exhausted before reaching tolerance");
}

double integrate_semi_infinite(const Integrand& f, double lower, const QuadratureSpec& spec) {
  const auto transformed = [&f, lower](double u) {
    const double x = lower + (1.0 - u) / u;
    return f(x) / (u * u);
  };
  return integrate_finite(transformed, 0.0, 1.0, spec);
}

}  // namespace d2dcell
