#include "casimir_knob/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "casimir_knob/errors.hpp"

namespace casimir_knob {
namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int kInitialPanels = 8;
constexpr std::size_t kMaxPanels = std::size_t{1} << 15;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
};

class MappedIntegrand {
 public:
  MappedIntegrand(const Integrand& f, double scale) : f_(f), scale_(scale) {}

  double operator()(double t) {
    const double one_minus = 1.0 - t;
    const double xi = scale_ * t / one_minus;
    const double fx = f_(xi);
    ++evaluations_;
    if (!std::isfinite(fx)) {
      std::ostringstream msg;
      msg << "integrate_semi_infinite: integrand returned " << fx << " at xi = " << xi;
      throw QuadratureError(msg.str(), xi);
    }
    if (fx == 0.0) return 0.0;
    return fx * scale_ / (one_minus * one_minus);
  }

  std::size_t evaluations() const noexcept { return evaluations_; }

 private:
  const Integrand& f_;
  double scale_;
  std::size_t evaluations_ = 0;
};

Panel kronrod15(MappedIntegrand& g, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  const double fc = g(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  double abs_sum = std::abs(kronrod);

  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    f1[j] = g(center - dx);
    f2[j] = g(center + dx);
    const double pair = f1[j] + f2[j];
    kronrod += kKronrodWeights[j] * pair;
    abs_sum += kKronrodWeights[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }

  const double mean = 0.5 * kronrod;
  double asc = kKronrodWeights[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    asc += kKronrodWeights[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  }

  const double value = kronrod * half;
  const double resabs = abs_sum * std::abs(half);
  const double resasc = asc * std::abs(half);
  double error = std::abs((kronrod - gauss) * half);
  if (resasc != 0.0 && error != 0.0) {
    error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
  }
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    error = std::max(50.0 * kEps * resabs, error);
  }
  return {lo, hi, value, error};
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0 && rel_tol <= 1e-2)) {
    throw DomainError("QuadratureSpec: rel_tol must lie in (0, 1e-2]");
  }
  if (!(abs_floor >= 0.0)) throw DomainError("QuadratureSpec: abs_floor must be >= 0");
  if (max_refinements < 1) throw DomainError("QuadratureSpec: max_refinements must be >= 1");
  if (!(scale_hint > 0.0) || !std::isfinite(scale_hint)) {
    throw DomainError("QuadratureSpec: scale_hint must be finite and > 0");
  }
}

QuadratureResult integrate_semi_infinite(const Integrand& f, const QuadratureSpec& spec) {
  spec.validate();
  MappedIntegrand g(f, spec.scale_hint);

  std::vector<Panel> panels;
  panels.reserve(kInitialPanels);
  for (int i = 0; i < kInitialPanels; ++i) {
    const double lo = static_cast<double>(i) / kInitialPanels;
    const double hi = static_cast<double>(i + 1) / kInitialPanels;
    panels.push_back(kronrod15(g, lo, hi));
  }

  QuadratureResult result;
  for (int pass = 0;; ++pass) {
    double value = 0.0;
    double error = 0.0;
    for (const auto& p : panels) {
      value += p.value;
      error += p.error;
    }
    const double target = std::max(spec.rel_tol * std::abs(value), spec.abs_floor);
    result.value = value;
    result.error_estimate = error;
    result.evaluations = g.evaluations();
    if (error <= target) {
      result.converged = true;
      return result;
    }
    if (pass >= spec.max_refinements || panels.size() >= kMaxPanels) {
      result.converged = false;
      return result;
    }

    std::vector<Panel> next;
    next.reserve(panels.size() * 2);
    bool split_any = false;
    for (const auto& p : panels) {
      const double width = p.hi - p.lo;
      const double mid = 0.5 * (p.lo + p.hi);
      const bool splittable = mid > p.lo && mid < p.hi;
      if (p.error > target * width && splittable) {
        next.push_back(kronrod15(g, p.lo, mid));
        next.push_back(kronrod15(g, mid, p.hi));
        split_any = true;
      } else {
        next.push_back(p);
      }
    }
    panels = std::move(next);
    if (!split_any) {
      // Nothing left to refine; report the estimate as it stands.
      double v = 0.0;
      double e = 0.0;
      for (const auto& p : panels) {
        v += p.value;
        e += p.error;
      }
      result.value = v;
      result.error_estimate = e;
      result.evaluations = g.evaluations();
      result.converged = e <= std::max(spec.rel_tol * std::abs(v), spec.abs_floor);
      return result;
    }
  }
}

}  // namespace casimir_knob
