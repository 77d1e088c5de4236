#include "schlicht/koebe.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>

#include "schlicht/error.hpp"
#include "schlicht/parallel.hpp"

namespace schlicht {

namespace {

// Divided difference with b - a supplied separately, so callers that know it
// in closed form avoid the subtraction.
Complex divided_difference_with_gap(const AnalyticFunction& f, Complex a, Complex b, Complex gap) {
  if (gap == Complex{}) return f.derivative(a);
  if (std::abs(gap) < kDiagonalGuard) return f.derivative(a) + 0.5 * gap * f.second_derivative(a);
  return (f.value(b) - f.value(a)) / gap;
}

class KoebeTransformModel final : public FunctionModel {
 public:
  KoebeTransformModel(AnalyticFunction f, Complex zeta)
      : f_(std::move(f)), zeta_(zeta), scale_(1.0 - std::norm(zeta)), fprime_(f_.derivative(zeta)) {
    if (!is_finite(fprime_) || std::abs(fprime_) < 1e-14) {
      throw Error(ErrorCode::DegenerateDerivative, "|f'(zeta)| < 1e-14");
    }
  }

  Complex value(Complex z) const override {
    const Complex denom = 1.0 + std::conj(zeta_) * z;
    return z * dq(z) / (fprime_ * denom);
  }

  Complex derivative(Complex z) const override {
    const Complex denom = 1.0 + std::conj(zeta_) * z;
    return f_.derivative(u(z)) / (fprime_ * denom * denom);
  }

  Complex second_derivative(Complex z) const override {
    const Complex denom = 1.0 + std::conj(zeta_) * z;
    const Complex d2 = denom * denom;
    const Complex w = u(z);
    return (f_.second_derivative(w) * scale_ / (d2 * d2) -
            2.0 * std::conj(zeta_) * f_.derivative(w) / (d2 * denom)) /
           fprime_;
  }

  Complex z_over_f(Complex z) const override {
    return fprime_ * (1.0 + std::conj(zeta_) * z) / dq(z);
  }

 private:
  Complex u(Complex z) const { return (z + zeta_) / (1.0 + std::conj(zeta_) * z); }

  // (f(u) - f(zeta)) / (u - zeta) with u - zeta = z (1 - |zeta|^2) / (1 + conj(zeta) z)
  Complex dq(Complex z) const {
    const Complex gap = z * scale_ / (1.0 + std::conj(zeta_) * z);
    return divided_difference_with_gap(f_, zeta_, u(z), gap);
  }

  AnalyticFunction f_;
  Complex zeta_;
  double scale_;
  Complex fprime_;
};

void require_in_disk(Complex z, const char* what) {
  if (!is_finite(z) || !(std::abs(z) < 1.0)) {
    throw Error(ErrorCode::OutsideDisk, std::string(what) + " must lie in the open unit disk");
  }
}

}  // namespace

MobiusPoint::MobiusPoint(Complex zeta) : zeta_(zeta) { require_in_disk(zeta, "zeta"); }

Complex mobius(const MobiusPoint& zeta, Complex z) {
  if (!is_finite(z) || std::abs(z) > 1.0 + 1e-12) {
    throw Error(ErrorCode::OutsideDisk, "mobius argument must satisfy |z| <= 1");
  }
  const Complex c = zeta.value();
  return (z + c) / (1.0 + std::conj(c) * z);
}

AnalyticFunction koebe_transform(const AnalyticFunction& f, const MobiusPoint& zeta) {
  const Complex c = zeta.value();
  std::string id = f.id() + "@koebe:" + std::to_string(c.real()) + ":" + std::to_string(c.imag());
  return AnalyticFunction(std::move(id), std::make_shared<KoebeTransformModel>(f, c));
}

Complex divided_difference(const AnalyticFunction& f, Complex a, Complex b) {
  return divided_difference_with_gap(f, a, b, b - a);
}

TwoPointResult two_point_functional(const AnalyticFunction& f, Complex zeta, Complex u) {
  require_in_disk(zeta, "zeta");
  require_in_disk(u, "u");
  if (u == zeta) return {0.0, 0.0, true};

  const Complex gap = u - zeta;
  const bool diagonal = std::abs(gap) < kDiagonalGuard;
  const Complex dq = divided_difference_with_gap(f, zeta, u, gap);
  if (dq == Complex{}) throw Error(ErrorCode::CoincidentImages, "f(u) = f(zeta) with u != zeta");
  const Complex value = f.derivative(zeta) * f.derivative(u) / (dq * dq) - 1.0;
  if (!is_finite(value)) throw Error(ErrorCode::EvaluationFailure, "two-point functional is not finite");
  return {value, std::abs(value), diagonal};
}

namespace {

double golden_max(const std::function<double(double)>& fn, double lo, double hi, double& arg) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
  double fc = fn(c), fd = fn(d);
  for (int it = 0; it < 60 && (b - a) > 1e-13; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = fn(d);
    }
  }
  arg = fc >= fd ? c : d;
  return std::max(fc, fd);
}

}  // namespace

TwoPointSup two_point_sup(const AnalyticFunction& f, double r, int grid, bool refine) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::InvalidArgument, "torus radius must lie in (0, 1)");
  if (grid < 4) throw Error(ErrorCode::InvalidArgument, "torus grid must be >= 4");
  const auto g = static_cast<std::size_t>(grid);
  auto angle = [&](std::size_t j) { return 2.0 * kPi * static_cast<double>(j) / static_cast<double>(g); };

  std::vector<double> moduli(g * g);
  parallel_for(g, [&](std::size_t j) {
    const Complex zeta = r * unit(angle(j));
    for (std::size_t k = 0; k < g; ++k) {
      moduli[j * g + k] = two_point_functional(f, zeta, r * unit(angle(k))).modulus;
    }
  });

  std::size_t best = 0;
  for (std::size_t idx = 1; idx < moduli.size(); ++idx) {
    if (moduli[idx] > moduli[best]) best = idx;
  }
  double alpha = angle(best / g);
  double beta = angle(best % g);
  double sup = moduli[best];

  if (refine) {
    const double step = 2.0 * kPi / static_cast<double>(g);
    auto modulus = [&](double a, double b) {
      return two_point_functional(f, r * unit(a), r * unit(b)).modulus;
    };
    for (int sweep = 0; sweep < 4; ++sweep) {
      double a_new = alpha, b_new = beta;
      const double va = golden_max([&](double a) { return modulus(a, beta); }, alpha - step, alpha + step, a_new);
      if (va > sup) {
        sup = va;
        alpha = a_new;
      }
      const double vb = golden_max([&](double b) { return modulus(alpha, b); }, beta - step, beta + step, b_new);
      if (vb > sup) {
        sup = vb;
        beta = b_new;
      }
    }
  }
  return {r, sup, r * unit(alpha), r * unit(beta)};
}

Theorem2Report theorem2_consistency(const AnalyticFunction& f, const MobiusPoint& zeta,
                                    const SamplingPlan& plan) {
  Theorem2Report report;
  report.transform_verdict = u_membership(koebe_transform(f, zeta), plan);

  const Complex c = zeta.value();
  CircleQuantity q{
      [&f, &zeta, c](Complex z) { return two_point_functional(f, c, mobius(zeta, z)).value; },
      [](Complex v) { return std::abs(v); },
      Bound::Upper,
      1.0,
  };
  report.two_point_verdict = scan_circles(q, plan);
  report.agree = report.transform_verdict.status == report.two_point_verdict.status;
  return report;
}

}  // namespace schlicht
