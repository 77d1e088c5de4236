#include "schlicht/catalog.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <utility>

#include "schlicht/error.hpp"

namespace schlicht {

// ---------------------------------------------------------------------------
// Default model behaviour

Complex FunctionModel::second_derivative(Complex z) const {
  // f''(z) = (1 / (2 pi i)) \oint f'(w) / (w - z)^2 dw on |w - z| = h.
  // The trapezoid rule converges like (h / dist)^K, dist >= 4h here.
  const double gap = std::max(1.0 - std::abs(z), 1e-6);
  const double h = std::min(0.05, 0.25 * gap);
  constexpr int K = 32;
  Complex sum = 0.0;
  for (int j = 0; j < K; ++j) {
    const Complex e = unit(2.0 * kPi * j / K);
    sum += derivative(z + h * e) * std::conj(e);
  }
  return sum / (K * h);
}

Complex FunctionModel::log_f_over_z(Complex z) const {
  if (z == Complex{}) return 0.0;
  // Unwrap arg(z/f) along t z, t in [0, 1]; z/f is 1 at t = 0.
  for (int steps = 32; steps <= 65536; steps *= 2) {
    Complex prev = 1.0;
    double phase = 0.0;
    bool smooth = true;
    for (int k = 1; k <= steps; ++k) {
      const Complex w = z_over_f(z * (static_cast<double>(k) / steps));
      if (!is_finite(w) || w == Complex{}) {
        throw Error(ErrorCode::EvaluationFailure, "z/f vanishes or diverges on [0, z]");
      }
      const double step = std::arg(w / prev);
      if (std::abs(step) > kPi / 4) {
        smooth = false;
        break;
      }
      phase += step;
      prev = w;
    }
    if (smooth) return -Complex(std::log(std::abs(prev)), phase);
  }
  throw Error(ErrorCode::EvaluationFailure, "log(f/z) continuation did not resolve the phase");
}

std::optional<TruncatedSeries> FunctionModel::closed_form_series(int) const { return std::nullopt; }

AnalyticFunction::AnalyticFunction(std::string id, std::shared_ptr<const FunctionModel> model,
                                   bool renormalized)
    : id_(std::move(id)), model_(std::move(model)), renormalized_(renormalized) {
  if (!model_) throw Error(ErrorCode::InvalidArgument, "AnalyticFunction needs a model");
}

namespace {

std::string format_number(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc{} ? std::string(buf, end) : std::to_string(x);
}

std::string format_sign(double s) { return s > 0 ? "+1" : "-1"; }

// ---------------------------------------------------------------------------
// Base catalog: f(z) = z / h(z) with h = prod_k (1 - a_k z^{p_k})^{beta_k}.
// Every factor has |a_k| <= 1, so 1 - a_k z^{p_k} stays in Re > 0 on the open
// disk and the principal log of each factor is analytic there.

struct Factor {
  Complex a;
  int power;
  double beta;
};

class ProductQuotientModel final : public FunctionModel {
 public:
  explicit ProductQuotientModel(std::vector<Factor> factors) : factors_(std::move(factors)) {}

  Complex value(Complex z) const override { return z / h(z); }

  Complex derivative(Complex z) const override {
    // f = z/h  =>  f' = (1 - z L') / h with L = log h
    return (1.0 - z * log_h_prime(z)) / h(z);
  }

  Complex second_derivative(Complex z) const override {
    const Complex l1 = log_h_prime(z);
    const Complex l2 = log_h_second(z);
    return (-2.0 * l1 - z * l2 + z * l1 * l1) / h(z);
  }

  Complex z_over_f(Complex z) const override { return h(z); }

  Complex log_f_over_z(Complex z) const override { return -log_h(z); }

  std::optional<TruncatedSeries> closed_form_series(int order) const override {
    if (order < 1) return TruncatedSeries::monomial(1, std::max(order, 0));
    // f/z = prod (1 - a z^p)^{-beta}
    TruncatedSeries q = TruncatedSeries::monomial(0, order - 1);
    for (const Factor& fac : factors_) {
      TruncatedSeries base = TruncatedSeries::monomial(0, order - 1);
      if (fac.power <= order - 1) base.at(fac.power) = -fac.a;
      q = series_mul(q, series_pow(base, -fac.beta));
    }
    return q.shifted_up();
  }

 private:
  Complex h(Complex z) const {
    Complex out = 1.0;
    for (const Factor& fac : factors_) {
      const Complex base = 1.0 - fac.a * ipow(z, fac.power);
      if (fac.beta == std::round(fac.beta) && fac.beta >= 0) {
        for (int k = 0; k < static_cast<int>(fac.beta); ++k) out *= base;
      } else {
        out *= std::exp(fac.beta * std::log(base));
      }
    }
    return out;
  }

  Complex log_h(Complex z) const {
    Complex out = 0.0;
    for (const Factor& fac : factors_) out += fac.beta * std::log(1.0 - fac.a * ipow(z, fac.power));
    return out;
  }

  Complex log_h_prime(Complex z) const {
    Complex out = 0.0;
    for (const Factor& fac : factors_) {
      const double p = fac.power;
      const Complex base = 1.0 - fac.a * ipow(z, fac.power);
      out += fac.beta * (-fac.a * p * ipow(z, fac.power - 1)) / base;
    }
    return out;
  }

  Complex log_h_second(Complex z) const {
    Complex out = 0.0;
    for (const Factor& fac : factors_) {
      const double p = fac.power;
      const Complex base = 1.0 - fac.a * ipow(z, fac.power);
      const Complex d1 = -fac.a * p * ipow(z, fac.power - 1);
      const Complex d2 = fac.power >= 2 ? -fac.a * p * (p - 1) * ipow(z, fac.power - 2) : Complex{};
      out += fac.beta * (d2 / base - d1 * d1 / (base * base));
    }
    return out;
  }

  std::vector<Factor> factors_;
};

AnalyticFunction make_product(std::string id, std::vector<Factor> factors) {
  return AnalyticFunction(std::move(id), std::make_shared<ProductQuotientModel>(std::move(factors)));
}

double require_sign(std::string_view id, std::span<const double> params) {
  if (params.size() != 1 || (params[0] != 1.0 && params[0] != -1.0)) {
    throw Error(ErrorCode::BadParams, std::string(id) + " takes a single sign +1 or -1");
  }
  return params[0];
}

// ---------------------------------------------------------------------------
// Transforms

class RotateModel final : public FunctionModel {
 public:
  RotateModel(AnalyticFunction f, double theta) : f_(std::move(f)), e_(unit(theta)) {}
  Complex value(Complex z) const override { return std::conj(e_) * f_.value(e_ * z); }
  Complex derivative(Complex z) const override { return f_.derivative(e_ * z); }
  Complex second_derivative(Complex z) const override { return e_ * f_.second_derivative(e_ * z); }
  Complex z_over_f(Complex z) const override { return f_.z_over_f(e_ * z); }
  Complex log_f_over_z(Complex z) const override { return f_.log_f_over_z(e_ * z); }
  std::optional<TruncatedSeries> closed_form_series(int order) const override {
    auto s = f_.closed_form_series(order);
    if (!s) return s;
    Complex scale = std::conj(e_);
    for (int k = 0; k <= s->order(); ++k) {
      s->at(k) *= scale;
      scale *= e_;
    }
    return s;
  }

 private:
  AnalyticFunction f_;
  Complex e_;
};

class ConjugateModel final : public FunctionModel {
 public:
  explicit ConjugateModel(AnalyticFunction f) : f_(std::move(f)) {}
  Complex value(Complex z) const override { return std::conj(f_.value(std::conj(z))); }
  Complex derivative(Complex z) const override { return std::conj(f_.derivative(std::conj(z))); }
  Complex second_derivative(Complex z) const override {
    return std::conj(f_.second_derivative(std::conj(z)));
  }
  Complex z_over_f(Complex z) const override { return std::conj(f_.z_over_f(std::conj(z))); }
  Complex log_f_over_z(Complex z) const override { return std::conj(f_.log_f_over_z(std::conj(z))); }
  std::optional<TruncatedSeries> closed_form_series(int order) const override {
    auto s = f_.closed_form_series(order);
    if (!s) return s;
    for (int k = 0; k <= s->order(); ++k) s->at(k) = std::conj(s->at(k));
    return s;
  }

 private:
  AnalyticFunction f_;
};

class DilateModel final : public FunctionModel {
 public:
  DilateModel(AnalyticFunction f, double r) : f_(std::move(f)), r_(r) {}
  Complex value(Complex z) const override { return f_.value(r_ * z) / r_; }
  Complex derivative(Complex z) const override { return f_.derivative(r_ * z); }
  Complex second_derivative(Complex z) const override { return r_ * f_.second_derivative(r_ * z); }
  Complex z_over_f(Complex z) const override { return f_.z_over_f(r_ * z); }
  Complex log_f_over_z(Complex z) const override { return f_.log_f_over_z(r_ * z); }
  std::optional<TruncatedSeries> closed_form_series(int order) const override {
    auto s = f_.closed_form_series(order);
    if (!s) return s;
    double scale = 1.0 / r_;
    for (int k = 0; k <= s->order(); ++k) {
      s->at(k) *= scale;
      scale *= r_;
    }
    return s;
  }

 private:
  AnalyticFunction f_;
  double r_;
};

// g = f / (1 - f/w) = w f / (w - f); g'(0) = f'(0) exactly.
class OmittedValueModel final : public FunctionModel {
 public:
  OmittedValueModel(AnalyticFunction f, Complex w) : f_(std::move(f)), w_(w) {}
  Complex value(Complex z) const override {
    const Complex fz = f_.value(z);
    return w_ * fz / (w_ - fz);
  }
  Complex derivative(Complex z) const override {
    const Complex d = w_ - f_.value(z);
    return w_ * w_ * f_.derivative(z) / (d * d);
  }
  Complex second_derivative(Complex z) const override {
    const Complex d = w_ - f_.value(z);
    const Complex f1 = f_.derivative(z);
    return w_ * w_ * (f_.second_derivative(z) * d + 2.0 * f1 * f1) / (d * d * d);
  }
  Complex z_over_f(Complex z) const override { return f_.z_over_f(z) - z / w_; }
  std::optional<TruncatedSeries> closed_form_series(int order) const override {
    auto s = f_.closed_form_series(order);
    if (!s) return s;
    const TruncatedSeries denom = TruncatedSeries::monomial(0, order) - (*s) * (1.0 / w_);
    return series_mul(*s, series_reciprocal(denom));
  }

 private:
  AnalyticFunction f_;
  Complex w_;
};

// g(z) = z (f(z^n) / z^n)^{1/n}, principal root.
class NthRootModel final : public FunctionModel {
 public:
  NthRootModel(AnalyticFunction f, int n) : f_(std::move(f)), n_(n) {}

  Complex value(Complex z) const override { return z * std::exp(log_f_over_z(z)); }

  Complex derivative(Complex z) const override {
    // g' = e^L (f'(w) w / f(w)), w = z^n
    const Complex w = ipow(z, n_);
    return std::exp(log_f_over_z(z)) * f_.derivative(w) * f_.z_over_f(w);
  }

  Complex z_over_f(Complex z) const override { return std::exp(-log_f_over_z(z)); }

  Complex log_f_over_z(Complex z) const override {
    const Complex log_q = f_.log_f_over_z(ipow(z, n_));
    if (std::abs(log_q.imag()) >= kPi) {
      throw Error(ErrorCode::BranchCut, "nth_root: f(z^n)/z^n leaves the principal domain");
    }
    return log_q / static_cast<double>(n_);
  }

  std::optional<TruncatedSeries> closed_form_series(int order) const override {
    auto s = f_.closed_form_series(order);
    if (!s) return s;
    if (order < 1) return s;
    const TruncatedSeries q = s->shifted_down();
    const TruncatedSeries inner = TruncatedSeries::monomial(n_, order - 1);
    return series_pow(series_compose(q, inner), 1.0 / n_).shifted_up();
  }

 private:
  AnalyticFunction f_;
  int n_;
};

// Rescales g to c g with c = 1/g'(0) when a transform output drifts.
class ScaledModel final : public FunctionModel {
 public:
  ScaledModel(AnalyticFunction f, Complex scale) : f_(std::move(f)), c_(scale) {}
  Complex value(Complex z) const override { return c_ * f_.value(z); }
  Complex derivative(Complex z) const override { return c_ * f_.derivative(z); }
  Complex second_derivative(Complex z) const override { return c_ * f_.second_derivative(z); }
  Complex z_over_f(Complex z) const override { return f_.z_over_f(z) / c_; }
  Complex log_f_over_z(Complex z) const override { return f_.log_f_over_z(z) + std::log(c_); }
  std::optional<TruncatedSeries> closed_form_series(int order) const override {
    auto s = f_.closed_form_series(order);
    if (s) *s *= c_;
    return s;
  }

 private:
  AnalyticFunction f_;
  Complex c_;
};

std::string transform_suffix(const TransformSpec& t) {
  switch (t.kind) {
    case TransformKind::Rotate: return "@rotate:" + format_number(t.theta);
    case TransformKind::Conjugate: return "@conjugate";
    case TransformKind::Dilate: return "@dilate:" + format_number(t.r);
    case TransformKind::OmittedValue:
      return "@omitted_value:" + format_number(t.omitted.real()) + ":" + format_number(t.omitted.imag());
    case TransformKind::NthRoot: return "@nth_root:" + std::to_string(t.n);
  }
  return "@?";
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_double(std::string_view token, std::string_view context) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value)) {
    throw Error(ErrorCode::BadParams, "cannot parse number '" + std::string(token) + "' in " +
                                          std::string(context));
  }
  return value;
}

int parse_int(std::string_view token, std::string_view context) {
  const double v = parse_double(token, context);
  if (v != std::round(v)) {
    throw Error(ErrorCode::BadParams, "expected an integer in " + std::string(context));
  }
  return static_cast<int>(v);
}

}  // namespace

AnalyticFunction catalog_get(std::string_view id, std::span<const double> params) {
  for (double p : params) {
    if (!std::isfinite(p)) throw Error(ErrorCode::BadParams, "non-finite parameter");
  }
  auto expect_none = [&] {
    if (!params.empty()) throw Error(ErrorCode::BadParams, std::string(id) + " takes no parameters");
  };

  if (id == "identity") {
    expect_none();
    return make_product("identity", {});
  }
  if (id == "half_plane") {
    const double e = require_sign(id, params);
    return make_product("half_plane:" + format_sign(e), {{e, 1, 1.0}});
  }
  if (id == "two_pole") {
    const double e = require_sign(id, params);
    return make_product("two_pole:" + format_sign(e), {{e, 2, 1.0}});
  }
  if (id == "koebe") {
    expect_none();
    return make_product("koebe", {{1.0, 1, 2.0}});
  }
  if (id == "hexagonal") {
    // 1 + e z + z^2 = (1 - a z)(1 - conj(a) z), a = (-e + i sqrt 3) / 2
    const double e = require_sign(id, params);
    const Complex a(-e / 2.0, std::sqrt(3.0) / 2.0);
    return make_product("hexagonal:" + format_sign(e), {{a, 1, 1.0}, {std::conj(a), 1, 1.0}});
  }
  if (id == "u_family") {
    if (params.size() != 2) throw Error(ErrorCode::BadParams, "u_family takes (n, c)");
    const double n = params[0];
    if (n != std::round(n) || n < 1) throw Error(ErrorCode::BadParams, "u_family needs integer n >= 1");
    const int power = static_cast<int>(n);
    return make_product("u_family:" + std::to_string(power) + ":" + format_number(params[1]),
                        {{params[1], power, 1.0}});
  }
  if (id == "f0") {
    expect_none();
    return make_product("f0", {{1.0, 3, 2.0 / 3.0}});
  }
  if (id == "f1") {
    expect_none();
    // 1 + z/2 + z^3/2 = (1 + z)(1 - b z)(1 - conj(b) z), b = (1 + i sqrt 7) / 4
    const Complex b(0.25, std::sqrt(7.0) / 4.0);
    return make_product("f1", {{-1.0, 1, 1.0}, {b, 1, 1.0}, {std::conj(b), 1, 1.0}});
  }
  throw Error(ErrorCode::UnknownId, "unknown catalog id '" + std::string(id) + "'");
}

AnalyticFunction apply_transform(const AnalyticFunction& f, const TransformSpec& t) {
  const std::string id = f.id() + transform_suffix(t);
  switch (t.kind) {
    case TransformKind::Rotate:
      if (!std::isfinite(t.theta)) throw Error(ErrorCode::BadParams, "rotate angle must be finite");
      return AnalyticFunction(id, std::make_shared<RotateModel>(f, t.theta));
    case TransformKind::Conjugate:
      return AnalyticFunction(id, std::make_shared<ConjugateModel>(f));
    case TransformKind::Dilate:
      if (!(t.r > 0.0 && t.r <= 1.0)) throw Error(ErrorCode::BadParams, "dilate needs 0 < r <= 1");
      return AnalyticFunction(id, std::make_shared<DilateModel>(f, t.r));
    case TransformKind::OmittedValue: {
      if (!is_finite(t.omitted) || t.omitted == Complex{}) {
        throw Error(ErrorCode::BadParams, "omitted value must be finite and nonzero");
      }
      AnalyticFunction g(id, std::make_shared<OmittedValueModel>(f, t.omitted));
      const Complex slope = g.derivative(0.0);
      if (std::abs(slope - 1.0) > 1e-12) {
        return AnalyticFunction(id, std::make_shared<ScaledModel>(g, 1.0 / slope), true);
      }
      return g;
    }
    case TransformKind::NthRoot:
      if (t.n < 1) throw Error(ErrorCode::BadParams, "nth_root needs n >= 1");
      return AnalyticFunction(id, std::make_shared<NthRootModel>(f, t.n));
  }
  throw Error(ErrorCode::BadParams, "unknown transform kind");
}

AnalyticFunction parse_function(std::string_view text) {
  const auto stages = split(text, '@');
  const auto base = split(stages.front(), ':');
  std::vector<double> params;
  for (std::size_t i = 1; i < base.size(); ++i) params.push_back(parse_double(base[i], stages.front()));
  AnalyticFunction f = catalog_get(base.front(), params);

  for (std::size_t s = 1; s < stages.size(); ++s) {
    const auto parts = split(stages[s], ':');
    const std::string_view kind = parts.front();
    auto arg = [&](std::size_t i) {
      if (i >= parts.size()) {
        throw Error(ErrorCode::BadParams, "missing parameter in '" + std::string(stages[s]) + "'");
      }
      return parts[i];
    };
    auto expect_args = [&](std::size_t lo, std::size_t hi) {
      if (parts.size() - 1 < lo || parts.size() - 1 > hi) {
        throw Error(ErrorCode::BadParams, "wrong parameter count in '" + std::string(stages[s]) + "'");
      }
    };
    if (kind == "rotate") {
      expect_args(1, 1);
      f = apply_transform(f, TransformSpec::rotate(parse_double(arg(1), stages[s])));
    } else if (kind == "conjugate") {
      expect_args(0, 0);
      f = apply_transform(f, TransformSpec::conjugate());
    } else if (kind == "dilate") {
      expect_args(1, 1);
      f = apply_transform(f, TransformSpec::dilate(parse_double(arg(1), stages[s])));
    } else if (kind == "omitted_value") {
      expect_args(1, 2);
      const double re = parse_double(arg(1), stages[s]);
      const double im = parts.size() > 2 ? parse_double(arg(2), stages[s]) : 0.0;
      f = apply_transform(f, TransformSpec::omitted_value({re, im}));
    } else if (kind == "nth_root") {
      expect_args(1, 1);
      f = apply_transform(f, TransformSpec::nth_root(parse_int(arg(1), stages[s])));
    } else {
      throw Error(ErrorCode::UnknownId, "unknown transform '" + std::string(kind) + "'");
    }
  }
  return f;
}

TruncatedSeries series_of(const AnalyticFunction& f, int order, const SampledSeriesOptions& sampling) {
  if (auto s = f.closed_form_series(order)) return *std::move(s);
  int samples = sampling.samples;
  while (samples <= 2 * order) samples *= 2;
  return series_from_samples([&f](Complex z) { return f.value(z); }, sampling.rho, samples, order);
}

std::vector<std::string> catalog_u_member_ids() {
  return {"identity",      "half_plane:+1", "half_plane:-1", "two_pole:+1",
          "two_pole:-1",   "koebe",         "hexagonal:+1",  "hexagonal:-1",
          "f1",            "u_family:2:1",  "u_family:3:0.5"};
}

std::vector<std::string> catalog_s_member_ids() {
  auto ids = catalog_u_member_ids();
  ids.emplace_back("f0");
  return ids;
}

}  // namespace schlicht
