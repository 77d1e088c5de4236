#pragma once

// Named normalized functions f(z) = z + ... on the unit disk and the
// class-preserving transforms applied to them.
//
// Each function exposes closed-form pointwise evaluators, including z/f(z)
// directly so that quantities like (z/f)^2 f' never form 0/0 at the origin,
// and an analytic branch of log(f(z)/z) that vanishes at 0.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schlicht/complex.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

/// Pointwise model behind an AnalyticFunction. Implementations must be
/// immutable and thread-safe.
class FunctionModel {
 public:
  virtual ~FunctionModel() = default;

  virtual Complex value(Complex z) const = 0;
  virtual Complex derivative(Complex z) const = 0;
  /// Default: Cauchy integral of derivative() on a small circle about z.
  virtual Complex second_derivative(Complex z) const;
  virtual Complex z_over_f(Complex z) const = 0;
  /// Default: continues log(f/z) from 0 along the segment [0, z].
  virtual Complex log_f_over_z(Complex z) const;
  /// Exact coefficients when the model knows them; nullopt otherwise.
  virtual std::optional<TruncatedSeries> closed_form_series(int order) const;
};

class AnalyticFunction {
 public:
  AnalyticFunction(std::string id, std::shared_ptr<const FunctionModel> model,
                   bool renormalized = false);

  const std::string& id() const noexcept { return id_; }

  Complex value(Complex z) const { return model_->value(z); }
  Complex operator()(Complex z) const { return model_->value(z); }
  Complex derivative(Complex z) const { return model_->derivative(z); }
  Complex second_derivative(Complex z) const { return model_->second_derivative(z); }
  Complex z_over_f(Complex z) const { return model_->z_over_f(z); }
  Complex log_f_over_z(Complex z) const { return model_->log_f_over_z(z); }
  std::optional<TruncatedSeries> closed_form_series(int order) const {
    return model_->closed_form_series(order);
  }

  /// Set when a transform had to rescale its output to restore f'(0) = 1.
  bool renormalized() const noexcept { return renormalized_; }

  const std::shared_ptr<const FunctionModel>& model() const noexcept { return model_; }

 private:
  std::string id_;
  std::shared_ptr<const FunctionModel> model_;
  bool renormalized_;
};

enum class TransformKind { Rotate, Conjugate, Dilate, OmittedValue, NthRoot };

struct TransformSpec {
  TransformKind kind = TransformKind::Rotate;
  double theta = 0.0;      // Rotate
  double r = 1.0;          // Dilate, 0 < r <= 1
  Complex omitted{};       // OmittedValue, caller asserts it lies outside f(D)
  int n = 1;               // NthRoot, n >= 1

  static TransformSpec rotate(double theta) { return {TransformKind::Rotate, theta}; }
  static TransformSpec conjugate() { return {TransformKind::Conjugate}; }
  static TransformSpec dilate(double r) { return {TransformKind::Dilate, 0.0, r}; }
  static TransformSpec omitted_value(Complex w) { return {TransformKind::OmittedValue, 0.0, 1.0, w}; }
  static TransformSpec nth_root(int n) { return {TransformKind::NthRoot, 0.0, 1.0, {}, n}; }
};

/// Catalog ids: identity, half_plane, two_pole, koebe, hexagonal, u_family,
/// f0, f1. half_plane/two_pole/hexagonal take a sign (+1 or -1); u_family
/// takes (n, c) and is z/(1 - c z^n).
AnalyticFunction catalog_get(std::string_view id, std::span<const double> params = {});

AnalyticFunction apply_transform(const AnalyticFunction& f, const TransformSpec& t);

/// Parses the command-line grammar, e.g. "koebe", "half_plane:+1",
/// "u_family:3:0.5", "f1@rotate:1.57@dilate:0.7071", "koebe@nth_root:2",
/// "koebe@omitted_value:-0.25:0" and "f1@conjugate".
AnalyticFunction parse_function(std::string_view text);

struct SampledSeriesOptions {
  double rho = 0.8;
  int samples = 1024;
};

/// Closed-form coefficients when available, otherwise circle sampling.
TruncatedSeries series_of(const AnalyticFunction& f, int order,
                          const SampledSeriesOptions& sampling = {});

/// Catalog ids (in parse_function grammar) whose functions belong to U.
std::vector<std::string> catalog_u_member_ids();
/// Catalog members known to be univalent: the U members plus f0.
std::vector<std::string> catalog_s_member_ids();

}  // namespace schlicht
