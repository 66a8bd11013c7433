/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "modelsel/modelsel.hpp"

#include <cmath>
#include <cstddef>
#include <ostream>

#include "ordermetrics/ordermetrics.hpp"

namespace gosvm {
namespace {

void check_axes(const GridAxes& a) {
  if (a.nu_b.empty() || a.nu_o.empty() || a.alpha.empty())
    throw Error(ErrorCode::InvalidArgument, "grid axes must be non-empty");
}

double mean_l01(const Eigen::VectorXd& f, const Eigen::VectorXi& y) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < f.size(); ++i)
    s += l01(f[i], static_cast<double>(y[i]));
  return f.size() > 0 ? s / static_cast<double>(f.size()) : 0.0;
}

std::size_t argmin_lex(const std::vector<double>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] < v[best]) best = i;  // strict: first minimum wins ties
  return best;
}

// 1-D correlation along one axis with replicate padding.  The kernel is
// symmetric so this equals convolution.  Accumulating weighted differences
// from the window center (acc is 0 when all inputs agree) keeps constant
// regions bitwise unchanged, which the normalized direct sum cannot promise.
void smooth_axis(std::vector<double>& data, const ValidationTensor& shape,
                 const std::vector<double>& kernel, int axis) {
  const long dims[3] = {static_cast<long>(shape.axes.nu_b.size()),
                        static_cast<long>(shape.axes.nu_o.size()),
                        static_cast<long>(shape.axes.alpha.size())};
  const long radius = static_cast<long>(kernel.size()) / 2;
  std::vector<double> out(data.size());
  for (long i = 0; i < dims[0]; ++i)
    for (long j = 0; j < dims[1]; ++j)
      for (long k = 0; k < dims[2]; ++k) {
        long idx[3] = {i, j, k};
        const double center =
            data[shape.cell(static_cast<std::size_t>(i),
                            static_cast<std::size_t>(j),
                            static_cast<std::size_t>(k))];
        double acc = 0.0;
        for (long t = -radius; t <= radius; ++t) {
          long p = idx[axis] + t;
          if (p < 0) p = 0;
          if (p >= dims[axis]) p = dims[axis] - 1;
          long at[3] = {idx[0], idx[1], idx[2]};
          at[axis] = p;
          acc += kernel[static_cast<std::size_t>(t + radius)] *
                 (data[shape.cell(static_cast<std::size_t>(at[0]),
                                  static_cast<std::size_t>(at[1]),
                                  static_cast<std::size_t>(at[2]))] -
                  center);
        }
        out[shape.cell(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                       static_cast<std::size_t>(k))] = center + acc;
      }
  data.swap(out);
}

std::vector<double> gaussian_kernel(std::size_t length, double sigma) {
  std::vector<double> k(length);
  const double c = 0.5 * static_cast<double>(length - 1);
  double sum = 0.0;
  for (std::size_t i = 0; i < length; ++i) {
    const double d = static_cast<double>(i) - c;
    k[i] = std::exp(-0.5 * d * d / (sigma * sigma));
    sum += k[i];
  }
  for (double& v : k) v /= sum;
  return k;
}

}  // namespace

GridAxes GridAxes::standard() {
  GridAxes a;
  for (int i = 1; i <= 9; ++i) a.nu_b.push_back(0.1 * i);
  a.nu_b.push_back(0.95);
  a.nu_o = a.nu_b;
  a.alpha = {0.1, 0.25, 0.5};
  return a;
}

GridResult grid_search(const Dataset& train, const Dataset& valid,
                       const GridAxes& axes, const KernelSpec& ks,
                       OrderingMode mode, const qp::QpOptions& opt) {
  check_axes(axes);
  GridResult r;
  r.tensor.axes = axes;
  const std::size_t total =
      axes.nu_b.size() * axes.nu_o.size() * axes.alpha.size();
  r.tensor.errors.assign(total, 1.0);
  r.tensor.status.assign(total, CellStatus::Failed);
  r.models.resize(total);
  for (std::size_t i = 0; i < axes.nu_b.size(); ++i)
    for (std::size_t j = 0; j < axes.nu_o.size(); ++j)
      for (std::size_t k = 0; k < axes.alpha.size(); ++k) {
        GoSvmParams p;
        p.nu_b = axes.nu_b[i];
        p.nu_o = axes.nu_o[j];
        p.alpha = axes.alpha[k];
        p.kernel = ks;
        p.ordering = mode;
        const std::size_t c = r.tensor.cell(i, j, k);
        try {
          GoSvmSolution sol = train_gosvm(train, p, opt);
          const Eigen::VectorXd f = predict(sol.model, valid.features());
          r.tensor.errors[c] = mean_l01(f, valid.labels());
          r.tensor.status[c] = CellStatus::Ok;
          r.models[c] = std::move(sol);
        } catch (const Error& e) {
          // A node whose parameters the solver certifies as unusable stays a
          // Failed cell; anything else is a real fault and propagates.
          if (e.code() != ErrorCode::InfeasibleParams &&
              e.code() != ErrorCode::IllConditioned)
            throw;
        }
      }
  return r;
}

SmoothingFilter SmoothingFilter::gaussian(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw Error(ErrorCode::InvalidArgument, "smoothing sigma must be positive");
  SmoothingFilter f;
  f.k_nub = gaussian_kernel(5, sigma);
  f.k_nuo = gaussian_kernel(5, sigma);
  f.k_alpha = gaussian_kernel(3, sigma);
  return f;
}

ValidationTensor gaussian_smooth(const ValidationTensor& t,
                                 const SmoothingFilter& f) {
  check_axes(t.axes);
  if (f.k_nub.empty() || f.k_nuo.empty() || f.k_alpha.empty() ||
      f.k_nub.size() % 2 == 0 || f.k_nuo.size() % 2 == 0 ||
      f.k_alpha.size() % 2 == 0)
    throw Error(ErrorCode::InvalidArgument,
                "smoothing kernels must have odd positive length");
  ValidationTensor out = t;
  smooth_axis(out.errors, t, f.k_nub, 0);
  smooth_axis(out.errors, t, f.k_nuo, 1);
  smooth_axis(out.errors, t, f.k_alpha, 2);
  return out;
}

const char* selection_strategy_name(SelectionStrategy s) {
  switch (s) {
    case SelectionStrategy::Unsmooth: return "unsmooth";
    case SelectionStrategy::Smoothed: return "smoothed";
    case SelectionStrategy::Extended: return "extended";
  }
  return "unknown";
}

std::vector<double> selection_scores(const GridResult& r,
                                     SelectionStrategy strategy,
                                     const Dataset* extended_valid,
                                     const SmoothingFilter& f) {
  check_axes(r.tensor.axes);
  switch (strategy) {
    case SelectionStrategy::Unsmooth:
      return r.tensor.errors;
    case SelectionStrategy::Smoothed:
      return gaussian_smooth(r.tensor, f).errors;
    case SelectionStrategy::Extended: {
      if (extended_valid == nullptr)
        throw Error(ErrorCode::MissingExtendedSet,
                    "extended selection needs an extended validation set");
      std::vector<double> score(r.tensor.size(), 1.0);
      for (std::size_t c = 0; c < r.tensor.size(); ++c)
        if (r.models[c].has_value()) {
          const Eigen::VectorXd fx =
              predict(r.models[c]->model, extended_valid->features());
          score[c] = mean_l01(fx, extended_valid->labels());
        }
      return score;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown selection strategy");
}

GridNode node_at(const ValidationTensor& t, std::size_t cell, double score) {
  const GridAxes& a = t.axes;
  GridNode node;
  node.i_alpha = cell % a.alpha.size();
  node.i_nuo = (cell / a.alpha.size()) % a.nu_o.size();
  node.i_nub = cell / (a.alpha.size() * a.nu_o.size());
  node.nu_b = a.nu_b[node.i_nub];
  node.nu_o = a.nu_o[node.i_nuo];
  node.alpha = a.alpha[node.i_alpha];
  node.error = score;
  return node;
}

GridNode select(const GridResult& r, SelectionStrategy strategy,
                const Dataset* extended_valid, const SmoothingFilter& f) {
  const std::vector<double> score =
      selection_scores(r, strategy, extended_valid, f);
  const std::size_t best = argmin_lex(score);
  return node_at(r.tensor, best, score[best]);
}

void write_tensor_csv(const ValidationTensor& t, std::ostream& out) {
  out << "i_nub,i_nuo,i_alpha,nu_b,nu_o,alpha,error,status\n";
  for (std::size_t i = 0; i < t.axes.nu_b.size(); ++i)
    for (std::size_t j = 0; j < t.axes.nu_o.size(); ++j)
      for (std::size_t k = 0; k < t.axes.alpha.size(); ++k) {
        const std::size_t c = t.cell(i, j, k);
        out << i << ',' << j << ',' << k << ',' << format_real(t.axes.nu_b[i])
            << ',' << format_real(t.axes.nu_o[j]) << ','
            << format_real(t.axes.alpha[k]) << ',' << format_real(t.errors[c])
            << ',' << (t.status[c] == CellStatus::Ok ? "ok" : "failed")
            << '\n';
      }
}

}  // namespace gosvm
