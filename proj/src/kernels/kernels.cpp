/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "kernels/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace gosvm {

const char* kernel_kind_name(KernelKind k) {
  return k == KernelKind::Linear ? "linear" : "rbf";
}

Eigen::MatrixXd gram(const KernelSpec& ks, const Eigen::MatrixXd& a,
                     const Eigen::MatrixXd& b) {
  if (a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "kernel arguments have different feature dimensions");
  }
  if (ks.kind == KernelKind::Rbf &&
      !(std::isfinite(ks.width) && ks.width > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "rbf width must be finite and > 0");
  }
  const Eigen::Index n = a.rows();
  const Eigen::Index m = b.rows();
  Eigen::MatrixXd g(n, m);
  if (ks.kind == KernelKind::Linear) {
    g.noalias() = a * b.transpose();
    return g;
  }
  // Pairwise squared distances computed directly so that identical rows give
  // an exact zero (and hence an exact 1 in the Gram matrix).
  const double inv = 1.0 / (2.0 * ks.width * ks.width);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      g(i, j) = std::exp(-(a.row(i) - b.row(j)).squaredNorm() * inv);
    }
  }
  return g;
}

Eigen::MatrixXd gram(const KernelSpec& ks, const Dataset& a, const Dataset& b) {
  return gram(ks, a.features(), b.features());
}

std::vector<double> width_quantiles(const Dataset& ds,
                                    const std::vector<double>& qs) {
  const Eigen::Index n = ds.size();
  if (n < 2) {
    throw Error(ErrorCode::InsufficientData,
                "width_quantiles needs at least two samples");
  }
  for (double q : qs) {
    if (!(q > 0.0 && q <= 1.0)) {
      throw Error(ErrorCode::InvalidArgument, "quantiles must lie in (0, 1]");
    }
  }
  const Eigen::MatrixXd& x = ds.features();
  std::vector<double> d;
  d.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      d.push_back((x.row(i) - x.row(j)).norm());
    }
  }
  std::sort(d.begin(), d.end());
  if (d.back() == 0.0) {
    throw Error(ErrorCode::DegenerateData, "all pairwise distances are zero");
  }
  std::vector<double> out;
  out.reserve(qs.size());
  const double m = static_cast<double>(d.size());
  for (double q : qs) {
    auto rank = static_cast<size_t>(std::ceil(q * m));
    rank = std::max<size_t>(rank, 1);
    out.push_back(d[rank - 1]);
  }
  return out;
}

}  // namespace gosvm
