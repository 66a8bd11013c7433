/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace gosvm {

struct LabeledSample {
  Eigen::VectorXd features;
  int label = 1;  // -1 or +1
  std::optional<double> oracle;
};

// Column-homogeneous labeled dataset with an optional privileged "oracle"
// column carrying the ordering information.  Either every sample has an
// oracle value or none does.
class Dataset {
 public:
  Dataset() = default;
  Dataset(Eigen::MatrixXd features, Eigen::VectorXi labels,
          std::optional<Eigen::VectorXd> oracle);

  static Dataset from_samples(const std::vector<LabeledSample>& samples);

  Eigen::Index size() const { return x_.rows(); }
  Eigen::Index dim() const { return x_.cols(); }
  bool has_oracle() const { return oracle_.has_value(); }

  const Eigen::MatrixXd& features() const { return x_; }
  const Eigen::VectorXi& labels() const { return y_; }
  const Eigen::VectorXd& oracle() const;

  Eigen::VectorXd sample(Eigen::Index i) const { return x_.row(i); }
  int label(Eigen::Index i) const { return y_(i); }
  double oracle_value(Eigen::Index i) const { return oracle().coeff(i); }

  Eigen::Index positives() const;
  Eigen::Index negatives() const;

  Dataset subset(const std::vector<Eigen::Index>& rows) const;

 private:
  Eigen::MatrixXd x_;
  Eigen::VectorXi y_;
  std::optional<Eigen::VectorXd> oracle_;
};

struct SplitSizes {
  Eigen::Index train = 0;
  Eigen::Index valid = 0;
  Eigen::Index test = 0;
};

struct Split {
  Dataset train;
  Dataset valid;
  Dataset test;
};

// Disjoint random split by a seeded Fisher-Yates shuffle of the row indices.
// Throws InsufficientData if the dataset has fewer rows than requested.
Split split_dataset(const Dataset& ds, const SplitSizes& sizes, Rng& rng);

// CSV round-trip.  Header "f0,...,f{d-1},label[,oracle]"; labels are exactly
// -1 or 1; reals are written with 17 significant digits so that read(write(ds))
// is bit-identical.
Dataset read_dataset(const std::string& path);
void write_dataset(const Dataset& ds, const std::string& path);

Dataset parse_dataset_csv(std::istream& in, const std::string& origin);
void write_dataset_csv(const Dataset& ds, std::ostream& out);

// Formats a double with round-trip precision (17 significant digits).
std::string format_real(double v);

// strtod with a full-consumption check; context names the value in errors.
// Accepts "inf"/"-inf"/"nan" spellings, matching format_real output.
double parse_real(const std::string& tok, const std::string& context);

// Comma-split with CR stripping; no quoting support.
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace gosvm
