/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gosvm {

namespace {

void validate(const Eigen::MatrixXd& x, const Eigen::VectorXi& y,
              const std::optional<Eigen::VectorXd>& oracle) {
  if (y.size() != x.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "label count does not match sample count");
  }
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (y(i) != -1 && y(i) != 1) {
      throw Error(ErrorCode::InvalidArgument,
                  "labels must be -1 or 1, got " + std::to_string(y(i)));
    }
  }
  if (!x.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "non-finite feature value");
  }
  if (oracle) {
    if (oracle->size() != x.rows()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "oracle count does not match sample count");
    }
    if (!oracle->allFinite()) {
      throw Error(ErrorCode::InvalidArgument, "non-finite oracle value");
    }
  }
}

double parse_real(const std::string& tok, const std::string& origin,
                  std::size_t lineno) {
  const char* s = tok.c_str();
  char* end = nullptr;
  double v = std::strtod(s, &end);
  while (end && *end == ' ') ++end;
  if (end == s || (end && *end != '\0')) {
    throw Error(ErrorCode::Parse, origin + ":" + std::to_string(lineno) +
                                      ": cannot parse value '" + tok + "'");
  }
  return v;
}

}  // namespace

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

Dataset::Dataset(Eigen::MatrixXd features, Eigen::VectorXi labels,
                 std::optional<Eigen::VectorXd> oracle)
    : x_(std::move(features)), y_(std::move(labels)), oracle_(std::move(oracle)) {
  validate(x_, y_, oracle_);
}

Dataset Dataset::from_samples(const std::vector<LabeledSample>& samples) {
  if (samples.empty()) {
    return Dataset(Eigen::MatrixXd(0, 0), Eigen::VectorXi(0), std::nullopt);
  }
  const Eigen::Index n = static_cast<Eigen::Index>(samples.size());
  const Eigen::Index d = samples.front().features.size();
  const bool with_oracle = samples.front().oracle.has_value();
  Eigen::MatrixXd x(n, d);
  Eigen::VectorXi y(n);
  Eigen::VectorXd o(with_oracle ? n : 0);
  for (Eigen::Index i = 0; i < n; ++i) {
    const LabeledSample& s = samples[static_cast<std::size_t>(i)];
    if (s.features.size() != d) {
      throw Error(ErrorCode::DimensionMismatch,
                  "sample " + std::to_string(i) + " has dimension " +
                      std::to_string(s.features.size()) + ", expected " +
                      std::to_string(d));
    }
    if (s.oracle.has_value() != with_oracle) {
      throw Error(ErrorCode::InvalidArgument,
                  "oracle values must be present for all samples or none");
    }
    x.row(i) = s.features;
    y(i) = s.label;
    if (with_oracle) o(i) = *s.oracle;
  }
  return Dataset(std::move(x), std::move(y),
                 with_oracle ? std::optional<Eigen::VectorXd>(std::move(o))
                             : std::nullopt);
}

const Eigen::VectorXd& Dataset::oracle() const {
  if (!oracle_) {
    throw Error(ErrorCode::MissingOracle, "dataset carries no oracle column");
  }
  return *oracle_;
}

Eigen::Index Dataset::positives() const {
  return (y_.array() == 1).count();
}

Eigen::Index Dataset::negatives() const {
  return (y_.array() == -1).count();
}

Dataset Dataset::subset(const std::vector<Eigen::Index>& rows) const {
  Eigen::MatrixXd x(static_cast<Eigen::Index>(rows.size()), dim());
  Eigen::VectorXi y(static_cast<Eigen::Index>(rows.size()));
  Eigen::VectorXd o(has_oracle() ? static_cast<Eigen::Index>(rows.size()) : 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Eigen::Index r = rows[i];
    if (r < 0 || r >= size()) {
      throw Error(ErrorCode::InvalidArgument, "subset row out of range");
    }
    x.row(static_cast<Eigen::Index>(i)) = x_.row(r);
    y(static_cast<Eigen::Index>(i)) = y_(r);
    if (has_oracle()) o(static_cast<Eigen::Index>(i)) = (*oracle_)(r);
  }
  return Dataset(std::move(x), std::move(y),
                 has_oracle() ? std::optional<Eigen::VectorXd>(std::move(o))
                              : std::nullopt);
}

Split split_dataset(const Dataset& ds, const SplitSizes& sizes, Rng& rng) {
  const Eigen::Index want = sizes.train + sizes.valid + sizes.test;
  if (sizes.train < 0 || sizes.valid < 0 || sizes.test < 0) {
    throw Error(ErrorCode::InvalidArgument, "split sizes must be non-negative");
  }
  if (want > ds.size()) {
    throw Error(ErrorCode::InsufficientData,
                "split needs " + std::to_string(want) + " samples, dataset has " +
                    std::to_string(ds.size()));
  }
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(ds.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<Eigen::Index>(i);
  rng.shuffle(idx);
  auto take = [&](Eigen::Index offset, Eigen::Index count) {
    std::vector<Eigen::Index> rows(idx.begin() + offset, idx.begin() + offset + count);
    return ds.subset(rows);
  };
  Split out;
  out.train = take(0, sizes.train);
  out.valid = take(sizes.train, sizes.valid);
  out.test = take(sizes.train + sizes.valid, sizes.test);
  return out;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_real(const std::string& tok, const std::string& context) {
  const char* s = tok.c_str();
  char* end = nullptr;
  double v = std::strtod(s, &end);
  if (end == s || (end && *end != '\0')) {
    throw Error(ErrorCode::Parse,
                context + ": cannot parse value '" + tok + "'");
  }
  return v;
}

Dataset parse_dataset_csv(std::istream& in, const std::string& origin) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::Parse, origin + ": empty file");
  }
  std::vector<std::string> header = split_csv_line(line);
  Eigen::Index d = 0;
  while (d < static_cast<Eigen::Index>(header.size()) &&
         header[static_cast<std::size_t>(d)] == "f" + std::to_string(d)) {
    ++d;
  }
  if (d == 0) {
    throw Error(ErrorCode::Parse, origin + ":1: header must start with f0");
  }
  const std::size_t rest = header.size() - static_cast<std::size_t>(d);
  bool with_oracle = false;
  if (rest == 1 && header[static_cast<std::size_t>(d)] == "label") {
    with_oracle = false;
  } else if (rest == 2 && header[static_cast<std::size_t>(d)] == "label" &&
             header[static_cast<std::size_t>(d) + 1] == "oracle") {
    with_oracle = true;
  } else {
    throw Error(ErrorCode::Parse,
                origin + ":1: header must be f0,...,f" + std::to_string(d - 1) +
                    ",label[,oracle]");
  }

  std::vector<LabeledSample> samples;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    std::vector<std::string> toks = split_csv_line(line);
    if (toks.size() != header.size()) {
      throw Error(ErrorCode::Parse,
                  origin + ":" + std::to_string(lineno) + ": expected " +
                      std::to_string(header.size()) + " fields, got " +
                      std::to_string(toks.size()));
    }
    LabeledSample s;
    s.features.resize(d);
    for (Eigen::Index j = 0; j < d; ++j) {
      s.features(j) = parse_real(toks[static_cast<std::size_t>(j)], origin, lineno);
    }
    const double lab = parse_real(toks[static_cast<std::size_t>(d)], origin, lineno);
    if (lab != -1.0 && lab != 1.0) {
      throw Error(ErrorCode::Parse, origin + ":" + std::to_string(lineno) +
                                        ": label must be -1 or 1");
    }
    s.label = lab > 0 ? 1 : -1;
    if (with_oracle) {
      s.oracle = parse_real(toks[static_cast<std::size_t>(d) + 1], origin, lineno);
    }
    samples.push_back(std::move(s));
  }
  Dataset ds = Dataset::from_samples(samples);
  if (!samples.empty() && ds.dim() != d) {
    throw Error(ErrorCode::Parse, origin + ": inconsistent dimensions");
  }
  return ds;
}

void write_dataset_csv(const Dataset& ds, std::ostream& out) {
  for (Eigen::Index j = 0; j < ds.dim(); ++j) {
    out << "f" << j << ",";
  }
  out << "label";
  if (ds.has_oracle()) out << ",oracle";
  out << "\n";
  for (Eigen::Index i = 0; i < ds.size(); ++i) {
    for (Eigen::Index j = 0; j < ds.dim(); ++j) {
      out << format_real(ds.features()(i, j)) << ",";
    }
    out << ds.label(i);
    if (ds.has_oracle()) out << "," << format_real(ds.oracle_value(i));
    out << "\n";
  }
}

Dataset read_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::Io, "cannot open " + path);
  }
  return parse_dataset_csv(in, path);
}

void write_dataset(const Dataset& ds, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
  }
  write_dataset_csv(ds, out);
  if (!out) {
    throw Error(ErrorCode::Io, "error writing " + path);
  }
}

}  // namespace gosvm
