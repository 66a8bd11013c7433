/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <fstream>
#include <string>
#include <vector>

#include "datagen/datagen.hpp"

namespace gosvm {

namespace {

constexpr int kPixels = 100;

}  // namespace

Dataset load_digits(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::Parse, path + ": empty file");
  }
  const std::vector<std::string> header = split_csv_line(line);
  const std::size_t cols = header.size();
  bool has_conf = false;
  if (cols == kPixels + 2 && header[kPixels + 1] == "confidence") {
    has_conf = true;
  } else if (cols != kPixels + 1) {
    // Count the p-columns to produce a pointed error for wrong pixel counts.
    std::size_t np = 0;
    while (np < cols && header[np].size() > 1 && header[np][0] == 'p') ++np;
    if (np != kPixels) {
      throw Error(ErrorCode::DimensionMismatch,
                  path + ": expected " + std::to_string(kPixels) +
                      " pixel columns, found " + std::to_string(np));
    }
    throw Error(ErrorCode::Parse, path + ": malformed header");
  }
  for (int j = 0; j < kPixels; ++j) {
    if (header[static_cast<std::size_t>(j)] != "p" + std::to_string(j)) {
      throw Error(ErrorCode::Parse,
                  path + ": expected column p" + std::to_string(j) +
                      ", found '" + header[static_cast<std::size_t>(j)] + "'");
    }
  }
  if (header[kPixels] != "label") {
    throw Error(ErrorCode::Parse, path + ": expected a label column");
  }

  std::vector<LabeledSample> samples;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> toks = split_csv_line(line);
    if (toks.size() != cols) {
      throw Error(ErrorCode::Parse, path + ":" + std::to_string(lineno) +
                                        ": wrong field count");
    }
    const std::string ctx = path + ":" + std::to_string(lineno);
    LabeledSample s;
    s.features.resize(kPixels);
    for (int j = 0; j < kPixels; ++j) {
      s.features(j) = parse_real(toks[static_cast<std::size_t>(j)], ctx);
    }
    const double lab = parse_real(toks[kPixels], ctx);
    if (lab != -1.0 && lab != 1.0) {
      throw Error(ErrorCode::Parse, ctx + ": label must be -1 or 1");
    }
    s.label = static_cast<int>(lab);
    if (has_conf) s.oracle = parse_real(toks[kPixels + 1], ctx);
    samples.push_back(std::move(s));
  }
  if (samples.empty()) {
    throw Error(ErrorCode::InsufficientData, path + ": no data rows");
  }
  return Dataset::from_samples(samples);
}

}  // namespace gosvm
