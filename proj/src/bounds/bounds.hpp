/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

namespace gosvm {

// Inputs to the generalization-bound evaluators.  C stands in for an
// unspecified universal constant and defaults to 1; curves produced with it
// show shape, not certified risk.
struct BoundParams {
  int V = 1;          // level VC-dimension of the hypothesis class
  double n = 100.0;   // sample size (real-valued so curves can sweep it)
  double C = 1.0;
  double delta1 = 0.05, delta2 = 0.05, delta3 = 0.05;
  double d = 0.0;     // ordinal slack
  double w = 1.0;     // balance parameter
  double phi = 1.0;   // localization knob, in (0, 1]
  int ordering_multiplier = 2;  // 2 = single ordering, 4 = per-class
};

// Throws InvalidArgument unless every field is in range (V >= 1, n >= 1,
// C > 0, deltas in (0,1), d >= 0, w > 0, phi in (0,1], multiplier in {2,4}).
void validate(const BoundParams& p);

// Uniform deviation bound for the empirical ordinal loss:
//   empirical_liso + C * sqrt((mult * V * log n + log(1/delta2)) / n).
double ordinal_bound(const BoundParams& p, double empirical_liso);

/*
 * Excess-risk bound for the order-restricted empirical minimizer:
 *
 *   8/(n phi) * (4 C^2 V log n + (1 + 2 phi) log(1/delta1))
 *     + 128 phi * (d + C sqrt((V log n + log(1/delta2)) / n))
 *     + 128 phi * C max(w, 1/w) * sqrt((V log n + log(1/delta3)) / n).
 */
double main_bound(const BoundParams& p);

// Crossover points (in n) between the three phi regimes.
struct PhiThresholds {
  double t_quarter = 100.0;  // below: phi = 1
  double t_half = 10000.0;   // between: n^{-1/4}; at or above: n^{-1/2}
};

// Piecewise schedule phi(n) in (0, 1]; nonincreasing in n.
double phi_schedule(double n, const PhiThresholds& t = {});

/*
 * Localized fixed-point bound eps' = C^2 V log n / (n phi) + phi d, checked
 * against the sub-root function it must dominate:
 *
 *   psi(w(eps')) = C * sqrt(C^2/phi^2 * V log n / n + 2 d) * sqrt(V log n / n)
 *
 * (w(eps')^2 = eps'/phi + d expands to the 2d radicand).  eps' >= psi always
 * reduces to d^2 >= 0, so a failure beyond 1e-12 slack indicates a bug and
 * raises VerificationFailed.
 */
double appendix_epsilon(const BoundParams& p);

}  // namespace gosvm
