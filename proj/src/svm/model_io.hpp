/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <iosfwd>
#include <string>

#include "svm/nusvm.hpp"

// Token-level pieces of the "gosvm-model v1" text format, shared between the
// nusvm and gosvm serializers.
namespace gosvm::detail {

std::string next_token(std::istream& in, const char* what);
double next_real(std::istream& in, const char* what);
long next_int(std::istream& in, const char* what);
void expect_token(std::istream& in, const char* want);

KernelSpec read_kernel_spec(std::istream& in);
std::string read_magic_and_kind(std::istream& in);
void read_alphas_support(std::istream& in, TrainedModel* m, long d, long n);
void write_kernel_spec(const KernelSpec& ks, std::ostream& out);
void write_alphas_support(const TrainedModel& m, std::ostream& out);

}  // namespace gosvm::detail
