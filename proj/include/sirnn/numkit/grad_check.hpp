// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sirnn/numkit/tape.hpp"

namespace sirnn::numkit {

/// Builds a scalar loss on `tape` from the tracked input `x`.
using ScalarFn = std::function<Var<double>(Tape<double>&, Var<double> x)>;

/// Max over coordinates of |analytic - central difference| / max(1, |analytic|).
double grad_check(const ScalarFn& f, const Tensor<double>& x, double eps);

/// Builds a scalar loss from a set of named tensors registered as parameters.
using NamedScalarFn = std::function<Var<double>(
    Tape<double>&, const std::map<std::string, Tensor<double>, std::less<>>&)>;

/// Per-tensor max relative error for every tensor in `values` (which is
/// perturbed in place and restored).
std::map<std::string, double> grad_check_named(
    const NamedScalarFn& f,
    std::map<std::string, Tensor<double>, std::less<>>& values, double eps);

}  // namespace sirnn::numkit
