// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#include "sirnn/numkit/grad_check.hpp"

#include <algorithm>
#include <cmath>

namespace sirnn::numkit {

namespace {

double finite_or_throw(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::kNumeric, std::string("grad_check: non-finite ") + what);
  }
  return v;
}

double relative_error(double analytic, double numeric) {
  return std::abs(analytic - numeric) / std::max(1.0, std::abs(analytic));
}

}  // namespace

double grad_check(const ScalarFn& f, const Tensor<double>& x, double eps) {
  std::map<std::string, Tensor<double>, std::less<>> values{{"x", x}};
  auto errors = grad_check_named(
      [&](Tape<double>& tape, const auto& named) {
        return f(tape, tape.parameter("x", named.at("x")));
      },
      values, eps);
  return errors.at("x");
}

std::map<std::string, double> grad_check_named(
    const NamedScalarFn& f,
    std::map<std::string, Tensor<double>, std::less<>>& values, double eps) {
  GradientMap<double> analytic;
  {
    Tape<double> tape;
    Var<double> loss = f(tape, values);
    finite_or_throw(loss.value()[0], "loss");
    analytic = tape.backward(loss);
  }
  auto evaluate = [&]() {
    Tape<double> tape;
    return finite_or_throw(f(tape, values).value()[0], "loss");
  };

  std::map<std::string, double> errors;
  for (auto& [name, tensor] : values) {
    auto it = analytic.find(name);
    double worst = 0.0;
    for (std::size_t i = 0; i < tensor.size(); ++i) {
      const double saved = tensor[i];
      tensor[i] = saved + eps;
      const double plus = evaluate();
      tensor[i] = saved - eps;
      const double minus = evaluate();
      tensor[i] = saved;
      const double numeric = (plus - minus) / (2.0 * eps);
      const double exact = it == analytic.end() ? 0.0 : it->second[i];
      worst = std::max(worst, relative_error(exact, numeric));
    }
    errors.emplace(name, worst);
  }
  return errors;
}

}  // namespace sirnn::numkit
