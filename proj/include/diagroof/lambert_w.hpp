#pragma once

// Real branches of the Lambert W function, the inverse of w -> w e^w.
// Halley iteration from a branch-point series or logarithmic asymptotic guess.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>

#include "diagroof/errors.hpp"

namespace diagroof {

enum class WBranch { principal, minus_one };

struct BranchedRoot {
  double value;
  WBranch branch;
};

namespace detail {

template <std::floating_point T>
T branch_point_series(T x, T sign) {
  // p = +-sqrt(2(e x + 1)); W = -1 + p - p^2/3 + 11/72 p^3 - ...
  const T p = sign * std::sqrt(std::max(T(0), T(2) * (std::numbers::e_v<T> * x + T(1))));
  return T(-1) + p * (T(1) + p * (T(-1) / T(3) + p * (T(11) / T(72) + p * T(-43) / T(540))));
}

template <std::floating_point T>
T halley(T x, T w) {
  for (int it = 0; it < 30; ++it) {
    const T ew = std::exp(w);
    const T f = w * ew - x;
    if (f == T(0)) break;
    const T wp1 = w + T(1);
    const T denom = ew * wp1 - (w + T(2)) * f / (T(2) * wp1);
    if (denom == T(0) || !std::isfinite(denom)) break;
    const T step = f / denom;
    w -= step;
    if (std::abs(step) < T(1e-15) * (T(1) + std::abs(w))) break;
  }
  return w;
}

template <std::floating_point T>
bool at_branch_point(T x) {
  constexpr T branch = -T(1) / std::numbers::e_v<T>;
  return std::abs(x - branch) <= T(4) * std::numeric_limits<T>::epsilon() * std::abs(branch);
}

}  // namespace detail

/// Principal branch W0 on [-1/e, inf); W0 >= -1.
template <std::floating_point T>
T w0(T x) {
  constexpr T branch = -T(1) / std::numbers::e_v<T>;
  if (std::isnan(x)) throw DomainError("w0: NaN argument");
  if (detail::at_branch_point(x)) return T(-1);
  if (x < branch) throw DomainError("w0: argument below -1/e");
  if (x == T(0)) return T(0);
  if (std::isinf(x)) return x;

  T w;
  if (x < T(-0.25)) {
    w = detail::branch_point_series(x, T(1));
  } else if (x < T(3)) {
    w = std::log1p(x);
    if (std::abs(x) < T(1e-3)) w = x * (T(1) - x);
  } else {
    const T l1 = std::log(x);
    const T l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  }
  w = detail::halley(x, w);
  return w < T(-1) ? T(-1) : w;
}

/// Lower branch W-1 on [-1/e, 0); W-1 <= -1.
template <std::floating_point T>
T wm1(T x) {
  constexpr T branch = -T(1) / std::numbers::e_v<T>;
  if (std::isnan(x)) throw DomainError("wm1: NaN argument");
  if (detail::at_branch_point(x)) return T(-1);
  if (x < branch || x >= T(0)) throw DomainError("wm1: argument outside [-1/e, 0)");

  T w;
  if (x < T(-0.25)) {
    w = detail::branch_point_series(x, T(-1));
  } else {
    const T l1 = std::log(-x);
    const T l2 = std::log(-l1);
    w = l1 - l2 + l2 / l1;
  }
  w = detail::halley(x, w);
  return w > T(-1) ? T(-1) : w;
}

inline BranchedRoot lambert_w(double x, WBranch branch) {
  return {branch == WBranch::principal ? w0(x) : wm1(x), branch};
}

}  // namespace diagroof
