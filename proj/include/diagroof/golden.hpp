#pragma once

#include <cmath>
#include <concepts>

namespace diagroof {

template <std::floating_point T>
struct ScalarMinimum {
  T x;
  T value;
};

/// Golden-section minimization of a unimodal function on [lo, hi], run until
/// the bracket is narrower than `width`.
template <std::floating_point T, typename F>
  requires std::invocable<F&, T>
ScalarMinimum<T> golden_section_minimize(F&& f, T lo, T hi, T width) {
  const T inv_phi = (std::sqrt(T(5)) - T(1)) / T(2);
  T c = hi - inv_phi * (hi - lo);
  T d = lo + inv_phi * (hi - lo);
  T fc = f(c);
  T fd = f(d);
  for (int it = 0; it < 200 && (hi - lo) > width; ++it) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return fc < fd ? ScalarMinimum<T>{c, fc} : ScalarMinimum<T>{d, fd};
}

}  // namespace diagroof
