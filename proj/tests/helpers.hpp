#pragma once

// Shorthand constructors and a small system zoo shared across the suites.

#include <vector>

#include "wgs/dynamics.hpp"
#include "wgs/ring.hpp"
#include "wgs/system.hpp"

namespace wgs::testing {

inline std::vector<Elem> elems(std::vector<int> vs) {
  std::vector<Elem> out;
  for (int v : vs) out.push_back({v});
  return out;
}

inline System make_finite(Ring ring, std::vector<Index> phi, std::vector<int> w) {
  return System(std::move(ring), FiniteIndexModel{std::move(phi)},
                FiniteWeightModel{elems(std::move(w))});
}

inline System make_cofinite(Ring ring, std::vector<Index> phi_table, Index d,
                            std::vector<int> w_table, int w_tail) {
  return System(std::move(ring), CofiniteShiftIndexModel{std::move(phi_table), d},
                CofiniteShiftWeightModel{elems(std::move(w_table)), {w_tail}});
}

inline System make_integer(Ring ring, Index lo, Index hi, std::vector<Index> phi_table,
                           Index d, Index wlo, std::vector<int> w_table, int w_neg,
                           int w_pos) {
  return System(std::move(ring), IntegerShiftIndexModel{lo, hi, std::move(phi_table), d},
                IntegerShiftWeightModel{wlo, elems(std::move(w_table)), {w_neg}, {w_pos}});
}

// The unweighted full one-sided shift over Z_2.
inline System full_shift_z2() {
  return make_cofinite(Ring::zmod(2), {}, 1, {}, 1);
}

// ψ(n) = n + 1 on the naturals with constant weight 2 over Z_4.
inline System counterexample_z4() {
  return make_cofinite(Ring::zmod(4), {}, 1, {}, 2);
}

inline std::vector<System> zoo() {
  std::vector<System> out;
  out.push_back(make_finite(Ring::zmod(3), {1, 2, 0}, {1, 2, 1}));
  out.push_back(make_finite(Ring::zmod(4), {1, 1, 1}, {2, 3, 0}));
  out.push_back(make_finite(Ring::gf(2, 2, {1, 1, 1}), {1, 0}, {2, 3}));
  out.push_back(full_shift_z2());
  out.push_back(counterexample_z4());
  out.push_back(make_cofinite(Ring::zmod(3), {1, 0}, 1, {1, 0, 2}, 2));
  out.push_back(make_cofinite(Ring::zmod(4), {2, 2, 5}, 2, {3, 1}, 3));
  out.push_back(make_cofinite(Ring::zmod(2), {0}, 0, {1}, 1));
  out.push_back(make_integer(Ring::gf(2, 2, {1, 1, 1}), 0, 0, {}, 1, 0, {}, 2, 2));
  out.push_back(make_integer(Ring::zmod(3), -1, 2, {0, -1, 4}, 2, -1, {1, 2, 1}, 2, 1));
  out.push_back(make_integer(Ring::zmod(4), 0, 2, {0, 3}, -1, 0, {1, 3}, 3, 1));
  return out;
}

}  // namespace wgs::testing
