#pragma once

// Brute-force ground truth on finite systems. The full configuration space
// R^Γ is enumerated as packed integers (base-|R| digits, coordinate 0 least
// significant) and σ realized as a successor table, so surjectivity,
// periodic-point density, transitivity, and the proximal/asymptotic
// relations become exact graph questions.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wgs/common.hpp"
#include "wgs/ring.hpp"
#include "wgs/system.hpp"

namespace wgs {

struct StateSpace {
  int coords = 0;   // |Γ|
  int radix = 0;    // |R|
  long long size = 0;
  std::vector<std::uint32_t> sigma;  // successor table

  // Requires a finite system with |R|^|Γ| <= 2^20; throws SpaceTooLarge.
  // The table is cross-checked against apply_shift on samples at build time.
  static StateSpace build(const System& sys);

  int digit(long long state, int pos) const;
  long long advance(long long state, long long n) const;
};

struct BfProperties {
  bool onto = false;
  bool per_dense = false;
  bool transitive = false;
  std::vector<char> per_set;  // bitmap over states: on a σ-cycle
};

BfProperties bf_properties(const System& sys);
BfProperties bf_properties(const StateSpace& ss);

// proximal ⟺ ∃n >= 1: σⁿx = σⁿy; asymptotic ⟺ the iterates eventually agree
// forever. On a finite space equality propagates forward, so first merge
// time is bounded by the state count.
std::pair<bool, bool> bf_prox_asym(const StateSpace& ss, long long x, long long y);
std::pair<bool, bool> bf_prox_asym(const System& sys, long long x, long long y);

struct SweepReport {
  long long systems = 0;
  long long onto_count = 0;
  std::vector<std::string> violations;
};

// Enumerates ALL φ (n^n maps) × ALL w (|R|^n vectors) over Γ = {0..n-1} and
// checks, per system: brute-force onto ⟺ (injective φ ∧ unit weights) ⟺
// brute-force dense periodic points; no transitivity beyond the one-point
// space; classifier sensitivity and Li–Yorke verdicts are No; proximal =
// asymptotic over all state pairs. Throws BudgetExceeded when the matrix is
// too large to enumerate.
SweepReport sweep_equivalence(int n, const RingSpec& ring);

}  // namespace wgs
