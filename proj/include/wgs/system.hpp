#pragma once

// Computable models of (Γ, φ, w). Three index models keep every orbit
// question decidable:
//   Finite        Γ = {0..n-1}, φ given by a table.
//   CofiniteShift Γ = ℕ; φ is a table on a prefix [0, B) and α ↦ α + d beyond.
//   IntegerShift  Γ = ℤ; φ is a table on a window [lo, hi) and α ↦ α + d
//                 outside it (d ≠ 0).
// Weights mirror the same shapes with their own prefix/window and constant
// tails. Systems are immutable value objects; all operations here are pure.

#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "wgs/common.hpp"
#include "wgs/ring.hpp"

namespace wgs {

struct FiniteIndexModel {
  std::vector<Index> phi;  // size n >= 2, values in [0, n)
  friend bool operator==(const FiniteIndexModel&, const FiniteIndexModel&) = default;
};

struct CofiniteShiftIndexModel {
  std::vector<Index> phi_table;  // φ on [0, B); entries are naturals
  Index tail_offset = 0;         // d >= 0; φ(α) = α + d for α >= B
  friend bool operator==(const CofiniteShiftIndexModel&,
                         const CofiniteShiftIndexModel&) = default;
};

struct IntegerShiftIndexModel {
  Index lo = 0, hi = 0;          // window [lo, hi)
  std::vector<Index> phi_table;  // size hi - lo
  Index tail_offset = 0;         // d != 0; φ(α) = α + d outside the window
  friend bool operator==(const IntegerShiftIndexModel&,
                         const IntegerShiftIndexModel&) = default;
};

using IndexModel =
    std::variant<FiniteIndexModel, CofiniteShiftIndexModel, IntegerShiftIndexModel>;

struct FiniteWeightModel {
  std::vector<Elem> values;
  friend bool operator==(const FiniteWeightModel&, const FiniteWeightModel&) = default;
};

struct CofiniteShiftWeightModel {
  std::vector<Elem> table;  // w on [0, B_w)
  Elem tail;                // w(α) = tail for α >= B_w
  friend bool operator==(const CofiniteShiftWeightModel&,
                         const CofiniteShiftWeightModel&) = default;
};

struct IntegerShiftWeightModel {
  Index lo = 0;             // table covers [lo, lo + size)
  std::vector<Elem> table;
  Elem tail_neg;            // w(α) for α < lo
  Elem tail_pos;            // w(α) for α >= lo + size
  friend bool operator==(const IntegerShiftWeightModel&,
                         const IntegerShiftWeightModel&) = default;
};

using WeightModel =
    std::variant<FiniteWeightModel, CofiniteShiftWeightModel, IntegerShiftWeightModel>;

enum class ModelKind { Finite, CofiniteShift, IntegerShift };

class System {
 public:
  // Validates cross-consistency (same model kind, matching sizes, weights
  // drawn from the ring). Throws std::invalid_argument.
  System(Ring ring, IndexModel index, WeightModel weights);

  const Ring& ring() const { return ring_; }
  const IndexModel& index_model() const { return index_; }
  const WeightModel& weight_model() const { return weights_; }
  ModelKind kind() const;

  bool contains(Index a) const;
  Index phi(Index a) const;    // range-checked for the finite model
  Elem weight(Index a) const;

  // Unique preimage of a under φ, for injective systems only.
  std::optional<Index> preimage_index(Index a) const;

  // Both φ- and w-tables live inside [table_lo, table_hi); outside, φ is a
  // translation and w a per-direction constant.
  Index table_lo() const { return table_lo_; }
  Index table_hi() const { return table_hi_; }
  Index tail_offset() const;

  friend bool operator==(const System& a, const System& b) {
    return a.ring_ == b.ring_ && a.index_ == b.index_ && a.weights_ == b.weights_;
  }

 private:
  Ring ring_;
  IndexModel index_;
  WeightModel weights_;
  Index table_lo_ = 0, table_hi_ = 0;
};

// Forward orbit of one point, finitely described. `points[i] = φ^i(start)`;
// the walk stops at the first repeat (cyclic) or at the first point of the
// absorbing tail (escaping), beyond which φ is α ↦ α + step forever.
struct OrbitShape {
  std::vector<Index> points;
  bool escapes = false;
  int cycle_entry = 0;  // cyclic: φ(points.back()) == points[cycle_entry]
  Index step = 0;       // escaping: tail offset

  long long period() const {
    return static_cast<long long>(points.size()) - cycle_entry;
  }
  Index point_at(long long m) const;
  // Least n >= from with φ^n(start) == target.
  std::optional<long long> position_of(Index target, long long from = 0) const;
};

OrbitShape orbit_shape(const System& sys, Index start);

Index phi_apply(const System& sys, Index a, long long n);

struct OrbitClass {
  enum class Kind { Periodic, QuasiPeriodic, NonQuasiPeriodic };
  Kind kind;
  long long preperiod = 0;    // QuasiPeriodic: >= 1
  long long period = 0;       // Periodic/QuasiPeriodic
  long long escape_step = 0;  // NonQuasiPeriodic
};

OrbitClass classify_orbit(const System& sys, Index a);

enum class WeightProfileKind { AllUnits, HitsZero, NonzeroNonUnit };

struct WeightProfile {
  WeightProfileKind kind;
  long long first = 0;  // minimal n for HitsZero / NonzeroNonUnit
};

// Scans w(φ^n(a)) over all n >= 0. A zero anywhere wins over an earlier
// nonzero non-unit.
WeightProfile orbit_weight_profile(const System& sys, Index a);

struct InjectivityResult {
  bool injective = false;
  std::optional<std::pair<Index, Index>> collision;  // φ(first) == φ(second)
};

InjectivityResult is_injective(const System& sys);

struct PeriodicPointsResult {
  bool exists = false;
  std::optional<Index> witness;
};

PeriodicPointsResult periodic_points_exist(const System& sys);

struct LinkResult {
  enum class Status { Found, ProvablyDisjoint, BoundExhausted };
  Status status;
  long long m = 0, n = 0;  // Found: φ^m(nu) == φ^n(alpha), m, n >= 1
};

// Lexicographically least (m, n) within the bound joining the two forward
// orbits; distinguishes "no meeting exists" from "meetings exist but none
// within the bound".
LinkResult find_link(const System& sys, Index nu, Index alpha, long long bound);

// All table indices in ascending order followed by one representative per
// tail direction. Existential and universal searches over Γ reduce to this
// finite set by tail homogeneity of φ and w.
std::vector<Index> candidate_indices(const System& sys);

// φ^{-steps}(from) for injective systems with a long enough backward chain;
// throws std::logic_error when the chain runs out.
Index backward_walk(const System& sys, Index from, long long steps);

}  // namespace wgs
