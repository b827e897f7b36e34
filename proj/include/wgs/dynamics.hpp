#pragma once

// Points of R^Γ with finite descriptions and decidable coordinate
// evaluation, the shift action σ(x)_α = w_α·x_{φ(α)}, and its closed-form
// n-th iterate per coordinate:
//
//   (σ^n x)_α = w_α w_{φ(α)} ⋯ w_{φ^{n-1}(α)} · x_{φ^n(α)}
//
// Configurations are evaluation oracles rather than stored arrays because
// the interesting witnesses have infinite support. All types are immutable.

#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "wgs/common.hpp"
#include "wgs/ring.hpp"
#include "wgs/system.hpp"

namespace wgs {

// A set of naturals with decidable membership. Branch descriptors encode
// the infinite set {encode(s|_n) : n >= 1} of prefix codes of an eventually
// periodic bit sequence s, where encode(b1…bn) reads "1 b1 … bn" as binary.
// Two branches with distinct sequences intersect in finitely many values
// (at most their common prefix length), which realizes arbitrarily large
// almost-disjoint families.
struct SetDescriptor {
  enum class Kind { FiniteSet, Branch };
  Kind kind = Kind::FiniteSet;
  std::vector<long long> members;  // FiniteSet, sorted ascending
  std::vector<int> prefix;         // Branch bits
  std::vector<int> period;         // Branch bits, nonempty

  static SetDescriptor finite(std::vector<long long> members);
  static SetDescriptor branch(std::vector<int> prefix, std::vector<int> period);

  bool contains(long long m) const;
  int sequence_bit(long long i) const;  // Branch only
  bool infinite() const { return kind == Kind::Branch; }

  friend bool operator==(const SetDescriptor&, const SetDescriptor&) = default;
};

// True when two branch descriptors denote the same bit sequence.
bool same_branch_sequence(const SetDescriptor& a, const SetDescriptor& b);
// Length of the common prefix of two distinct branch sequences.
long long branch_common_prefix(const SetDescriptor& a, const SetDescriptor& b);

struct Cylinder {
  std::vector<std::pair<Index, Elem>> constraints;  // distinct indices
};

class Config;
using ConfigPtr = std::shared_ptr<const Config>;

struct FiniteSupportData {
  std::vector<std::pair<Index, Elem>> pairs;  // sorted, nonzero values
};

struct TriangularData {
  Index nu = 0;
  SetDescriptor set;
  OrbitShape shape;  // of nu; nu is non-quasi-periodic
};

struct OrbitBumpedData {
  ConfigPtr base;
  Index theta = 0;
  long long start = 0;  // bumped on {φ^m(theta) : m >= start}
  OrbitShape shape;     // of theta
};

// One orbit class of the periodic-point construction. `base` holds the
// values on the segment φ^0(root)..φ^{seg_len-1}(root); the rest of the
// class follows from the recurrence
//   y(φ^{seg_len+j}(root)) = (w_{φ^j(root)} ⋯ w_{φ^{j+seg_len-1}(root)})^{-1}
//                            · y(φ^j(root))
// applied forward (and backward for bi-infinite classes).
struct PeriodicClassData {
  enum class Kind { Cycle, OneSided, BiInfinite };
  Kind kind = Kind::Cycle;
  Index root = 0;
  long long seg_len = 0;
  std::vector<Elem> base;
  OrbitShape shape;  // of root
};

struct PeriodicWitnessData {
  std::vector<PeriodicClassData> classes;
};

class Config {
 public:
  static Config finite_support(const System& sys,
                               std::vector<std::pair<Index, Elem>> pairs);
  // Validates that nu is non-quasi-periodic (the triangular support map
  // p ↦ φ^{p(p+1)/2}(nu) must be injective).
  static Config triangular(const System& sys, Index nu, SetDescriptor set);
  static Config orbit_bumped(const System& sys, Config base, Index theta,
                             long long start);
  static Config periodic_witness(PeriodicWitnessData data);

  using Data = std::variant<FiniteSupportData, TriangularData, OrbitBumpedData,
                            PeriodicWitnessData>;
  const Data& data() const { return *d_; }

 private:
  explicit Config(Data d) : d_(std::make_shared<const Data>(std::move(d))) {}
  std::shared_ptr<const Data> d_;
};

Elem config_eval(const System& sys, const Config& x, Index a);

// ∏_{i<n} w_{φ^i(a)}; the empty product is 1.
Elem weight_product(const System& sys, Index a, long long n);
Elem weight_product(const System& sys, const OrbitShape& sh, long long n);

// (σ^n x)_a by the closed form.
Elem iterate_coord(const System& sys, const Config& x, long long n, Index a);

// One shift step of a finite-support configuration, by finite preimage
// enumeration. The result is again finite-support.
Config apply_shift(const System& sys, const Config& x);

// Membership of (σ^n x, σ^n y) in the entourage over M; M = ∅ is the full
// square and always agrees.
bool agree_at(const System& sys, const Config& x, const Config& y, long long n,
              std::span<const Index> M);

struct ScanTimes {
  std::vector<long long> agree, disagree;
};

// Partitions {1..horizon} by agree_at.
ScanTimes scan_times(const System& sys, const Config& x, const Config& y,
                     std::span<const Index> M, long long horizon);

// All α with φ(α) = a; finite in every model.
std::vector<Index> phi_preimages(const System& sys, Index a);

bool in_cylinder(const System& sys, const Config& x, const Cylinder& c);

}  // namespace wgs
