#pragma once

// Constructive witnesses behind the classifiers:
//
//   scrambled pairs      triangular indicators x^E, x^F over a common
//                        non-quasi-periodic base point with unit weights;
//                        separation times and agreement schedules come with
//                        closed forms and are re-checkable by evaluation.
//   periodic points      a configuration in a prescribed cylinder fixed by
//                        σ^T, built per orbit class (finite cycle, one-sided
//                        orbit, bi-infinite orbit) by the weight-inverse
//                        recurrence.
//   separation witness   an orbit-bumped copy of x that stays in x's
//                        neighbourhood but separates from it forever.
//   transit witness      an explicit x ∈ U with σ^p(x) ∈ V for transitive
//                        systems.
//   preimages            exact σ-preimages of finite-support points.

#include <span>
#include <vector>

#include "wgs/classify.hpp"
#include "wgs/common.hpp"
#include "wgs/dynamics.hpp"
#include "wgs/system.hpp"

namespace wgs {

// `count` branch descriptors with pairwise-distinct eventually periodic
// sequences, enumerated canonically: primitive period blocks in length-lex
// order, empty prefix. Pairwise intersections are finite.
std::vector<SetDescriptor> branch_family(int count);

struct ScrambledPair {
  Config x, y;  // triangular indicators over nu
  SetDescriptor e, f;
  Index nu = 0;
};

// Throws BadWitnessPoint unless nu is non-quasi-periodic with an all-units
// orbit profile; requires E and F to differ as infinite sets.
ScrambledPair scrambled_pair(const System& sys, Index nu, SetDescriptor e,
                             SetDescriptor f);

// Times {r(r+1)/2 : r ∈ E \ F, r <= bound}; at each the pair disagrees at nu.
std::vector<long long> nonasym_times(const System& sys, const ScrambledPair& pair,
                                     long long bound);

// The first `count` elements of an agreement schedule for the entourage over
// M: every returned time satisfies agree_at(x, y, t, M). Coordinates of M
// whose orbits provably never meet nu's are discarded; throws LinkNotFound
// when a link search exhausts its bound instead.
std::vector<long long> prox_schedule(const System& sys, const ScrambledPair& pair,
                                     std::span<const Index> M, int count);

struct PeriodicWitness {
  Config y;
  long long period = 0;         // T
  std::vector<Index> closure;   // A: the constraint closure, sorted
};

// Builds a periodic point of σ inside the cylinder. Requires the onto/DPP
// condition (injective φ, unit weights); throws NotApplicable otherwise.
PeriodicWitness periodic_point(const System& sys, const Cylinder& target);

struct SeparationWitness {
  Config z;
  long long start = 0;  // N: bump begins at φ^N(theta)
};

// z agrees with x on `pinned` and disagrees from x at theta for every
// iterate m >= N. Throws BadWitnessPoint unless theta qualifies.
SeparationWitness separation_witness(const System& sys, const Config& x,
                                     std::span<const Index> pinned, Index theta);

struct TransitWitness {
  long long p = 0;
  Config x;  // finite support; x ∈ U and σ^p(x) ∈ V
};

TransitWitness transit_witness(const System& sys, const Cylinder& u,
                               const Cylinder& v);

// z with σ(z) = x exactly; finite support. Requires injective φ and unit
// weights.
Config preimage(const System& sys, const Config& x);

}  // namespace wgs
