#pragma once

// Property-level deciders. Each returns a three-valued verdict with a
// re-verifiable witness or certificate:
//
//   sensitivity / Li–Yorke   Yes when some non-quasi-periodic point carries
//                            an all-units weight orbit; No when every point
//                            is quasi-periodic or its orbit weight hits
//                            zero; UnknownByPaper in the remaining gap,
//                            which is empty over fields.
//   onto / dense periodic    Yes iff φ is injective and every weight is a
//                            unit (one shared condition, equal statuses).
//   transitive / Devaney     Yes iff φ is injective without periodic points
//                            and every weight is a unit.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wgs/common.hpp"
#include "wgs/system.hpp"

namespace wgs {

enum class Status { Yes, No, UnknownByPaper };

struct Verdict {
  Status status = Status::No;
  std::string justification;  // stable tag naming the applied criterion

  // Witness payloads; which ones are set depends on the verdict.
  std::optional<Index> witness_index;                // sensitivity/Li–Yorke
  std::optional<std::pair<Index, Index>> collision;  // injectivity failure
  std::optional<Index> nonunit_weight_index;
  std::optional<Index> periodic_point_index;  // transitivity failure
};

Verdict classify_sensitive(const System& sys);
Verdict classify_li_yorke(const System& sys);

struct OntoDppVerdicts {
  Verdict onto, dense_periodic;
};
OntoDppVerdicts classify_onto_dpp(const System& sys);

struct TransitiveDevaneyVerdicts {
  Verdict transitive, devaney;
};
TransitiveDevaneyVerdicts classify_transitive_devaney(const System& sys);

// The finite coordinate set Λ from the non-sensitivity certificate: pinning
// a configuration on Λ freezes all its iterates on M. Requires every α in M
// to be quasi-periodic or zero-hitting; throws HypothesisViolated otherwise.
std::vector<Index> stability_certificate(const System& sys,
                                         std::span<const Index> M);

struct ChaosReport {
  Verdict sensitive, strongly_sensitive, li_yorke;
  Verdict onto, dense_periodic;
  Verdict transitive, devaney;
};

// Runs all classifiers and checks the cross-property coherence rules.
ChaosReport classify_all(const System& sys);

// First index (in candidate order) whose weight is not a unit, if any.
std::optional<Index> first_nonunit_weight(const System& sys);

}  // namespace wgs
