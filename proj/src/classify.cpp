#include "wgs/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace wgs {

namespace {

constexpr const char* kSensitiveYes = "nqp-unit-weight-orbit";
constexpr const char* kSensitiveNo = "stability-certificate";
constexpr const char* kGap = "outside-field-characterization";
constexpr const char* kLiYorkeYes = "triangular-scrambled-family";
constexpr const char* kLiYorkeNo = "proximal-equals-asymptotic";
constexpr const char* kOntoDpp = "injective-unit-weights";
constexpr const char* kTransitive = "injective-aperiodic-unit-weights";

// Shared search behind sensitivity and Li–Yorke: the two characterizations
// have the same hypothesis, only the justification tags differ.
Verdict unit_orbit_verdict(const System& sys, const char* yes_tag,
                           const char* no_tag) {
  std::optional<Index> gap_witness;
  for (Index a : candidate_indices(sys)) {
    if (classify_orbit(sys, a).kind != OrbitClass::Kind::NonQuasiPeriodic)
      continue;
    WeightProfile wp = orbit_weight_profile(sys, a);
    if (wp.kind == WeightProfileKind::AllUnits) {
      Verdict v;
      v.status = Status::Yes;
      v.justification = yes_tag;
      v.witness_index = a;
      return v;
    }
    if (wp.kind == WeightProfileKind::NonzeroNonUnit && !gap_witness)
      gap_witness = a;
  }
  Verdict v;
  if (gap_witness) {
    v.status = Status::UnknownByPaper;
    v.justification = kGap;
    v.witness_index = gap_witness;
    if (sys.ring().is_field())
      throw std::logic_error("field ring produced an UnknownByPaper verdict");
  } else {
    v.status = Status::No;
    v.justification = no_tag;
  }
  return v;
}

}  // namespace

Verdict classify_sensitive(const System& sys) {
  return unit_orbit_verdict(sys, kSensitiveYes, kSensitiveNo);
}

Verdict classify_li_yorke(const System& sys) {
  return unit_orbit_verdict(sys, kLiYorkeYes, kLiYorkeNo);
}

std::optional<Index> first_nonunit_weight(const System& sys) {
  for (Index a : candidate_indices(sys))
    if (!sys.ring().is_unit(sys.weight(a))) return a;
  return std::nullopt;
}

OntoDppVerdicts classify_onto_dpp(const System& sys) {
  Verdict v;
  if (auto inj = is_injective(sys); !inj.injective) {
    v.status = Status::No;
    v.justification = kOntoDpp;
    v.collision = inj.collision;
  } else if (auto w = first_nonunit_weight(sys)) {
    v.status = Status::No;
    v.justification = kOntoDpp;
    v.nonunit_weight_index = w;
  } else {
    v.status = Status::Yes;
    v.justification = kOntoDpp;
  }
  return {v, v};
}

TransitiveDevaneyVerdicts classify_transitive_devaney(const System& sys) {
  Verdict v;
  v.justification = kTransitive;
  if (auto inj = is_injective(sys); !inj.injective) {
    v.status = Status::No;
    v.collision = inj.collision;
  } else if (auto per = periodic_points_exist(sys); per.exists) {
    v.status = Status::No;
    v.periodic_point_index = per.witness;
  } else if (auto w = first_nonunit_weight(sys)) {
    v.status = Status::No;
    v.nonunit_weight_index = w;
  } else {
    v.status = Status::Yes;
  }
  return {v, v};
}

std::vector<Index> stability_certificate(const System& sys,
                                         std::span<const Index> M) {
  std::vector<Index> lambda;
  for (Index a : M) {
    OrbitShape sh = orbit_shape(sys, a);
    if (!sh.escapes) {
      // Quasi-periodic: the whole (finite) forward orbit.
      lambda.insert(lambda.end(), sh.points.begin(), sh.points.end());
      continue;
    }
    WeightProfile wp = orbit_weight_profile(sys, a);
    if (wp.kind != WeightProfileKind::HitsZero)
      throw HypothesisViolated(
          "index " + std::to_string(a) +
          " is non-quasi-periodic with orbit weights never hitting zero");
    // Orbit segment up to and including the first zero weight.
    for (long long i = 0; i <= wp.first; ++i) lambda.push_back(sh.point_at(i));
  }
  std::sort(lambda.begin(), lambda.end());
  lambda.erase(std::unique(lambda.begin(), lambda.end()), lambda.end());
  return lambda;
}

ChaosReport classify_all(const System& sys) {
  ChaosReport r;
  r.sensitive = classify_sensitive(sys);
  r.strongly_sensitive = r.sensitive;  // both rest on the same criterion
  r.li_yorke = classify_li_yorke(sys);
  auto od = classify_onto_dpp(sys);
  r.onto = od.onto;
  r.dense_periodic = od.dense_periodic;
  auto td = classify_transitive_devaney(sys);
  r.transitive = td.transitive;
  r.devaney = td.devaney;

  if (r.onto.status != r.dense_periodic.status)
    throw std::logic_error("report incoherence: onto vs dense periodic points");
  if (r.transitive.status == Status::Yes &&
      (r.sensitive.status != Status::Yes ||
       r.dense_periodic.status != Status::Yes ||
       r.devaney.status != Status::Yes))
    throw std::logic_error("report incoherence: transitivity consequences");
  if (sys.ring().is_field() &&
      (r.sensitive.status != r.li_yorke.status ||
       r.sensitive.status != r.strongly_sensitive.status))
    throw std::logic_error("report incoherence: field equivalences");
  return r;
}

}  // namespace wgs
