#include "wgs/witness.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wgs {

namespace {

constexpr long long kLinkBound = 1'000'000;
constexpr long long kWalkGuard = 1ll << 21;

void require_unit_orbit_point(const System& sys, Index theta) {
  if (classify_orbit(sys, theta).kind != OrbitClass::Kind::NonQuasiPeriodic)
    throw BadWitnessPoint("index " + std::to_string(theta) +
                          " is quasi-periodic");
  if (orbit_weight_profile(sys, theta).kind != WeightProfileKind::AllUnits)
    throw BadWitnessPoint("orbit of index " + std::to_string(theta) +
                          " carries a non-unit weight");
}

std::map<Index, Elem> checked_constraints(const System& sys, const Cylinder& c) {
  std::map<Index, Elem> vals;
  for (auto [a, e] : c.constraints) {
    if (!sys.contains(a))
      throw std::invalid_argument("cylinder index outside the index set");
    sys.ring().element(e.v);
    if (!vals.emplace(a, e).second)
      throw std::invalid_argument("cylinder constrains an index twice");
  }
  return vals;
}

}  // namespace

std::vector<SetDescriptor> branch_family(int count) {
  if (count < 2)
    throw std::invalid_argument("branch family needs count >= 2");
  std::vector<SetDescriptor> out;
  for (int len = 1; static_cast<int>(out.size()) < count; ++len) {
    for (long long bits = 0;
         bits < (1ll << len) && static_cast<int>(out.size()) < count; ++bits) {
      std::vector<int> block(len);
      for (int i = 0; i < len; ++i)
        block[i] = static_cast<int>((bits >> (len - 1 - i)) & 1);
      // A block that is a power of a shorter one repeats a sequence already
      // emitted; skip it.
      bool primitive = true;
      for (int d = 1; d < len && primitive; ++d) {
        if (len % d != 0) continue;
        bool rep = true;
        for (int i = d; i < len && rep; ++i) rep = block[i] == block[i % d];
        primitive = !rep;
      }
      if (primitive) out.push_back(SetDescriptor::branch({}, block));
    }
  }
  return out;
}

ScrambledPair scrambled_pair(const System& sys, Index nu, SetDescriptor e,
                             SetDescriptor f) {
  require_unit_orbit_point(sys, nu);
  if (e.kind != SetDescriptor::Kind::Branch ||
      f.kind != SetDescriptor::Kind::Branch || same_branch_sequence(e, f))
    throw std::invalid_argument(
        "scrambled pair needs branch sets with distinct sequences "
        "(infinite symmetric difference)");
  Config x = Config::triangular(sys, nu, e);
  Config y = Config::triangular(sys, nu, f);
  return {std::move(x), std::move(y), std::move(e), std::move(f), nu};
}

std::vector<long long> nonasym_times(const System&, const ScrambledPair& pair,
                                     long long bound) {
  std::vector<long long> out;
  for (long long r = 0; r <= bound; ++r)
    if (pair.e.contains(r) && !pair.f.contains(r)) out.push_back(r * (r + 1) / 2);
  return out;
}

std::vector<long long> prox_schedule(const System& sys, const ScrambledPair& pair,
                                     std::span<const Index> M, int count) {
  if (count < 0) throw std::invalid_argument("negative schedule length");
  long long r = 1, m_max = 1;
  for (Index a : M) {
    LinkResult lr = find_link(sys, pair.nu, a, kLinkBound);
    if (lr.status == LinkResult::Status::ProvablyDisjoint)
      continue;  // both configurations vanish on that orbit forever
    if (lr.status == LinkResult::Status::BoundExhausted)
      throw LinkNotFound("link search between " + std::to_string(pair.nu) +
                         " and " + std::to_string(a) + " exhausted its bound");
    r = std::max(r, lr.n);
    m_max = std::max(m_max, lr.m);
  }
  std::vector<long long> times;
  for (long long n = r + m_max; static_cast<int>(times.size()) < count; ++n)
    times.push_back(n * (n + 1) / 2 + r);
  return times;
}

namespace {

struct ClassGroup {
  PeriodicClassData::Kind kind;
  Index ref;             // Cycle/OneSided: class root; BiInfinite: first seen
  OrbitShape ref_shape;  // of ref
  std::vector<long long> offsets;  // constrained positions relative to ref
};

// Walks φ-preimages from beta until a preimage-free root or a provable
// bi-infinite backward chain.
std::pair<PeriodicClassData::Kind, Index> backward_root(const System& sys,
                                                        Index beta) {
  Index c = beta;
  long long guard = 0;
  const auto* ii = std::get_if<IntegerShiftIndexModel>(&sys.index_model());
  Index least = 0, greatest = 0;
  if (ii) {
    least = sys.table_lo();
    greatest = sys.table_hi() - 1;
    for (Index v : ii->phi_table) {
      least = std::min(least, v);
      greatest = std::max(greatest, v);
    }
  }
  for (;;) {
    if (ii) {
      // Below every table index and value the backward chain is a pure
      // translation and never ends.
      if (ii->tail_offset > 0 && c < least)
        return {PeriodicClassData::Kind::BiInfinite, beta};
      if (ii->tail_offset < 0 && c > greatest)
        return {PeriodicClassData::Kind::BiInfinite, beta};
    }
    auto p = sys.preimage_index(c);
    if (!p) return {PeriodicClassData::Kind::OneSided, c};
    c = *p;
    if (++guard > kWalkGuard)
      throw std::runtime_error("backward walk exceeded the iteration guard");
  }
}

}  // namespace

PeriodicWitness periodic_point(const System& sys, const Cylinder& target) {
  if (classify_onto_dpp(sys).onto.status != Status::Yes)
    throw NotApplicable(
        "periodic-point construction requires injective phi and unit weights");
  const Ring& ring = sys.ring();
  const std::map<Index, Elem> cvals = checked_constraints(sys, target);
  auto value_at = [&](Index a) {
    auto it = cvals.find(a);
    return it != cvals.end() ? it->second : ring.zero();
  };

  std::vector<ClassGroup> groups;
  for (const auto& [beta, val] : cvals) {
    (void)val;
    OrbitShape sb = orbit_shape(sys, beta);
    if (!sb.escapes) {
      if (sb.cycle_entry != 0)
        throw std::logic_error("injective phi produced a preperiodic orbit");
      Index root = *std::min_element(sb.points.begin(), sb.points.end());
      bool found = false;
      for (auto& g : groups)
        if (g.kind == PeriodicClassData::Kind::Cycle && g.ref == root) {
          found = true;
          break;
        }
      if (!found)
        groups.push_back({PeriodicClassData::Kind::Cycle, root,
                          orbit_shape(sys, root), {}});
      continue;
    }
    auto [kind, anchor] = backward_root(sys, beta);
    if (kind == PeriodicClassData::Kind::OneSided) {
      bool found = false;
      for (auto& g : groups)
        if (g.kind == kind && g.ref == anchor) {
          g.offsets.push_back(*g.ref_shape.position_of(beta));
          found = true;
          break;
        }
      if (!found) {
        ClassGroup g{kind, anchor, orbit_shape(sys, anchor), {}};
        g.offsets.push_back(*g.ref_shape.position_of(beta));
        groups.push_back(std::move(g));
      }
      continue;
    }
    // Bi-infinite: match against existing groups by a signed orbit offset.
    bool found = false;
    for (auto& g : groups) {
      if (g.kind != PeriodicClassData::Kind::BiInfinite) continue;
      if (auto s = g.ref_shape.position_of(beta)) {
        g.offsets.push_back(*s);
        found = true;
        break;
      }
      OrbitShape sb2 = orbit_shape(sys, beta);
      if (auto q = sb2.position_of(g.ref, 1)) {
        g.offsets.push_back(-*q);
        found = true;
        break;
      }
    }
    if (!found) {
      ClassGroup g{PeriodicClassData::Kind::BiInfinite, beta,
                   orbit_shape(sys, beta), {0}};
      groups.push_back(std::move(g));
    }
  }

  PeriodicWitnessData data;
  std::vector<Index> closure;
  for (auto& g : groups) {
    PeriodicClassData cls;
    cls.kind = g.kind;
    if (g.kind == PeriodicClassData::Kind::Cycle) {
      cls.root = g.ref;
      cls.shape = g.ref_shape;
      cls.seg_len = static_cast<long long>(cls.shape.points.size());
    } else if (g.kind == PeriodicClassData::Kind::OneSided) {
      cls.root = g.ref;
      cls.shape = g.ref_shape;
      cls.seg_len = *std::max_element(g.offsets.begin(), g.offsets.end()) + 1;
    } else {
      long long t1 = *std::min_element(g.offsets.begin(), g.offsets.end());
      long long ts = *std::max_element(g.offsets.begin(), g.offsets.end());
      cls.root = t1 >= 0 ? g.ref_shape.point_at(t1)
                         : backward_walk(sys, g.ref, -t1);
      cls.shape = orbit_shape(sys, cls.root);
      cls.seg_len = ts - t1 + 1;
    }
    for (long long i = 0; i < cls.seg_len; ++i) {
      Index a = cls.shape.point_at(i);
      cls.base.push_back(value_at(a));
      closure.push_back(a);
    }
    data.classes.push_back(std::move(cls));
  }

  long long period = ring.unit_count();
  for (const auto& cls : data.classes)
    for (long long i = 0; i < cls.seg_len; ++i) {
      if (period > (1ll << 60) / cls.seg_len)
        throw std::overflow_error("witness period does not fit 63 bits");
      period *= cls.seg_len;
    }

  std::sort(closure.begin(), closure.end());
  return {Config::periodic_witness(std::move(data)), period, std::move(closure)};
}

SeparationWitness separation_witness(const System& sys, const Config& x,
                                     std::span<const Index> pinned, Index theta) {
  require_unit_orbit_point(sys, theta);
  OrbitShape sh = orbit_shape(sys, theta);
  long long start = 0;
  for (Index p : pinned)
    if (auto pos = sh.position_of(p)) start = std::max(start, *pos + 1);
  return {Config::orbit_bumped(sys, x, theta, start), start};
}

TransitWitness transit_witness(const System& sys, const Cylinder& u,
                               const Cylinder& v) {
  if (classify_transitive_devaney(sys).transitive.status != Status::Yes)
    throw NotApplicable("transit construction requires a transitive system");
  const Ring& ring = sys.ring();
  auto uvals = checked_constraints(sys, u);
  auto vvals = checked_constraints(sys, v);

  // Least p such that every φ^p(beta) of a constrained V-index has left the
  // U-indices for good.
  long long p = 1;
  for (const auto& [beta, sval] : vvals) {
    (void)sval;
    OrbitShape sb = orbit_shape(sys, beta);
    for (const auto& [alpha, rval] : uvals) {
      (void)rval;
      if (auto pos = sb.position_of(alpha)) p = std::max(p, *pos + 1);
    }
  }

  std::vector<std::pair<Index, Elem>> pairs(u.constraints.begin(),
                                            u.constraints.end());
  for (const auto& [beta, sval] : vvals) {
    OrbitShape sb = orbit_shape(sys, beta);
    Elem w = weight_product(sys, sb, p);
    pairs.emplace_back(sb.point_at(p), ring.mul(ring.inv(w), sval));
  }
  // Injectivity keeps the solved coordinates distinct from each other and
  // from the U-indices; finite_support rejects any clash.
  return {p, Config::finite_support(sys, std::move(pairs))};
}

Config preimage(const System& sys, const Config& x) {
  if (classify_onto_dpp(sys).onto.status != Status::Yes)
    throw NotApplicable("preimages require injective phi and unit weights");
  auto* fs = std::get_if<FiniteSupportData>(&x.data());
  if (!fs)
    throw std::invalid_argument("preimage needs a finite-support configuration");
  const Ring& ring = sys.ring();
  std::vector<std::pair<Index, Elem>> pairs;
  for (auto [beta, val] : fs->pairs)
    pairs.emplace_back(sys.phi(beta), ring.mul(ring.inv(sys.weight(beta)), val));
  return Config::finite_support(sys, std::move(pairs));
}

}  // namespace wgs
