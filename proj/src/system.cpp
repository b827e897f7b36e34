#include "wgs/system.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace wgs {

namespace {

constexpr long long kOrbitGuard = 1ll << 21;

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument(what);
}

}  // namespace

System::System(Ring ring, IndexModel index, WeightModel weights)
    : ring_(std::move(ring)), index_(std::move(index)), weights_(std::move(weights)) {
  const int card = ring_.cardinality();
  auto check_elems = [&](const std::vector<Elem>& es) {
    for (Elem e : es)
      if (e.v < 0 || e.v >= card) bad("weight outside the ring");
  };

  if (auto* fi = std::get_if<FiniteIndexModel>(&index_)) {
    auto* fw = std::get_if<FiniteWeightModel>(&weights_);
    if (!fw) bad("index and weight models must be the same kind");
    const Index n = static_cast<Index>(fi->phi.size());
    if (n < 2) bad("finite model: size >= 2 required");
    for (Index v : fi->phi)
      if (v < 0 || v >= n) bad("finite model: phi value outside [0, n)");
    if (static_cast<Index>(fw->values.size()) != n)
      bad("finite model: weights length must equal size");
    check_elems(fw->values);
    table_lo_ = 0;
    table_hi_ = n;
  } else if (auto* ci = std::get_if<CofiniteShiftIndexModel>(&index_)) {
    auto* cw = std::get_if<CofiniteShiftWeightModel>(&weights_);
    if (!cw) bad("index and weight models must be the same kind");
    if (ci->tail_offset < 0) bad("cofinite shift: tail_offset >= 0 required");
    for (Index v : ci->phi_table)
      if (v < 0) bad("cofinite shift: phi value outside the naturals");
    check_elems(cw->table);
    if (cw->tail.v < 0 || cw->tail.v >= card) bad("weight outside the ring");
    table_lo_ = 0;
    table_hi_ = std::max(static_cast<Index>(ci->phi_table.size()),
                         static_cast<Index>(cw->table.size()));
  } else {
    auto* ii = std::get_if<IntegerShiftIndexModel>(&index_);
    auto* iw = std::get_if<IntegerShiftWeightModel>(&weights_);
    if (!ii || !iw) bad("index and weight models must be the same kind");
    if (ii->hi < ii->lo) bad("integer shift: window hi < lo");
    if (static_cast<Index>(ii->phi_table.size()) != ii->hi - ii->lo)
      bad("integer shift: phi_table length must equal hi - lo");
    if (ii->tail_offset == 0) bad("integer shift: tail_offset != 0 required");
    check_elems(iw->table);
    if (iw->tail_neg.v < 0 || iw->tail_neg.v >= card ||
        iw->tail_pos.v < 0 || iw->tail_pos.v >= card)
      bad("weight outside the ring");
    table_lo_ = std::min(ii->lo, iw->lo);
    table_hi_ = std::max(ii->hi, iw->lo + static_cast<Index>(iw->table.size()));
  }
}

ModelKind System::kind() const {
  if (std::holds_alternative<FiniteIndexModel>(index_)) return ModelKind::Finite;
  if (std::holds_alternative<CofiniteShiftIndexModel>(index_))
    return ModelKind::CofiniteShift;
  return ModelKind::IntegerShift;
}

bool System::contains(Index a) const {
  switch (kind()) {
    case ModelKind::Finite:
      return a >= 0 && a < static_cast<Index>(
                               std::get<FiniteIndexModel>(index_).phi.size());
    case ModelKind::CofiniteShift:
      return a >= 0;
    case ModelKind::IntegerShift:
      return true;
  }
  return false;
}

Index System::phi(Index a) const {
  if (!contains(a)) throw std::out_of_range("index outside the index set");
  if (auto* fi = std::get_if<FiniteIndexModel>(&index_)) return fi->phi[a];
  if (auto* ci = std::get_if<CofiniteShiftIndexModel>(&index_)) {
    if (a < static_cast<Index>(ci->phi_table.size())) return ci->phi_table[a];
    return a + ci->tail_offset;
  }
  auto& ii = std::get<IntegerShiftIndexModel>(index_);
  if (a >= ii.lo && a < ii.hi) return ii.phi_table[a - ii.lo];
  return a + ii.tail_offset;
}

Elem System::weight(Index a) const {
  if (!contains(a)) throw std::out_of_range("index outside the index set");
  if (auto* fw = std::get_if<FiniteWeightModel>(&weights_)) return fw->values[a];
  if (auto* cw = std::get_if<CofiniteShiftWeightModel>(&weights_)) {
    if (a < static_cast<Index>(cw->table.size())) return cw->table[a];
    return cw->tail;
  }
  auto& iw = std::get<IntegerShiftWeightModel>(weights_);
  if (a < iw.lo) return iw.tail_neg;
  if (a >= iw.lo + static_cast<Index>(iw.table.size())) return iw.tail_pos;
  return iw.table[a - iw.lo];
}

Index System::tail_offset() const {
  if (auto* ci = std::get_if<CofiniteShiftIndexModel>(&index_))
    return ci->tail_offset;
  if (auto* ii = std::get_if<IntegerShiftIndexModel>(&index_))
    return ii->tail_offset;
  return 0;
}

std::optional<Index> System::preimage_index(Index a) const {
  if (auto* fi = std::get_if<FiniteIndexModel>(&index_)) {
    for (Index i = 0; i < static_cast<Index>(fi->phi.size()); ++i)
      if (fi->phi[i] == a) return i;
    return std::nullopt;
  }
  if (auto* ci = std::get_if<CofiniteShiftIndexModel>(&index_)) {
    for (Index i = 0; i < static_cast<Index>(ci->phi_table.size()); ++i)
      if (ci->phi_table[i] == a) return i;
    Index c = a - ci->tail_offset;
    if (c >= static_cast<Index>(ci->phi_table.size())) return c;
    return std::nullopt;
  }
  auto& ii = std::get<IntegerShiftIndexModel>(index_);
  for (Index i = ii.lo; i < ii.hi; ++i)
    if (ii.phi_table[i - ii.lo] == a) return i;
  Index c = a - ii.tail_offset;
  if (c < ii.lo || c >= ii.hi) return c;
  return std::nullopt;
}

namespace {

// A point of the absorbing tail never re-enters the table region: from it,
// φ is a translation stepping further away and w is constant.
bool absorbing(const System& sys, Index c) {
  switch (sys.kind()) {
    case ModelKind::Finite:
      return false;
    case ModelKind::CofiniteShift:
      return sys.tail_offset() >= 1 && c >= sys.table_hi();
    case ModelKind::IntegerShift:
      return sys.tail_offset() > 0 ? c >= sys.table_hi() : c < sys.table_lo();
  }
  return false;
}

}  // namespace

OrbitShape orbit_shape(const System& sys, Index start) {
  if (!sys.contains(start)) throw std::out_of_range("index outside the index set");
  OrbitShape sh;
  std::unordered_map<Index, int> seen;
  Index c = start;
  for (;;) {
    seen.emplace(c, static_cast<int>(sh.points.size()));
    sh.points.push_back(c);
    if (absorbing(sys, c)) {
      sh.escapes = true;
      sh.step = sys.tail_offset();
      return sh;
    }
    Index next = sys.phi(c);
    if (auto it = seen.find(next); it != seen.end()) {
      sh.cycle_entry = it->second;
      return sh;
    }
    if (static_cast<long long>(sh.points.size()) > kOrbitGuard)
      throw std::runtime_error("orbit walk exceeded the iteration guard");
    c = next;
  }
}

Index OrbitShape::point_at(long long m) const {
  const long long L = static_cast<long long>(points.size());
  if (m < 0) throw std::invalid_argument("negative orbit position");
  if (m < L) return points[static_cast<size_t>(m)];
  if (escapes) return points.back() + (m - (L - 1)) * step;
  const long long per = L - cycle_entry;
  return points[static_cast<size_t>(cycle_entry + (m - cycle_entry) % per)];
}

std::optional<long long> OrbitShape::position_of(Index target, long long from) const {
  const long long L = static_cast<long long>(points.size());
  for (long long i = std::max<long long>(from, 0); i < L; ++i)
    if (points[static_cast<size_t>(i)] == target) return i;
  if (escapes) {
    const long long diff = target - points.back();
    if (diff % step == 0) {
      const long long q = diff / step;
      if (q >= 1 && L - 1 + q >= from) return L - 1 + q;
    }
    return std::nullopt;
  }
  const long long per = L - cycle_entry;
  for (long long j = cycle_entry; j < L; ++j)
    if (points[static_cast<size_t>(j)] == target) {
      if (j >= from) return j;
      const long long lift = (from - j + per - 1) / per;
      return j + lift * per;
    }
  return std::nullopt;
}

Index phi_apply(const System& sys, Index a, long long n) {
  if (n < 0) throw std::invalid_argument("negative iterate");
  return orbit_shape(sys, a).point_at(n);
}

OrbitClass classify_orbit(const System& sys, Index a) {
  OrbitShape sh = orbit_shape(sys, a);
  OrbitClass oc{};
  if (sh.escapes) {
    oc.kind = OrbitClass::Kind::NonQuasiPeriodic;
    oc.escape_step = static_cast<long long>(sh.points.size()) - 1;
    return oc;
  }
  oc.period = sh.period();
  if (sh.cycle_entry == 0) {
    oc.kind = OrbitClass::Kind::Periodic;
  } else {
    oc.kind = OrbitClass::Kind::QuasiPeriodic;
    oc.preperiod = sh.cycle_entry;
  }
  return oc;
}

WeightProfile orbit_weight_profile(const System& sys, Index a) {
  OrbitShape sh = orbit_shape(sys, a);
  // The scanned prefix covers every distinct weight the orbit ever sees:
  // a cycle repeats its weights, an absorbing tail keeps a constant one.
  long long zero_at = -1, nonunit_at = -1;
  for (long long n = 0; n < static_cast<long long>(sh.points.size()); ++n) {
    Elem w = sys.weight(sh.points[static_cast<size_t>(n)]);
    if (w == sys.ring().zero()) {
      zero_at = n;
      break;
    }
    if (!sys.ring().is_unit(w) && nonunit_at < 0) nonunit_at = n;
  }
  if (zero_at >= 0) return {WeightProfileKind::HitsZero, zero_at};
  if (nonunit_at >= 0) return {WeightProfileKind::NonzeroNonUnit, nonunit_at};
  return {WeightProfileKind::AllUnits, 0};
}

InjectivityResult is_injective(const System& sys) {
  std::unordered_map<Index, Index> image;  // value -> earliest table index
  auto table_scan = [&](Index first, Index last,
                        auto value_of) -> std::optional<std::pair<Index, Index>> {
    for (Index i = first; i < last; ++i) {
      Index v = value_of(i);
      if (auto it = image.find(v); it != image.end()) return std::pair{it->second, i};
      image.emplace(v, i);
    }
    return std::nullopt;
  };

  if (auto* fi = std::get_if<FiniteIndexModel>(&sys.index_model())) {
    if (auto hit = table_scan(0, static_cast<Index>(fi->phi.size()),
                              [&](Index i) { return fi->phi[i]; }))
      return {false, hit};
    return {true, std::nullopt};
  }
  if (auto* ci = std::get_if<CofiniteShiftIndexModel>(&sys.index_model())) {
    const Index B = static_cast<Index>(ci->phi_table.size());
    if (auto hit = table_scan(0, B, [&](Index i) { return ci->phi_table[i]; }))
      return {false, hit};
    for (Index i = 0; i < B; ++i) {
      Index v = ci->phi_table[i];
      if (v - ci->tail_offset >= B)  // some tail point maps onto v too
        return {false, std::pair{i, v - ci->tail_offset}};
    }
    return {true, std::nullopt};
  }
  auto& ii = std::get<IntegerShiftIndexModel>(sys.index_model());
  if (auto hit = table_scan(ii.lo, ii.hi,
                            [&](Index i) { return ii.phi_table[i - ii.lo]; }))
    return {false, hit};
  for (Index i = ii.lo; i < ii.hi; ++i) {
    Index v = ii.phi_table[i - ii.lo];
    Index c = v - ii.tail_offset;
    if (c < ii.lo || c >= ii.hi) return {false, std::pair{i, c}};
  }
  return {true, std::nullopt};
}

std::vector<Index> candidate_indices(const System& sys) {
  std::vector<Index> out;
  switch (sys.kind()) {
    case ModelKind::Finite:
      for (Index i = 0; i < sys.table_hi(); ++i) out.push_back(i);
      break;
    case ModelKind::CofiniteShift:
      for (Index i = 0; i < sys.table_hi(); ++i) out.push_back(i);
      out.push_back(sys.table_hi());
      break;
    case ModelKind::IntegerShift:
      for (Index i = sys.table_lo(); i < sys.table_hi(); ++i) out.push_back(i);
      out.push_back(sys.table_lo() - 1);
      out.push_back(sys.table_hi());
      break;
  }
  return out;
}

PeriodicPointsResult periodic_points_exist(const System& sys) {
  for (Index i : candidate_indices(sys))
    if (classify_orbit(sys, i).kind == OrbitClass::Kind::Periodic)
      return {true, i};
  return {false, std::nullopt};
}

Index backward_walk(const System& sys, Index from, long long steps) {
  Index c = from;
  while (steps > 0) {
    // Deep in the backward tail no table index can map onto c, so the
    // preimages are pure translations and can be taken all at once.
    if (auto* ii = std::get_if<IntegerShiftIndexModel>(&sys.index_model())) {
      Index least = sys.table_lo(), greatest = sys.table_hi() - 1;
      for (Index v : ii->phi_table) {
        least = std::min(least, v);
        greatest = std::max(greatest, v);
      }
      if (ii->tail_offset > 0 && c < least) return c - steps * ii->tail_offset;
      if (ii->tail_offset < 0 && c > greatest)
        return c - steps * ii->tail_offset;
    }
    auto p = sys.preimage_index(c);
    if (!p)
      throw std::logic_error("backward walk hit a point with no preimage");
    c = *p;
    --steps;
  }
  return c;
}

LinkResult find_link(const System& sys, Index nu, Index alpha, long long bound) {
  const OrbitShape sn = orbit_shape(sys, nu);
  const OrbitShape sa = orbit_shape(sys, alpha);
  const long long Ln = static_cast<long long>(sn.points.size());
  const long long La = static_cast<long long>(sa.points.size());

  bool meets_outside_bound = false;
  auto try_pair = [&](long long m, long long n) -> std::optional<LinkResult> {
    if (m <= bound && n <= bound)
      return LinkResult{LinkResult::Status::Found, m, n};
    meets_outside_bound = true;
    return std::nullopt;
  };
  auto at_concrete = [&](long long m) -> std::optional<LinkResult> {
    if (auto n = sa.position_of(sn.point_at(m), 1)) return try_pair(m, *n);
    return std::nullopt;
  };

  // Every distinct forward-orbit point of nu at steps >= 1 occurs at some
  // m <= Ln (cyclic) or is either a concrete prefix point (m < Ln) or an
  // arithmetic tail point (escaping).
  const long long concrete_last = sn.escapes ? Ln - 1 : Ln;
  for (long long m = 1; m <= concrete_last; ++m)
    if (auto r = at_concrete(m)) return *r;

  if (sn.escapes) {
    const Index d = sn.step;
    const Index vback = sn.points.back();
    std::vector<std::pair<long long, long long>> cands;  // (m, n)

    // Concrete points of alpha's orbit hit by nu's tail.
    const long long alpha_last = sa.escapes ? La - 1 : La;
    for (long long n = 1; n <= alpha_last; ++n) {
      Index v = sa.point_at(n);
      long long diff = v - vback;
      if (diff % d != 0) continue;
      long long k = diff / d;
      if (k < 1) continue;
      auto least_n = sa.position_of(v, 1);
      cands.emplace_back(Ln - 1 + k, *least_n);
    }
    // Tail against tail: both are arithmetic progressions with step d.
    if (sa.escapes) {
      const Index aback = sa.points.back();
      long long diff = vback - aback;
      if (diff % d == 0) {
        long long delta = diff / d;
        long long k = std::max<long long>({1, -delta, 2 - La - delta});
        cands.emplace_back(Ln - 1 + k, La - 1 + k + delta);
      }
    }
    std::sort(cands.begin(), cands.end());
    for (auto [m, n] : cands)
      if (auto r = try_pair(m, n)) return *r;
  }

  return meets_outside_bound
             ? LinkResult{LinkResult::Status::BoundExhausted, 0, 0}
             : LinkResult{LinkResult::Status::ProvablyDisjoint, 0, 0};
}

}  // namespace wgs
