#include "wgs/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace wgs {

namespace {

// Largest p with p(p+1)/2 <= t.
long long triangular_root(long long t) {
  long long p = static_cast<long long>((std::sqrt(8.0 * t + 1.0) - 1.0) / 2.0);
  while (p * (p + 1) / 2 > t) --p;
  while ((p + 1) * (p + 2) / 2 <= t) ++p;
  return p;
}

}  // namespace

SetDescriptor SetDescriptor::finite(std::vector<long long> members) {
  SetDescriptor s;
  s.kind = Kind::FiniteSet;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  s.members = std::move(members);
  return s;
}

SetDescriptor SetDescriptor::branch(std::vector<int> prefix, std::vector<int> period) {
  if (period.empty())
    throw std::invalid_argument("branch descriptor needs a nonempty period");
  for (int b : prefix)
    if (b != 0 && b != 1) throw std::invalid_argument("branch bits must be 0/1");
  for (int b : period)
    if (b != 0 && b != 1) throw std::invalid_argument("branch bits must be 0/1");
  SetDescriptor s;
  s.kind = Kind::Branch;
  s.prefix = std::move(prefix);
  s.period = std::move(period);
  return s;
}

int SetDescriptor::sequence_bit(long long i) const {
  if (i < static_cast<long long>(prefix.size())) return prefix[i];
  return period[(i - prefix.size()) % period.size()];
}

bool SetDescriptor::contains(long long m) const {
  if (kind == Kind::FiniteSet)
    return std::binary_search(members.begin(), members.end(), m);
  // m encodes "1 b1 … bn" with n >= 1 and b1…bn a prefix of the sequence.
  if (m < 2) return false;
  int nbits = 0;
  for (long long t = m; t > 0; t >>= 1) ++nbits;
  const int len = nbits - 1;
  for (int i = 0; i < len; ++i)
    if (((m >> (len - 1 - i)) & 1) != sequence_bit(i)) return false;
  return true;
}

bool same_branch_sequence(const SetDescriptor& a, const SetDescriptor& b) {
  const long long bound =
      std::max(a.prefix.size(), b.prefix.size()) +
      std::lcm(static_cast<long long>(a.period.size()),
               static_cast<long long>(b.period.size()));
  for (long long i = 0; i < bound; ++i)
    if (a.sequence_bit(i) != b.sequence_bit(i)) return false;
  return true;
}

long long branch_common_prefix(const SetDescriptor& a, const SetDescriptor& b) {
  const long long bound =
      std::max(a.prefix.size(), b.prefix.size()) +
      std::lcm(static_cast<long long>(a.period.size()),
               static_cast<long long>(b.period.size()));
  for (long long i = 0; i < bound; ++i)
    if (a.sequence_bit(i) != b.sequence_bit(i)) return i;
  return -1;  // identical sequences
}

Config Config::finite_support(const System& sys,
                              std::vector<std::pair<Index, Elem>> pairs) {
  FiniteSupportData d;
  std::sort(pairs.begin(), pairs.end());
  for (size_t i = 0; i < pairs.size(); ++i) {
    auto [a, e] = pairs[i];
    if (!sys.contains(a))
      throw std::invalid_argument("support index outside the index set");
    if (e.v < 0 || e.v >= sys.ring().cardinality())
      throw std::invalid_argument("support value outside the ring");
    if (i > 0 && pairs[i - 1].first == a)
      throw std::invalid_argument("duplicate support index");
    if (e != sys.ring().zero()) d.pairs.emplace_back(a, e);
  }
  return Config(std::move(d));
}

Config Config::triangular(const System& sys, Index nu, SetDescriptor set) {
  TriangularData d;
  d.shape = orbit_shape(sys, nu);
  if (!d.shape.escapes)
    throw std::invalid_argument(
        "triangular indicator requires a non-quasi-periodic base point");
  d.nu = nu;
  d.set = std::move(set);
  return Config(std::move(d));
}

Config Config::orbit_bumped(const System& sys, Config base, Index theta,
                            long long start) {
  OrbitBumpedData d;
  d.shape = orbit_shape(sys, theta);
  if (!d.shape.escapes)
    throw std::invalid_argument(
        "orbit bump requires a non-quasi-periodic orbit");
  if (start < 0) throw std::invalid_argument("bump start must be >= 0");
  d.base = std::make_shared<const Config>(std::move(base));
  d.theta = theta;
  d.start = start;
  return Config(std::move(d));
}

Config Config::periodic_witness(PeriodicWitnessData data) {
  return Config(std::move(data));
}

namespace {

// Signed orbit position of a relative to the class root, if a lies in the
// class at all.
std::optional<long long> class_position(const System& sys,
                                        const PeriodicClassData& cls, Index a) {
  if (auto p = cls.shape.position_of(a)) return *p;
  if (cls.kind == PeriodicClassData::Kind::BiInfinite) {
    OrbitShape sa = orbit_shape(sys, a);
    if (auto q = sa.position_of(cls.root, 1)) return -*q;
  }
  return std::nullopt;
}

Elem eval_periodic_class(const System& sys, const PeriodicClassData& cls,
                         long long m) {
  const Ring& ring = sys.ring();
  const long long n = cls.seg_len;
  if (m >= 0 && m < n) return cls.base[static_cast<size_t>(m)];
  if (cls.kind == PeriodicClassData::Kind::Cycle)
    return cls.base[static_cast<size_t>(((m % n) + n) % n)];
  if (m >= n) {
    const long long r = m % n;
    Index b = cls.shape.point_at(r);
    Elem w = weight_product(sys, b, m - r);
    return ring.mul(ring.inv(w), cls.base[static_cast<size_t>(r)]);
  }
  // m < 0: only bi-infinite classes reach here.
  const long long r = ((m % n) + n) % n;
  Index b = backward_walk(sys, cls.root, -m);
  Elem w = weight_product(sys, b, r - m);
  return ring.mul(w, cls.base[static_cast<size_t>(r)]);
}

}  // namespace

Elem config_eval(const System& sys, const Config& x, Index a) {
  if (!sys.contains(a)) throw std::out_of_range("index outside the index set");
  const Ring& ring = sys.ring();
  return std::visit(
      [&](const auto& d) -> Elem {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, FiniteSupportData>) {
          auto it = std::lower_bound(
              d.pairs.begin(), d.pairs.end(), a,
              [](const auto& p, Index key) { return p.first < key; });
          if (it != d.pairs.end() && it->first == a) return it->second;
          return ring.zero();
        } else if constexpr (std::is_same_v<T, TriangularData>) {
          auto pos = d.shape.position_of(a);
          if (!pos) return ring.zero();
          long long p = triangular_root(*pos);
          if (p * (p + 1) / 2 != *pos) return ring.zero();
          return d.set.contains(p) ? ring.one() : ring.zero();
        } else if constexpr (std::is_same_v<T, OrbitBumpedData>) {
          Elem base = config_eval(sys, *d.base, a);
          auto pos = d.shape.position_of(a);
          if (pos && *pos >= d.start) return ring.add(base, ring.one());
          return base;
        } else {
          for (const auto& cls : d.classes)
            if (auto m = class_position(sys, cls, a))
              return eval_periodic_class(sys, cls, *m);
          return ring.zero();
        }
      },
      x.data());
}

Elem weight_product(const System& sys, const OrbitShape& sh, long long n) {
  const Ring& ring = sys.ring();
  if (n < 0) throw std::invalid_argument("negative iterate");
  const long long L = static_cast<long long>(sh.points.size());
  Elem acc = ring.one();
  auto direct = [&](long long from, long long to) {  // [from, to)
    for (long long i = from; i < to; ++i)
      acc = ring.mul(acc, sys.weight(sh.points[static_cast<size_t>(i)]));
  };
  if (sh.escapes) {
    // Weights are constant from the first absorbing point on.
    direct(0, std::min(n, L - 1));
    if (n > L - 1)
      acc = ring.mul(acc, ring.pow(sys.weight(sh.points.back()), n - (L - 1)));
    return acc;
  }
  if (n <= L) {
    direct(0, n);
    return acc;
  }
  const long long entry = sh.cycle_entry, per = sh.period();
  direct(0, entry);
  Elem cyc = ring.one();
  for (long long i = entry; i < L; ++i)
    cyc = ring.mul(cyc, sys.weight(sh.points[static_cast<size_t>(i)]));
  const long long q = (n - entry) / per, r = (n - entry) % per;
  acc = ring.mul(acc, ring.pow(cyc, q));
  direct(entry, entry + r);
  return acc;
}

Elem weight_product(const System& sys, Index a, long long n) {
  return weight_product(sys, orbit_shape(sys, a), n);
}

Elem iterate_coord(const System& sys, const Config& x, long long n, Index a) {
  OrbitShape sh = orbit_shape(sys, a);
  Elem w = weight_product(sys, sh, n);
  return sys.ring().mul(w, config_eval(sys, x, sh.point_at(n)));
}

std::vector<Index> phi_preimages(const System& sys, Index a) {
  std::vector<Index> out;
  if (auto* fi = std::get_if<FiniteIndexModel>(&sys.index_model())) {
    for (Index i = 0; i < static_cast<Index>(fi->phi.size()); ++i)
      if (fi->phi[i] == a) out.push_back(i);
    return out;
  }
  if (auto* ci = std::get_if<CofiniteShiftIndexModel>(&sys.index_model())) {
    const Index B = static_cast<Index>(ci->phi_table.size());
    for (Index i = 0; i < B; ++i)
      if (ci->phi_table[i] == a) out.push_back(i);
    Index c = a - ci->tail_offset;
    if (c >= B) out.push_back(c);
    return out;
  }
  auto& ii = std::get<IntegerShiftIndexModel>(sys.index_model());
  for (Index i = ii.lo; i < ii.hi; ++i)
    if (ii.phi_table[i - ii.lo] == a) out.push_back(i);
  Index c = a - ii.tail_offset;
  if (c < ii.lo || c >= ii.hi) out.push_back(c);
  return out;
}

Config apply_shift(const System& sys, const Config& x) {
  auto* fs = std::get_if<FiniteSupportData>(&x.data());
  if (!fs)
    throw std::invalid_argument("apply_shift needs a finite-support configuration");
  std::vector<std::pair<Index, Elem>> out;
  for (auto [beta, v] : fs->pairs)
    for (Index alpha : phi_preimages(sys, beta))
      out.emplace_back(alpha, sys.ring().mul(sys.weight(alpha), v));
  return Config::finite_support(sys, std::move(out));
}

bool agree_at(const System& sys, const Config& x, const Config& y, long long n,
              std::span<const Index> M) {
  for (Index a : M)
    if (!(iterate_coord(sys, x, n, a) == iterate_coord(sys, y, n, a)))
      return false;
  return true;
}

ScanTimes scan_times(const System& sys, const Config& x, const Config& y,
                     std::span<const Index> M, long long horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  ScanTimes st;
  for (long long t = 1; t <= horizon; ++t)
    (agree_at(sys, x, y, t, M) ? st.agree : st.disagree).push_back(t);
  return st;
}

bool in_cylinder(const System& sys, const Config& x, const Cylinder& c) {
  for (auto [a, e] : c.constraints)
    if (!(config_eval(sys, x, a) == e)) return false;
  return true;
}

}  // namespace wgs
