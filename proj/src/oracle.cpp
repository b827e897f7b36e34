#include "wgs/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "wgs/classify.hpp"
#include "wgs/dynamics.hpp"

namespace wgs {

namespace {

constexpr long long kStateGuard = 1ll << 20;
constexpr long long kSweepBudget = 10'000'000;

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

StateSpace StateSpace::build(const System& sys) {
  auto* fi = std::get_if<FiniteIndexModel>(&sys.index_model());
  if (!fi)
    throw std::invalid_argument("state space enumeration needs a finite system");
  StateSpace ss;
  ss.coords = static_cast<int>(fi->phi.size());
  ss.radix = sys.ring().cardinality();
  long long size = 1;
  for (int i = 0; i < ss.coords; ++i) {
    size *= ss.radix;
    if (size > kStateGuard)
      throw SpaceTooLarge("state space larger than 2^20");
  }
  ss.size = size;

  const Ring& ring = sys.ring();
  std::vector<long long> scale(ss.coords);
  for (int i = 0; i < ss.coords; ++i) scale[i] = ipow(ss.radix, i);
  ss.sigma.resize(static_cast<size_t>(size));
  for (long long s = 0; s < size; ++s) {
    long long t = 0;
    for (int a = 0; a < ss.coords; ++a) {
      int src = static_cast<int>(s / scale[fi->phi[a]] % ss.radix);
      t += ring.mul(sys.weight(a), {src}).v * scale[a];
    }
    ss.sigma[static_cast<size_t>(s)] = static_cast<std::uint32_t>(t);
  }

  // Self-check against the independent shift implementation.
  long long probe = 1;
  for (int i = 0; i < 100; ++i) {
    probe = (probe * 48271) % 0x7fffffff;
    long long s = probe % size;
    std::vector<std::pair<Index, Elem>> pairs;
    for (int a = 0; a < ss.coords; ++a)
      pairs.emplace_back(a, Elem{ss.digit(s, a)});
    Config x = Config::finite_support(sys, std::move(pairs));
    Config y = apply_shift(sys, x);
    long long t = 0;
    for (int a = 0; a < ss.coords; ++a)
      t += config_eval(sys, y, a).v * scale[a];
    if (t != ss.sigma[static_cast<size_t>(s)])
      throw std::logic_error("state-space successor table mismatch");
  }
  return ss;
}

int StateSpace::digit(long long state, int pos) const {
  for (int i = 0; i < pos; ++i) state /= radix;
  return static_cast<int>(state % radix);
}

long long StateSpace::advance(long long state, long long n) const {
  while (n-- > 0) state = sigma[static_cast<size_t>(state)];
  return state;
}

BfProperties bf_properties(const StateSpace& ss) {
  BfProperties bf;
  const long long size = ss.size;

  std::vector<char> image(static_cast<size_t>(size), 0);
  for (long long s = 0; s < size; ++s) image[ss.sigma[static_cast<size_t>(s)]] = 1;
  bf.onto = std::all_of(image.begin(), image.end(), [](char c) { return c != 0; });

  // States on σ-cycles: walk each unvisited chain, mark the cycle part.
  bf.per_set.assign(static_cast<size_t>(size), 0);
  std::vector<int> color(static_cast<size_t>(size), 0);  // 0 new, 1 path, 2 done
  std::vector<long long> path;
  for (long long s = 0; s < size; ++s) {
    if (color[static_cast<size_t>(s)] != 0) continue;
    path.clear();
    long long c = s;
    while (color[static_cast<size_t>(c)] == 0) {
      color[static_cast<size_t>(c)] = 1;
      path.push_back(c);
      c = ss.sigma[static_cast<size_t>(c)];
    }
    if (color[static_cast<size_t>(c)] == 1) {
      // Found a new cycle; everything from c onwards in the path is on it.
      bool in_cycle = false;
      for (long long q : path) {
        if (q == c) in_cycle = true;
        if (in_cycle) bf.per_set[static_cast<size_t>(q)] = 1;
      }
    }
    for (long long q : path) color[static_cast<size_t>(q)] = 2;
  }
  bf.per_dense = std::all_of(bf.per_set.begin(), bf.per_set.end(),
                             [](char c) { return c != 0; });

  // Transitivity over singleton opens: from every state the forward orbit
  // at steps >= 1 must cover the whole space.
  bf.transitive = true;
  std::vector<long long> stamp(static_cast<size_t>(size), -1);
  for (long long s = 0; s < size && bf.transitive; ++s) {
    long long c = ss.sigma[static_cast<size_t>(s)];
    long long covered = 0;
    while (stamp[static_cast<size_t>(c)] != s) {
      stamp[static_cast<size_t>(c)] = s;
      ++covered;
      c = ss.sigma[static_cast<size_t>(c)];
    }
    if (covered != size) bf.transitive = false;
  }
  return bf;
}

BfProperties bf_properties(const System& sys) {
  return bf_properties(StateSpace::build(sys));
}

std::pair<bool, bool> bf_prox_asym(const StateSpace& ss, long long x, long long y) {
  if (x < 0 || x >= ss.size || y < 0 || y >= ss.size)
    throw std::out_of_range("state outside the space");
  long long a = x, b = y;
  for (long long step = 1; step <= ss.size; ++step) {
    a = ss.sigma[static_cast<size_t>(a)];
    b = ss.sigma[static_cast<size_t>(b)];
    // Equality propagates forward, so one hit settles both relations.
    if (a == b) return {true, true};
  }
  return {false, false};
}

std::pair<bool, bool> bf_prox_asym(const System& sys, long long x, long long y) {
  return bf_prox_asym(StateSpace::build(sys), x, y);
}

SweepReport sweep_equivalence(int n, const RingSpec& ring_spec) {
  if (n < 2) throw std::invalid_argument("sweep needs n >= 2");
  Ring ring(ring_spec);
  const int card = ring.cardinality();
  long long total = ipow(n, n) * ipow(card, n);
  if (total > kSweepBudget || ipow(card, n) > kStateGuard)
    throw BudgetExceeded("sweep matrix too large");

  SweepReport report;
  auto violation = [&](const std::string& what, const std::vector<Index>& phi,
                       const std::vector<Elem>& w) {
    if (report.violations.size() >= 16) return;
    std::string s = what + " phi=[";
    for (size_t i = 0; i < phi.size(); ++i)
      s += (i ? "," : "") + std::to_string(phi[i]);
    s += "] w=[";
    for (size_t i = 0; i < w.size(); ++i)
      s += (i ? "," : "") + std::to_string(w[i].v);
    report.violations.push_back(s + "]");
  };

  std::vector<Index> phi(n, 0);
  std::vector<Elem> w(n, Elem{0});
  const long long phis = ipow(n, n), ws = ipow(card, n);
  for (long long pi = 0; pi < phis; ++pi) {
    long long rest = pi;
    for (int i = 0; i < n; ++i) {
      phi[i] = rest % n;
      rest /= n;
    }
    for (long long wi = 0; wi < ws; ++wi) {
      rest = wi;
      for (int i = 0; i < n; ++i) {
        w[i] = Elem{static_cast<int>(rest % card)};
        rest /= card;
      }
      System sys(ring, FiniteIndexModel{phi}, FiniteWeightModel{w});
      StateSpace ss = StateSpace::build(sys);
      BfProperties bf = bf_properties(ss);
      bool cond = classify_onto_dpp(sys).onto.status == Status::Yes;
      if (bf.onto != cond || bf.per_dense != cond)
        violation("onto/per-dense/classifier mismatch", phi, w);
      if (bf.onto) ++report.onto_count;
      if (ss.size > 1 && bf.transitive) violation("transitive system", phi, w);
      if (classify_sensitive(sys).status != Status::No)
        violation("sensitivity verdict not No", phi, w);
      if (classify_li_yorke(sys).status != Status::No)
        violation("Li-Yorke verdict not No", phi, w);
      for (long long x = 0; x < ss.size; ++x)
        for (long long y = x; y < ss.size; ++y) {
          auto [prox, asym] = bf_prox_asym(ss, x, y);
          if (prox != asym) violation("proximal != asymptotic", phi, w);
        }
      ++report.systems;
    }
  }
  return report;
}

}  // namespace wgs
