#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "wgs/dynamics.hpp"
#include "wgs/witness.hpp"

using namespace wgs;
using namespace wgs::testing;

TEST_SUITE_BEGIN("dynamics");

TEST_CASE("set descriptors") {
  SetDescriptor fin = SetDescriptor::finite({3, 1, 3});
  CHECK(fin.contains(1));
  CHECK(fin.contains(3));
  CHECK_FALSE(fin.contains(2));

  // Prefix codes of 0^ω are the powers of two from 2 upwards.
  SetDescriptor zeros = SetDescriptor::branch({}, {0});
  CHECK(zeros.contains(2));
  CHECK(zeros.contains(4));
  CHECK(zeros.contains(8));
  CHECK_FALSE(zeros.contains(3));
  CHECK_FALSE(zeros.contains(1));
  CHECK_FALSE(zeros.contains(0));

  SetDescriptor ones = SetDescriptor::branch({}, {1});
  CHECK(ones.contains(3));
  CHECK(ones.contains(7));
  CHECK_FALSE(ones.contains(2));

  CHECK_FALSE(same_branch_sequence(zeros, ones));
  CHECK(same_branch_sequence(SetDescriptor::branch({0}, {0}),
                             SetDescriptor::branch({}, {0, 0})));
  CHECK(branch_common_prefix(zeros, ones) == 0);
  CHECK(branch_common_prefix(zeros, SetDescriptor::branch({}, {0, 1})) == 1);
}

TEST_CASE("triangular indicator support") {
  System shift = full_shift_z2();
  Config x = Config::triangular(shift, 0, SetDescriptor::finite({0, 1, 2, 3}));
  std::set<Index> support;
  for (Index a = 0; a < 16; ++a)
    if (config_eval(shift, x, a) == Elem{1}) support.insert(a);
  CHECK(support == std::set<Index>{0, 1, 3, 6});

  System fin = make_finite(Ring::zmod(2), {1, 2, 0}, {1, 1, 1});
  CHECK_THROWS_AS(Config::triangular(fin, 0, SetDescriptor::finite({0})),
                  std::invalid_argument);
}

TEST_CASE("finite support evaluation") {
  System shift = make_cofinite(Ring::zmod(3), {}, 1, {}, 1);
  Config x = Config::finite_support(shift, {{5, {2}}});
  CHECK(config_eval(shift, x, 7) == Elem{0});
  CHECK(config_eval(shift, x, 5) == Elem{2});
  CHECK_THROWS_AS(Config::finite_support(shift, {{1, {1}}, {1, {2}}}),
                  std::invalid_argument);
}

TEST_CASE("orbit-bumped evaluation") {
  System shift = full_shift_z2();
  Config zero = Config::finite_support(shift, {});
  Config z = Config::orbit_bumped(shift, zero, 0, 3);
  CHECK(config_eval(shift, z, 4) == Elem{1});
  CHECK(config_eval(shift, z, 2) == Elem{0});
}

TEST_CASE("weight products") {
  System cx = counterexample_z4();
  CHECK(weight_product(cx, 0, 0) == Elem{1});
  CHECK(weight_product(cx, 0, 1) == Elem{2});
  CHECK(weight_product(cx, 0, 2) == Elem{0});
  CHECK(weight_product(cx, 9, 2) == Elem{0});

  System doubled = make_cofinite(Ring::zmod(3), {}, 1, {}, 2);
  CHECK(weight_product(doubled, 0, 2) == Elem{1});
}

TEST_CASE("closed-form iterates") {
  System shift = full_shift_z2();
  Config x = Config::finite_support(shift, {{4, {1}}, {6, {1}}});
  for (long long n = 0; n <= 8; ++n)
    for (Index a = 0; a < 10; ++a)
      CHECK(iterate_coord(shift, x, n, a) == config_eval(shift, x, a + n));

  System cx = counterexample_z4();
  Config y = Config::finite_support(cx, {{0, {1}}, {2, {3}}, {5, {2}}});
  for (Index a = 0; a < 10; ++a)
    CHECK(iterate_coord(cx, y, 2, a) == Elem{0});

  System fin = make_finite(Ring::zmod(3), {1, 0}, {1, 2});
  Config v = Config::finite_support(fin, {{0, {1}}, {1, {1}}});
  CHECK(iterate_coord(fin, v, 1, 1) == Elem{2});
}

TEST_CASE("apply_shift by preimage enumeration") {
  System fin = make_finite(Ring::zmod(3), {1, 0}, {1, 2});
  Config x = Config::finite_support(fin, {{0, {2}}, {1, {1}}});
  Config y = apply_shift(fin, x);
  CHECK(config_eval(fin, y, 0) == Elem{1});
  CHECK(config_eval(fin, y, 1) == Elem{1});

  // A zero weight kills the coordinate regardless of x.
  System zw = make_finite(Ring::zmod(3), {1, 0}, {0, 1});
  Config z = apply_shift(zw, Config::finite_support(zw, {{0, {2}}, {1, {2}}}));
  CHECK(config_eval(zw, z, 0) == Elem{0});
  CHECK(config_eval(zw, z, 1) == Elem{2});

  System shift = full_shift_z2();
  Config ind3 = Config::finite_support(shift, {{3, {1}}});
  Config shifted = apply_shift(shift, ind3);
  CHECK(config_eval(shift, shifted, 2) == Elem{1});
  CHECK(config_eval(shift, shifted, 3) == Elem{0});
}

TEST_CASE("agreement on entourages") {
  System shift = full_shift_z2();
  Config e = Config::triangular(shift, 0, SetDescriptor::finite({0, 2, 5}));
  Config f = Config::triangular(shift, 0, SetDescriptor::finite({2, 5}));
  CHECK(agree_at(shift, e, f, 0, {}));  // the empty entourage is everything
  CHECK(agree_at(shift, e, e, 7, std::vector<Index>{0, 1, 2}));
  // 0 lies in E \ F, so the configurations differ at nu already at time 0.
  CHECK_FALSE(agree_at(shift, e, f, 0, std::vector<Index>{0}));

  System cx = counterexample_z4();
  Config a = Config::finite_support(cx, {{0, {1}}});
  Config b = Config::finite_support(cx, {{1, {3}}});
  ScanTimes st = scan_times(cx, a, b, std::vector<Index>{0, 3}, 12);
  for (long long t : st.agree) CHECK(t >= 1);
  // Beyond the first step every weight product vanishes, so all later times
  // agree on any coordinate set.
  for (long long t = 2; t <= 12; ++t)
    CHECK(std::find(st.agree.begin(), st.agree.end(), t) != st.agree.end());
}

TEST_CASE("oracle equivalence: closed form vs repeated shifting") {
  std::mt19937 rng(7);
  for (const System& sys : zoo()) {
    const Ring& ring = sys.ring();
    std::uniform_int_distribution<int> val(0, ring.cardinality() - 1);
    Index lo = sys.kind() == ModelKind::IntegerShift ? -8 : 0;
    Index hi = sys.kind() == ModelKind::Finite ? sys.table_hi() : 12;
    std::uniform_int_distribution<Index> idx(lo, hi - 1);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::pair<Index, Elem>> pairs;
      for (int i = 0; i < 3; ++i) pairs.emplace_back(idx(rng), Elem{val(rng)});
      std::sort(pairs.begin(), pairs.end());
      pairs.erase(std::unique(pairs.begin(), pairs.end(),
                              [](auto& a, auto& b) { return a.first == b.first; }),
                  pairs.end());
      Config x = Config::finite_support(sys, pairs);
      Config cur = x;
      for (long long n = 0; n <= 20; ++n) {
        for (Index a = lo; a < hi; ++a)
          CHECK(iterate_coord(sys, x, n, a) == config_eval(sys, cur, a));
        cur = apply_shift(sys, cur);
      }
    }
  }
}

TEST_CASE("weight product shortcuts match the direct product") {
  for (const System& sys : zoo()) {
    const Ring& ring = sys.ring();
    for (Index a : candidate_indices(sys)) {
      if (!sys.contains(a)) continue;
      Elem direct = ring.one();
      Index c = a;
      for (long long n = 0; n <= 200; ++n) {
        CHECK(weight_product(sys, a, n) == direct);
        direct = ring.mul(direct, sys.weight(c));
        c = sys.phi(c);
      }
    }
  }
}

TEST_CASE("cocycle law for weight products") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long long> steps(0, 50);
  for (const System& sys : zoo()) {
    for (Index a : candidate_indices(sys)) {
      if (!sys.contains(a)) continue;
      for (int trial = 0; trial < 8; ++trial) {
        long long n = steps(rng), m = steps(rng);
        Elem lhs = weight_product(sys, a, n + m);
        Elem rhs = sys.ring().mul(weight_product(sys, a, n),
                                  weight_product(sys, phi_apply(sys, a, n), m));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("triangular support map is injective for escaping points") {
  for (const System& sys : zoo()) {
    for (Index a : candidate_indices(sys)) {
      if (!sys.contains(a)) continue;
      if (classify_orbit(sys, a).kind != OrbitClass::Kind::NonQuasiPeriodic)
        continue;
      std::set<Index> hits;
      for (long long p = 0; p <= 100; ++p)
        CHECK(hits.insert(phi_apply(sys, a, p * (p + 1) / 2)).second);
    }
  }
}

TEST_CASE("orbit bump differs from base exactly on the orbit tail") {
  System shift = full_shift_z2();
  Config base = Config::finite_support(shift, {{4, {1}}, {9, {1}}});
  Config z = Config::orbit_bumped(shift, base, 2, 3);
  // Tail {φ^m(2) : m >= 3} = {5, 6, 7, ...}.
  for (Index a = 0; a < 40; ++a) {
    bool differs = !(config_eval(shift, z, a) == config_eval(shift, base, a));
    CHECK(differs == (a >= 5));
  }
}

TEST_CASE("branch families are almost disjoint") {
  auto family = branch_family(10);
  REQUIRE(family.size() == 10);
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j) {
      CHECK_FALSE(same_branch_sequence(family[i], family[j]));
      long long common = branch_common_prefix(family[i], family[j]);
      long long shared = 0;
      for (long long m = 0; m < (1 << 20); ++m)
        if (family[i].contains(m) && family[j].contains(m)) ++shared;
      CHECK(shared <= common);
    }
}

TEST_SUITE_END();
