#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "wgs/system.hpp"

using namespace wgs;
using namespace wgs::testing;

TEST_SUITE_BEGIN("system");

TEST_CASE("model validation") {
  Ring z3 = Ring::zmod(3);
  CHECK_THROWS_WITH_AS(make_finite(z3, {0}, {1}), doctest::Contains("size >= 2"),
                       std::invalid_argument);
  CHECK_THROWS_AS(make_finite(z3, {0, 2}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(make_finite(z3, {0, 5}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(make_finite(z3, {0, 1}, {1, 7}), std::invalid_argument);
  CHECK_THROWS_AS(make_integer(z3, 0, 2, {0, 1}, 0, 0, {1, 1}, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(System(z3, CofiniteShiftIndexModel{{1}, 1},
                         FiniteWeightModel{elems({1, 1})}),
                  std::invalid_argument);
}

TEST_CASE("phi_apply on the three models") {
  System cyc = make_finite(Ring::zmod(2), {1, 2, 0}, {1, 1, 1});
  CHECK(phi_apply(cyc, 0, 3) == 0);
  CHECK(phi_apply(cyc, 0, 0) == 0);
  CHECK(phi_apply(cyc, 2, 4) == 0);

  System shift = full_shift_z2();
  CHECK(phi_apply(shift, 5, 7) == 12);

  System trans = make_integer(Ring::zmod(2), 0, 0, {}, -1, 0, {}, 1, 1);
  CHECK(phi_apply(trans, 0, 4) == -4);

  CHECK_THROWS_AS(phi_apply(cyc, 5, 1), std::out_of_range);
}

TEST_CASE("orbit classification") {
  System s1 = make_finite(Ring::zmod(2), {1, 1, 1}, {1, 1, 1});
  OrbitClass c1 = classify_orbit(s1, 0);
  CHECK(c1.kind == OrbitClass::Kind::QuasiPeriodic);
  CHECK(c1.preperiod == 1);
  CHECK(c1.period == 1);

  System s2 = make_cofinite(Ring::zmod(2), {1, 0}, 1, {}, 1);
  OrbitClass c2 = classify_orbit(s2, 0);
  CHECK(c2.kind == OrbitClass::Kind::Periodic);
  CHECK(c2.period == 2);
  OrbitClass c3 = classify_orbit(s2, 2);
  CHECK(c3.kind == OrbitClass::Kind::NonQuasiPeriodic);
  CHECK(c3.escape_step == 0);

  // Tail offset 0 turns every tail point into a fixed point.
  System s4 = make_cofinite(Ring::zmod(2), {3}, 0, {}, 1);
  CHECK(classify_orbit(s4, 3).kind == OrbitClass::Kind::Periodic);
  OrbitClass c5 = classify_orbit(s4, 0);
  CHECK(c5.kind == OrbitClass::Kind::QuasiPeriodic);
  CHECK(c5.period == 1);
}

TEST_CASE("classification agrees with naive simulation on the zoo") {
  for (const System& sys : zoo()) {
    for (Index a : candidate_indices(sys)) {
      if (!sys.contains(a)) continue;
      OrbitClass oc = classify_orbit(sys, a);
      // Replay 1000 steps watching for a repeat.
      std::set<Index> seen{a};
      Index c = a;
      bool repeat = false;
      long long repeat_at = -1;
      for (long long n = 1; n <= 1000 && !repeat; ++n) {
        c = sys.phi(c);
        repeat = !seen.insert(c).second;
        if (repeat) repeat_at = n;
      }
      if (oc.kind == OrbitClass::Kind::NonQuasiPeriodic) {
        CHECK_FALSE(repeat);
      } else {
        REQUIRE(repeat);
        CHECK(repeat_at == oc.preperiod + oc.period);
        CHECK(phi_apply(sys, a, oc.preperiod) ==
              phi_apply(sys, a, oc.preperiod + oc.period));
        if (oc.kind == OrbitClass::Kind::Periodic)
          CHECK(phi_apply(sys, a, oc.period) == a);
      }
      if (std::holds_alternative<FiniteIndexModel>(sys.index_model()))
        CHECK(oc.kind != OrbitClass::Kind::NonQuasiPeriodic);
    }
  }
}

TEST_CASE("orbit weight profiles") {
  System cx = counterexample_z4();
  WeightProfile p1 = orbit_weight_profile(cx, 1);
  CHECK(p1.kind == WeightProfileKind::NonzeroNonUnit);
  CHECK(p1.first == 0);

  System shift = full_shift_z2();
  CHECK(orbit_weight_profile(shift, 0).kind == WeightProfileKind::AllUnits);
  CHECK(orbit_weight_profile(shift, 17).kind == WeightProfileKind::AllUnits);

  System z3 = make_cofinite(Ring::zmod(3), {}, 1, {1, 0}, 2);
  WeightProfile p2 = orbit_weight_profile(z3, 0);
  CHECK(p2.kind == WeightProfileKind::HitsZero);
  CHECK(p2.first == 1);

  // A zero later on the orbit wins over an earlier nonzero non-unit.
  System mixed = make_cofinite(Ring::zmod(4), {}, 1, {2, 1, 0}, 1);
  WeightProfile p3 = orbit_weight_profile(mixed, 0);
  CHECK(p3.kind == WeightProfileKind::HitsZero);
  CHECK(p3.first == 2);
}

TEST_CASE("injectivity analysis") {
  CHECK(is_injective(make_finite(Ring::zmod(2), {1, 2, 0}, {1, 1, 1})).injective);
  auto dup = is_injective(make_finite(Ring::zmod(2), {1, 1, 0}, {1, 1, 1}));
  REQUIRE_FALSE(dup.injective);
  CHECK(*dup.collision == std::pair<Index, Index>{0, 1});

  // φ(0) = 2 collides with the tail image of 1.
  auto tail = is_injective(make_cofinite(Ring::zmod(2), {2}, 1, {}, 1));
  REQUIRE_FALSE(tail.injective);
  CHECK(*tail.collision == std::pair<Index, Index>{0, 1});

  CHECK(is_injective(make_cofinite(Ring::zmod(2), {1, 0}, 1, {}, 1)).injective);

  // Verify collisions returned on the zoo really collide.
  for (const System& sys : zoo()) {
    auto r = is_injective(sys);
    if (!r.injective) {
      auto [a, b] = *r.collision;
      CHECK(a != b);
      CHECK(sys.phi(a) == sys.phi(b));
    }
  }
}

TEST_CASE("finite injectivity agrees with a pairwise scan") {
  std::vector<std::vector<Index>> phis = {
      {1, 2, 0}, {1, 1, 0}, {0, 0, 0}, {2, 1, 0}, {1, 2, 1}, {0, 1, 2}};
  for (const auto& phi : phis) {
    System sys = make_finite(Ring::zmod(2), phi, {1, 1, 1});
    bool collision = false;
    for (size_t i = 0; i < phi.size(); ++i)
      for (size_t j = i + 1; j < phi.size(); ++j)
        collision = collision || phi[i] == phi[j];
    CHECK(is_injective(sys).injective == !collision);
  }
}

TEST_CASE("periodic point existence") {
  auto fin = periodic_points_exist(make_finite(Ring::zmod(2), {1, 1, 1}, {1, 1, 1}));
  CHECK(fin.exists);  // a finite functional graph always has a cycle

  CHECK_FALSE(periodic_points_exist(full_shift_z2()).exists);

  auto cyc = periodic_points_exist(make_cofinite(Ring::zmod(2), {1, 0}, 1, {}, 1));
  REQUIRE(cyc.exists);
  CHECK(*cyc.witness == 0);

  // With tail offset 0 the tail representative is a fixed point.
  CHECK(periodic_points_exist(make_cofinite(Ring::zmod(2), {1}, 0, {}, 1)).exists);
}

TEST_CASE("find_link basics") {
  System shift = full_shift_z2();
  LinkResult self = find_link(shift, 0, 0, 100);
  REQUIRE(self.status == LinkResult::Status::Found);
  CHECK(self.m == 1);
  CHECK(self.n == 1);

  LinkResult l = find_link(shift, 0, 5, 100);
  REQUIRE(l.status == LinkResult::Status::Found);
  CHECK(l.m == 6);
  CHECK(l.n == 1);

  System two_cycles = make_finite(Ring::zmod(2), {1, 0, 3, 2}, {1, 1, 1, 1});
  CHECK(find_link(two_cycles, 0, 2, 100).status ==
        LinkResult::Status::ProvablyDisjoint);

  CHECK(find_link(shift, 0, 5, 3).status == LinkResult::Status::BoundExhausted);
}

TEST_CASE("find_link results verified by iteration over the zoo") {
  for (const System& sys : zoo()) {
    auto cands = candidate_indices(sys);
    for (Index nu : cands)
      for (Index a : cands) {
        if (!sys.contains(nu) || !sys.contains(a)) continue;
        LinkResult l = find_link(sys, nu, a, 500);
        if (l.status != LinkResult::Status::Found) continue;
        CHECK(l.m >= 1);
        CHECK(l.n >= 1);
        CHECK(phi_apply(sys, nu, l.m) == phi_apply(sys, a, l.n));
        // Lexicographic minimality: no earlier m works, and for the found m
        // no smaller n works.
        OrbitShape sa = orbit_shape(sys, a);
        for (long long m = 1; m < l.m; ++m) {
          auto n = sa.position_of(phi_apply(sys, nu, m), 1);
          CHECK((!n || *n > 500));
        }
        auto least = sa.position_of(phi_apply(sys, nu, l.m), 1);
        REQUIRE(least);
        CHECK(*least == l.n);
      }
  }
}

TEST_CASE("find_link matches a brute-force double scan") {
  const long long kCap = 60;
  for (const System& sys : zoo()) {
    auto cands = candidate_indices(sys);
    for (Index nu : cands)
      for (Index a : cands) {
        if (!sys.contains(nu) || !sys.contains(a)) continue;
        // Brute force: lexicographically least (m, n) with both <= cap.
        std::optional<std::pair<long long, long long>> expect;
        for (long long m = 1; m <= kCap && !expect; ++m) {
          Index p = phi_apply(sys, nu, m);
          for (long long n = 1; n <= kCap; ++n)
            if (phi_apply(sys, a, n) == p) {
              expect = {m, n};
              break;
            }
        }
        LinkResult got = find_link(sys, nu, a, kCap);
        if (expect) {
          REQUIRE(got.status == LinkResult::Status::Found);
          CHECK(got.m == expect->first);
          CHECK(got.n == expect->second);
        } else {
          CHECK(got.status != LinkResult::Status::Found);
        }
      }
  }
}

TEST_CASE("position_of matches a naive forward scan") {
  for (const System& sys : zoo()) {
    for (Index a : candidate_indices(sys)) {
      if (!sys.contains(a)) continue;
      OrbitShape sh = orbit_shape(sys, a);
      for (long long k : {0ll, 1ll, 5ll, 23ll, 87ll}) {
        Index target = phi_apply(sys, a, k);
        for (long long from : {0ll, 1ll, 4ll, 50ll}) {
          std::optional<long long> naive;
          for (long long n = from; n <= 200 && !naive; ++n)
            if (phi_apply(sys, a, n) == target) naive = n;
          auto got = sh.position_of(target, from);
          if (naive) {
            REQUIRE(got);
            CHECK(*got == *naive);
          } else {
            CHECK_FALSE(got);
          }
        }
      }
    }
  }
}

TEST_CASE("backward walk inverts phi") {
  System sys = make_integer(Ring::zmod(3), -1, 2, {1, 2, 3}, 2, -1, {1, 2, 1}, 2, 1);
  REQUIRE(is_injective(sys).injective);
  for (Index a : {Index{-1}, Index{0}, Index{7}})
    for (long long q = 1; q <= 6; ++q) {
      Index b = backward_walk(sys, a, q);
      CHECK(phi_apply(sys, b, q) == a);
    }
}

TEST_SUITE_END();
