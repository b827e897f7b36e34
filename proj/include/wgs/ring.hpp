#pragma once

// Finite commutative rings with unity: residue rings Z_m and Galois fields
// GF(p^k) built from a monic irreducible polynomial over Z_p.
//
// Elements are canonically encoded as integers in [0, cardinality). For
// GF(p^k) the index packs the coefficient vector little-endian in base p,
// so index 0 is the zero element and index 1 the unity in every ring.
// Multiplication in GF uses exp/log tables over a generator of the
// multiplicative group; inverses and unit flags are precomputed for all
// rings by exhaustive scan (cardinality is capped at 4096).

#include <memory>
#include <string>
#include <vector>

#include "wgs/common.hpp"

namespace wgs {

struct Elem {
  int v = 0;
  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

struct RingSpec {
  enum class Kind { Zmod, Gf };
  Kind kind = Kind::Zmod;
  int modulus = 0;               // zmod: m >= 2
  int p = 0;                     // gf: prime characteristic
  int k = 0;                     // gf: extension degree >= 1
  std::vector<int> irreducible;  // gf: monic, degree k, little-endian

  static RingSpec zmod(int m);
  static RingSpec gf(int p, int k, std::vector<int> irreducible);
  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

class Ring {
 public:
  // Validates the description and precomputes tables. Throws
  // std::invalid_argument on a bad modulus, non-prime p, non-monic or
  // reducible polynomial (the message names the discovered factorization).
  explicit Ring(const RingSpec& spec);

  static Ring zmod(int m) { return Ring(RingSpec::zmod(m)); }
  static Ring gf(int p, int k, std::vector<int> irreducible) {
    return Ring(RingSpec::gf(p, k, std::move(irreducible)));
  }

  const RingSpec& spec() const;
  int cardinality() const;
  bool is_field() const;

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }
  Elem element(int index) const;  // range-checked

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, long long e) const;  // e >= 0; pow(a, 0) = 1

  bool is_unit(Elem a) const;
  Elem inv(Elem a) const;  // throws NotAUnit
  int unit_count() const;

  std::string show(Elem a) const;  // decimal index; gf adds the polynomial

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.spec() == b.spec();
  }

 private:
  struct Data;
  std::shared_ptr<const Data> d_;  // immutable, safe to share across threads
  void check(Elem a) const;
};

}  // namespace wgs
