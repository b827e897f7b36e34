#include "wgs/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace wgs {

namespace {

constexpr int kMaxCardinality = 4096;

bool is_prime(int n) {
  if (n < 2) return false;
  for (int q = 2; static_cast<long long>(q) * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

// Polynomials over Z_p as little-endian coefficient vectors without
// trailing zeros; the zero polynomial is the empty vector.
using Poly = std::vector<int>;

Poly trimmed(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return trimmed(out);
}

// Remainder of a by monic b.
Poly poly_rem(Poly a, const Poly& b, int p) {
  a = trimmed(std::move(a));
  while (a.size() >= b.size()) {
    int c = a.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i)
      a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    a = trimmed(std::move(a));
  }
  return a;
}

Poly poly_quot(Poly a, const Poly& b, int p) {
  a = trimmed(std::move(a));
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size()) {
    int c = a.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i)
      a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    a = trimmed(std::move(a));
  }
  return trimmed(std::move(q));
}

std::string poly_str(const Poly& f) {
  if (f.empty()) return "0";
  std::string s;
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += std::to_string(f[i]);
    } else {
      if (f[i] != 1) s += std::to_string(f[i]);
      s += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

// Smallest-degree monic factor of monic f (degree >= 2), or empty if f is
// irreducible. Exhaustive over all monic candidates up to degree deg(f)/2.
Poly find_factor(const Poly& f, int p) {
  int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= k; ++d) {
    long long combos = 1;
    for (int i = 0; i < d; ++i) combos *= p;
    for (long long c = 0; c < combos; ++c) {
      Poly g(d + 1, 0);
      long long rest = c;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return g;
    }
  }
  return {};
}

}  // namespace

RingSpec RingSpec::zmod(int m) {
  RingSpec s;
  s.kind = Kind::Zmod;
  s.modulus = m;
  return s;
}

RingSpec RingSpec::gf(int p, int k, std::vector<int> irreducible) {
  RingSpec s;
  s.kind = Kind::Gf;
  s.p = p;
  s.k = k;
  s.irreducible = std::move(irreducible);
  return s;
}

struct Ring::Data {
  RingSpec spec;
  int card = 0;
  bool field = false;
  std::vector<int> inv;        // -1 for non-units
  std::vector<int> exp, log;   // gf only
  int unit_count = 0;

  Elem mul(Elem a, Elem b) const {
    if (spec.kind == RingSpec::Kind::Zmod)
      return {a.v * b.v % card};
    if (a.v == 0 || b.v == 0) return {0};
    return {exp[(log[a.v] + log[b.v]) % (card - 1)]};
  }

  Elem add(Elem a, Elem b) const {
    if (spec.kind == RingSpec::Kind::Zmod)
      return {(a.v + b.v) % card};
    int p = spec.p, out = 0, scale = 1;
    int x = a.v, y = b.v;
    for (int i = 0; i < spec.k; ++i) {
      out += (x % p + y % p) % p * scale;
      x /= p;
      y /= p;
      scale *= p;
    }
    return {out};
  }

  Elem neg(Elem a) const {
    if (spec.kind == RingSpec::Kind::Zmod)
      return {(card - a.v) % card};
    int p = spec.p, out = 0, scale = 1, x = a.v;
    for (int i = 0; i < spec.k; ++i) {
      out += (p - x % p) % p * scale;
      x /= p;
      scale *= p;
    }
    return {out};
  }
};

Ring::Ring(const RingSpec& spec) {
  auto d = std::make_shared<Data>();
  d->spec = spec;
  if (spec.kind == RingSpec::Kind::Zmod) {
    if (spec.modulus < 2)
      throw std::invalid_argument("zmod: modulus >= 2 required");
    if (spec.modulus > kMaxCardinality)
      throw std::invalid_argument("zmod: cardinality above 4096");
    d->card = spec.modulus;
    d->field = is_prime(spec.modulus);
  } else {
    if (!is_prime(spec.p))
      throw std::invalid_argument("gf: characteristic " +
                                  std::to_string(spec.p) + " is not prime");
    if (spec.k < 1) throw std::invalid_argument("gf: degree >= 1 required");
    long long card = 1;
    for (int i = 0; i < spec.k; ++i) {
      card *= spec.p;
      if (card > kMaxCardinality)
        throw std::invalid_argument("gf: cardinality above 4096");
    }
    const Poly& f = spec.irreducible;
    if (static_cast<int>(f.size()) != spec.k + 1 || f.back() != 1)
      throw std::invalid_argument("gf: polynomial must be monic of degree " +
                                  std::to_string(spec.k));
    for (int c : f)
      if (c < 0 || c >= spec.p)
        throw std::invalid_argument("gf: coefficient outside [0, p)");
    if (Poly g = find_factor(f, spec.p); !g.empty()) {
      Poly q = poly_quot(f, g, spec.p);
      throw std::invalid_argument("gf: reducible: (" + poly_str(g) + ")(" +
                                  poly_str(q) + ")");
    }
    d->card = static_cast<int>(card);
    d->field = true;

    // Multiplication via a generator of the (cyclic) multiplicative group.
    auto decode = [&](int idx) {
      Poly g;
      for (int i = 0; i < spec.k; ++i) {
        g.push_back(idx % spec.p);
        idx /= spec.p;
      }
      return trimmed(std::move(g));
    };
    auto encode = [&](const Poly& g) {
      int idx = 0, scale = 1;
      for (int i = 0; i < spec.k; ++i) {
        idx += (i < static_cast<int>(g.size()) ? g[i] : 0) * scale;
        scale *= spec.p;
      }
      return idx;
    };
    auto mul_poly = [&](int a, int b) {
      return encode(poly_rem(poly_mul(decode(a), decode(b), spec.p), f, spec.p));
    };
    int generator = 1;
    for (int cand = 2; cand < d->card; ++cand) {
      int acc = cand, order = 1;
      while (acc != 1) {
        acc = mul_poly(acc, cand);
        ++order;
      }
      if (order == d->card - 1) {
        generator = cand;
        break;
      }
    }
    d->exp.assign(d->card - 1, 1);
    d->log.assign(d->card, 0);
    for (int i = 1; i < d->card - 1; ++i)
      d->exp[i] = mul_poly(d->exp[i - 1], generator);
    for (int i = 0; i < d->card - 1; ++i) d->log[d->exp[i]] = i;
  }

  // Exhaustive unit scan; also fixes the inverse table.
  d->inv.assign(d->card, -1);
  for (int a = 0; a < d->card; ++a)
    for (int b = 0; b < d->card; ++b)
      if (d->mul({a}, {b}).v == 1) {
        d->inv[a] = b;
        break;
      }
  d->unit_count =
      static_cast<int>(std::count_if(d->inv.begin(), d->inv.end(),
                                     [](int i) { return i >= 0; }));
  d_ = std::move(d);
}

const RingSpec& Ring::spec() const { return d_->spec; }
int Ring::cardinality() const { return d_->card; }
bool Ring::is_field() const { return d_->field; }
int Ring::unit_count() const { return d_->unit_count; }

void Ring::check(Elem a) const {
  if (a.v < 0 || a.v >= d_->card)
    throw std::out_of_range("ring element index " + std::to_string(a.v) +
                            " outside [0, " + std::to_string(d_->card) + ")");
}

Elem Ring::element(int index) const {
  Elem e{index};
  check(e);
  return e;
}

Elem Ring::add(Elem a, Elem b) const {
  check(a);
  check(b);
  return d_->add(a, b);
}

Elem Ring::neg(Elem a) const {
  check(a);
  return d_->neg(a);
}

Elem Ring::mul(Elem a, Elem b) const {
  check(a);
  check(b);
  return d_->mul(a, b);
}

Elem Ring::pow(Elem a, long long e) const {
  check(a);
  Elem acc = one(), base = a;
  while (e > 0) {
    if (e & 1) acc = d_->mul(acc, base);
    base = d_->mul(base, base);
    e >>= 1;
  }
  return acc;
}

bool Ring::is_unit(Elem a) const {
  check(a);
  return d_->inv[a.v] >= 0;
}

Elem Ring::inv(Elem a) const {
  check(a);
  if (d_->inv[a.v] < 0)
    throw NotAUnit("element " + std::to_string(a.v) + " is not a unit");
  return {d_->inv[a.v]};
}

std::string Ring::show(Elem a) const {
  check(a);
  if (d_->spec.kind == RingSpec::Kind::Zmod) return std::to_string(a.v);
  Poly g;
  int x = a.v;
  for (int i = 0; i < d_->spec.k; ++i) {
    g.push_back(x % d_->spec.p);
    x /= d_->spec.p;
  }
  return std::to_string(a.v) + " (" + poly_str(trimmed(std::move(g))) + ")";
}

}  // namespace wgs
