#pragma once

#include <cstdint>
#include <string>

#include "qchab/error.hpp"

namespace qchab {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i64 = std::int64_t;

// Residues of Z/p^N with p an odd prime. All arithmetic stays at the fixed
// modulus p^N; nothing here tracks relative precision.
struct ZpRing {
  u64 p = 0;
  unsigned n = 0;
  u64 mod = 0;  // p^n

  ZpRing() = default;
  ZpRing(u64 prime, unsigned prec);

  bool operator==(const ZpRing& o) const { return p == o.p && n == o.n; }
  bool operator!=(const ZpRing& o) const { return !(*this == o); }
};

inline bool is_prime_u64(u64 m) {
  if (m < 2) return false;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

inline ZpRing::ZpRing(u64 prime, unsigned prec) : p(prime), n(prec) {
  require(prime >= 3, Errc::invariant_violation, "prime must be >= 3");
  require(is_prime_u64(prime), Errc::invariant_violation, "p is not prime");
  require(prec >= 1, Errc::invariant_violation, "precision must be >= 1");
  mod = 1;
  for (unsigned i = 0; i < prec; ++i) {
    require(mod <= (u64(1) << 62) / prime, Errc::invariant_violation, "p^N exceeds 2^62");
    mod *= prime;
  }
}

struct PadicInt {
  ZpRing ring;
  u64 v = 0;  // residue in [0, ring.mod)

  PadicInt() = default;
  PadicInt(const ZpRing& r, i64 x) : ring(r) {
    i64 m = static_cast<i64>(r.mod);
    i64 t = x % m;
    if (t < 0) t += m;
    v = static_cast<u64>(t);
  }

  static PadicInt zero(const ZpRing& r) { return PadicInt(r, 0); }
  static PadicInt one(const ZpRing& r) { return PadicInt(r, 1); }

  bool is_zero() const { return v == 0; }

  PadicInt operator+(const PadicInt& o) const {
    check(o);
    u64 s = v + o.v;
    if (s >= ring.mod) s -= ring.mod;
    return with(s);
  }
  PadicInt operator-(const PadicInt& o) const {
    check(o);
    u64 s = v >= o.v ? v - o.v : v + ring.mod - o.v;
    return with(s);
  }
  PadicInt operator-() const { return with(v == 0 ? 0 : ring.mod - v); }
  PadicInt operator*(const PadicInt& o) const {
    check(o);
    return with(static_cast<u64>((u128)v * o.v % ring.mod));
  }
  bool operator==(const PadicInt& o) const { return ring == o.ring && v == o.v; }
  bool operator!=(const PadicInt& o) const { return !(*this == o); }

  // p-adic valuation in {0,...,n-1}, or n as the ">= N" sentinel for 0.
  unsigned valuation() const {
    if (v == 0) return ring.n;
    u64 x = v;
    unsigned val = 0;
    while (x % ring.p == 0) {
      x /= ring.p;
      ++val;
    }
    return val;
  }

  bool is_unit() const { return v % ring.p != 0; }

  PadicInt inv() const {
    require(is_unit(), Errc::non_unit, "inv of non-unit residue");
    // extended gcd against p^N
    i64 m = static_cast<i64>(ring.mod);
    i64 a = static_cast<i64>(v), b = m, x0 = 1, x1 = 0;
    while (b != 0) {
      i64 q = a / b;
      i64 t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    i64 r = x0 % m;
    if (r < 0) r += m;
    return with(static_cast<u64>(r));
  }

  PadicInt pow(u64 k) const {
    PadicInt acc = one(ring), base = *this;
    while (k) {
      if (k & 1) acc = acc * base;
      base = base * base;
      k >>= 1;
    }
    return acc;
  }

  // Exact division by p^a; the residue must be divisible. The result is the
  // quotient at the same modulus (callers track the accuracy loss).
  PadicInt divide_exact_p(unsigned a) const {
    u64 pa = 1;
    for (unsigned i = 0; i < a; ++i) pa *= ring.p;
    require(v % pa == 0, Errc::internal, "divide_exact_p: residue not divisible");
    return with(v / pa);
  }

  // Reduce to a smaller precision.
  PadicInt reduce(const ZpRing& target) const {
    require(target.p == ring.p && target.n <= ring.n, Errc::ring_mismatch, "bad reduce target");
    return PadicInt(target, static_cast<i64>(v % target.mod));
  }

  std::string str() const { return std::to_string(v); }

 private:
  PadicInt with(u64 nv) const {
    PadicInt r;
    r.ring = ring;
    r.v = nv;
    return r;
  }
  void check(const PadicInt& o) const {
    require(ring == o.ring, Errc::ring_mismatch, "PadicInt rings differ");
  }
};

// Divide by an arbitrary nonzero integer k = p^a * w: multiplies by w^{-1} and
// returns the power of p that remains to be cleared by the caller.
inline PadicInt divide_unit_part(const PadicInt& x, u64 k, unsigned* p_power_out) {
  require(k != 0, Errc::internal, "division by zero integer");
  unsigned a = 0;
  while (k % x.ring.p == 0) {
    k /= x.ring.p;
    ++a;
  }
  *p_power_out = a;
  return x * PadicInt(x.ring, static_cast<i64>(k % x.ring.mod)).inv();
}

}  // namespace qchab
