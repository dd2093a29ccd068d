#include "qchab/local.hpp"

#include <algorithm>
#include <sstream>

namespace qchab {

namespace {

// ---- F_p[x] helpers (for irreducibility of the unramified polynomial) ----

using FpPolyV = std::vector<u64>;  // low-to-high, normalized (no zero lead)

void fp_norm(FpPolyV& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPolyV fp_mod(FpPolyV a, const FpPolyV& b, u64 p) {
  fp_norm(a);
  while (a.size() >= b.size() && !a.empty()) {
    u64 lead_inv = 1;
    {  // inverse of b.back() mod p
      u64 x = b.back() % p, r = 1, e = p - 2;
      while (e) {
        if (e & 1) r = (u128)r * x % p;
        x = (u128)x * x % p;
        e >>= 1;
      }
      lead_inv = r;
    }
    u64 c = (u128)a.back() * lead_inv % p;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      u64 sub = (u128)c * b[i] % p;
      a[shift + i] = (a[shift + i] + p - sub) % p;
    }
    fp_norm(a);
  }
  return a;
}

FpPolyV fp_mulmod(const FpPolyV& a, const FpPolyV& b, const FpPolyV& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  FpPolyV c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + (u128)a[i] * b[j]) % p;
  return fp_mod(std::move(c), m, p);
}

FpPolyV fp_powmod_xq(const FpPolyV& m, u64 p, u64 exp_p_power, const FpPolyV& start) {
  // start^(p^exp_p_power) mod m by repeated p-th powers
  FpPolyV r = start;
  for (u64 i = 0; i < exp_p_power; ++i) {
    FpPolyV acc = {1};
    FpPolyV base = r;
    u64 e = p;
    while (e) {
      if (e & 1) acc = fp_mulmod(acc, base, m, p);
      base = fp_mulmod(base, base, m, p);
      e >>= 1;
    }
    r = acc;
  }
  return r;
}

FpPolyV fp_gcd(FpPolyV a, FpPolyV b, u64 p) {
  fp_norm(a);
  fp_norm(b);
  while (!b.empty()) {
    FpPolyV r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool fp_irreducible(const FpPolyV& m, u64 p) {
  // x^(p^f) == x mod m, and gcd(x^(p^(f/l)) - x, m) trivial for primes l | f
  size_t f = m.size() - 1;
  if (f == 0) return false;
  if (f == 1) return true;
  FpPolyV x = {0, 1};
  FpPolyV xq = fp_powmod_xq(m, p, f, x);
  // xq must equal x mod m
  FpPolyV diff = xq;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = (diff[1] + p - 1) % p;
  fp_norm(diff);
  if (!diff.empty()) return false;
  for (size_t l = 2; l <= f; ++l) {
    if (f % l != 0) continue;
    bool lp = true;
    for (size_t d = 2; d * d <= l; ++d)
      if (l % d == 0) lp = false;
    if (!lp) continue;
    FpPolyV xe = fp_powmod_xq(m, p, f / l, x);
    FpPolyV d2 = xe;
    d2.resize(std::max<size_t>(d2.size(), 2), 0);
    d2[1] = (d2[1] + p - 1) % p;
    fp_norm(d2);
    FpPolyV g = fp_gcd(m, d2, p);
    if (g.size() > 1) return false;
  }
  return true;
}

// extended gcd in F_q = F_p[x]/(m): inverse of a
FpPolyV fq_inv(const FpPolyV& a_in, const FpPolyV& m, u64 p) {
  // extended Euclid on (a, m)
  FpPolyV r0 = m, r1 = a_in, s0 = {}, s1 = {1};
  fp_norm(r1);
  require(!r1.empty(), Errc::non_unit, "residue-field inverse of zero");
  auto scal = [&](const FpPolyV& a, u64 c) {
    FpPolyV r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = (u128)a[i] * c % p;
    fp_norm(r);
    return r;
  };
  auto sub = [&](const FpPolyV& a, const FpPolyV& b) {
    FpPolyV r = a;
    r.resize(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
    fp_norm(r);
    return r;
  };
  auto shift_mul = [&](const FpPolyV& a, const FpPolyV& q) {
    if (a.empty() || q.empty()) return FpPolyV{};
    FpPolyV r(a.size() + q.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < q.size(); ++j) r[i + j] = (r[i + j] + (u128)a[i] * q[j]) % p;
    fp_norm(r);
    return r;
  };
  while (!r1.empty()) {
    // divide r0 by r1
    FpPolyV q(r0.size() > r1.size() - 1 ? r0.size() - r1.size() + 1 : 1, 0);
    FpPolyV rem = r0;
    u64 li = 1;
    {
      u64 x = r1.back() % p, r = 1, e = p - 2;
      while (e) {
        if (e & 1) r = (u128)r * x % p;
        x = (u128)x * x % p;
        e >>= 1;
      }
      li = r;
    }
    while (rem.size() >= r1.size() && !rem.empty()) {
      u64 c = (u128)rem.back() * li % p;
      size_t sh = rem.size() - r1.size();
      if (sh < q.size()) q[sh] = (q[sh] + c) % p;
      for (size_t i = 0; i < r1.size(); ++i) {
        u64 s = (u128)c * r1[i] % p;
        rem[sh + i] = (rem[sh + i] + p - s) % p;
      }
      fp_norm(rem);
    }
    fp_norm(q);
    FpPolyV s2 = sub(s0, shift_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  require(r0.size() == 1, Errc::non_unit, "residue-field element not invertible");
  u64 c = r0[0];
  u64 ci;
  {
    u64 x = c % p, r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = (u128)r * x % p;
      x = (u128)x * x % p;
      e >>= 1;
    }
    ci = r;
  }
  return scal(s0, ci);
}

}  // namespace

// ---- LocalRing ----

LocalRing::LocalRing(u64 p, unsigned prec, unsigned e, unsigned f, std::vector<i64> unramified_poly,
                     std::vector<i64> eisenstein_poly)
    : zp_(p, prec), e_(e), f_(f) {
  require(e >= 1 && f >= 1, Errc::invariant_violation, "e,f must be >= 1");
  require(unramified_poly.size() == f, Errc::invariant_violation,
          "unramified polynomial must have degree f (tail coefficients)");
  require(eisenstein_poly.size() == e, Errc::invariant_violation,
          "Eisenstein polynomial must have degree e (tail coefficients)");
  q_ = 1;
  for (unsigned i = 0; i < f; ++i) {
    require(q_ <= (u64(1) << 40) / p, Errc::invariant_violation, "residue field too large");
    q_ *= p;
  }
  for (i64 c : unramified_poly) unram_.push_back(PadicInt(zp_, c));
  for (i64 c : eisenstein_poly) eis_.push_back(PadicInt(zp_, c));

  // unramified poly irreducible mod p
  FpPolyV m;
  for (unsigned i = 0; i < f; ++i) m.push_back(unram_[i].v % p);
  m.push_back(1);
  require(fp_irreducible(m, p), Errc::invariant_violation,
          "unramified polynomial not irreducible mod p");

  // Eisenstein: all tail coefficients divisible by p, constant exactly once
  for (unsigned i = 0; i < e; ++i)
    require(eis_[i].v % p == 0, Errc::invariant_violation,
            "Eisenstein coefficients must be divisible by p");
  require(eis_[0].valuation() == 1, Errc::invariant_violation,
          "Eisenstein constant term must have valuation exactly 1");

  // cache (-(pi^e)/p)^{-1} via a throwaway element computation below; filled
  // in lazily by LocalElement once the ring is wrapped in a shared_ptr.
  eis_unit_inv_.clear();
}

// ---- LocalElement ----

LocalElement::LocalElement(LocalRingPtr ring, std::vector<u64> coords)
    : ring_(std::move(ring)), c_(std::move(coords)) {
  require(c_.size() == ring_->rank(), Errc::invariant_violation, "coordinate count != e*f");
  for (u64& x : c_) x %= ring_->zp().mod;
}

LocalElement LocalElement::zero(const LocalRingPtr& ring) {
  return LocalElement(ring, std::vector<u64>(ring->rank(), 0));
}

LocalElement LocalElement::one(const LocalRingPtr& ring) {
  std::vector<u64> c(ring->rank(), 0);
  c[0] = 1;
  return LocalElement(ring, std::move(c));
}

LocalElement LocalElement::from_int(const LocalRingPtr& ring, i64 x) {
  std::vector<u64> c(ring->rank(), 0);
  i64 m = static_cast<i64>(ring->zp().mod);
  i64 t = x % m;
  if (t < 0) t += m;
  c[0] = static_cast<u64>(t);
  return LocalElement(ring, std::move(c));
}

LocalElement LocalElement::pi(const LocalRingPtr& ring) {
  std::vector<u64> c(ring->rank(), 0);
  if (ring->e() == 1) {
    // pi = -eis[0] (root of x + eis0 = 0)
    c[0] = (ring->zp().mod - ring->eisenstein_poly()[0].v) % ring->zp().mod;
  } else {
    c[ring->f()] = 1;  // coordinate of pi^1 w^0
  }
  return LocalElement(ring, std::move(c));
}

void LocalElement::check(const LocalElement& o) const {
  require(ring_ == o.ring_ || (ring_ && o.ring_ && ring_->p() == o.ring_->p() &&
                               ring_->precision() == o.ring_->precision() &&
                               ring_->unramified_poly() == o.ring_->unramified_poly() &&
                               ring_->eisenstein_poly() == o.ring_->eisenstein_poly()),
          Errc::ring_mismatch, "local elements from different rings");
}

bool LocalElement::is_zero() const {
  for (u64 x : c_)
    if (x) return false;
  return true;
}

bool LocalElement::operator==(const LocalElement& o) const {
  if (!ring_ || !o.ring_) return ring_ == o.ring_;
  check(o);
  return c_ == o.c_;
}

LocalElement LocalElement::operator+(const LocalElement& o) const {
  check(o);
  std::vector<u64> c(c_.size());
  u64 m = ring_->zp().mod;
  for (size_t i = 0; i < c_.size(); ++i) {
    u64 s = c_[i] + o.c_[i];
    c[i] = s >= m ? s - m : s;
  }
  return LocalElement(ring_, std::move(c));
}

LocalElement LocalElement::operator-(const LocalElement& o) const {
  check(o);
  std::vector<u64> c(c_.size());
  u64 m = ring_->zp().mod;
  for (size_t i = 0; i < c_.size(); ++i)
    c[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + m - o.c_[i];
  return LocalElement(ring_, std::move(c));
}

LocalElement LocalElement::operator-() const {
  std::vector<u64> c(c_.size());
  u64 m = ring_->zp().mod;
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] == 0 ? 0 : m - c_[i];
  return LocalElement(ring_, std::move(c));
}

namespace {

// W-coefficient arithmetic: vectors of length f mod p^N, modulo unram poly.
using WElem = std::vector<u64>;

WElem w_mul(const WElem& a, const WElem& b, const LocalRing& R) {
  unsigned f = R.f();
  u64 m = R.zp().mod;
  std::vector<u64> prod(2 * f - 1, 0);
  for (unsigned i = 0; i < f; ++i) {
    if (!a[i]) continue;
    for (unsigned j = 0; j < f; ++j) {
      if (!b[j]) continue;
      prod[i + j] = (prod[i + j] + (u128)a[i] * b[j]) % m;
    }
  }
  // reduce w^k for k >= f via w^f = -(tail)
  for (unsigned k = 2 * f - 2; k >= f && k < 2 * f; --k) {
    u64 c = prod[k];
    if (c) {
      prod[k] = 0;
      for (unsigned j = 0; j < f; ++j) {
        u64 sub = (u128)c * R.unramified_poly()[j].v % m;
        prod[k - f + j] = (prod[k - f + j] + m - sub) % m;
      }
    }
    if (k == f) break;
  }
  prod.resize(f);
  return prod;
}

}  // namespace

LocalElement LocalElement::operator*(const LocalElement& o) const {
  check(o);
  const LocalRing& R = *ring_;
  unsigned e = R.e(), f = R.f();
  u64 m = R.zp().mod;
  // polynomial in pi of degree < 2e-1 with W coefficients
  std::vector<WElem> prod(2 * e - 1, WElem(f, 0));
  for (unsigned a = 0; a < e; ++a) {
    WElem wa(c_.begin() + a * f, c_.begin() + (a + 1) * f);
    bool za = true;
    for (u64 x : wa) za = za && !x;
    if (za) continue;
    for (unsigned b = 0; b < e; ++b) {
      WElem wb(o.c_.begin() + b * f, o.c_.begin() + (b + 1) * f);
      bool zb = true;
      for (u64 x : wb) zb = zb && !x;
      if (zb) continue;
      WElem w = w_mul(wa, wb, R);
      for (unsigned i = 0; i < f; ++i) prod[a + b][i] = (prod[a + b][i] + w[i]) % m;
    }
  }
  // reduce pi^k for k >= e via pi^e = -(eis tail)
  for (unsigned k = 2 * e - 2; k >= e && k < 2 * e; --k) {
    WElem c = prod[k];
    bool z = true;
    for (u64 x : c) z = z && !x;
    if (!z) {
      std::fill(prod[k].begin(), prod[k].end(), 0);
      for (unsigned j = 0; j < e; ++j) {
        u64 ej = R.eisenstein_poly()[j].v;
        if (!ej) continue;
        for (unsigned i = 0; i < f; ++i) {
          u64 sub = (u128)c[i] * ej % m;
          prod[k - e + j][i] = (prod[k - e + j][i] + m - sub) % m;
        }
      }
    }
    if (k == e) break;
  }
  std::vector<u64> out(e * f);
  for (unsigned a = 0; a < e; ++a)
    for (unsigned i = 0; i < f; ++i) out[a * f + i] = prod[a][i];
  return LocalElement(ring_, std::move(out));
}

LocalElement LocalElement::mul_scalar(const PadicInt& s) const {
  require(s.ring == ring_->zp(), Errc::ring_mismatch, "scalar from wrong Z/p^N");
  std::vector<u64> c(c_.size());
  u64 m = ring_->zp().mod;
  for (size_t i = 0; i < c_.size(); ++i) c[i] = (u128)c_[i] * s.v % m;
  return LocalElement(ring_, std::move(c));
}

LocalElement LocalElement::mul_int(i64 s) const { return mul_scalar(PadicInt(ring_->zp(), s)); }

ResidueElem LocalElement::residue() const {
  ResidueElem r;
  r.c.resize(ring_->f());
  for (unsigned b = 0; b < ring_->f(); ++b) r.c[b] = c_[b] % ring_->p();
  return r;
}

PadicInt LocalElement::as_scalar() const {
  require(ring_->rank() == 1, Errc::ring_mismatch, "as_scalar needs e=f=1");
  return PadicInt(ring_->zp(), static_cast<i64>(c_[0]));
}

unsigned LocalElement::valuation() const {
  const LocalRing& R = *ring_;
  unsigned e = R.e(), f = R.f(), N = R.precision();
  unsigned best = e * N;
  for (unsigned a = 0; a < e; ++a) {
    unsigned vmin = N;  // p-adic valuation of the W coefficient of pi^a
    for (unsigned b = 0; b < f; ++b) {
      u64 x = c_[a * f + b];
      if (!x) continue;
      unsigned v = 0;
      while (x % R.p() == 0) {
        x /= R.p();
        ++v;
      }
      vmin = std::min(vmin, v);
    }
    // distinct a in [0,e) give distinct valuations mod e: the min is exact
    best = std::min(best, a + e * vmin);
  }
  return std::min(best, e * N);
}

LocalElement LocalElement::inv() const {
  const LocalRing& R = *ring_;
  require(is_unit(), Errc::non_unit, "inv of non-unit local element");
  // residue field inverse, then Newton x <- x(2 - ux)
  FpPolyV m;
  for (unsigned i = 0; i < R.f(); ++i) m.push_back(R.unramified_poly()[i].v % R.p());
  m.push_back(1);
  FpPolyV r0 = residue().c;
  FpPolyV ri = fq_inv(r0, m, R.p());
  std::vector<u64> c(R.rank(), 0);
  for (size_t i = 0; i < ri.size(); ++i) c[i] = ri[i];
  LocalElement x(ring_, std::move(c));
  LocalElement two = from_int(ring_, 2);
  unsigned digits = R.e() * R.precision();
  for (unsigned k = 1; k < 2 * digits; k *= 2) x = x * (two - *this * x);
  return x;
}

LocalElement LocalElement::pow(i64 k) const {
  LocalElement base = k < 0 ? inv() : *this;
  u64 e = k < 0 ? static_cast<u64>(-(k + 1)) + 1 : static_cast<u64>(k);
  LocalElement acc = one(ring_);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

LocalElement LocalElement::divide_exact_p(unsigned a) const {
  u64 pa = 1;
  for (unsigned i = 0; i < a; ++i) pa *= ring_->p();
  std::vector<u64> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    require(c_[i] % pa == 0, Errc::internal, "divide_exact_p: coordinate not divisible");
    c[i] = c_[i] / pa;
  }
  return LocalElement(ring_, std::move(c));
}

LocalElement LocalElement::divide_exact_pi() const {
  require(valuation() >= 1, Errc::internal, "divide_exact_pi: valuation 0");
  const LocalRing& R = *ring_;
  if (R.e() == 1) {
    // pi = -eis0, a p-unit times p: x/pi = x * (p/pi) / p
    PadicInt pi0 = -R.eisenstein_poly()[0];  // = pi as a scalar
    PadicInt u = pi0.divide_exact_p(1);      // pi/p, a unit
    return mul_scalar(u.inv()).divide_exact_p(1);
  }
  // x/pi = x * pi^(e-1) * (pi^e/p)^{-1} / p, and pi^e = -eis tail = p*(unit)
  LocalElement pie = pi(ring_).pow(static_cast<i64>(R.e()));
  LocalElement unit = pie.divide_exact_p(1);
  return (*this * pi(ring_).pow(static_cast<i64>(R.e() - 1)) * unit.inv()).divide_exact_p(1);
}

LocalElement LocalElement::reduce(const LocalRingPtr& target) const {
  require(target->p() == ring_->p() && target->e() == ring_->e() && target->f() == ring_->f() &&
              target->precision() <= ring_->precision(),
          Errc::ring_mismatch, "reduce: incompatible target ring");
  std::vector<u64> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] % target->zp().mod;
  return LocalElement(target, std::move(c));
}

std::string LocalElement::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << "]";
  return os.str();
}

LocalElement teichmuller(const ResidueElem& r, const LocalRingPtr& ring) {
  require(!r.is_zero(), Errc::zero_residue, "Teichmueller lift of zero");
  std::vector<u64> c(ring->rank(), 0);
  for (unsigned b = 0; b < ring->f(); ++b) c[b] = r.c[b];
  LocalElement x(ring, std::move(c));
  // q-power iteration; each step gains at least one pi-digit, so e*N steps
  // always reach the fixed point.
  unsigned cap = ring->e() * ring->precision() + 2;
  for (unsigned i = 0; i < cap; ++i) {
    LocalElement y = x.pow(static_cast<i64>(ring->q()));
    if (y == x) break;
    x = y;
  }
  return x;
}

// ---- SemiLocal ----

SemiLocalRingPtr make_semilocal(
    u64 p, unsigned precision,
    const std::vector<std::tuple<unsigned, unsigned, std::vector<i64>, std::vector<i64>>>&
        place_data) {
  auto R = std::make_shared<SemiLocalRing>();
  R->p = p;
  R->precision = precision;
  for (const auto& [e, f, up, ep] : place_data)
    R->places.push_back(std::make_shared<LocalRing>(p, precision, e, f, up, ep));
  return R;
}

SemiLocalElement::SemiLocalElement(SemiLocalRingPtr ring, std::vector<LocalElement> comps)
    : ring_(std::move(ring)), comps_(std::move(comps)) {
  require(comps_.size() == ring_->places.size(), Errc::invariant_violation,
          "component count != number of places");
}

SemiLocalElement SemiLocalElement::zero(const SemiLocalRingPtr& ring) {
  std::vector<LocalElement> c;
  for (const auto& pl : ring->places) c.push_back(LocalElement::zero(pl));
  return SemiLocalElement(ring, std::move(c));
}

SemiLocalElement SemiLocalElement::one(const SemiLocalRingPtr& ring) {
  std::vector<LocalElement> c;
  for (const auto& pl : ring->places) c.push_back(LocalElement::one(pl));
  return SemiLocalElement(ring, std::move(c));
}

SemiLocalElement SemiLocalElement::from_int(const SemiLocalRingPtr& ring, i64 x) {
  std::vector<LocalElement> c;
  for (const auto& pl : ring->places) c.push_back(LocalElement::from_int(pl, x));
  return SemiLocalElement(ring, std::move(c));
}

void SemiLocalElement::check(const SemiLocalElement& o) const {
  require(ring_ == o.ring_, Errc::ring_mismatch, "semi-local elements from different rings");
}

bool SemiLocalElement::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

bool SemiLocalElement::operator==(const SemiLocalElement& o) const {
  if (ring_ != o.ring_) return false;
  return comps_ == o.comps_;
}

#define QCHAB_SL_BINOP(OP)                                              \
  SemiLocalElement SemiLocalElement::operator OP(const SemiLocalElement& o) const { \
    check(o);                                                           \
    std::vector<LocalElement> c;                                        \
    c.reserve(comps_.size());                                           \
    for (size_t i = 0; i < comps_.size(); ++i) c.push_back(comps_[i] OP o.comps_[i]); \
    return SemiLocalElement(ring_, std::move(c));                       \
  }

QCHAB_SL_BINOP(+)
QCHAB_SL_BINOP(-)
QCHAB_SL_BINOP(*)
#undef QCHAB_SL_BINOP

SemiLocalElement SemiLocalElement::operator-() const {
  std::vector<LocalElement> c;
  for (const auto& x : comps_) c.push_back(-x);
  return SemiLocalElement(ring_, std::move(c));
}

SemiLocalElement SemiLocalElement::mul_int(i64 s) const {
  std::vector<LocalElement> c;
  for (const auto& x : comps_) c.push_back(x.mul_int(s));
  return SemiLocalElement(ring_, std::move(c));
}

bool SemiLocalElement::is_unit() const {
  for (const auto& c : comps_)
    if (!c.is_unit()) return false;
  return true;
}

SemiLocalElement SemiLocalElement::inv() const {
  std::vector<LocalElement> c;
  for (const auto& x : comps_) c.push_back(x.inv());
  return SemiLocalElement(ring_, std::move(c));
}

SemiLocalElement SemiLocalElement::pow(i64 k) const {
  std::vector<LocalElement> c;
  for (const auto& x : comps_) c.push_back(x.pow(k));
  return SemiLocalElement(ring_, std::move(c));
}

SemiLocalElement SemiLocalElement::divide_exact_pi() const {
  std::vector<LocalElement> c;
  for (const auto& x : comps_) c.push_back(x.divide_exact_pi());
  return SemiLocalElement(ring_, std::move(c));
}

std::string SemiLocalElement::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < comps_.size(); ++i) os << (i ? ";" : "") << comps_[i].str();
  os << ")";
  return os.str();
}

SemiLocalElement teichmuller_of_reduction(const SemiLocalElement& u) {
  std::vector<LocalElement> c;
  for (const auto& x : u.components()) c.push_back(teichmuller(x.residue(), x.ring()));
  return SemiLocalElement(u.ring(), std::move(c));
}

UnitDecomposition unit_decompose(const SemiLocalElement& u) {
  require(u.is_unit(), Errc::non_unit, "unit_decompose of non-unit");
  SemiLocalElement t = teichmuller_of_reduction(u);
  return UnitDecomposition{t, u * t.inv()};
}

}  // namespace qchab
