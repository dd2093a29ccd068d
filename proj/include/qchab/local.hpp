#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qchab/padic.hpp"

namespace qchab {

// A local ring O_{K,p} for one place, presented as the two-step tower
//   Z_p --(unramified, degree f)--> W --(Eisenstein, degree e)--> O.
// Elements are stored exactly mod p^N in the tower basis {pi^a * w^b},
// 0 <= a < e, 0 <= b < f. Only this tower shape is accepted.
class LocalRing {
 public:
  // Polynomial coefficients are low-to-high, length f (resp. e), leading
  // coefficient 1 implied. Eisenstein coefficients live in Z (embedded in W).
  LocalRing(u64 p, unsigned prec, unsigned e, unsigned f,
            std::vector<i64> unramified_poly, std::vector<i64> eisenstein_poly);

  u64 p() const { return zp_.p; }
  unsigned precision() const { return zp_.n; }
  unsigned e() const { return e_; }
  unsigned f() const { return f_; }
  unsigned rank() const { return e_ * f_; }  // k = e*f, the Z_p-rank
  u64 q() const { return q_; }               // residue field size p^f
  const ZpRing& zp() const { return zp_; }
  const std::vector<PadicInt>& unramified_poly() const { return unram_; }
  const std::vector<PadicInt>& eisenstein_poly() const { return eis_; }

  // -(pi^e)/p, a unit of the ring; used to divide by pi.
  const std::vector<u64>& eis_unit_inv_coords() const { return eis_unit_inv_; }

 private:
  ZpRing zp_;
  unsigned e_, f_;
  u64 q_;
  std::vector<PadicInt> unram_;  // degree-f tail coefficients (in Z/p^N)
  std::vector<PadicInt> eis_;    // degree-e tail coefficients (in Z/p^N, via Z)
  std::vector<u64> eis_unit_inv_;
  friend class LocalElement;
};

using LocalRingPtr = std::shared_ptr<const LocalRing>;

// Residue field element of F_q = F_p[w]/(unram mod p): f coefficients mod p.
struct ResidueElem {
  std::vector<u64> c;
  bool is_zero() const {
    for (u64 x : c)
      if (x) return false;
    return true;
  }
  bool is_one() const {
    if (c.empty() || c[0] != 1) return false;
    for (size_t i = 1; i < c.size(); ++i)
      if (c[i]) return false;
    return true;
  }
  bool operator==(const ResidueElem& o) const { return c == o.c; }
};

class LocalElement {
 public:
  LocalElement() = default;
  LocalElement(LocalRingPtr ring, std::vector<u64> coords);
  static LocalElement zero(const LocalRingPtr& ring);
  static LocalElement one(const LocalRingPtr& ring);
  static LocalElement from_int(const LocalRingPtr& ring, i64 x);
  static LocalElement pi(const LocalRingPtr& ring);  // the uniformizer

  const LocalRingPtr& ring() const { return ring_; }
  // coordinate of pi^a * w^b
  u64 coord(unsigned a, unsigned b) const { return c_[a * ring_->f() + b]; }
  const std::vector<u64>& coords() const { return c_; }

  bool is_zero() const;
  bool operator==(const LocalElement& o) const;
  bool operator!=(const LocalElement& o) const { return !(*this == o); }

  LocalElement operator+(const LocalElement& o) const;
  LocalElement operator-(const LocalElement& o) const;
  LocalElement operator-() const;
  LocalElement operator*(const LocalElement& o) const;
  LocalElement mul_scalar(const PadicInt& s) const;
  LocalElement mul_int(i64 s) const;

  bool is_unit() const { return !residue().is_zero(); }
  LocalElement inv() const;
  LocalElement pow(i64 k) const;

  // pi-adic valuation in {0,...,eN-1}; returns e*N as the ">= eN" sentinel.
  unsigned valuation() const;

  ResidueElem residue() const;
  // image in Z/p^m for the e=f=1 case (tower coordinate 0)
  PadicInt as_scalar() const;

  // Exact division by p^a (all coordinates divisible); same modulus.
  LocalElement divide_exact_p(unsigned a) const;
  // Exact division by pi (valuation >= 1 required).
  LocalElement divide_exact_pi() const;

  LocalElement reduce(const LocalRingPtr& target) const;  // to smaller precision

  std::string str() const;

 private:
  LocalRingPtr ring_;
  std::vector<u64> c_;  // length e*f, each in [0, p^N)
  void check(const LocalElement& o) const;
};

// Teichmueller lift: the unique root of unity of order dividing q-1 reducing
// to the given nonzero residue; q-power iteration to a fixed point.
LocalElement teichmuller(const ResidueElem& r, const LocalRingPtr& ring);

// The semi-local ring O_{K,p} = prod_i O_{K,p_i} at a common (p, N).
struct SemiLocalRing {
  u64 p = 0;
  unsigned precision = 0;
  std::vector<LocalRingPtr> places;

  unsigned total_rank() const {
    unsigned d = 0;
    for (const auto& pl : places) d += pl->rank();
    return d;
  }
};

using SemiLocalRingPtr = std::shared_ptr<const SemiLocalRing>;

SemiLocalRingPtr make_semilocal(u64 p, unsigned precision,
                                const std::vector<std::tuple<unsigned, unsigned, std::vector<i64>,
                                                             std::vector<i64>>>& place_data);

class SemiLocalElement {
 public:
  SemiLocalElement() = default;
  SemiLocalElement(SemiLocalRingPtr ring, std::vector<LocalElement> comps);
  static SemiLocalElement zero(const SemiLocalRingPtr& ring);
  static SemiLocalElement one(const SemiLocalRingPtr& ring);
  static SemiLocalElement from_int(const SemiLocalRingPtr& ring, i64 x);

  const SemiLocalRingPtr& ring() const { return ring_; }
  const std::vector<LocalElement>& components() const { return comps_; }
  const LocalElement& at(size_t i) const { return comps_[i]; }
  LocalElement& at(size_t i) { return comps_[i]; }
  size_t places() const { return comps_.size(); }

  bool is_zero() const;
  bool operator==(const SemiLocalElement& o) const;
  bool operator!=(const SemiLocalElement& o) const { return !(*this == o); }

  SemiLocalElement operator+(const SemiLocalElement& o) const;
  SemiLocalElement operator-(const SemiLocalElement& o) const;
  SemiLocalElement operator-() const;
  SemiLocalElement operator*(const SemiLocalElement& o) const;
  SemiLocalElement mul_int(i64 s) const;

  bool is_unit() const;
  SemiLocalElement inv() const;
  SemiLocalElement pow(i64 k) const;

  SemiLocalElement divide_exact_pi() const;

  std::string str() const;

 private:
  SemiLocalRingPtr ring_;
  std::vector<LocalElement> comps_;
  void check(const SemiLocalElement& o) const;
};

// All residues nonzero -> componentwise Teichmueller lift of the reduction.
SemiLocalElement teichmuller_of_reduction(const SemiLocalElement& u);

// u = teich * principal with red(principal) = 1 at every place.
struct UnitDecomposition {
  SemiLocalElement teich;
  SemiLocalElement principal;
};
UnitDecomposition unit_decompose(const SemiLocalElement& u);

}  // namespace qchab
