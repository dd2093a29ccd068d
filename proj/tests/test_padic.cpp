#include "doctest.h"
#include "qchab/local.hpp"

#include <random>

using namespace qchab;

namespace {

SemiLocalRingPtr z5_ring(unsigned prec = 3) {
  return make_semilocal(5, prec, {{1, 1, {0}, {-5}}});
}

SemiLocalRingPtr z7i_ring(unsigned prec = 3) {
  // Z_7[i]: f=2 with x^2+1, e=1 with x-7
  return make_semilocal(7, prec, {{1, 2, {1, 0}, {-7}}});
}

SemiLocalRingPtr eisenstein_ring(u64 p, unsigned e, unsigned prec) {
  std::vector<i64> ep(e, 0);
  ep[0] = -static_cast<i64>(p);  // x^e - p
  return make_semilocal(p, prec, {{e, 1, {0}, ep}});
}

}  // namespace

TEST_CASE("integer arithmetic in Z_5 at N=3") {
  auto R = z5_ring();
  auto a = SemiLocalElement::from_int(R, 2);
  auto b = SemiLocalElement::from_int(R, 3);
  CHECK((a + b) == SemiLocalElement::from_int(R, 5));
  CHECK((a * b) == SemiLocalElement::from_int(R, 6));
  CHECK((a - b) == SemiLocalElement::from_int(R, -1));
}

TEST_CASE("inverse against extended-gcd oracle mod 125") {
  auto R = z5_ring();
  auto x = SemiLocalElement::from_int(R, 57);
  auto xi = x.inv();
  CHECK(xi == SemiLocalElement::from_int(R, 68));  // 57*68 = 3876 = 31*125 + 1
  CHECK((x * xi) == SemiLocalElement::one(R));
  CHECK_THROWS_AS(SemiLocalElement::from_int(R, 10).inv(), Error);
}

TEST_CASE("(1+i)(1-i) = 2 in Z_7[i]") {
  auto R = z7i_ring();
  auto pl = R->places[0];
  LocalElement a(pl, {1, 1});  // 1 + i
  LocalElement b(pl, {1, pl->zp().mod - 1});
  CHECK((a * b) == LocalElement::from_int(pl, 2));
}

TEST_CASE("valuations") {
  auto R5 = z5_ring();
  CHECK(SemiLocalElement::from_int(R5, 50).at(0).valuation() == 2);
  CHECK(SemiLocalElement::from_int(R5, 0).at(0).valuation() == 3);  // ">= eN" sentinel

  auto Re = eisenstein_ring(5, 2, 3);
  auto pl = Re->places[0];
  CHECK(LocalElement::pi(pl).valuation() == 1);
  CHECK(LocalElement::from_int(pl, 5).valuation() == 2);  // v_pi(p) = e
  CHECK(LocalElement::zero(pl).valuation() == 6);
  CHECK((LocalElement::pi(pl) * LocalElement::pi(pl)) == LocalElement::from_int(pl, 5));
}

TEST_CASE("valuation is additive and ultrametric on random samples") {
  auto Re = eisenstein_ring(5, 2, 4);
  auto pl = Re->places[0];
  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<u64> ca(2), cb(2);
    for (auto& x : ca) x = rng() % pl->zp().mod;
    for (auto& x : cb) x = rng() % pl->zp().mod;
    LocalElement a(pl, ca), b(pl, cb);
    unsigned eN = pl->e() * pl->precision();
    unsigned va = a.valuation(), vb = b.valuation();
    if (va < eN && vb < eN && va + vb < eN) CHECK((a * b).valuation() == va + vb);
    CHECK((a + b).valuation() >= std::min(va, vb));
  }
}

TEST_CASE("Teichmueller lift in Z_5") {
  auto R = z5_ring();
  auto pl = R->places[0];
  ResidueElem two{{2}};
  LocalElement t = teichmuller(two, pl);
  CHECK(t == LocalElement::from_int(pl, 57));  // fixpoint of x -> x^5 mod 125 over 2
  CHECK(t.pow(4) == LocalElement::one(pl));    // 57^4 = 1 mod 125
  CHECK(teichmuller(ResidueElem{{1}}, pl) == LocalElement::one(pl));
  CHECK_THROWS_AS(teichmuller(ResidueElem{{0}}, pl), Error);
}

TEST_CASE("Teichmueller is multiplicative") {
  auto R = z7i_ring(4);
  auto pl = R->places[0];
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    ResidueElem a{{rng() % 7, rng() % 7}}, b{{rng() % 7, rng() % 7}};
    if (a.is_zero() || b.is_zero()) continue;
    LocalElement ta = teichmuller(a, pl), tb = teichmuller(b, pl);
    LocalElement tab = teichmuller((ta * tb).residue(), pl);
    CHECK(ta * tb == tab);
    CHECK(ta.pow(static_cast<i64>(pl->q()) - 1) == LocalElement::one(pl));
  }
}

TEST_CASE("unit decomposition") {
  auto R = z5_ring();
  SUBCASE("7 -> (57, 101)") {
    auto d = unit_decompose(SemiLocalElement::from_int(R, 7));
    CHECK(d.teich == SemiLocalElement::from_int(R, 57));
    CHECK(d.principal == SemiLocalElement::from_int(R, 101));
    CHECK(d.teich * d.principal == SemiLocalElement::from_int(R, 7));
  }
  SUBCASE("already principal: 6 -> (1, 6)") {
    auto d = unit_decompose(SemiLocalElement::from_int(R, 6));
    CHECK(d.teich == SemiLocalElement::one(R));
    CHECK(d.principal == SemiLocalElement::from_int(R, 6));
  }
  SUBCASE("Teichmueller input: 57 -> (57, 1)") {
    auto d = unit_decompose(SemiLocalElement::from_int(R, 57));
    CHECK(d.teich == SemiLocalElement::from_int(R, 57));
    CHECK(d.principal == SemiLocalElement::one(R));
  }
  SUBCASE("non-unit rejected") {
    CHECK_THROWS_AS(unit_decompose(SemiLocalElement::from_int(R, 15)), Error);
  }
}

TEST_CASE("ring axioms hold on random semi-local samples") {
  auto R = make_semilocal(5, 3, {{1, 1, {0}, {-5}}, {2, 2, {2, 0}, {-5, 0}}});
  std::mt19937_64 rng(2);
  auto rand_el = [&]() {
    std::vector<LocalElement> comps;
    for (const auto& pl : R->places) {
      std::vector<u64> c(pl->rank());
      for (auto& x : c) x = rng() % pl->zp().mod;
      comps.emplace_back(pl, c);
    }
    return SemiLocalElement(R, std::move(comps));
  };
  for (int trial = 0; trial < 100; ++trial) {
    auto a = rand_el(), b = rand_el(), c = rand_el();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("division by pi and by p is exact") {
  auto Re = eisenstein_ring(7, 3, 4);
  auto pl = Re->places[0];
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<u64> c(pl->rank());
    for (auto& x : c) x = rng() % pl->zp().mod;
    LocalElement a(pl, c);
    CHECK((a * LocalElement::pi(pl)).divide_exact_pi() == a);
  }
}

TEST_CASE("invalid towers are rejected at construction") {
  CHECK_THROWS_AS(make_semilocal(4, 3, {{1, 1, {0}, {-4}}}), Error);   // p not prime
  CHECK_THROWS_AS(make_semilocal(2, 3, {{1, 1, {0}, {-2}}}), Error);   // p = 2 rejected
  CHECK_THROWS_AS(make_semilocal(5, 3, {{1, 2, {1, 0}, {-5}}}), Error);  // x^2+1 splits mod 5
  CHECK_THROWS_AS(make_semilocal(5, 3, {{2, 1, {0}, {-25, 0}}}), Error); // not Eisenstein
  CHECK_THROWS_AS(make_semilocal(5, 3, {{2, 1, {0}, {-5, 1}}}), Error);  // tail not div by p
}
