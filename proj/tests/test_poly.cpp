#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "cleanmat/errors.hpp"
#include "cleanmat/poly.hpp"
#include "cleanmat/rings.hpp"

#include "oracles.hpp"

using namespace cleanmat;

namespace {

Polynomial zpoly(const RingPtr& z, std::vector<long long> coeffs) {
    std::vector<RingElement> c;
    for (long long v : coeffs) c.push_back(z->from_int(v));
    return Polynomial(z, std::move(c));
}

}  // namespace

TEST_CASE("construction normalizes away leading zeros") {
    RingPtr z = Ring::integers();
    Polynomial p = zpoly(z, {1, 2, 0, 0});
    CHECK(p.degree() == 1);
    CHECK(zpoly(z, {0, 0}).is_zero());
    CHECK(zpoly(z, {0, 0}).degree() == -1);
    // products over rings with zero divisors can collapse degrees
    RingPtr z4 = Ring::integers_mod(4);
    Polynomial q(z4, {z4->from_int(1), z4->from_int(2)});
    Polynomial sq = q.mul(q);  // (1+2t)^2 = 1 + 4t + 4t^2 = 1
    CHECK(sq.degree() == 0);
    CHECK(sq.is_one());
}

TEST_CASE("t^2-2t-3 factors as (t-3)(t+1) and prints in descending order") {
    RingPtr z = Ring::integers();
    Polynomial h = zpoly(z, {-3, -2, 1});
    Polynomial f = Polynomial::linear_root(z->from_int(3));   // t - 3
    Polynomial g = Polynomial::linear_root(z->from_int(-1));  // t + 1
    CHECK(f.mul(g) == h);
    CHECK(h.to_string() == "t^2-2t-3");
    CHECK(f.to_string() == "t-3");
    CHECK(g.to_string() == "t+1");
    CHECK(zpoly(z, {0, 0, 1}).to_string() == "t^2");
    CHECK(Polynomial::zero(z).to_string() == "0");

    auto [quot, rem] = divide_by_monic(h, f);
    CHECK(quot == g);
    CHECK(rem.is_zero());
}

TEST_CASE("monic division produces quotient and strictly smaller remainder") {
    RingPtr z = Ring::integers();
    Polynomial p = zpoly(z, {7, -4, 0, 2, 5});
    Polynomial d = zpoly(z, {-2, 3, 1});
    auto [q, r] = divide_by_monic(p, d);
    CHECK(d.mul(q).add(r) == p);
    CHECK(r.degree() < d.degree());
    CHECK_THROWS_AS(divide_by_monic(p, zpoly(z, {1, 2})), PreconditionError);
    CHECK_THROWS_AS(divide_by_monic(p, Polynomial::zero(z)), PreconditionError);
}

TEST_CASE("division round-trips on random pairs over a ring with zero divisors") {
    RingPtr z6 = Ring::integers_mod(6);
    oracles::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<RingElement> pc, dc;
        int pd = static_cast<int>(rng.range(0, 5));
        int dd = static_cast<int>(rng.range(0, 3));
        for (int i = 0; i <= pd; ++i) pc.push_back(z6->from_int(rng.range(0, 5)));
        for (int i = 0; i < dd; ++i) dc.push_back(z6->from_int(rng.range(0, 5)));
        dc.push_back(z6->one());  // monic divisor
        Polynomial p(z6, pc), d(z6, dc);
        auto [q, r] = divide_by_monic(p, d);
        CHECK(d.mul(q).add(r) == p);
        CHECK(r.degree() < d.degree());
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    RingPtr z8 = Ring::integers_mod(8);
    oracles::Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<RingElement> pc, qc;
        for (int i = 0; i <= rng.range(0, 4); ++i) pc.push_back(z8->from_int(rng.range(0, 7)));
        for (int i = 0; i <= rng.range(0, 4); ++i) qc.push_back(z8->from_int(rng.range(0, 7)));
        Polynomial p(z8, pc), q(z8, qc);
        RingElement r = z8->from_int(rng.range(0, 7));
        CHECK(p.add(q).eval(r) == z8->add(p.eval(r), q.eval(r)));
        CHECK(p.mul(q).eval(r) == z8->mul(p.eval(r), q.eval(r)));
    }
}

TEST_CASE("evaluation works at composite ring elements") {
    RingPtr s = Ring::truncated_power_series(Ring::integers(), 3);
    RingPtr z = s->base();
    // x = the series variable; p(t) = t^2 + 1 evaluated at 1 + x
    RingElement x = s->make({z->zero(), z->one(), z->zero()});
    RingElement one_plus_x = s->add(s->one(), x);
    Polynomial p(s, {s->one(), s->zero(), s->one()});
    // (1+x)^2 + 1 = 2 + 2x + x^2
    CHECK(p.eval(one_plus_x) ==
          s->make({z->from_int(2), z->from_int(2), z->from_int(1)}));
}

TEST_CASE("monomial linear_root and constant builders") {
    RingPtr z = Ring::integers();
    CHECK(Polynomial::monomial(z, 3) == zpoly(z, {0, 0, 0, 1}));
    CHECK(Polynomial::monomial(z, 0).is_one());
    CHECK(Polynomial::linear_root(z->from_int(5)) == zpoly(z, {-5, 1}));
    CHECK(Polynomial::constant(z->from_int(9)) == zpoly(z, {9}));
    CHECK(Polynomial::constant(z->zero()).is_zero());
    CHECK(zpoly(z, {-3, -2, 1}).is_monic());
    CHECK_FALSE(zpoly(z, {1, 2}).is_monic());
    CHECK_FALSE(Polynomial::zero(z).is_monic());
}

TEST_CASE("coefficients beyond the stored degree read as zero") {
    RingPtr z = Ring::integers();
    Polynomial p = zpoly(z, {4, 5});
    CHECK(p.coeff(0) == z->from_int(4));
    CHECK(p.coeff(7) == z->zero());
    CHECK(p.leading() == z->from_int(5));
}

TEST_CASE("coefficient maps renormalize when reductions kill the leading term") {
    RingPtr z = Ring::integers();
    RingPtr z2 = Ring::integers_mod(2);
    Polynomial p = zpoly(z, {3, 1, 2});  // 2t^2 + t + 3
    Polynomial reduced = map_coeffs(p, z2, [&](const RingElement& c) {
        return z2->from_int(c.scalar());
    });
    CHECK(reduced.degree() == 1);
    CHECK(reduced == Polynomial(z2, {z2->one(), z2->one()}));
}

TEST_CASE("arithmetic on different descriptors is rejected") {
    Polynomial p = zpoly(Ring::integers(), {1, 1});
    RingPtr z4 = Ring::integers_mod(4);
    Polynomial q(z4, {z4->one(), z4->one()});
    CHECK_THROWS_AS(p.add(q), DescriptorMismatchError);
    CHECK_THROWS_AS(p.mul(q), DescriptorMismatchError);
}
