#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "cleanmat/errors.hpp"
#include "cleanmat/matrices.hpp"
#include "cleanmat/poly.hpp"
#include "cleanmat/rings.hpp"

#include "oracles.hpp"

using namespace cleanmat;

namespace {

Matrix zmat(const RingPtr& z, const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<RingElement>> converted;
    for (const auto& row : rows) {
        std::vector<RingElement> r;
        for (long long v : row) r.push_back(z->from_int(v));
        converted.push_back(std::move(r));
    }
    return Matrix::from_rows(z, converted);
}

Polynomial zpoly(const RingPtr& z, std::vector<long long> coeffs) {
    std::vector<RingElement> c;
    for (long long v : coeffs) c.push_back(z->from_int(v));
    return Polynomial(z, std::move(c));
}

}  // namespace

TEST_CASE("charpoly of frozen 2x2 integer matrices") {
    RingPtr z = Ring::integers();
    CHECK(charpoly(zmat(z, {{0, 3}, {1, 2}})) == zpoly(z, {-3, -2, 1}));
    CHECK(charpoly(zmat(z, {{2, 0}, {0, -1}})) == zpoly(z, {-2, -1, 1}));
    CHECK(charpoly(Matrix::zero(z, 2)) == zpoly(z, {0, 0, 1}));
    CHECK(charpoly(Matrix::identity(z, 3)) == zpoly(z, {-1, 3, -3, 1}));
    CHECK(determinant(zmat(z, {{2, 0}, {0, -1}})) == z->from_int(-2));
    CHECK(determinant(zmat(z, {{1, 2}, {3, 4}})) == z->from_int(-2));
}

TEST_CASE("berkowitz charpoly agrees with cofactor expansion over a zero-divisor ring") {
    RingPtr z6 = Ring::integers_mod(6);
    RingPtr z = Ring::integers();
    oracles::Rng rng(101);
    int compared = 0;
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 30; ++trial) {
            Matrix a = oracles::random_matrix(z6, n, rng);
            CHECK(charpoly(a) == oracles::charpoly_cofactor(a));
            Matrix b = oracles::random_matrix(z, n, rng);
            CHECK(charpoly(b) == oracles::charpoly_cofactor(b));
            CHECK(determinant(a) == oracles::det_cofactor(a));
            CHECK(determinant(b) == oracles::det_cofactor(b));
            compared += 2;
        }
    }
    CHECK(compared >= 200);
}

TEST_CASE("cayley hamilton: every matrix annihilates its characteristic polynomial") {
    std::vector<RingPtr> rings = {
        Ring::integers(),
        Ring::integers_mod(6),
        Ring::dual_extension(Ring::gf4()),
        Ring::truncated_power_series(Ring::integers_mod(4), 3),
    };
    oracles::Rng rng(5);
    for (const RingPtr& r : rings) {
        CAPTURE(r->name());
        for (int trial = 0; trial < 25; ++trial) {
            int n = static_cast<int>(rng.range(1, 3));
            Matrix a = oracles::random_matrix(r, n, rng);
            CHECK(eval_at_matrix(charpoly(a), a) == Matrix::zero(r, n));
        }
    }
}

TEST_CASE("determinant is multiplicative and the adjugate identity holds") {
    RingPtr z6 = Ring::integers_mod(6);
    oracles::Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        int n = static_cast<int>(rng.range(1, 4));
        Matrix a = oracles::random_matrix(z6, n, rng);
        Matrix b = oracles::random_matrix(z6, n, rng);
        CHECK(determinant(a.mul(b)) == z6->mul(determinant(a), determinant(b)));
        CHECK(a.mul(adjugate(a)) == Matrix::identity(z6, n).scalar_mul(determinant(a)));
        CHECK(adjugate(a).mul(a) == Matrix::identity(z6, n).scalar_mul(determinant(a)));
    }
}

TEST_CASE("matrix inversion succeeds exactly on unit determinants") {
    RingPtr z = Ring::integers();
    Matrix m = zmat(z, {{2, 1}, {1, 1}});  // det 1
    auto inv = try_invert_matrix(m);
    REQUIRE(inv.has_value());
    CHECK(*inv == zmat(z, {{1, -1}, {-1, 2}}));
    CHECK_FALSE(try_invert_matrix(zmat(z, {{2, 0}, {0, 1}})).has_value());

    RingPtr z4 = Ring::integers_mod(4);
    Matrix odd = zmat(z4, {{1, 2}, {2, 1}});  // det -3 = 1, a unit mod 4
    auto odd_inv = try_invert_matrix(odd);
    REQUIRE(odd_inv.has_value());
    CHECK(odd.mul(*odd_inv) == Matrix::identity(z4, 2));
    CHECK_FALSE(try_invert_matrix(zmat(z4, {{2, 1}, {0, 1}})).has_value());
}

TEST_CASE("companion matrices round-trip through charpoly") {
    RingPtr z = Ring::integers();
    Polynomial h = zpoly(z, {-3, -2, 1});
    Matrix c = companion(h);
    CHECK(c == zmat(z, {{0, 3}, {1, 2}}));
    CHECK(charpoly(c) == h);
    CHECK(is_companion(c));
    CHECK_FALSE(is_companion(zmat(z, {{2, 0}, {0, -1}})));

    RingPtr z4 = Ring::integers_mod(4);
    oracles::Rng rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        int d = static_cast<int>(rng.range(1, 4));
        std::vector<RingElement> coeffs;
        for (int i = 0; i < d; ++i) coeffs.push_back(z4->from_int(rng.range(0, 3)));
        coeffs.push_back(z4->one());
        Polynomial p(z4, coeffs);
        CHECK(charpoly(companion(p)) == p);
        CHECK(is_companion(companion(p)));
    }
    CHECK_THROWS_AS(companion(zpoly(z, {1, 2})), PreconditionError);
    CHECK_THROWS_AS(companion(Polynomial::one(z)), PreconditionError);
}

TEST_CASE("krylov columns stack powers applied to the seed") {
    RingPtr z = Ring::integers();
    Matrix a = zmat(z, {{0, 3}, {1, 2}});
    Matrix k = krylov_matrix(a, {z->one(), z->zero()});
    // columns e1, A e1
    CHECK(k == zmat(z, {{1, 0}, {0, 1}}));
    Matrix k2 = krylov_matrix(a, {z->zero(), z->one()});
    CHECK(k2 == zmat(z, {{0, 3}, {1, 2}}));
}

TEST_CASE("cyclicity: companions yes, scaled identities no, diag(2,-1) over Z no") {
    RingPtr z = Ring::integers();
    Matrix comp = companion(zpoly(z, {-3, -2, 1}));
    auto alpha = is_cyclic(comp);
    REQUIRE(alpha.has_value());
    CHECK(try_invert_matrix(krylov_matrix(comp, *alpha)).has_value());

    CHECK_FALSE(is_cyclic(Matrix::identity(z, 2)).has_value());
    // det of the Krylov matrix of diag(2,-1) at (a,b) is -3ab, never a unit
    CHECK_FALSE(is_cyclic(zmat(z, {{2, 0}, {0, -1}})).has_value());

    RingPtr z4 = Ring::integers_mod(4);
    Matrix diag = Matrix::from_rows(z4, {{z4->from_int(1), z4->zero()},
                                         {z4->zero(), z4->from_int(2)}});
    auto beta = is_cyclic(diag);
    REQUIRE(beta.has_value());
    CHECK(try_invert_matrix(krylov_matrix(diag, *beta)).has_value());
    CHECK_FALSE(is_cyclic(Matrix::zero(z4, 2)).has_value());
}

TEST_CASE("conjugating a cyclic matrix by its krylov basis yields companion form") {
    RingPtr z5 = Ring::integers_mod(5);
    oracles::Rng rng(31);
    int hits = 0;
    for (int trial = 0; trial < 40 && hits < 10; ++trial) {
        Matrix a = oracles::random_matrix(z5, 3, rng);
        auto alpha = is_cyclic(a);
        if (!alpha) continue;
        ++hits;
        Matrix b = conjugate(a, krylov_matrix(a, *alpha));
        CHECK(is_companion(b));
        CHECK(charpoly(b) == charpoly(a));
    }
    CHECK(hits >= 10);
}

TEST_CASE("conjugation preserves the characteristic polynomial") {
    RingPtr z = Ring::integers();
    Matrix a = zmat(z, {{1, 2}, {3, 4}});
    Matrix gamma = zmat(z, {{1, 1}, {0, 1}});
    CHECK(charpoly(conjugate(a, gamma)) == charpoly(a));
    CHECK_THROWS_AS(conjugate(a, zmat(z, {{2, 0}, {0, 1}})), PreconditionError);
}

TEST_CASE("shape and dimension guards") {
    RingPtr z = Ring::integers();
    CHECK_THROWS_AS(Matrix(z, 9, 9), GuardError);
    CHECK_THROWS_AS(Matrix(z, 0, 1), PreconditionError);
    Matrix rect(z, 2, 3);
    CHECK_THROWS_AS(charpoly(rect), PreconditionError);
    CHECK_THROWS_AS(determinant(rect), PreconditionError);
    CHECK_THROWS_AS(rect.mul(rect), PreconditionError);
    RingPtr z4 = Ring::integers_mod(4);
    CHECK_THROWS_AS(Matrix::identity(z, 2).add(Matrix::identity(z4, 2)),
                    DescriptorMismatchError);
}
