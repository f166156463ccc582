#include "cleanmat/lift.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cleanmat/errors.hpp"
#include "cleanmat/resultant.hpp"

namespace cleanmat {

namespace {

// Coefficient matrix of (P, Q) -> P*h1 + h0*Q on deg P < s = deg h0,
// deg Q < r = deg h1.  Columns are the coefficient vectors of t^i*h1 and
// t^i*h0; det = res(h0, h1) up to sign, so a unit resultant makes every
// correction order uniquely solvable.
Matrix pair_system_matrix(const Polynomial& h0, const Polynomial& h1) {
    const RingPtr& ring = h0.ring_ptr();
    int s = h0.degree();
    int r = h1.degree();
    int n = s + r;
    Matrix M(ring, n, n);
    for (int i = 0; i < s; ++i) {
        for (int c = 0; c <= r; ++c) M.set(i + c, i, h1.coeff(c));
    }
    for (int i = 0; i < r; ++i) {
        for (int c = 0; c <= s; ++c) M.set(i + c, s + i, h0.coeff(c));
    }
    return M;
}

// Slice j of a polynomial over a length-N coefficient-vector ring: the base
// polynomial collecting part j of every coefficient.
std::vector<Polynomial> slice_poly(const Polynomial& H, const RingPtr& base, int length) {
    std::vector<Polynomial> out;
    out.reserve(length);
    for (int j = 0; j < length; ++j) {
        std::vector<RingElement> coeffs;
        coeffs.reserve(H.degree() + 1);
        for (int i = 0; i <= H.degree(); ++i) coeffs.push_back(H.coeff(i).parts()[j]);
        out.emplace_back(base, std::move(coeffs));
    }
    return out;
}

// Inverse of slice_poly: coefficient i of the result has parts
// (slices[0].coeff(i), ..., slices[length-1].coeff(i)).
Polynomial assemble_slices(const RingPtr& ext, const std::vector<Polynomial>& slices,
                           int degree) {
    int length = ext->order();
    std::vector<RingElement> coeffs;
    coeffs.reserve(degree + 1);
    for (int i = 0; i <= degree; ++i) {
        std::vector<RingElement> parts;
        parts.reserve(length);
        for (int j = 0; j < length; ++j) parts.push_back(slices[j].coeff(i));
        coeffs.push_back(ext->make(std::move(parts)));
    }
    return Polynomial(ext, std::move(coeffs));
}

struct SeriesLift {
    SrFactorization ext;
    int length;
};

SeriesLift lift_series_core(const Matrix& A, const SrFactorization& fac, LiftKind tag) {
    const RingPtr& ext = A.ring_ptr();
    Ring::Kind want = tag == LiftKind::Series ? Ring::Kind::TruncatedPowerSeries
                                              : Ring::Kind::QuotientXPow;
    if (ext->kind() != want) {
        throw PreconditionError("lift expected a " +
                                std::string(tag == LiftKind::Series ? "power-series"
                                                                    : "x-power-quotient") +
                                " ring, got " + ext->name());
    }
    if (!A.is_square()) throw PreconditionError("lift requires a square matrix");
    const RingPtr& base = ext->base();
    if (!fac.h().ring().same_as(*base)) {
        throw PreconditionError("factorization ring differs from the series base ring");
    }
    if (!projective_free_supported(*base)) {
        throw UnsupportedRingError("series base " + base->name() +
                                   " is not supported for lifting");
    }
    int length = ext->order();
    Polynomial H = charpoly(A);
    std::vector<Polynomial> Hs = slice_poly(H, base, length);
    if (!(Hs[0] == fac.h())) {
        throw PreconditionError(
            "constant part of the characteristic polynomial differs from the factorization");
    }
    int s = fac.h0().degree();
    int r = fac.h1().degree();
    int n = s + r;
    std::vector<Polynomial> P{fac.h0()};
    std::vector<Polynomial> Q{fac.h1()};
    std::optional<Matrix> Minv;
    if (length > 1) {
        Minv = try_invert_matrix(pair_system_matrix(fac.h0(), fac.h1()));
        if (!Minv) {
            throw VerificationError("correction system is singular despite a unit resultant");
        }
    }
    for (int j = 1; j < length; ++j) {
        Polynomial D = Hs[j];
        for (int k = 1; k < j; ++k) D = D.sub(P[k].mul(Q[j - k]));
        if (D.degree() >= n) throw VerificationError("order slice exceeds the expected degree");
        Matrix rhs(base, n, 1);
        for (int i = 0; i < n; ++i) rhs.set(i, 0, D.coeff(i));
        Matrix sol = (*Minv) * rhs;
        std::vector<RingElement> pc;
        std::vector<RingElement> qc;
        pc.reserve(s);
        qc.reserve(r);
        for (int i = 0; i < s; ++i) pc.push_back(sol.at(i, 0));
        for (int i = 0; i < r; ++i) qc.push_back(sol.at(s + i, 0));
        P.emplace_back(base, std::move(pc));
        Q.emplace_back(base, std::move(qc));
        Polynomial check = Polynomial::zero(base);
        for (int k = 0; k <= j; ++k) check = check.add(P[k].mul(Q[j - k]));
        if (!(check == Hs[j])) {
            throw VerificationError("order " + std::to_string(j) +
                                    " correction does not reproduce the characteristic slice");
        }
    }
    Polynomial H0 = assemble_slices(ext, P, s);
    Polynomial H1 = assemble_slices(ext, Q, r);
    if (!(H0.mul(H1) == H)) {
        throw VerificationError("lifted product differs from the characteristic polynomial");
    }
    if (!(slice_poly(H0, base, length)[0] == fac.h0()) ||
        !(slice_poly(H1, base, length)[0] == fac.h1())) {
        throw VerificationError("lifted factors do not reduce to the base factorization");
    }
    return SeriesLift{SrFactorization::make_checked(H, H0, H1), length};
}

int series_levels(const RingPtr& ring) {
    int count = 0;
    RingPtr cur = ring;
    while (cur->kind() == Ring::Kind::TruncatedPowerSeries ||
           cur->kind() == Ring::Kind::QuotientXPow) {
        ++count;
        cur = cur->base();
    }
    return count;
}

LiftedFactorization lift_one_level(const Matrix& A, const SrFactorization& fac) {
    return A.ring().kind() == Ring::Kind::TruncatedPowerSeries ? lift_series(A, fac)
                                                               : lift_quotient(A, fac);
}

}  // namespace

LiftedFactorization lift_series(const Matrix& A, const SrFactorization& fac) {
    SeriesLift out = lift_series_core(A, fac, LiftKind::Series);
    return LiftedFactorization(std::move(out.ext), fac, LiftKind::Series, out.length);
}

LiftedFactorization lift_quotient(const Matrix& A, const SrFactorization& fac) {
    SeriesLift out = lift_series_core(A, fac, LiftKind::Quotient);
    return LiftedFactorization(std::move(out.ext), fac, LiftKind::Quotient, out.length);
}

LiftedFactorization lift_tower(const Matrix& A, const SrFactorization& fac) {
    const RingPtr& ring = A.ring_ptr();
    int levels = series_levels(ring);
    if (levels == 0) {
        throw PreconditionError("lift_tower requires a power-series or x-power-quotient ring");
    }
    if (levels > 2) {
        throw GuardError("series towers deeper than two levels are not supported");
    }
    if (levels == 1) return lift_one_level(A, fac);
    const RingPtr& inner = ring->base();
    Matrix A0(inner, A.rows(), A.cols());
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) A0.set(i, j, A.at(i, j).parts()[0]);
    }
    LiftedFactorization inner_lift = lift_one_level(A0, fac);
    return lift_one_level(A, inner_lift.as_sr_factorization());
}

LiftedFactorization lift_groupring(const Matrix& A, const SrFactorization& fac) {
    const RingPtr& ext = A.ring_ptr();
    if (ext->kind() != Ring::Kind::GroupRingC2) {
        throw PreconditionError("lift_groupring requires a C2 group ring, got " + ext->name());
    }
    if (!A.is_square()) throw PreconditionError("lift requires a square matrix");
    const RingPtr& base = ext->base();
    if (base->characteristic() != 2) {
        throw PreconditionError("group-ring lifting requires characteristic 2 (1 + 1 = 0)");
    }
    if (!fac.h().ring().same_as(*base)) {
        throw PreconditionError("factorization ring differs from the group-ring base");
    }
    if (!projective_free_supported(*base)) {
        throw UnsupportedRingError("group-ring base " + base->name() +
                                   " is not supported for lifting");
    }
    Polynomial H = charpoly(A);
    // With u = g + 1 (so u^2 = 0 in characteristic 2), a + b*g = (a+b) + b*u:
    // the low slice is the augmentation g -> 1, the high slice the g-part.
    std::vector<RingElement> low;
    std::vector<RingElement> high;
    low.reserve(H.degree() + 1);
    high.reserve(H.degree() + 1);
    for (int i = 0; i <= H.degree(); ++i) {
        RingElement ci = H.coeff(i);
        low.push_back(base->add(ci.parts()[0], ci.parts()[1]));
        high.push_back(ci.parts()[1]);
    }
    Polynomial H_low(base, std::move(low));
    Polynomial H_high(base, std::move(high));
    if (!(H_low == fac.h())) {
        throw PreconditionError(
            "characteristic polynomial at g = 1 differs from the factorization");
    }
    int s = fac.h0().degree();
    int r = fac.h1().degree();
    int n = s + r;
    if (H_high.degree() >= n) throw VerificationError("g-part exceeds the expected degree");
    auto Minv = try_invert_matrix(pair_system_matrix(fac.h0(), fac.h1()));
    if (!Minv) throw VerificationError("correction system is singular despite a unit resultant");
    Matrix rhs(base, n, 1);
    for (int i = 0; i < n; ++i) rhs.set(i, 0, H_high.coeff(i));
    Matrix sol = (*Minv) * rhs;
    // H0 coefficient i is (h0_i + P_i) + P_i*g, i.e. h0_i + P_i*u.
    auto assemble = [&](const Polynomial& base_poly, int deg, int offset) {
        std::vector<RingElement> coeffs;
        coeffs.reserve(deg + 1);
        for (int i = 0; i <= deg; ++i) {
            RingElement corr = i < deg ? sol.at(offset + i, 0) : base->zero();
            coeffs.push_back(
                ext->make({base->add(base_poly.coeff(i), corr), corr}));
        }
        return Polynomial(ext, std::move(coeffs));
    };
    Polynomial H0 = assemble(fac.h0(), s, 0);
    Polynomial H1 = assemble(fac.h1(), r, s);
    if (!(H0.mul(H1) == H)) {
        throw VerificationError("lifted product differs from the characteristic polynomial");
    }
    for (int i = 0; i <= s; ++i) {
        RingElement ci = H0.coeff(i);
        if (!(base->add(ci.parts()[0], ci.parts()[1]) == fac.h0().coeff(i))) {
            throw VerificationError("lifted factor does not reduce to h0 at g = 1");
        }
    }
    for (int i = 0; i <= r; ++i) {
        RingElement ci = H1.coeff(i);
        if (!(base->add(ci.parts()[0], ci.parts()[1]) == fac.h1().coeff(i))) {
            throw VerificationError("lifted factor does not reduce to h1 at g = 1");
        }
    }
    SrFactorization ext_fac = SrFactorization::make_checked(H, H0, H1);
    return LiftedFactorization(std::move(ext_fac), fac, LiftKind::GroupRing, 0);
}

CleanCertificate lifted_certificate(const Matrix& A, const LiftedFactorization& lifted) {
    return build_witness(A, lifted.as_sr_factorization());
}

}  // namespace cleanmat
