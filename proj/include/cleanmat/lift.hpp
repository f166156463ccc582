#pragma once

#include <utility>

#include "cleanmat/clean.hpp"
#include "cleanmat/matrices.hpp"
#include "cleanmat/poly.hpp"

namespace cleanmat {

enum class LiftKind { Series, Quotient, GroupRing };

class LiftedFactorization;

// Transports fac (a factorization of the constant part's characteristic
// polynomial over the base ring) to a factorization of charpoly(A) over the
// extension ring, solving one linear system per coefficient order.  The
// system matrix is the coefficient matrix of (P, Q) -> P*h1 + h0*Q on
// polynomials with deg P < deg h0, deg Q < deg h1; its determinant is the
// resultant of (h0, h1) up to sign, a unit by fac, so every order has a
// unique exact solution.
LiftedFactorization lift_series(const Matrix& A, const SrFactorization& fac);

// Same carrier and recursion as lift_series with truncation length m.
LiftedFactorization lift_quotient(const Matrix& A, const SrFactorization& fac);

// Applies lift_series / lift_quotient once per nesting level, innermost
// first; at most two consecutive series-type levels are supported.
LiftedFactorization lift_tower(const Matrix& A, const SrFactorization& fac);

// Group-ring transport over a characteristic-2 base: R[C2] = R[u]/(u^2) with
// u = g + 1, so a single correction order suffices.  fac must factor the
// characteristic polynomial of A evaluated at g -> 1.
LiftedFactorization lift_groupring(const Matrix& A, const SrFactorization& fac);

// Certified factorization over an extension ring: H0*H1 = H exactly, H0 and
// H1 reduce to base.h0 / base.h1 under x -> 0 (series, quotient) or g -> 1
// (group ring), H0(0) and H1(1) are units, and the extension resultant is a
// unit.  All of this is verified when the lift constructs the object.
class LiftedFactorization {
public:
    const Polynomial& H() const { return ext_.h(); }
    const Polynomial& H0() const { return ext_.h0(); }
    const Polynomial& H1() const { return ext_.h1(); }
    const SrFactorization& base() const { return base_; }
    LiftKind kind() const { return kind_; }
    int order() const { return order_; }  // truncation length; 0 for the group ring
    const SrFactorization& as_sr_factorization() const { return ext_; }

private:
    LiftedFactorization(SrFactorization ext, SrFactorization base, LiftKind kind, int order)
        : ext_(std::move(ext)), base_(std::move(base)), kind_(kind), order_(order) {}

    friend LiftedFactorization lift_series(const Matrix&, const SrFactorization&);
    friend LiftedFactorization lift_quotient(const Matrix&, const SrFactorization&);
    friend LiftedFactorization lift_groupring(const Matrix&, const SrFactorization&);

    SrFactorization ext_;
    SrFactorization base_;
    LiftKind kind_;
    int order_;
};

// build_witness over the extension ring with the transported factorization.
CleanCertificate lifted_certificate(const Matrix& A, const LiftedFactorization& lifted);

}  // namespace cleanmat
