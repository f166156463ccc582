#pragma once

#include <optional>
#include <string>

#include "cleanmat/matrices.hpp"
#include "cleanmat/poly.hpp"

namespace cleanmat {

// Witness that f and g generate the unit ideal: u*f + v*g = 1, re-verified on
// construction, with deg u < deg g and deg v < deg f when both are positive.
class BezoutCertificate {
public:
    static BezoutCertificate make_checked(Polynomial u, Polynomial v, Polynomial f,
                                          Polynomial g);

    const Polynomial& u() const { return u_; }
    const Polynomial& v() const { return v_; }
    const Polynomial& f() const { return f_; }
    const Polynomial& g() const { return g_; }

private:
    BezoutCertificate(Polynomial u, Polynomial v, Polynomial f, Polynomial g)
        : u_(std::move(u)), v_(std::move(v)), f_(std::move(f)), g_(std::move(g)) {}

    Polynomial u_, v_, f_, g_;
};

// The (m+n) x (m+n) matrix of shifted coefficient rows: n rows of the monic
// f's descending coefficients, then m rows of g's.  g need not be monic but
// must be nonzero; at least one degree must be positive.
Matrix sylvester_matrix(const Polynomial& f, const Polynomial& g);

// Determinant of the Sylvester matrix; res(f, 1) = res(1, g) = 1 by the
// empty-determinant convention so trivial factor pairs pass the gate.
RingElement resultant(const Polynomial& f, const Polynomial& g);

// Nonempty iff res(f, g) is a unit.  The coefficients come from the last row
// of the Sylvester adjugate scaled by res^-1, then the identity u*f + v*g = 1
// is re-verified, so row/column orientation cannot silently corrupt results.
std::optional<BezoutCertificate> bezout_certificate(const Polynomial& f, const Polynomial& g);

// res(f, g) unit test, swapping arguments if only g is monic.
bool coprime(const Polynomial& f, const Polynomial& g);

// Coprimality across every residue field of the coefficient ring.
// Integers: true iff res = ±1, otherwise a witness prime p dividing res under
// which the reductions share a monic common factor.  Supported local rings:
// the test over the single residue field.
struct CoprimalityReport {
    bool coprime_everywhere = false;
    std::optional<Int> witness_prime;  // Integers: the prime; local: residue characteristic
    std::string detail;
};

CoprimalityReport coprime_all_residues(const Polynomial& f, const Polynomial& g);

}  // namespace cleanmat
