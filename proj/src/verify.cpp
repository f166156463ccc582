#include "cleanmat/verify.hpp"

#include <string>

#include "cleanmat/errors.hpp"
#include "cleanmat/matrices.hpp"
#include "cleanmat/poly.hpp"

namespace cleanmat {

void verify_report(const Json& report) {
    const Json& verdict = json_require(report, "verdict");
    if (!verdict.is_string()) throw SchemaError("\"verdict\" must be a string");
    if (verdict.get<std::string>() != "strongly_clean") return;

    RingPtr ring = parse_ring(json_require(report, "ring"));
    Matrix a = parse_matrix(ring, json_require(report, "matrix"));
    Matrix e = parse_matrix(ring, json_require(report, "E"));
    Matrix u = parse_matrix(ring, json_require(report, "U"));
    Matrix u_inv = parse_matrix(ring, json_require(report, "U_inv"));

    if (!(e.add(u) == a)) {
        throw VerificationError("reported E + U does not equal the matrix");
    }
    if (!(e.mul(e) == e)) {
        throw VerificationError("reported E is not idempotent");
    }
    if (!(e.mul(u) == u.mul(e))) {
        throw VerificationError("reported E and U do not commute");
    }
    Matrix identity = Matrix::identity(ring, a.rows());
    if (!(u.mul(u_inv) == identity) || !(u_inv.mul(u) == identity)) {
        throw VerificationError("reported U_inv is not a two-sided inverse of U");
    }

    if (report.contains("h0")) {
        Polynomial h0 = parse_poly(ring, json_require(report, "h0"));
        Polynomial h1 = parse_poly(ring, json_require(report, "h1"));
        Polynomial cu = parse_poly(ring, json_require(report, "u"));
        Polynomial cv = parse_poly(ring, json_require(report, "v"));
        if (!h0.is_monic() || !h1.is_monic()) {
            throw VerificationError("reported factors are not monic");
        }
        if (!(h0.mul(h1) == charpoly(a))) {
            throw VerificationError(
                "reported factors do not multiply to the characteristic polynomial");
        }
        if (!(cu.mul(h0).add(cv.mul(h1)) == Polynomial::one(ring))) {
            throw VerificationError("reported cofactors do not witness coprimality");
        }
        if (!ring->is_unit(h0.eval(ring->zero()))) {
            throw VerificationError("reported h0 is not invertible at zero");
        }
        if (!ring->is_unit(h1.eval(ring->one()))) {
            throw VerificationError("reported h1 is not invertible at one");
        }
    }
}

}  // namespace cleanmat
