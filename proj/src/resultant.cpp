#include "cleanmat/resultant.hpp"

#include <algorithm>

namespace cleanmat {

BezoutCertificate BezoutCertificate::make_checked(Polynomial u, Polynomial v, Polynomial f,
                                                  Polynomial g) {
    const RingPtr& ring = f.ring_ptr();
    Polynomial lhs = u * f + v * g;
    if (!(lhs == Polynomial::one(ring))) {
        throw VerificationError("bezout identity u*f + v*g = 1 failed to re-verify");
    }
    if (g.degree() > 0 && u.degree() >= g.degree()) {
        throw VerificationError("bezout cofactor u has degree >= deg g");
    }
    if (f.degree() > 0 && v.degree() >= f.degree()) {
        throw VerificationError("bezout cofactor v has degree >= deg f");
    }
    return BezoutCertificate(std::move(u), std::move(v), std::move(f), std::move(g));
}

Matrix sylvester_matrix(const Polynomial& f, const Polynomial& g) {
    if (!f.is_monic()) throw PreconditionError("sylvester_matrix needs monic f");
    if (g.is_zero()) throw PreconditionError("sylvester_matrix needs nonzero g");
    const RingPtr& ring = f.ring_ptr();
    if (!ring->same_as(g.ring())) {
        throw DescriptorMismatchError("sylvester operands over different rings");
    }
    const int m = f.degree();
    const int n = g.degree();
    if (m + n < 1) throw PreconditionError("sylvester_matrix needs a positive total degree");

    Matrix S(ring, m + n, m + n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k <= m; ++k) S.set(i, i + k, f.coeff(m - k));
    }
    for (int j = 0; j < m; ++j) {
        for (int k = 0; k <= n; ++k) S.set(n + j, j + k, g.coeff(n - k));
    }
    return S;
}

RingElement resultant(const Polynomial& f, const Polynomial& g) {
    const RingPtr& ring = f.ring_ptr();
    if (f.is_one() || g.is_one()) return ring->one();
    return determinant(sylvester_matrix(f, g));
}

std::optional<BezoutCertificate> bezout_certificate(const Polynomial& f, const Polynomial& g) {
    if (!f.is_monic()) throw PreconditionError("bezout_certificate needs monic f");
    if (g.is_zero()) throw PreconditionError("bezout_certificate needs nonzero g");
    const RingPtr& ring = f.ring_ptr();

    if (f.is_one()) {
        return BezoutCertificate::make_checked(Polynomial::one(ring), Polynomial::zero(ring), f,
                                               g);
    }
    if (g.degree() == 0) {
        auto c_inv = ring->try_invert(g.coeff(0));
        if (!c_inv) return std::nullopt;
        return BezoutCertificate::make_checked(Polynomial::zero(ring),
                                               Polynomial::constant(*c_inv), f, g);
    }

    Matrix S = sylvester_matrix(f, g);
    RingElement res = determinant(S);
    auto res_inv = ring->try_invert(res);
    if (!res_inv) return std::nullopt;

    // The last row w of adj(S) satisfies w*S = (0, ..., 0, res), and row i of
    // S is t^(n-1-i) * f for i < n, t^(m-1-(i-n)) * g above that, so w reads
    // off u', v' with u'*f + v'*g = res.
    Matrix adj = adjugate(S);
    const int m = f.degree();
    const int n = g.degree();
    const int last = m + n - 1;
    std::vector<RingElement> u_coeffs(static_cast<size_t>(n), ring->zero());
    for (int i = 0; i < n; ++i) u_coeffs[static_cast<size_t>(n - 1 - i)] = adj.at(last, i);
    std::vector<RingElement> v_coeffs(static_cast<size_t>(m), ring->zero());
    for (int j = 0; j < m; ++j) v_coeffs[static_cast<size_t>(m - 1 - j)] = adj.at(last, n + j);

    Polynomial u = Polynomial(ring, std::move(u_coeffs)).scale(*res_inv);
    Polynomial v = Polynomial(ring, std::move(v_coeffs)).scale(*res_inv);
    return BezoutCertificate::make_checked(std::move(u), std::move(v), f, g);
}

bool coprime(const Polynomial& f, const Polynomial& g) {
    if (f.is_monic()) return f.ring().is_unit(resultant(f, g));
    if (g.is_monic()) return g.ring().is_unit(resultant(g, f));
    throw PreconditionError("coprime needs at least one monic argument");
}

namespace {

std::vector<Int> prime_factors_ascending(Int v) {
    if (v < 0) v = -v;
    std::vector<Int> primes;
    for (Int d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            primes.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) primes.push_back(v);
    return primes;
}

Polynomial reduce_int_poly(const Polynomial& p, const RingPtr& target) {
    return map_coeffs(p, target,
                      [&](const RingElement& c) { return target->from_int(c.scalar()); });
}

// Smallest-degree monic common divisor over a finite field, by exhaustive
// candidate search; empty when the reductions are coprime.
std::optional<Polynomial> common_factor_over_field(const Polynomial& fbar,
                                                   const Polynomial& gbar) {
    const RingPtr& field = fbar.ring_ptr();
    if (gbar.is_zero()) {
        if (fbar.degree() >= 1) return fbar;  // everything divides zero
        return std::nullopt;
    }
    int max_deg = std::min(fbar.degree(), gbar.degree());
    Int card = *field->cardinality();
    for (int d = 1; d <= max_deg; ++d) {
        Int total = 1;
        for (int i = 0; i < d; ++i) total *= card;
        for (Int k = 0; k < total; ++k) {
            std::vector<RingElement> coeffs;
            coeffs.reserve(static_cast<size_t>(d) + 1);
            Int rest = k;
            for (int i = 0; i < d; ++i) {
                coeffs.push_back(field->element_at(rest % card));
                rest /= card;
            }
            coeffs.push_back(field->one());
            Polynomial cand(field, std::move(coeffs));
            if (divide_by_monic(fbar, cand).second.is_zero() &&
                divide_by_monic(gbar, cand).second.is_zero()) {
                return cand;
            }
        }
    }
    return std::nullopt;
}

CoprimalityReport integers_all_residues(const Polynomial& f, const Polynomial& g) {
    const RingPtr& ring = f.ring_ptr();
    RingElement res = resultant(f, g);
    if (ring->is_unit(res)) return {true, std::nullopt, "resultant is a unit"};

    auto witness_at = [&](const Int& p) -> std::optional<Polynomial> {
        RingPtr fp = Ring::integers_mod(p);
        return common_factor_over_field(reduce_int_poly(f, fp), reduce_int_poly(g, fp));
    };

    if (res.scalar() == 0) {
        // A zero resultant forces a monic integer common factor, which
        // survives reduction modulo every prime.
        for (Int p = 2;; ++p) {
            if (!is_prime(p)) continue;
            if (auto d = witness_at(p)) {
                return {false, p, "common factor " + d->to_string() + " modulo " + p.str()};
            }
            if (p > 100) {
                throw VerificationError("zero resultant but no small witness prime found");
            }
        }
    }
    for (const Int& p : prime_factors_ascending(res.scalar())) {
        if (auto d = witness_at(p)) {
            return {false, p, "common factor " + d->to_string() + " modulo " + p.str()};
        }
    }
    // A non-unit resultant over the integers always has a prime divisor whose
    // residue field sees a common factor; reaching here falsifies that.
    throw VerificationError("non-unit resultant but no witness prime confirmed");
}

CoprimalityReport local_all_residues(const Polynomial& f, const Polynomial& g,
                                     const LocalData& local) {
    const RingPtr& field = local.residue;
    Polynomial fbar = map_coeffs(f, field, local.reduce);
    Polynomial gbar = map_coeffs(g, field, local.reduce);
    if (!fbar.is_monic()) {
        throw PreconditionError("monic argument must stay monic in the residue field");
    }
    if (auto d = common_factor_over_field(fbar, gbar)) {
        return {false, field->characteristic(),
                "common factor " + d->to_string() + " over residue field " + field->name()};
    }
    return {true, std::nullopt, "coprime over residue field " + field->name()};
}

}  // namespace

CoprimalityReport coprime_all_residues(const Polynomial& f, const Polynomial& g) {
    if (!f.is_monic()) {
        if (g.is_monic()) return coprime_all_residues(g, f);
        throw PreconditionError("coprime_all_residues needs at least one monic argument");
    }
    if (f.is_one() || g.is_one()) return {true, std::nullopt, "degree-zero argument 1"};
    if (g.is_zero()) throw PreconditionError("coprime_all_residues needs nonzero g");

    const RingPtr& ring = f.ring_ptr();
    if (ring->kind() == Ring::Kind::Integers) return integers_all_residues(f, g);
    if (auto local = ring->local_data(); local && local->residue->is_finite()) {
        return local_all_residues(f, g, *local);
    }
    throw UnsupportedRingError("coprime_all_residues supports Integers and local rings, not " +
                               ring->name());
}

}  // namespace cleanmat
