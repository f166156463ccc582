#include "cleanmat/clean.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cleanmat/errors.hpp"
#include "cleanmat/lift.hpp"

namespace cleanmat {

namespace {

using Rat = boost::multiprecision::cpp_rational;

// Degree first, then the coefficient tuple from c_0 up, each coordinate under
// the ring's canonical element order.  Total on monic polynomials.
bool poly_less(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        RingElement ca = a.coeff(i);
        RingElement cb = b.coeff(i);
        if (!(ca == cb)) return a.ring().element_less(ca, cb);
    }
    return false;
}

void insert_unique(std::vector<Polynomial>& out, const Polynomial& p) {
    for (const Polynomial& q : out) {
        if (q == p) return;
    }
    out.push_back(p);
}

// 0, -1, 1, -2, 2, ...
Int sample_point(int k) {
    Int mag = (k + 1) / 2;
    return (k % 2 == 1) ? -mag : mag;
}

std::vector<Int> signed_divisors(const Int& v, const SearchLimits& limits) {
    Int a = abs(v);
    // trial division walks up to sqrt(a)
    if (a > Int(limits.factor_budget) * limits.factor_budget) {
        throw GuardError("sample value magnitude exceeds the factor search budget");
    }
    std::vector<Int> divs;
    for (Int i = 1; i * i <= a; ++i) {
        if (a % i == 0) {
            divs.push_back(i);
            if (i * i != a) divs.push_back(a / i);
        }
    }
    std::sort(divs.begin(), divs.end());
    std::vector<Int> out;
    out.reserve(2 * divs.size());
    for (const Int& d : divs) {
        out.push_back(d);
        out.push_back(-d);
    }
    return out;
}

// Coefficients of the unique degree < points.size() polynomial through
// (points[i], values[i]), lowest first.
std::vector<Rat> lagrange_coeffs(const std::vector<Int>& points, const std::vector<Int>& values) {
    std::size_t k = points.size();
    std::vector<Rat> acc(k, Rat(0));
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Rat> basis{Rat(1)};
        Rat denom(1);
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i) continue;
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (std::size_t c = 0; c < basis.size(); ++c) {
                next[c + 1] += basis[c];
                next[c] -= basis[c] * Rat(points[j]);
            }
            basis = std::move(next);
            denom *= Rat(points[i]) - Rat(points[j]);
        }
        Rat scale = Rat(values[i]) / denom;
        for (std::size_t c = 0; c < basis.size(); ++c) acc[c] += basis[c] * scale;
    }
    return acc;
}

// Every monic divisor of h over the integers.  A degree-d divisor g has
// g(k) | h(k) at each sample point, so interpolating all signed divisor
// tuples through d+1 points and keeping the integral monic exact divisors is
// exhaustive.  A root at a sample point is peeled off first so the remaining
// sample values are nonzero.
std::vector<Polynomial> all_monic_divisors(const Polynomial& h, const SearchLimits& limits) {
    const RingPtr& ring = h.ring_ptr();
    int n = h.degree();
    std::vector<Polynomial> out;
    if (n == 0) {
        out.push_back(Polynomial::one(ring));
        return out;
    }
    int npts = n / 2 + 1;
    std::vector<Int> pts(npts);
    std::vector<Int> vals(npts);
    for (int k = 0; k < npts; ++k) {
        pts[k] = sample_point(k);
        vals[k] = h.eval(ring->from_int(pts[k])).scalar();
    }
    for (int k = 0; k < npts; ++k) {
        if (vals[k] != 0) continue;
        Polynomial lin = Polynomial::linear_root(ring->from_int(pts[k]));
        auto [q, rem] = divide_by_monic(h, lin);
        if (!rem.is_zero()) throw VerificationError("root factor does not divide exactly");
        for (const Polynomial& w : all_monic_divisors(q, limits)) {
            insert_unique(out, w);
            insert_unique(out, w.mul(lin));
        }
        return out;
    }
    insert_unique(out, Polynomial::one(ring));
    insert_unique(out, h);
    for (int d = 1; d <= n / 2; ++d) {
        int k = d + 1;
        std::vector<std::vector<Int>> cand(k);
        Int total = 1;
        for (int i = 0; i < k; ++i) {
            cand[i] = signed_divisors(vals[i], limits);
            total *= Int(cand[i].size());
        }
        if (total > limits.factor_budget) {
            throw GuardError("factor search budget exceeded at divisor degree " + std::to_string(d));
        }
        std::vector<Int> sub_pts(pts.begin(), pts.begin() + k);
        std::vector<std::size_t> idx(k, 0);
        while (true) {
            std::vector<Int> vv(k);
            for (int i = 0; i < k; ++i) vv[i] = cand[i][idx[i]];
            std::vector<Rat> coeffs = lagrange_coeffs(sub_pts, vv);
            bool ok = true;
            for (const Rat& c : coeffs) {
                if (denominator(c) != 1) {
                    ok = false;
                    break;
                }
            }
            if (ok && numerator(coeffs[d]) == 1) {
                std::vector<RingElement> zc;
                zc.reserve(coeffs.size());
                for (const Rat& c : coeffs) zc.push_back(ring->from_int(numerator(c)));
                Polynomial g(ring, zc);
                if (g.degree() == d) {
                    auto [q, rem] = divide_by_monic(h, g);
                    if (rem.is_zero()) {
                        insert_unique(out, g);
                        insert_unique(out, q);
                    }
                }
            }
            int pos = k - 1;
            while (pos >= 0) {
                if (++idx[pos] == cand[pos].size()) {
                    idx[pos] = 0;
                    --pos;
                } else {
                    break;
                }
            }
            if (pos < 0) break;
        }
    }
    return out;
}

// Exhaustive per-degree sweep over a finite coefficient ring.  The odometer
// treats c_0 as the most significant digit, so candidates of equal degree
// come out in coefficient-lexicographic order under the enumeration index.
std::vector<std::pair<Polynomial, Polynomial>> finite_factor_pairs(const Polynomial& h,
                                                                   const SearchLimits& limits) {
    const RingPtr& ring = h.ring_ptr();
    Int card = *ring->cardinality();
    int n = h.degree();
    std::vector<std::pair<Polynomial, Polynomial>> pairs;
    for (int d = 0; d <= n; ++d) {
        Int total = 1;
        for (int i = 0; i < d; ++i) {
            total *= card;
            if (total > limits.factor_budget) {
                throw GuardError("factor search budget exceeded at divisor degree " +
                                 std::to_string(d));
            }
        }
        std::vector<Int> idx(d, 0);
        while (true) {
            std::vector<RingElement> coeffs;
            coeffs.reserve(d + 1);
            for (int i = 0; i < d; ++i) coeffs.push_back(ring->element_at(idx[i]));
            coeffs.push_back(ring->one());
            Polynomial g(ring, std::move(coeffs));
            auto [q, rem] = divide_by_monic(h, g);
            if (rem.is_zero()) pairs.emplace_back(std::move(g), std::move(q));
            int pos = d - 1;
            while (pos >= 0) {
                idx[pos] += 1;
                if (idx[pos] == card) {
                    idx[pos] = 0;
                    --pos;
                } else {
                    break;
                }
            }
            if (pos < 0) break;
        }
    }
    return pairs;
}

bool factor_enumeration_supported(const Ring& ring) {
    return ring.kind() == Ring::Kind::Integers || ring.is_finite();
}

// The four 2x2 integer patterns with a nontrivial commuting idempotent:
// idempotent, negated idempotent, shifted idempotent, and A = 3F - I.
std::optional<CleanCertificate> special_form_2x2(const Matrix& A) {
    const RingPtr& ring = A.ring_ptr();
    Matrix I = Matrix::identity(ring, 2);
    Matrix Z = Matrix::zero(ring, 2);
    if (A * A == A && A != Z && A != I) {
        // E = I - A, U = 2A - I; U^2 = I
        return CleanCertificate::make_checked(A, I - A, A + A - I,
                                              CertificateSource::SpecialForm2x2);
    }
    if (A * A == -A && A != Z && A != -I) {
        // E = I + A, U = -I
        return CleanCertificate::make_checked(A, I + A, -I, CertificateSource::SpecialForm2x2);
    }
    Matrix B = A - I;
    if (B * B == B && B != Z && B != I) {
        // E = A - I, U = I
        return CleanCertificate::make_checked(A, B, I, CertificateSource::SpecialForm2x2);
    }
    bool divisible = true;
    Matrix ApI = A + I;
    for (int i = 0; i < 2 && divisible; ++i) {
        for (int j = 0; j < 2 && divisible; ++j) {
            if (ApI.at(i, j).scalar() % 3 != 0) divisible = false;
        }
    }
    if (divisible) {
        Matrix F(ring, 2, 2);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                F.set(i, j, ring->from_int(ApI.at(i, j).scalar() / 3));
            }
        }
        if (F * F == F && F != Z && F != I) {
            // E = F, U = 2F - I; U^2 = I
            return CleanCertificate::make_checked(A, F, A - F, CertificateSource::SpecialForm2x2);
        }
    }
    return std::nullopt;
}

// Exact solve of the order-j transport system for a 2x2 unknown X:
//   F X + X F - X = S     (idempotency at order j)
//   X A0 - A0 X   = T     (commutation at order j)
// The homogeneous system only has the zero solution, so a consistent system
// determines X uniquely; a non-integer or inconsistent solve certifies that
// no decomposition extends to this order.
std::optional<Matrix> solve_transport(const Matrix& F, const Matrix& A0, const Matrix& S,
                                      const Matrix& T) {
    const RingPtr& zr = F.ring_ptr();
    std::array<std::array<Rat, 5>, 8> rows{};
    int rix = 0;
    for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
            for (int r = 0; r < 2; ++r) {
                for (int s = 0; s < 2; ++s) {
                    Rat c(0);
                    if (s == q) c += Rat(F.at(p, r).scalar());
                    if (r == p) c += Rat(F.at(s, q).scalar());
                    if (r == p && s == q) c -= 1;
                    rows[rix][r * 2 + s] = c;
                }
            }
            rows[rix][4] = Rat(S.at(p, q).scalar());
            ++rix;
        }
    }
    for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
            for (int r = 0; r < 2; ++r) {
                for (int s = 0; s < 2; ++s) {
                    Rat c(0);
                    if (r == p) c += Rat(A0.at(s, q).scalar());
                    if (s == q) c -= Rat(A0.at(p, r).scalar());
                    rows[rix][r * 2 + s] = c;
                }
            }
            rows[rix][4] = Rat(T.at(p, q).scalar());
            ++rix;
        }
    }
    int rank = 0;
    std::array<int, 4> pivot_row{-1, -1, -1, -1};
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int r = rank; r < 8; ++r) {
            if (rows[r][col] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int r = 0; r < 8; ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Rat f = rows[r][col] / rows[rank][col];
            for (int c = col; c <= 4; ++c) rows[r][c] -= f * rows[rank][c];
        }
        pivot_row[col] = rank;
        ++rank;
    }
    for (int r = rank; r < 8; ++r) {
        if (rows[r][4] != 0) return std::nullopt;
    }
    for (int col = 0; col < 4; ++col) {
        if (pivot_row[col] < 0) throw VerificationError("idempotent transport system lost rank");
    }
    Matrix X(zr, 2, 2);
    for (int col = 0; col < 4; ++col) {
        const auto& row = rows[pivot_row[col]];
        Rat val = row[4] / row[col];
        if (denominator(val) != 1) return std::nullopt;
        X.set(col / 2, col % 2, zr->from_int(numerator(val)));
    }
    return X;
}

// Order-by-order continuation of the forced constant idempotent F through
// the series coefficients of A.  Conclusive: failure at any order proves the
// matrix is not strongly clean.
Verdict transport_idempotent(const Matrix& A, const Matrix& A0, const Matrix& F) {
    const RingPtr& ring = A.ring_ptr();
    const RingPtr& zr = A0.ring_ptr();
    int length = ring->order();
    std::vector<Matrix> Aj;
    Aj.reserve(length);
    for (int j = 0; j < length; ++j) {
        Matrix part(zr, 2, 2);
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) part.set(r, c, A.at(r, c).parts()[j]);
        }
        Aj.push_back(std::move(part));
    }
    std::vector<Matrix> Ej;
    Ej.reserve(length);
    Ej.push_back(F);
    for (int j = 1; j < length; ++j) {
        Matrix S = Matrix::zero(zr, 2);
        for (int k = 1; k < j; ++k) S = S - Ej[k] * Ej[j - k];
        Matrix T = Matrix::zero(zr, 2);
        for (int k = 0; k < j; ++k) T = T - (Ej[k] * Aj[j - k] - Aj[j - k] * Ej[k]);
        auto X = solve_transport(F, A0, S, T);
        if (!X) {
            return Verdict::not_clean(
                "any decomposition is forced to start from the shifted idempotent of the "
                "constant part, and its continuation has no integer solution at series order " +
                std::to_string(j));
        }
        Ej.push_back(std::move(*X));
    }
    Matrix E(ring, 2, 2);
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            std::vector<RingElement> parts;
            parts.reserve(length);
            for (int j = 0; j < length; ++j) parts.push_back(Ej[j].at(r, c));
            E.set(r, c, ring->make(std::move(parts)));
        }
    }
    Matrix U = A - E;
    return Verdict::clean(
        CleanCertificate::make_checked(A, E, U, CertificateSource::SpecialForm2x2));
}

}  // namespace

std::string to_string(CertificateSource source) {
    switch (source) {
        case CertificateSource::TrivialUnit: return "trivial_unit";
        case CertificateSource::TrivialUnipotent: return "trivial_unipotent";
        case CertificateSource::Factorization: return "factorization";
        case CertificateSource::BruteForce: return "brute_force";
        case CertificateSource::SpecialForm2x2: return "special_form_2x2";
    }
    throw Error("unhandled certificate source");
}

SrFactorization SrFactorization::make_checked(Polynomial h, Polynomial h0, Polynomial h1) {
    if (!h.is_monic() || !h0.is_monic() || !h1.is_monic()) {
        throw VerificationError("factorization parts must be monic");
    }
    if (!(h0.mul(h1) == h)) throw VerificationError("h0 * h1 != h");
    const RingPtr& ring = h.ring_ptr();
    if (!ring->is_unit(h0.eval(ring->zero()))) throw VerificationError("h0(0) is not a unit");
    if (!ring->is_unit(h1.eval(ring->one()))) throw VerificationError("h1(1) is not a unit");
    auto bez = bezout_certificate(h0, h1);
    if (!bez) throw VerificationError("h0 and h1 are not coprime");
    return SrFactorization(std::move(h), std::move(h0), std::move(h1), std::move(*bez));
}

CleanCertificate CleanCertificate::make_checked(const Matrix& A, Matrix E, Matrix U,
                                                CertificateSource source,
                                                std::optional<SrFactorization> fac) {
    if (E + U != A) throw VerificationError("E + U != A");
    if (E * E != E) throw VerificationError("E is not idempotent");
    if (E * U != U * E) throw VerificationError("E and U do not commute");
    auto inv = try_invert_matrix(U);
    if (!inv) throw VerificationError("U is not invertible");
    return CleanCertificate(std::move(E), std::move(U), std::move(*inv), source, std::move(fac));
}

bool sr_member(const Polynomial& f, const RingElement& r) {
    return f.is_monic() && f.ring().is_unit(f.eval(r));
}

std::vector<std::pair<Polynomial, Polynomial>> enumerate_monic_factor_pairs(
    const Polynomial& h, const SearchLimits& limits) {
    if (!h.is_monic()) throw PreconditionError("factor enumeration requires a monic polynomial");
    if (h.degree() < 1) throw PreconditionError("factor enumeration requires degree >= 1");
    const RingPtr& ring = h.ring_ptr();
    if (ring->kind() == Ring::Kind::Integers) {
        std::vector<Polynomial> divisors = all_monic_divisors(h, limits);
        std::sort(divisors.begin(), divisors.end(), poly_less);
        std::vector<std::pair<Polynomial, Polynomial>> pairs;
        pairs.reserve(divisors.size());
        for (const Polynomial& g : divisors) {
            auto [q, rem] = divide_by_monic(h, g);
            if (!rem.is_zero()) throw VerificationError("divisor list contains a non-divisor");
            pairs.emplace_back(g, std::move(q));
        }
        return pairs;
    }
    if (ring->is_finite()) return finite_factor_pairs(h, limits);
    throw UnsupportedRingError("factor enumeration covers the integers and finite rings, not " +
                               ring->name());
}

std::optional<SrFactorization> find_sr_factorization(const Polynomial& h,
                                                     const SearchLimits& limits) {
    const RingPtr& ring = h.ring_ptr();
    RingElement at_zero = ring->zero();
    RingElement at_one = ring->one();
    for (const auto& [h0, h1] : enumerate_monic_factor_pairs(h, limits)) {
        if (!sr_member(h0, at_zero) || !sr_member(h1, at_one)) continue;
        if (!bezout_certificate(h0, h1)) continue;
        return SrFactorization::make_checked(h, h0, h1);
    }
    return std::nullopt;
}

CleanCertificate build_witness(const Matrix& A, const SrFactorization& fac) {
    if (!A.is_square()) throw PreconditionError("build_witness requires a square matrix");
    if (!(charpoly(A) == fac.h())) {
        throw PreconditionError("factorization does not match the characteristic polynomial");
    }
    // u*h0 + v*h1 = 1 and h0*h1 = charpoly(A), so E = (u*h0)(A) satisfies
    // E(E - I) = -(u*v*h0*h1)(A) = 0.
    Matrix E = eval_at_matrix(fac.bezout().u().mul(fac.h0()), A);
    Matrix U = A - E;
    return CleanCertificate::make_checked(A, E, U, CertificateSource::Factorization, fac);
}

Verdict brute_force(const Matrix& A, const SearchLimits& limits) {
    if (!A.is_square()) throw PreconditionError("brute_force requires a square matrix");
    const RingPtr& ring = A.ring_ptr();
    auto card = ring->cardinality();
    if (!card) throw UnsupportedRingError("brute_force requires a finite ring");
    int cells = A.rows() * A.rows();
    Int total = 1;
    for (int i = 0; i < cells; ++i) {
        total *= *card;
        if (total > limits.brute_budget) {
            throw GuardError("idempotent enumeration budget exceeded for " + ring->name());
        }
    }
    std::vector<Int> idx(cells, 0);
    while (true) {
        std::vector<RingElement> entries;
        entries.reserve(cells);
        for (int i = 0; i < cells; ++i) entries.push_back(ring->element_at(idx[i]));
        Matrix E(ring, A.rows(), A.rows(), std::move(entries));
        if (E * E == E && A * E == E * A) {
            Matrix U = A - E;
            if (ring->is_unit(determinant(U))) {
                return Verdict::clean(
                    CleanCertificate::make_checked(A, E, U, CertificateSource::BruteForce));
            }
        }
        int pos = 0;
        while (pos < cells) {
            idx[pos] += 1;
            if (idx[pos] == *card) {
                idx[pos] = 0;
                ++pos;
            } else {
                break;
            }
        }
        if (pos == cells) break;
    }
    return Verdict::not_clean("exhausted every idempotent over " + ring->name() +
                              ": none commutes with the matrix and leaves a unit complement");
}

Verdict decide(const Matrix& A, const SearchLimits& limits) {
    if (!A.is_square()) throw PreconditionError("decide requires a square matrix");
    const RingPtr& ring = A.ring_ptr();
    if (!projective_free_supported(*ring)) {
        throw UnsupportedRingError("ring " + ring->name() +
                                   " is rejected: the decision criterion needs a "
                                   "projective-free coefficient ring");
    }
    int n = A.rows();
    Matrix I = Matrix::identity(ring, n);
    if (ring->is_unit(determinant(A))) {
        return Verdict::clean(CleanCertificate::make_checked(A, Matrix::zero(ring, n), A,
                                                             CertificateSource::TrivialUnit));
    }
    if (ring->is_unit(determinant(I - A))) {
        return Verdict::clean(
            CleanCertificate::make_checked(A, I, A - I, CertificateSource::TrivialUnipotent));
    }
    if (factor_enumeration_supported(*ring)) {
        Polynomial h = charpoly(A);
        if (auto fac = find_sr_factorization(h, limits)) {
            return Verdict::clean(build_witness(A, *fac));
        }
        if (is_companion(A)) {
            return Verdict::not_clean("companion, no S0/S1 coprime factorization of " +
                                      h.to_string());
        }
        if (is_cyclic(A, limits.cyclic_budget)) {
            return Verdict::not_clean(
                "cyclic (verified Krylov witness), no S0/S1 coprime factorization of " +
                h.to_string());
        }
    }
    if (ring->is_finite()) return brute_force(A, limits);
    if (ring->kind() == Ring::Kind::Integers && n == 2) {
        if (auto cert = special_form_2x2(A)) return Verdict::clean(std::move(*cert));
    }
    if ((ring->kind() == Ring::Kind::TruncatedPowerSeries ||
         ring->kind() == Ring::Kind::QuotientXPow) &&
        ring->base()->kind() == Ring::Kind::Integers && n == 2) {
        return classify_2x2_Z_powerseries(A, limits);
    }
    return Verdict::unknown(
        "inconclusive: no factorization witness, no cyclic basis witness, and no exhaustive "
        "search available over " + ring->name());
}

Verdict classify_2x2_Z_powerseries(const Matrix& A, const SearchLimits& limits) {
    const RingPtr& ring = A.ring_ptr();
    bool series_kind = ring->kind() == Ring::Kind::TruncatedPowerSeries ||
                       ring->kind() == Ring::Kind::QuotientXPow;
    if (!series_kind || ring->base()->kind() != Ring::Kind::Integers) {
        throw PreconditionError(
            "the classifier handles truncated power series and x-power quotients over the "
            "integers, not " + ring->name());
    }
    if (!A.is_square() || A.rows() != 2) {
        throw PreconditionError("the classifier handles 2x2 matrices only");
    }
    const RingPtr& zr = ring->base();
    Matrix A0(zr, 2, 2);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) A0.set(i, j, A.at(i, j).parts()[0]);
    }
    Matrix I0 = Matrix::identity(zr, 2);
    if (zr->is_unit(determinant(A0))) {
        return Verdict::clean(CleanCertificate::make_checked(A, Matrix::zero(ring, 2), A,
                                                             CertificateSource::TrivialUnit));
    }
    if (zr->is_unit(determinant(I0 - A0))) {
        Matrix I = Matrix::identity(ring, 2);
        return Verdict::clean(
            CleanCertificate::make_checked(A, I, A - I, CertificateSource::TrivialUnipotent));
    }
    if (auto fac = find_sr_factorization(charpoly(A0), limits)) {
        LiftedFactorization lifted = ring->kind() == Ring::Kind::TruncatedPowerSeries
                                         ? lift_series(A, *fac)
                                         : lift_quotient(A, *fac);
        return Verdict::clean(lifted_certificate(A, lifted));
    }
    Matrix ApI = A0 + I0;
    bool divisible = true;
    for (int i = 0; i < 2 && divisible; ++i) {
        for (int j = 0; j < 2 && divisible; ++j) {
            if (ApI.at(i, j).scalar() % 3 != 0) divisible = false;
        }
    }
    if (divisible) {
        Matrix F(zr, 2, 2);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) F.set(i, j, zr->from_int(ApI.at(i, j).scalar() / 3));
        }
        if (F * F == F && F != Matrix::zero(zr, 2) && F != I0) {
            return transport_idempotent(A, A0, F);
        }
    }
    return Verdict::not_clean(
        "the constant part is not strongly clean over the integers: no unit or unipotent "
        "split, no admissible factorization of " + charpoly(A0).to_string() +
        ", and no shifted-idempotent form");
}

}  // namespace cleanmat
