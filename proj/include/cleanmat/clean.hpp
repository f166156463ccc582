#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cleanmat/matrices.hpp"
#include "cleanmat/poly.hpp"
#include "cleanmat/resultant.hpp"

namespace cleanmat {

// Caps on the exhaustive searches.  factor_budget bounds the number of
// coefficient tuples tried per factor enumeration, brute_budget bounds
// |R|^(n*n) for the idempotent sweep, cyclic_budget bounds |R|^n for the
// Krylov witness sweep.
struct SearchLimits {
    std::int64_t factor_budget = std::int64_t(1) << 22;
    std::int64_t brute_budget = std::int64_t(1) << 30;
    std::int64_t cyclic_budget = std::int64_t(1) << 20;
};

// A certified factorization h = h0 * h1 with h0(0) and h1(1) units and a
// Bezout witness that (h0, h1) generate the unit ideal.
class SrFactorization {
public:
    static SrFactorization make_checked(Polynomial h, Polynomial h0, Polynomial h1);

    const Polynomial& h() const { return h_; }
    const Polynomial& h0() const { return h0_; }
    const Polynomial& h1() const { return h1_; }
    const BezoutCertificate& bezout() const { return bezout_; }

private:
    SrFactorization(Polynomial h, Polynomial h0, Polynomial h1, BezoutCertificate bezout)
        : h_(std::move(h)), h0_(std::move(h0)), h1_(std::move(h1)),
          bezout_(std::move(bezout)) {}

    Polynomial h_, h0_, h1_;
    BezoutCertificate bezout_;
};

enum class CertificateSource {
    TrivialUnit,
    TrivialUnipotent,
    Factorization,
    BruteForce,
    SpecialForm2x2,
};

std::string to_string(CertificateSource source);

// A decomposition A = E + U with E idempotent, U a unit, and EU = UE, all
// four identities re-verified on construction.
class CleanCertificate {
public:
    static CleanCertificate make_checked(const Matrix& A, Matrix E, Matrix U,
                                         CertificateSource source,
                                         std::optional<SrFactorization> fac = std::nullopt);

    const Matrix& E() const { return E_; }
    const Matrix& U() const { return U_; }
    const Matrix& U_inverse() const { return U_inv_; }
    CertificateSource source() const { return source_; }
    const std::optional<SrFactorization>& factorization() const { return fac_; }

private:
    CleanCertificate(Matrix E, Matrix U, Matrix U_inv, CertificateSource source,
                     std::optional<SrFactorization> fac)
        : E_(std::move(E)), U_(std::move(U)), U_inv_(std::move(U_inv)), source_(source),
          fac_(std::move(fac)) {}

    Matrix E_, U_, U_inv_;
    CertificateSource source_;
    std::optional<SrFactorization> fac_;
};

// Three-valued outcome.  NotStronglyClean is only ever emitted with a sound
// justification: companion or cyclic matrix whose characteristic polynomial
// admits no S0/S1 coprime factorization, exhausted brute force over a finite
// ring, or the conclusive 2x2 series classifier.
struct Verdict {
    enum class Kind { StronglyClean, NotStronglyClean, Unknown };

    Kind kind;
    std::optional<CleanCertificate> certificate;
    std::string reason;

    static Verdict clean(CleanCertificate cert) {
        return {Kind::StronglyClean, std::move(cert), ""};
    }
    static Verdict not_clean(std::string reason) {
        return {Kind::NotStronglyClean, std::nullopt, std::move(reason)};
    }
    static Verdict unknown(std::string reason) {
        return {Kind::Unknown, std::nullopt, std::move(reason)};
    }

    bool is_clean() const { return kind == Kind::StronglyClean; }
};

// f monic with f(r) a unit.
bool sr_member(const Polynomial& f, const RingElement& r);

// Every ordered pair (h0, h1) of monic polynomials with h0*h1 = h, including
// the trivial splits, in deterministic order: deg h0 ascending, then
// lexicographic on (c_0, c_1, ...) under the ring's canonical element order.
// Supported coefficient rings: Integers (Kronecker interpolation) and finite
// rings (exhaustive per-degree sweep).
std::vector<std::pair<Polynomial, Polynomial>> enumerate_monic_factor_pairs(
    const Polynomial& h, const SearchLimits& limits = {});

// First enumerated pair with h0(0), h1(1) units and a unit resultant.
std::optional<SrFactorization> find_sr_factorization(const Polynomial& h,
                                                     const SearchLimits& limits = {});

// E = (u*h0)(A) from the Bezout pair; all certificate identities verified.
CleanCertificate build_witness(const Matrix& A, const SrFactorization& fac);

// Ground-truth oracle over finite rings: sweeps every idempotent E and tests
// AE = EA and A - E a unit.
Verdict brute_force(const Matrix& A, const SearchLimits& limits = {});

// Full decision pipeline; see the CLI docs for the step order.
Verdict decide(const Matrix& A, const SearchLimits& limits = {});

// Conclusive classifier for 2x2 matrices over truncated integer power series
// (or the x-power quotient, the same carrier): inspects the constant part,
// lifts a factorization when one exists, transports the forced idempotent
// order by order in the one remaining pattern, and otherwise proves the
// matrix not strongly clean.
Verdict classify_2x2_Z_powerseries(const Matrix& A, const SearchLimits& limits = {});

}  // namespace cleanmat
