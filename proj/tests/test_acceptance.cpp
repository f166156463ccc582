#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cleanmat/clean.hpp"
#include "cleanmat/cli.hpp"
#include "cleanmat/errors.hpp"
#include "cleanmat/json_io.hpp"
#include "cleanmat/lift.hpp"
#include "cleanmat/matrices.hpp"
#include "cleanmat/poly.hpp"
#include "cleanmat/resultant.hpp"
#include "cleanmat/rings.hpp"
#include "cleanmat/verify.hpp"
#include "oracles.hpp"

using namespace cleanmat;

namespace {

using Clock = std::chrono::steady_clock;

int g_reports_checked = 0;
int g_reports_failed = 0;

// Criterion 10 bookkeeping: every certificate the suite emits is replayed
// through the arithmetic-only JSON verifier, exactly as the CLI would.
void audit_certificate(const CleanCertificate& cert, const Matrix& A) {
    Json report = certificate_to_json(cert);
    report["command"] = "decide";
    report["ring"] = ring_to_json(*A.ring_ptr());
    report["matrix"] = matrix_to_json(A);
    ++g_reports_checked;
    try {
        verify_report(report);
    } catch (const std::exception&) {
        ++g_reports_failed;
    }
}

struct Criterion {
    int number;
    const char* label;
    double limit_s;
    bool ok = true;
    Clock::time_point start = Clock::now();

    Criterion(int n, const char* l, double lim) : number(n), label(l), limit_s(lim) {}

    void note(bool passed) { ok = ok && passed; }

    void finish() {
        double s = std::chrono::duration<double>(Clock::now() - start).count();
        note(s < limit_s);
        std::printf("[acceptance] criterion %d (%s): %s (%.3fs, limit %.0fs)\n", number, label,
                    ok ? "PASS" : "FAIL", s, limit_s);
        std::fflush(stdout);
    }
};

#define EXPECT(crit, ...)                                             \
    do {                                                              \
        const bool expect_ok_ = static_cast<bool>(__VA_ARGS__);      \
        CHECK_MESSAGE(expect_ok_, #__VA_ARGS__);                      \
        (crit).note(expect_ok_);                                      \
    } while (0)

Matrix imat(const RingPtr& ring, const std::vector<std::vector<long long>>& rows) {
    Matrix m(ring, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            m.set(static_cast<int>(i), static_cast<int>(j), ring->from_int(rows[i][j]));
        }
    }
    return m;
}

RingElement random_coeff(const RingPtr& ring, oracles::Rng& rng) {
    if (auto card = ring->cardinality()) {
        return ring->element_at(Int(rng.next() % card->convert_to<std::uint64_t>()));
    }
    return ring->from_int(rng.range(-5, 5));
}

Polynomial random_poly(const RingPtr& ring, int deg, bool monic, oracles::Rng& rng) {
    std::vector<RingElement> cs;
    cs.reserve(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i < deg; ++i) cs.push_back(random_coeff(ring, rng));
    cs.push_back(monic ? ring->one() : random_coeff(ring, rng));
    return Polynomial(ring, std::move(cs));
}

Polynomial random_nonzero(const RingPtr& ring, int max_deg, oracles::Rng& rng) {
    while (true) {
        Polynomial p = random_poly(ring, static_cast<int>(rng.range(0, max_deg)), false, rng);
        if (!p.is_zero()) return p;
    }
}

// Embed an integer matrix as a constant series matrix.
Matrix embed_constant(const RingPtr& series, const Matrix& m) {
    const RingPtr& base = series->base();
    Matrix out(series, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            std::vector<RingElement> parts;
            parts.push_back(m.at(i, j));
            for (int k = 1; k < series->order(); ++k) parts.push_back(base->zero());
            out.set(i, j, series->make(std::move(parts)));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("criterion 1: the 2x2 integer counterexample") {
    Criterion crit(1, "integer counterexample", 1.0);
    RingPtr z = Ring::integers();
    Matrix A = imat(z, {{0, 3}, {1, 2}});

    Verdict v = decide(A);
    EXPECT(crit, v.kind == Verdict::Kind::NotStronglyClean);

    Polynomial h = charpoly(A);
    auto pairs = enumerate_monic_factor_pairs(h);
    EXPECT(crit, pairs.size() == 4);
    EXPECT(crit, !find_sr_factorization(h).has_value());
    crit.finish();
}

TEST_CASE("criterion 2: companion equivalence over Z/4, exhaustive") {
    Criterion crit(2, "companion equivalence over Z/4", 10.0);
    RingPtr r = Ring::integers_mod(4);
    int checked = 0;
    for (int b = 0; b < 4; ++b) {
        for (int c = 0; c < 4; ++c) {
            Polynomial h(r, {r->from_int(c), r->from_int(b), r->one()});
            Matrix C = companion(h);
            Verdict via_decide = decide(C);
            Verdict via_brute = brute_force(C);
            bool has_fac = find_sr_factorization(h).has_value();
            EXPECT(crit, via_decide.kind != Verdict::Kind::Unknown);
            EXPECT(crit, via_decide.is_clean() == via_brute.is_clean());
            EXPECT(crit, via_decide.is_clean() == has_fac);
            if (via_decide.certificate) audit_certificate(*via_decide.certificate, C);
            if (via_brute.certificate) audit_certificate(*via_brute.certificate, C);
            ++checked;
        }
    }
    EXPECT(crit, checked == 16);
    crit.finish();
}

TEST_CASE("criterion 3: every matrix sharing a factorable charpoly is clean over Z/4") {
    Criterion crit(3, "for-all direction over Z/4", 30.0);
    RingPtr r = Ring::integers_mod(4);

    std::vector<Matrix> all;
    all.reserve(256);
    for (int code = 0; code < 256; ++code) {
        Matrix m(r, 2, 2);
        m.set(0, 0, r->from_int(code & 3));
        m.set(0, 1, r->from_int((code >> 2) & 3));
        m.set(1, 0, r->from_int((code >> 4) & 3));
        m.set(1, 1, r->from_int((code >> 6) & 3));
        all.push_back(std::move(m));
    }

    int matched = 0;
    int counterexamples = 0;
    for (int b = 0; b < 4; ++b) {
        for (int c = 0; c < 4; ++c) {
            Polynomial h(r, {r->from_int(c), r->from_int(b), r->one()});
            if (!find_sr_factorization(h).has_value()) continue;
            for (const Matrix& m : all) {
                if (charpoly(m) != h) continue;
                ++matched;
                Verdict v = brute_force(m);
                if (!v.is_clean()) {
                    ++counterexamples;
                } else {
                    audit_certificate(*v.certificate, m);
                }
            }
        }
    }
    EXPECT(crit, counterexamples == 0);
    // every monic quadratic over Z/4 factors admissibly, so the filter
    // covers the full matrix space
    EXPECT(crit, matched == 256);
    crit.finish();
}

TEST_CASE("criterion 4: field completeness for F2 and F3") {
    Criterion crit(4, "field completeness", 10.0);
    for (int p : {2, 3}) {
        RingPtr f = Ring::integers_mod(p);
        int total = p * p * p * p;
        int clean_count = 0;
        for (int code = 0; code < total; ++code) {
            Matrix m(f, 2, 2);
            int rest = code;
            for (int k = 0; k < 4; ++k) {
                m.set(k / 2, k % 2, f->from_int(rest % p));
                rest /= p;
            }
            Verdict v = decide(m);
            Verdict b = brute_force(m);
            EXPECT(crit, v.is_clean());
            EXPECT(crit, b.is_clean());
            if (v.is_clean()) {
                ++clean_count;
                audit_certificate(*v.certificate, m);
            }
        }
        EXPECT(crit, clean_count == total);
    }
    crit.finish();
}

TEST_CASE("criterion 5: resultant identities and bezout gate on random data") {
    Criterion crit(5, "resultant identities", 10.0);
    oracles::Rng rng(0x51u);
    for (RingPtr ring : {Ring::integers(), Ring::integers_mod(6)}) {
        int cases = 0;
        while (cases < 500) {
            Polynomial f = random_poly(ring, static_cast<int>(rng.range(1, 3)), true, rng);
            Polynomial g = random_nonzero(ring, 2, rng);
            Polynomial k = random_nonzero(ring, 2, rng);

            Polynomial gk = g * k;
            Polynomial shifted = g + f * k;
            if (gk.is_zero() || shifted.is_zero()) continue;  // zero divisors over Z/6

            EXPECT(crit, resultant(f, gk) == resultant(f, g) * resultant(f, k));
            EXPECT(crit, resultant(f, shifted) == resultant(f, g));

            auto bez = bezout_certificate(f, g);
            bool unit = ring->is_unit(resultant(f, g));
            EXPECT(crit, bez.has_value() == unit);
            if (bez) {
                EXPECT(crit, bez->u() * f + bez->v() * g == Polynomial::one(ring));
            }
            ++cases;
        }
        EXPECT(crit, cases >= 500);
    }
    crit.finish();
}

TEST_CASE("criterion 6: residue-wise coprimality agrees with the unit-resultant test") {
    Criterion crit(6, "residue-wise coprimality", 60.0);
    RingPtr z = Ring::integers();

    std::vector<Polynomial> box;
    box.push_back(Polynomial::one(z));
    for (int c = -3; c <= 3; ++c) {
        box.emplace_back(z, std::vector<RingElement>{z->from_int(c), z->one()});
    }
    for (int b = -3; b <= 3; ++b) {
        for (int c = -3; c <= 3; ++c) {
            box.emplace_back(z,
                             std::vector<RingElement>{z->from_int(c), z->from_int(b), z->one()});
        }
    }
    EXPECT(crit, box.size() == 57);

    int disagreements = 0;
    int falses_without_witness = 0;
    for (const Polynomial& f : box) {
        for (const Polynomial& g : box) {
            bool direct = coprime(f, g);
            CoprimalityReport rep = coprime_all_residues(f, g);
            if (direct != rep.coprime_everywhere) ++disagreements;
            if (!rep.coprime_everywhere) {
                if (!rep.witness_prime) {
                    ++falses_without_witness;
                } else {
                    // the witness prime must divide the resultant
                    Int res = resultant(f, g).scalar();
                    EXPECT(crit, res % *rep.witness_prime == 0);
                }
            }
        }
    }
    EXPECT(crit, disagreements == 0);
    EXPECT(crit, falses_without_witness == 0);
    crit.finish();
}

TEST_CASE("criterion 7: series lifting invariants on random matrices") {
    Criterion crit(7, "series lifting", 60.0);
    RingPtr base = Ring::integers_mod(8);
    RingPtr ext = Ring::truncated_power_series(base, 8);
    oracles::Rng rng(0x71u);

    int lifted = 0;
    int attempts = 0;
    while (lifted < 200 && attempts < 1000) {
        ++attempts;
        Matrix A = oracles::random_matrix(ext, 2, rng);
        Matrix A0(base, 2, 2);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) A0.set(i, j, A.at(i, j).parts()[0]);
        }
        auto fac = find_sr_factorization(charpoly(A0));
        if (!fac) continue;

        LiftedFactorization L = lift_series(A, *fac);
        EXPECT(crit, L.kind() == LiftKind::Series);
        EXPECT(crit, L.H0() * L.H1() == charpoly(A));
        EXPECT(crit, L.H0().is_monic());
        EXPECT(crit, L.H1().is_monic());
        EXPECT(crit, sr_member(L.H0(), ext->zero()));
        EXPECT(crit, sr_member(L.H1(), ext->one()));
        EXPECT(crit, ext->is_unit(resultant(L.H0(), L.H1())));

        CleanCertificate cert = lifted_certificate(A, L);
        Matrix I = Matrix::identity(ext, 2);
        EXPECT(crit, cert.E() + cert.U() == A);
        EXPECT(crit, cert.E() * cert.E() == cert.E());
        EXPECT(crit, cert.E() * cert.U() == cert.U() * cert.E());
        EXPECT(crit, cert.U() * cert.U_inverse() == I);
        audit_certificate(cert, A);
        ++lifted;
    }
    EXPECT(crit, lifted == 200);
    crit.finish();
}

TEST_CASE("criterion 8: group ring worked example end to end") {
    Criterion crit(8, "group ring worked example", 1.0);
    RingPtr f4 = Ring::gf4();

    const int add[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const int mul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            EXPECT(crit, f4->element_at(i) + f4->element_at(j) == f4->element_at(add[i][j]));
            EXPECT(crit, f4->element_at(i) * f4->element_at(j) == f4->element_at(mul[i][j]));
        }
    }

    RingPtr dual = Ring::dual_extension(f4);
    auto gf = [&](int k) { return f4->element_at(k); };
    auto d = [&](int s1, int s2) {
        return dual->make(std::vector<RingElement>{gf(s1), gf(s2)});
    };
    RingElement az = d(0, 2);
    RingElement one_z = d(1, 1);
    RingElement one_bz = d(1, 3);

    Matrix A1(dual, 2, 2);
    A1.set(0, 0, az);
    A1.set(0, 1, one_z);
    A1.set(1, 0, dual->zero());
    A1.set(1, 1, one_bz);

    auto fac = find_sr_factorization(charpoly(A1));
    EXPECT(crit, fac.has_value());
    EXPECT(crit, fac->h0() == Polynomial(dual, {one_bz, dual->one()}));
    EXPECT(crit, fac->h1() == Polynomial(dual, {az, dual->one()}));
    RingElement res = resultant(fac->h0(), fac->h1());
    EXPECT(crit, res == one_z);
    EXPECT(crit, dual->is_unit(res));

    RingPtr grp = Ring::group_ring_c2(dual);
    auto g2 = [&](const RingElement& a_part, const RingElement& b_part) {
        return grp->make(std::vector<RingElement>{a_part, b_part});
    };
    RingElement zz = d(0, 1);
    RingElement one_az = d(1, 2);
    Matrix Ag(grp, 2, 2);
    Ag.set(0, 0, g2(az, dual->zero()));
    Ag.set(0, 1, g2(zz, dual->one()));
    Ag.set(1, 0, g2(dual->one(), dual->one()));
    Ag.set(1, 1, g2(one_az, zz));

    LiftedFactorization L = lift_groupring(Ag, *fac);
    EXPECT(crit, L.kind() == LiftKind::GroupRing);
    EXPECT(crit, L.H0() == Polynomial(grp, {g2(az, one_z), grp->one()}));
    EXPECT(crit, L.H1() == Polynomial(grp, {g2(one_az, dual->one()), grp->one()}));
    EXPECT(crit, L.H0() * L.H1() == charpoly(Ag));

    CleanCertificate cert = lifted_certificate(Ag, L);
    audit_certificate(cert, Ag);
    EXPECT(crit, cert.E() + cert.U() == Ag);
    crit.finish();
}

TEST_CASE("criterion 9: the 2x2 series classifier on archetypes and random constants") {
    Criterion crit(9, "series classifier", 5.0);
    RingPtr z = Ring::integers();
    RingPtr series = Ring::truncated_power_series(z, 8);

    const std::vector<std::vector<std::vector<long long>>> archetypes = {
        {{0, 0}, {0, 1}}, {{0, 0}, {0, -1}}, {{2, 0}, {0, 1}}, {{2, 0}, {0, -1}}};
    for (const auto& rows : archetypes) {
        Matrix A = embed_constant(series, imat(z, rows));
        Verdict v = classify_2x2_Z_powerseries(A);
        EXPECT(crit, v.is_clean());
        if (v.certificate) audit_certificate(*v.certificate, A);
    }

    Verdict bad = classify_2x2_Z_powerseries(embed_constant(series, imat(z, {{0, 3}, {1, 2}})));
    EXPECT(crit, bad.kind == Verdict::Kind::NotStronglyClean);

    oracles::Rng rng(0x91u);
    int contradictions = 0;
    int conclusive = 0;
    for (int trial = 0; trial < 100; ++trial) {
        Matrix m = oracles::random_matrix(z, 2, rng);
        Matrix A = embed_constant(series, m);
        Verdict cls = classify_2x2_Z_powerseries(A);
        Verdict dec = decide(m);
        if (dec.kind != Verdict::Kind::Unknown) {
            ++conclusive;
            if (dec.is_clean() != cls.is_clean()) ++contradictions;
        }
        if (cls.certificate) audit_certificate(*cls.certificate, A);
        if (dec.certificate) audit_certificate(*dec.certificate, m);
    }
    EXPECT(crit, contradictions == 0);
    EXPECT(crit, conclusive > 0);
    crit.finish();
}

TEST_CASE("criterion 10: every emitted certificate re-verifies independently") {
    Criterion crit(10, "certificate independence", 30.0);
    EXPECT(crit, g_reports_checked >= 500);
    EXPECT(crit, g_reports_failed == 0);

    // the CLI path itself must never hit the internal-error exit
    const std::vector<std::string> requests = {
        R"({"command":"decide","ring":{"type":"Z"},"payload":{"matrix":[[0,3],[1,2]]}})",
        R"({"command":"decide","ring":{"type":"Z"},"payload":{"matrix":[[0,0],[0,1]]}})",
        R"({"command":"resultant","ring":{"type":"Z"},"payload":{"f":[-3,1],"g":[1,1]}})",
        R"({"command":"charpoly","ring":{"type":"Z"},"payload":{"matrix":[[0,0],[0,0]]}})",
        R"({"command":"lift_series","ring":{"type":"powerseries","base":{"type":"Z"},"order":4},)"
        R"("payload":{"matrix":[[[0,1],[0]],[[0],[1,1]]],"h0":[-1,1],"h1":[0,1]}})",
    };
    for (const std::string& req : requests) {
        std::ostringstream out, err;
        EXPECT(crit, run_request(req, out, err) == 0);
    }
    crit.finish();
}
