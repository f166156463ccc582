#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cleanmat/rings.hpp"

namespace cleanmat {

// Dense univariate polynomial over one ring of the tower, coefficients stored
// lowest degree first.  Always normalized: the highest-index coefficient is
// nonzero, and the zero polynomial has an empty coefficient vector.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, std::vector<RingElement> coeffs);

    static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }
    static Polynomial one(const RingPtr& ring);
    static Polynomial constant(const RingElement& c);
    // t^k with unit coefficient
    static Polynomial monomial(const RingPtr& ring, int k);
    // t - c
    static Polynomial linear_root(const RingElement& c);

    const RingPtr& ring_ptr() const { return ring_; }
    const Ring& ring() const { return *ring_; }
    const std::vector<RingElement>& coeffs() const { return coeffs_; }

    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const;
    bool is_one() const;

    // Coefficient of t^i; zero element beyond the stored degree.
    RingElement coeff(int i) const;
    const RingElement& leading() const;

    Polynomial add(const Polynomial& q) const;
    Polynomial sub(const Polynomial& q) const;
    Polynomial mul(const Polynomial& q) const;
    Polynomial neg() const;
    Polynomial scale(const RingElement& c) const;

    bool operator==(const Polynomial& q) const;
    bool operator!=(const Polynomial& q) const { return !(*this == q); }

    // Horner evaluation at a ring element.
    RingElement eval(const RingElement& r) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void check_same_ring(const Polynomial& q) const;
    void normalize();

    RingPtr ring_;
    std::vector<RingElement> coeffs_;
};

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p);

// Exact division by a monic divisor: p = d*quotient + remainder with
// deg remainder < deg d.  Works over every ring in the tower because the only
// divisions are by the leading coefficient 1.
std::pair<Polynomial, Polynomial> divide_by_monic(const Polynomial& p, const Polynomial& d);

// Applies f to every coefficient, producing a polynomial over target
// (re-normalizing, so reductions that kill leading coefficients are fine).
Polynomial map_coeffs(const Polynomial& p, const RingPtr& target,
                      const std::function<RingElement(const RingElement&)>& f);

}  // namespace cleanmat
