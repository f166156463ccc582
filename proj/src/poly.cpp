#include "cleanmat/poly.hpp"

namespace cleanmat {

Polynomial::Polynomial(RingPtr ring, std::vector<RingElement> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    for (const RingElement& c : coeffs_) {
        if (!c.valid() || !c.ring().same_as(*ring_)) {
            throw DescriptorMismatchError("polynomial coefficient outside " + ring_->name());
        }
    }
    normalize();
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && ring_->is_zero(coeffs_.back())) coeffs_.pop_back();
}

Polynomial Polynomial::one(const RingPtr& ring) { return constant(ring->one()); }

Polynomial Polynomial::constant(const RingElement& c) {
    return Polynomial(c.ring_ptr(), {c});
}

Polynomial Polynomial::monomial(const RingPtr& ring, int k) {
    if (k < 0) throw PreconditionError("monomial exponent must be nonnegative");
    std::vector<RingElement> coeffs(static_cast<size_t>(k) + 1, ring->zero());
    coeffs.back() = ring->one();
    return Polynomial(ring, std::move(coeffs));
}

Polynomial Polynomial::linear_root(const RingElement& c) {
    const RingPtr& ring = c.ring_ptr();
    return Polynomial(ring, {ring->neg(c), ring->one()});
}

bool Polynomial::is_monic() const {
    return !coeffs_.empty() && ring_->is_one(coeffs_.back());
}

bool Polynomial::is_one() const { return coeffs_.size() == 1 && ring_->is_one(coeffs_[0]); }

RingElement Polynomial::coeff(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return ring_->zero();
    return coeffs_[static_cast<size_t>(i)];
}

const RingElement& Polynomial::leading() const {
    if (coeffs_.empty()) throw PreconditionError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

void Polynomial::check_same_ring(const Polynomial& q) const {
    if (!ring_->same_as(*q.ring_)) {
        throw DescriptorMismatchError("polynomials over different rings: " + ring_->name() +
                                      " vs " + q.ring_->name());
    }
}

Polynomial Polynomial::add(const Polynomial& q) const {
    check_same_ring(q);
    std::vector<RingElement> out(std::max(coeffs_.size(), q.coeffs_.size()), ring_->zero());
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] = ring_->add(coeff(static_cast<int>(i)), q.coeff(static_cast<int>(i)));
    }
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::sub(const Polynomial& q) const { return add(q.neg()); }

Polynomial Polynomial::neg() const {
    std::vector<RingElement> out;
    out.reserve(coeffs_.size());
    for (const RingElement& c : coeffs_) out.push_back(ring_->neg(c));
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::mul(const Polynomial& q) const {
    check_same_ring(q);
    if (is_zero() || q.is_zero()) return Polynomial(ring_);
    std::vector<RingElement> out(coeffs_.size() + q.coeffs_.size() - 1, ring_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        for (size_t j = 0; j < q.coeffs_.size(); ++j) {
            out[i + j] = ring_->add(out[i + j], ring_->mul(coeffs_[i], q.coeffs_[j]));
        }
    }
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scale(const RingElement& c) const {
    std::vector<RingElement> out;
    out.reserve(coeffs_.size());
    for (const RingElement& a : coeffs_) out.push_back(ring_->mul(a, c));
    return Polynomial(ring_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& q) const {
    check_same_ring(q);
    if (coeffs_.size() != q.coeffs_.size()) return false;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != q.coeffs_[i]) return false;
    }
    return true;
}

RingElement Polynomial::eval(const RingElement& r) const {
    if (!r.valid() || !r.ring().same_as(*ring_)) {
        throw DescriptorMismatchError("evaluation point outside " + ring_->name());
    }
    RingElement acc = ring_->zero();
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = ring_->add(ring_->mul(acc, r), coeffs_[i]);
    }
    return acc;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    const bool plain_integers = ring_->kind() == Ring::Kind::Integers ||
                                ring_->kind() == Ring::Kind::IntegersMod;
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        RingElement c = coeff(i);
        if (ring_->is_zero(c)) continue;

        std::string sep = out.empty() ? "" : "+";
        std::string body = ring_->to_string(c);
        if (plain_integers && body.size() > 1 && body[0] == '-') {
            // fold the sign into the separator: t^2-2t-3, not t^2+-2t+-3
            sep = "-";
            body = body.substr(1);
        }

        std::string var_part;
        if (i == 1) var_part = var;
        else if (i > 1) var_part = var + "^" + std::to_string(i);

        if (!var_part.empty()) {
            if (body == "1") body.clear();
            else if (body.find('+') != std::string::npos || body.find('-') != std::string::npos)
                body = "(" + body + ")";
        }
        out += sep + body + var_part;
    }
    return out;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) { return p.add(q); }
Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p.sub(q); }
Polynomial operator*(const Polynomial& p, const Polynomial& q) { return p.mul(q); }
Polynomial operator-(const Polynomial& p) { return p.neg(); }

std::pair<Polynomial, Polynomial> divide_by_monic(const Polynomial& p, const Polynomial& d) {
    if (!d.is_monic()) throw PreconditionError("divisor must be monic");
    const RingPtr& ring = p.ring_ptr();
    if (!ring->same_as(d.ring())) {
        throw DescriptorMismatchError("division operands over different rings");
    }
    int dd = d.degree();
    if (p.degree() < dd) return {Polynomial(ring), p};

    std::vector<RingElement> rem(p.coeffs().begin(), p.coeffs().end());
    std::vector<RingElement> quot(static_cast<size_t>(p.degree() - dd) + 1, ring->zero());
    for (int k = p.degree() - dd; k >= 0; --k) {
        RingElement lead = rem[static_cast<size_t>(k + dd)];
        if (ring->is_zero(lead)) continue;
        quot[static_cast<size_t>(k)] = lead;
        for (int i = 0; i <= dd; ++i) {
            size_t idx = static_cast<size_t>(k + i);
            rem[idx] = ring->sub(rem[idx], ring->mul(lead, d.coeff(i)));
        }
    }
    return {Polynomial(ring, std::move(quot)), Polynomial(ring, std::move(rem))};
}

Polynomial map_coeffs(const Polynomial& p, const RingPtr& target,
                      const std::function<RingElement(const RingElement&)>& f) {
    std::vector<RingElement> out;
    out.reserve(p.coeffs().size());
    for (const RingElement& c : p.coeffs()) out.push_back(f(c));
    return Polynomial(target, std::move(out));
}

}  // namespace cleanmat
