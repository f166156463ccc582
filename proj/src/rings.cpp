#include "cleanmat/rings.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace cleanmat {

namespace {

// GF4 = {0, 1, a, b} with a = a primitive cube root of unity and b = a + 1.
// Index order 0,1,2,3 <-> 0,1,a,b.
constexpr std::array<std::array<int, 4>, 4> kGf4Add = {{
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
}};
constexpr std::array<std::array<int, 4>, 4> kGf4Mul = {{
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
}};
constexpr std::array<int, 4> kGf4Inv = {-1, 1, 3, 2};

Int mod_reduce(const Int& v, const Int& n) {
    Int r = v % n;
    if (r < 0) r += n;
    return r;
}

// Extended Euclid: returns gcd(a, n) and s with s*a == gcd (mod n).
std::pair<Int, Int> extended_gcd_mod(const Int& a, const Int& n) {
    Int old_r = a, r = n;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    return {old_r, old_s};
}

Int pow_int(const Int& b, int e) {
    Int result = 1;
    for (int i = 0; i < e; ++i) result *= b;
    return result;
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::optional<Int> prime_power_base(const Int& n) {
    if (n < 2) return std::nullopt;
    Int m = n;
    Int p = 0;
    for (Int d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return n;  // n itself is prime
    while (m % p == 0) m /= p;
    if (m == 1) return p;
    return std::nullopt;
}

// --- construction ----------------------------------------------------------

Ring::Ring(Key, Kind kind, Int modulus, RingPtr base, int order)
    : kind_(kind), modulus_(std::move(modulus)), base_(std::move(base)), order_(order) {
    if (base_) depth_ = base_->depth() + 1;
    if (depth_ > max_nesting_depth) {
        throw GuardError("ring nesting depth exceeds " + std::to_string(max_nesting_depth));
    }
}

RingPtr Ring::integers() {
    static const RingPtr instance = std::make_shared<Ring>(Key{}, Kind::Integers, 0, nullptr, 0);
    return instance;
}

RingPtr Ring::integers_mod(const Int& n) {
    if (n < 2) throw PreconditionError("IntegersMod modulus must be at least 2");
    return std::make_shared<Ring>(Key{}, Kind::IntegersMod, n, nullptr, 0);
}

RingPtr Ring::gf4() {
    static const RingPtr instance =
        std::make_shared<Ring>(Key{}, Kind::GaloisField4, 0, nullptr, 0);
    return instance;
}

RingPtr Ring::dual_extension(RingPtr base) {
    if (!base) throw PreconditionError("DualExtension needs a base ring");
    return std::make_shared<Ring>(Key{}, Kind::DualExtension, 0, std::move(base), 0);
}

RingPtr Ring::truncated_power_series(RingPtr base, int order) {
    if (!base) throw PreconditionError("TruncatedPowerSeries needs a base ring");
    if (order < 1) throw PreconditionError("TruncatedPowerSeries order must be at least 1");
    return std::make_shared<Ring>(Key{}, Kind::TruncatedPowerSeries, 0, std::move(base), order);
}

RingPtr Ring::quotient_x_pow(RingPtr base, int m) {
    if (!base) throw PreconditionError("QuotientXPow needs a base ring");
    if (m < 1) throw PreconditionError("QuotientXPow exponent must be at least 1");
    return std::make_shared<Ring>(Key{}, Kind::QuotientXPow, 0, std::move(base), m);
}

RingPtr Ring::group_ring_c2(RingPtr base) {
    if (!base) throw PreconditionError("GroupRingC2 needs a base ring");
    return std::make_shared<Ring>(Key{}, Kind::GroupRingC2, 0, std::move(base), 0);
}

bool Ring::same_as(const Ring& other) const {
    if (this == &other) return true;
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case Kind::Integers:
        case Kind::GaloisField4:
            return true;
        case Kind::IntegersMod:
            return modulus_ == other.modulus_;
        case Kind::DualExtension:
        case Kind::GroupRingC2:
            return base_->same_as(*other.base_);
        case Kind::TruncatedPowerSeries:
        case Kind::QuotientXPow:
            return order_ == other.order_ && base_->same_as(*other.base_);
    }
    return false;
}

std::string Ring::name() const {
    switch (kind_) {
        case Kind::Integers: return "Z";
        case Kind::IntegersMod: return "Z/" + modulus_.str();
        case Kind::GaloisField4: return "GF4";
        case Kind::DualExtension: return "dual(" + base_->name() + ")";
        case Kind::TruncatedPowerSeries:
            return "powerseries(" + base_->name() + "," + std::to_string(order_) + ")";
        case Kind::QuotientXPow:
            return "quotient_x_pow(" + base_->name() + "," + std::to_string(order_) + ")";
        case Kind::GroupRingC2: return "groupring_c2(" + base_->name() + ")";
    }
    return "?";
}

// --- element construction ----------------------------------------------------

void Ring::check_element(const RingElement& a) const {
    if (!a.valid() || !a.ring().same_as(*this)) {
        throw DescriptorMismatchError("element does not belong to " + name());
    }
}

void Ring::check_pair(const RingElement& a, const RingElement& b) const {
    check_element(a);
    check_element(b);
}

RingElement Ring::make_scalar(Int v) const {
    switch (kind_) {
        case Kind::Integers:
            return RingElement(shared_from_this(), std::move(v));
        case Kind::IntegersMod:
            return RingElement(shared_from_this(), mod_reduce(v, modulus_));
        case Kind::GaloisField4:
            if (v < 0 || v > 3) throw PreconditionError("GF4 scalar index out of range");
            return RingElement(shared_from_this(), std::move(v));
        default:
            throw PreconditionError("make_scalar on composite ring " + name());
    }
}

RingElement Ring::make(std::vector<RingElement> parts) const {
    size_t expected;
    switch (kind_) {
        case Kind::DualExtension:
        case Kind::GroupRingC2:
            expected = 2;
            break;
        case Kind::TruncatedPowerSeries:
        case Kind::QuotientXPow:
            expected = static_cast<size_t>(order_);
            break;
        default:
            throw PreconditionError("make(parts) on scalar ring " + name());
    }
    if (parts.size() != expected) {
        throw PreconditionError("expected " + std::to_string(expected) + " components for " +
                                name() + ", got " + std::to_string(parts.size()));
    }
    for (const RingElement& p : parts) base_->check_element(p);
    return RingElement(shared_from_this(), std::move(parts));
}

RingElement Ring::zero() const {
    switch (kind_) {
        case Kind::Integers:
        case Kind::IntegersMod:
        case Kind::GaloisField4:
            return RingElement(shared_from_this(), Int(0));
        default: {
            size_t count = (kind_ == Kind::TruncatedPowerSeries || kind_ == Kind::QuotientXPow)
                               ? static_cast<size_t>(order_)
                               : 2;
            std::vector<RingElement> parts(count, base_->zero());
            return RingElement(shared_from_this(), std::move(parts));
        }
    }
}

RingElement Ring::one() const { return from_int(1); }

RingElement Ring::from_int(const Int& k) const {
    switch (kind_) {
        case Kind::Integers:
            return RingElement(shared_from_this(), k);
        case Kind::IntegersMod:
            return RingElement(shared_from_this(), mod_reduce(k, modulus_));
        case Kind::GaloisField4:
            return RingElement(shared_from_this(), mod_reduce(k, 2));
        default: {
            RingElement e = zero();
            std::vector<RingElement> parts = e.parts();
            parts[0] = base_->from_int(k);
            return RingElement(shared_from_this(), std::move(parts));
        }
    }
}

// --- arithmetic ---------------------------------------------------------------

RingElement Ring::add(const RingElement& a, const RingElement& b) const {
    check_pair(a, b);
    switch (kind_) {
        case Kind::Integers:
            return RingElement(shared_from_this(), a.scalar() + b.scalar());
        case Kind::IntegersMod:
            return RingElement(shared_from_this(), mod_reduce(a.scalar() + b.scalar(), modulus_));
        case Kind::GaloisField4: {
            int v = kGf4Add[static_cast<int>(a.scalar())][static_cast<int>(b.scalar())];
            return RingElement(shared_from_this(), Int(v));
        }
        default: {
            std::vector<RingElement> parts;
            parts.reserve(a.parts().size());
            for (size_t i = 0; i < a.parts().size(); ++i) {
                parts.push_back(base_->add(a.parts()[i], b.parts()[i]));
            }
            return RingElement(shared_from_this(), std::move(parts));
        }
    }
}

RingElement Ring::neg(const RingElement& a) const {
    check_element(a);
    switch (kind_) {
        case Kind::Integers:
            return RingElement(shared_from_this(), -a.scalar());
        case Kind::IntegersMod:
            return RingElement(shared_from_this(), mod_reduce(-a.scalar(), modulus_));
        case Kind::GaloisField4:
            return a;  // characteristic 2
        default: {
            std::vector<RingElement> parts;
            parts.reserve(a.parts().size());
            for (const RingElement& p : a.parts()) parts.push_back(base_->neg(p));
            return RingElement(shared_from_this(), std::move(parts));
        }
    }
}

RingElement Ring::sub(const RingElement& a, const RingElement& b) const { return add(a, neg(b)); }

RingElement Ring::mul(const RingElement& a, const RingElement& b) const {
    check_pair(a, b);
    switch (kind_) {
        case Kind::Integers:
            return RingElement(shared_from_this(), a.scalar() * b.scalar());
        case Kind::IntegersMod:
            return RingElement(shared_from_this(), mod_reduce(a.scalar() * b.scalar(), modulus_));
        case Kind::GaloisField4: {
            int v = kGf4Mul[static_cast<int>(a.scalar())][static_cast<int>(b.scalar())];
            return RingElement(shared_from_this(), Int(v));
        }
        case Kind::DualExtension: {
            // (s1 + s2 z)(t1 + t2 z) = s1 t1 + (s1 t2 + s2 t1) z, z^2 = 0
            const auto& s = a.parts();
            const auto& t = b.parts();
            std::vector<RingElement> parts = {
                base_->mul(s[0], t[0]),
                base_->add(base_->mul(s[0], t[1]), base_->mul(s[1], t[0]))};
            return RingElement(shared_from_this(), std::move(parts));
        }
        case Kind::GroupRingC2: {
            // (a1 + b1 g)(a2 + b2 g) = (a1 a2 + b1 b2) + (a1 b2 + b1 a2) g, g^2 = 1
            const auto& s = a.parts();
            const auto& t = b.parts();
            std::vector<RingElement> parts = {
                base_->add(base_->mul(s[0], t[0]), base_->mul(s[1], t[1])),
                base_->add(base_->mul(s[0], t[1]), base_->mul(s[1], t[0]))};
            return RingElement(shared_from_this(), std::move(parts));
        }
        case Kind::TruncatedPowerSeries:
        case Kind::QuotientXPow: {
            // truncated convolution mod x^order
            const auto& s = a.parts();
            const auto& t = b.parts();
            std::vector<RingElement> parts(static_cast<size_t>(order_), base_->zero());
            for (size_t i = 0; i < s.size(); ++i) {
                for (size_t j = 0; i + j < parts.size() && j < t.size(); ++j) {
                    parts[i + j] = base_->add(parts[i + j], base_->mul(s[i], t[j]));
                }
            }
            return RingElement(shared_from_this(), std::move(parts));
        }
    }
    throw Error("unhandled ring kind");
}

bool Ring::is_zero(const RingElement& a) const {
    check_element(a);
    return a == zero();
}

bool Ring::is_one(const RingElement& a) const {
    check_element(a);
    return a == one();
}

std::optional<RingElement> Ring::try_invert(const RingElement& a) const {
    check_element(a);
    std::optional<RingElement> result;
    switch (kind_) {
        case Kind::Integers:
            if (a.scalar() == 1 || a.scalar() == -1) result = a;
            break;
        case Kind::IntegersMod: {
            auto [g, s] = extended_gcd_mod(a.scalar(), modulus_);
            if (g == 1) result = RingElement(shared_from_this(), mod_reduce(s, modulus_));
            break;
        }
        case Kind::GaloisField4: {
            int idx = static_cast<int>(a.scalar());
            if (idx != 0) result = RingElement(shared_from_this(), Int(kGf4Inv[idx]));
            break;
        }
        case Kind::DualExtension: {
            // s1 + s2 z is a unit iff s1 is; inverse is s1^-1 - s1^-2 s2 z.
            auto inv0 = base_->try_invert(a.parts()[0]);
            if (inv0) {
                RingElement minus = base_->neg(
                    base_->mul(base_->mul(*inv0, *inv0), a.parts()[1]));
                result = RingElement(shared_from_this(),
                                     std::vector<RingElement>{*inv0, std::move(minus)});
            }
            break;
        }
        case Kind::GroupRingC2: {
            // a + b g is a unit iff a^2 - b^2 is a unit in the base; then
            // (a + b g)(a - b g) = a^2 - b^2 gives the inverse directly.
            const RingElement& x = a.parts()[0];
            const RingElement& y = a.parts()[1];
            RingElement det = base_->sub(base_->mul(x, x), base_->mul(y, y));
            auto det_inv = base_->try_invert(det);
            if (det_inv) {
                std::vector<RingElement> parts = {base_->mul(x, *det_inv),
                                                  base_->neg(base_->mul(y, *det_inv))};
                result = RingElement(shared_from_this(), std::move(parts));
            }
            break;
        }
        case Kind::TruncatedPowerSeries:
        case Kind::QuotientXPow: {
            // unit iff the constant coefficient is; invert by the standard
            // coefficient recursion y_k = -c0^-1 * sum_{i>=1} c_i y_{k-i}.
            auto c0_inv = base_->try_invert(a.parts()[0]);
            if (!c0_inv) break;
            std::vector<RingElement> y(static_cast<size_t>(order_), base_->zero());
            y[0] = *c0_inv;
            for (size_t k = 1; k < y.size(); ++k) {
                RingElement acc = base_->zero();
                for (size_t i = 1; i <= k; ++i) {
                    acc = base_->add(acc, base_->mul(a.parts()[i], y[k - i]));
                }
                y[k] = base_->neg(base_->mul(*c0_inv, acc));
            }
            result = RingElement(shared_from_this(), std::move(y));
            break;
        }
    }
    if (result && !is_one(mul(a, *result))) {
        throw VerificationError("computed inverse failed the identity check in " + name());
    }
    return result;
}

// --- structure ---------------------------------------------------------------

Int Ring::characteristic() const {
    switch (kind_) {
        case Kind::Integers: return 0;
        case Kind::IntegersMod: return modulus_;
        case Kind::GaloisField4: return 2;
        default: return base_->characteristic();
    }
}

std::optional<Int> Ring::cardinality() const {
    switch (kind_) {
        case Kind::Integers: return std::nullopt;
        case Kind::IntegersMod: return modulus_;
        case Kind::GaloisField4: return Int(4);
        default: {
            auto b = base_->cardinality();
            if (!b) return std::nullopt;
            int e = (kind_ == Kind::TruncatedPowerSeries || kind_ == Kind::QuotientXPow)
                        ? order_
                        : 2;
            return pow_int(*b, e);
        }
    }
}

bool Ring::is_field() const {
    switch (kind_) {
        case Kind::GaloisField4: return true;
        case Kind::IntegersMod: return is_prime(modulus_);
        case Kind::TruncatedPowerSeries:
        case Kind::QuotientXPow:
            return order_ == 1 && base_->is_field();
        default: return false;
    }
}

RingElement Ring::element_at(const Int& index) const {
    auto card = cardinality();
    if (!card) throw UnsupportedRingError("cannot enumerate infinite ring " + name());
    if (index < 0 || index >= *card) throw PreconditionError("element index out of range");
    switch (kind_) {
        case Kind::IntegersMod:
        case Kind::GaloisField4:
            return RingElement(shared_from_this(), index);
        default: {
            Int b = *base_->cardinality();
            size_t count = (kind_ == Kind::TruncatedPowerSeries || kind_ == Kind::QuotientXPow)
                               ? static_cast<size_t>(order_)
                               : 2;
            std::vector<RingElement> parts;
            parts.reserve(count);
            Int rest = index;
            for (size_t i = 0; i < count; ++i) {
                parts.push_back(base_->element_at(rest % b));
                rest /= b;
            }
            return RingElement(shared_from_this(), std::move(parts));
        }
    }
}

Int Ring::index_of(const RingElement& a) const {
    check_element(a);
    switch (kind_) {
        case Kind::Integers:
            throw UnsupportedRingError("cannot enumerate infinite ring Z");
        case Kind::IntegersMod:
        case Kind::GaloisField4:
            return a.scalar();
        default: {
            Int b = *base_->cardinality();
            Int index = 0;
            Int weight = 1;
            for (const RingElement& p : a.parts()) {
                index += weight * base_->index_of(p);
                weight *= b;
            }
            return index;
        }
    }
}

int Ring::compare(const RingElement& a, const RingElement& b) const {
    switch (kind_) {
        case Kind::Integers: {
            // sign-magnitude order: 0 < 1 < -1 < 2 < -2 < ...
            Int aa = abs(a.scalar()), ab = abs(b.scalar());
            if (aa != ab) return aa < ab ? -1 : 1;
            if (a.scalar() == b.scalar()) return 0;
            return a.scalar() > b.scalar() ? -1 : 1;  // positive before negative
        }
        case Kind::IntegersMod:
        case Kind::GaloisField4:
            if (a.scalar() == b.scalar()) return 0;
            return a.scalar() < b.scalar() ? -1 : 1;
        default:
            for (size_t i = 0; i < a.parts().size(); ++i) {
                int c = base_->compare(a.parts()[i], b.parts()[i]);
                if (c != 0) return c;
            }
            return 0;
    }
}

bool Ring::element_less(const RingElement& a, const RingElement& b) const {
    check_pair(a, b);
    return compare(a, b) < 0;
}

std::optional<LocalData> Ring::local_data() const {
    RingPtr self = shared_from_this();
    auto identity = [](const RingElement& x) { return x; };
    switch (kind_) {
        case Kind::GaloisField4:
            return LocalData{self, identity, identity};
        case Kind::IntegersMod: {
            if (is_prime(modulus_)) return LocalData{self, identity, identity};
            auto p = prime_power_base(modulus_);
            if (!p) return std::nullopt;
            RingPtr res = Ring::integers_mod(*p);
            Int prime = *p;
            return LocalData{
                res,
                [res, prime](const RingElement& x) { return res->make_scalar(x.scalar() % prime); },
                [self](const RingElement& x) { return self->make_scalar(x.scalar()); }};
        }
        case Kind::DualExtension:
        case Kind::TruncatedPowerSeries:
        case Kind::QuotientXPow: {
            if (!base_->is_field()) return std::nullopt;
            RingPtr res = base_;
            return LocalData{
                res,
                [](const RingElement& x) { return x.parts()[0]; },
                [self](const RingElement& x) {
                    RingElement z = self->zero();
                    std::vector<RingElement> parts = z.parts();
                    parts[0] = x;
                    return self->make(std::move(parts));
                }};
        }
        default:
            return std::nullopt;
    }
}

// --- printing ------------------------------------------------------------------

namespace {

// Renders one symbol*variable term, suppressing unit coefficients.
void append_term(std::string& out, const std::string& coeff, const std::string& var,
                 bool coeff_is_one) {
    if (!out.empty()) out += "+";
    if (coeff_is_one) {
        out += var;
    } else if (coeff.find('+') != std::string::npos) {
        out += "(" + coeff + ")" + var;
    } else {
        out += coeff + var;
    }
}

}  // namespace

std::string Ring::to_string(const RingElement& a) const {
    check_element(a);
    switch (kind_) {
        case Kind::Integers:
        case Kind::IntegersMod:
            return a.scalar().str();
        case Kind::GaloisField4: {
            static const char* names[] = {"0", "1", "a", "b"};
            return names[static_cast<int>(a.scalar())];
        }
        case Kind::DualExtension:
        case Kind::GroupRingC2: {
            const char* var = kind_ == Kind::DualExtension ? "z" : "g";
            const RingElement& lo = a.parts()[0];
            const RingElement& hi = a.parts()[1];
            if (base_->is_zero(hi)) return base_->to_string(lo);
            std::string out;
            if (!base_->is_zero(lo)) out = base_->to_string(lo);
            append_term(out, base_->to_string(hi), var, base_->is_one(hi));
            return out;
        }
        case Kind::TruncatedPowerSeries:
        case Kind::QuotientXPow: {
            std::string out;
            for (size_t i = 0; i < a.parts().size(); ++i) {
                const RingElement& c = a.parts()[i];
                if (base_->is_zero(c)) continue;
                if (i == 0) {
                    out = base_->to_string(c);
                } else {
                    std::string var = i == 1 ? "x" : "x^" + std::to_string(i);
                    append_term(out, base_->to_string(c), var, base_->is_one(c));
                }
            }
            return out.empty() ? "0" : out;
        }
    }
    return "?";
}

// --- RingElement / operators ------------------------------------------------

bool RingElement::operator==(const RingElement& other) const {
    if (!valid() || !other.valid()) return valid() == other.valid();
    if (!ring_->same_as(*other.ring_)) {
        throw DescriptorMismatchError("comparing elements of different rings");
    }
    if (parts_.size() != other.parts_.size()) return false;
    if (parts_.empty()) return scalar_ == other.scalar_;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (!(parts_[i] == other.parts_[i])) return false;
    }
    return true;
}

RingElement operator+(const RingElement& a, const RingElement& b) { return a.ring().add(a, b); }
RingElement operator-(const RingElement& a, const RingElement& b) { return a.ring().sub(a, b); }
RingElement operator*(const RingElement& a, const RingElement& b) { return a.ring().mul(a, b); }
RingElement operator-(const RingElement& a) { return a.ring().neg(a); }

ElementRange::ElementRange(RingPtr ring) : ring_(std::move(ring)) {
    auto card = ring_->cardinality();
    if (!card) throw UnsupportedRingError("cannot enumerate infinite ring " + ring_->name());
    size_ = *card;
}

ElementRange enumerate_elements(const RingPtr& ring) { return ElementRange(ring); }

bool projective_free_supported(const Ring& ring) {
    switch (ring.kind()) {
        case Ring::Kind::Integers:
        case Ring::Kind::GaloisField4:
            return true;
        case Ring::Kind::IntegersMod:
            return prime_power_base(ring.modulus()).has_value();
        case Ring::Kind::DualExtension:
            return ring.base()->is_field();
        case Ring::Kind::TruncatedPowerSeries:
        case Ring::Kind::QuotientXPow:
            return projective_free_supported(*ring.base());
        case Ring::Kind::GroupRingC2:
            return ring.base()->characteristic() == 2 &&
                   projective_free_supported(*ring.base());
    }
    return false;
}

}  // namespace cleanmat
