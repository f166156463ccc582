#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cleanmat/errors.hpp"

namespace cleanmat {

using Int = boost::multiprecision::cpp_int;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// One element of a ring in the closed tower.  The element knows its ring, so
// mixed-descriptor arithmetic is rejected instead of silently coerced.
//
// Payload conventions (by ring kind):
//   Integers            scalar = the integer
//   IntegersMod(n)      scalar = canonical residue in [0, n)
//   GaloisField4        scalar = index in {0,1,2,3} meaning {0, 1, a, b}
//   DualExtension       parts = {s1, s2} meaning s1 + s2*z, z^2 = 0
//   TruncatedPowerSeries parts = {c0, ..., c_{N-1}}, always exactly N entries
//   QuotientXPow        parts = {c0, ..., c_{m-1}}, always exactly m entries
//   GroupRingC2         parts = {a, b} meaning a + b*g, g^2 = 1
class RingElement {
public:
    RingElement() = default;

    const Ring& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }
    bool valid() const { return ring_ != nullptr; }

    bool operator==(const RingElement& other) const;
    bool operator!=(const RingElement& other) const { return !(*this == other); }

    const Int& scalar() const { return scalar_; }
    const std::vector<RingElement>& parts() const { return parts_; }

private:
    friend class Ring;
    RingElement(RingPtr ring, Int scalar) : ring_(std::move(ring)), scalar_(std::move(scalar)) {}
    RingElement(RingPtr ring, std::vector<RingElement> parts)
        : ring_(std::move(ring)), parts_(std::move(parts)) {}

    RingPtr ring_;
    Int scalar_ = 0;
    std::vector<RingElement> parts_;
};

// Residue-field view of a local ring: reduce maps onto the residue field,
// lift is a set-theoretic section of reduce (reduce(lift(x)) == x).
struct LocalData {
    RingPtr residue;
    std::function<RingElement(const RingElement&)> reduce;
    std::function<RingElement(const RingElement&)> lift;
};

// Immutable descriptor of a ring in the closed tower, together with all
// arithmetic on its elements.  Construction validates parameters and the
// nesting depth guard; descriptors compare structurally.
class Ring : public std::enable_shared_from_this<Ring> {
    struct Key {};  // locks the constructor to the static factories

public:
    enum class Kind {
        Integers,
        IntegersMod,
        GaloisField4,
        DualExtension,
        TruncatedPowerSeries,
        QuotientXPow,
        GroupRingC2,
    };

    static constexpr int max_nesting_depth = 4;

    static RingPtr integers();
    static RingPtr integers_mod(const Int& n);
    static RingPtr gf4();
    static RingPtr dual_extension(RingPtr base);
    static RingPtr truncated_power_series(RingPtr base, int order);
    static RingPtr quotient_x_pow(RingPtr base, int m);
    static RingPtr group_ring_c2(RingPtr base);

    Ring(Key, Kind kind, Int modulus, RingPtr base, int order);

    Kind kind() const { return kind_; }
    const Int& modulus() const { return modulus_; }  // IntegersMod only
    const RingPtr& base() const { return base_; }    // composite kinds only
    int order() const { return order_; }             // TPS / QuotientXPow only
    int depth() const { return depth_; }

    bool same_as(const Ring& other) const;
    std::string name() const;

    // --- element construction -------------------------------------------
    RingElement zero() const;
    RingElement one() const;
    RingElement from_int(const Int& k) const;          // image of k under Z -> R
    RingElement make_scalar(Int v) const;              // scalar payload kinds
    RingElement make(std::vector<RingElement> parts) const;  // composite kinds

    // --- arithmetic -------------------------------------------------------
    RingElement add(const RingElement& a, const RingElement& b) const;
    RingElement sub(const RingElement& a, const RingElement& b) const;
    RingElement mul(const RingElement& a, const RingElement& b) const;
    RingElement neg(const RingElement& a) const;

    // Exact unit test: engages the kind-specific unit criterion and returns
    // a verified two-sided inverse, or nothing.
    std::optional<RingElement> try_invert(const RingElement& a) const;
    bool is_unit(const RingElement& a) const { return try_invert(a).has_value(); }

    bool is_zero(const RingElement& a) const;
    bool is_one(const RingElement& a) const;

    // --- structure --------------------------------------------------------
    Int characteristic() const;                 // 0 for the Z-based kinds
    std::optional<Int> cardinality() const;     // nothing when infinite
    bool is_finite() const { return cardinality().has_value(); }
    bool is_field() const;

    // Deterministic enumeration of a finite ring: element_at(i) for
    // i in [0, cardinality).  index_of inverts it.
    RingElement element_at(const Int& index) const;
    Int index_of(const RingElement& a) const;

    // Canonical total order: enumeration order on finite rings,
    // sign-magnitude (0 < 1 < -1 < 2 < ...) on Integers, lexicographic on
    // component sequences of composite kinds.
    bool element_less(const RingElement& a, const RingElement& b) const;

    // Residue-field data for the supported local rings: IntegersMod(p^k),
    // any field, DualExtension / TruncatedPowerSeries / QuotientXPow over a
    // field.  Everything else returns nothing.
    std::optional<LocalData> local_data() const;

    std::string to_string(const RingElement& a) const;

private:
    void check_element(const RingElement& a) const;
    void check_pair(const RingElement& a, const RingElement& b) const;
    int compare(const RingElement& a, const RingElement& b) const;

    Kind kind_;
    Int modulus_;
    RingPtr base_;
    int order_ = 0;
    int depth_ = 1;
};

RingElement operator+(const RingElement& a, const RingElement& b);
RingElement operator-(const RingElement& a, const RingElement& b);
RingElement operator*(const RingElement& a, const RingElement& b);
RingElement operator-(const RingElement& a);

// Iterable view over all elements of a finite ring, in enumeration order.
class ElementRange {
public:
    explicit ElementRange(RingPtr ring);

    class iterator {
    public:
        iterator(const Ring* ring, Int index) : ring_(ring), index_(std::move(index)) {}
        RingElement operator*() const { return ring_->element_at(index_); }
        iterator& operator++() { ++index_; return *this; }
        bool operator!=(const iterator& other) const { return index_ != other.index_; }

    private:
        const Ring* ring_;
        Int index_;
    };

    iterator begin() const { return iterator(ring_.get(), 0); }
    iterator end() const { return iterator(ring_.get(), size_); }
    const Int& size() const { return size_; }

private:
    RingPtr ring_;
    Int size_;
};

ElementRange enumerate_elements(const RingPtr& ring);

// True when the descriptor is one the strong-cleanness decision procedure
// soundly supports (free modules over it have well-behaved idempotents):
// Integers, fields, IntegersMod(p^k), DualExtension over a field, series and
// x-power quotients over such bases, and GroupRingC2 over a characteristic-2
// supported base.
bool projective_free_supported(const Ring& ring);

bool is_prime(const Int& n);
// Returns p when n = p^k for a prime p (k >= 1), nothing otherwise.
std::optional<Int> prime_power_base(const Int& n);

}  // namespace cleanmat
