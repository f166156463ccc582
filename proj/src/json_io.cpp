#include "cleanmat/json_io.hpp"

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "cleanmat/errors.hpp"

namespace cleanmat {

const Json& json_require(const Json& j, const char* key) {
    if (!j.is_object()) {
        throw SchemaError("expected an object with key \"" + std::string(key) + "\"");
    }
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError("missing key \"" + std::string(key) + "\"");
    return *it;
}

namespace {

int parse_small_positive(const Json& j, const char* what) {
    Int v = parse_int(j);
    if (v < 1 || v > 1024) throw SchemaError(std::string(what) + " out of range");
    return static_cast<int>(v);
}

}  // namespace

Int parse_int(const Json& j) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start) throw SchemaError("empty integer string");
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw SchemaError("bad integer string: " + s);
        }
        return Int(s);
    }
    if (j.is_number_float()) {
        throw SchemaError("integer out of exact range; pass it as a decimal string");
    }
    throw SchemaError("expected an integer");
}

Json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

RingPtr parse_ring(const Json& j) {
    const Json& type = json_require(j, "type");
    if (!type.is_string()) throw SchemaError("ring \"type\" must be a string");
    const std::string& t = type.get_ref<const std::string&>();
    if (t == "Z") return Ring::integers();
    if (t == "Zmod") return Ring::integers_mod(parse_int(json_require(j, "n")));
    if (t == "GF4") return Ring::gf4();
    if (t == "dual") return Ring::dual_extension(parse_ring(json_require(j, "base")));
    if (t == "powerseries") {
        return Ring::truncated_power_series(parse_ring(json_require(j, "base")),
                                            parse_small_positive(json_require(j, "order"), "order"));
    }
    if (t == "quotient_x_pow") {
        return Ring::quotient_x_pow(parse_ring(json_require(j, "base")),
                                    parse_small_positive(json_require(j, "m"), "m"));
    }
    if (t == "groupring_c2") return Ring::group_ring_c2(parse_ring(json_require(j, "base")));
    throw SchemaError("unknown ring type \"" + t + "\"");
}

Json ring_to_json(const Ring& ring) {
    Json j;
    switch (ring.kind()) {
        case Ring::Kind::Integers:
            j["type"] = "Z";
            return j;
        case Ring::Kind::IntegersMod:
            j["type"] = "Zmod";
            j["n"] = int_to_json(ring.modulus());
            return j;
        case Ring::Kind::GaloisField4:
            j["type"] = "GF4";
            return j;
        case Ring::Kind::DualExtension:
            j["type"] = "dual";
            j["base"] = ring_to_json(*ring.base());
            return j;
        case Ring::Kind::TruncatedPowerSeries:
            j["type"] = "powerseries";
            j["base"] = ring_to_json(*ring.base());
            j["order"] = ring.order();
            return j;
        case Ring::Kind::QuotientXPow:
            j["type"] = "quotient_x_pow";
            j["base"] = ring_to_json(*ring.base());
            j["m"] = ring.order();
            return j;
        case Ring::Kind::GroupRingC2:
            j["type"] = "groupring_c2";
            j["base"] = ring_to_json(*ring.base());
            return j;
    }
    throw Error("unhandled ring kind");
}

RingElement parse_element(const RingPtr& ring, const Json& j) {
    switch (ring->kind()) {
        case Ring::Kind::Integers:
        case Ring::Kind::IntegersMod:
            return ring->from_int(parse_int(j));
        case Ring::Kind::GaloisField4: {
            if (j.is_string()) {
                const std::string& s = j.get_ref<const std::string&>();
                if (s == "0") return ring->make_scalar(0);
                if (s == "1") return ring->make_scalar(1);
                if (s == "a") return ring->make_scalar(2);
                if (s == "b") return ring->make_scalar(3);
                throw SchemaError("GF4 elements are \"0\", \"1\", \"a\", \"b\"");
            }
            if (j.is_number_integer()) {
                Int v = parse_int(j);
                if (v == 0 || v == 1) return ring->make_scalar(v);
            }
            throw SchemaError("GF4 elements are \"0\", \"1\", \"a\", \"b\"");
        }
        default: {
            if (!j.is_array()) {
                throw SchemaError("elements of " + ring->name() + " are component arrays");
            }
            std::size_t expected = (ring->kind() == Ring::Kind::TruncatedPowerSeries ||
                                    ring->kind() == Ring::Kind::QuotientXPow)
                                       ? static_cast<std::size_t>(ring->order())
                                       : 2;
            if (j.size() > expected) {
                throw SchemaError("too many components for " + ring->name());
            }
            std::vector<RingElement> parts;
            parts.reserve(expected);
            for (const Json& item : j) parts.push_back(parse_element(ring->base(), item));
            while (parts.size() < expected) parts.push_back(ring->base()->zero());
            return ring->make(std::move(parts));
        }
    }
}

Json element_to_json(const RingElement& e) {
    switch (e.ring().kind()) {
        case Ring::Kind::Integers:
        case Ring::Kind::IntegersMod:
            return int_to_json(e.scalar());
        case Ring::Kind::GaloisField4: {
            static const char* names[] = {"0", "1", "a", "b"};
            return Json(names[static_cast<int>(e.scalar())]);
        }
        default: {
            Json arr = Json::array();
            for (const RingElement& p : e.parts()) arr.push_back(element_to_json(p));
            return arr;
        }
    }
}

Polynomial parse_poly(const RingPtr& ring, const Json& j) {
    const Json& coeffs = j.is_object() ? json_require(j, "coeffs") : j;
    if (!coeffs.is_array()) throw SchemaError("polynomial coefficients must be an array");
    std::vector<RingElement> cs;
    cs.reserve(coeffs.size());
    for (const Json& item : coeffs) cs.push_back(parse_element(ring, item));
    return Polynomial(ring, std::move(cs));
}

Json poly_to_json(const Polynomial& p) {
    Json arr = Json::array();
    for (int i = 0; i <= p.degree(); ++i) arr.push_back(element_to_json(p.coeff(i)));
    Json j;
    j["coeffs"] = std::move(arr);
    return j;
}

Matrix parse_matrix(const RingPtr& ring, const Json& j) {
    if (j.is_object()) {
        int rows = parse_small_positive(json_require(j, "rows"), "rows");
        int cols = parse_small_positive(json_require(j, "cols"), "cols");
        const Json& entries = json_require(j, "entries");
        if (!entries.is_array() ||
            entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
            throw SchemaError("matrix \"entries\" must hold rows*cols elements");
        }
        std::vector<RingElement> es;
        es.reserve(entries.size());
        for (const Json& item : entries) es.push_back(parse_element(ring, item));
        return Matrix(ring, rows, cols, std::move(es));
    }
    if (!j.is_array() || j.empty()) throw SchemaError("matrix must be an array of rows");
    std::size_t cols = 0;
    std::vector<RingElement> es;
    for (const Json& row : j) {
        if (!row.is_array() || row.empty()) throw SchemaError("matrix rows must be arrays");
        if (cols == 0) {
            cols = row.size();
        } else if (row.size() != cols) {
            throw SchemaError("matrix rows must have equal length");
        }
        for (const Json& item : row) es.push_back(parse_element(ring, item));
    }
    return Matrix(ring, static_cast<int>(j.size()), static_cast<int>(cols), std::move(es));
}

Json matrix_to_json(const Matrix& m) {
    Json entries = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        for (int c = 0; c < m.cols(); ++c) entries.push_back(element_to_json(m.at(i, c)));
    }
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = std::move(entries);
    return j;
}

Json certificate_to_json(const CleanCertificate& cert) {
    Json j;
    j["verdict"] = "strongly_clean";
    j["source"] = to_string(cert.source());
    j["E"] = matrix_to_json(cert.E());
    j["U"] = matrix_to_json(cert.U());
    j["U_inv"] = matrix_to_json(cert.U_inverse());
    if (cert.factorization()) {
        const SrFactorization& fac = *cert.factorization();
        j["h0"] = poly_to_json(fac.h0());
        j["h1"] = poly_to_json(fac.h1());
        j["u"] = poly_to_json(fac.bezout().u());
        j["v"] = poly_to_json(fac.bezout().v());
    }
    return j;
}

}  // namespace cleanmat
