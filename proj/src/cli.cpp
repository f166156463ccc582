#include "cleanmat/cli.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "cleanmat/clean.hpp"
#include "cleanmat/errors.hpp"
#include "cleanmat/json_io.hpp"
#include "cleanmat/lift.hpp"
#include "cleanmat/matrices.hpp"
#include "cleanmat/poly.hpp"
#include "cleanmat/resultant.hpp"
#include "cleanmat/rings.hpp"
#include "cleanmat/verify.hpp"

namespace cleanmat {

namespace {

std::string normalize_command(std::string command) {
    for (char& c : command) {
        if (c == '-') c = '_';
    }
    return command;
}

// Series descriptors may omit their truncation length; the --order default
// fills it in, recursively through nested bases.
Json with_default_order(Json ring, int order) {
    if (!ring.is_object()) return ring;
    if (ring.contains("base")) {
        ring["base"] = with_default_order(ring["base"], order);
    }
    auto type = ring.find("type");
    if (type != ring.end() && type->is_string()) {
        const std::string t = type->get<std::string>();
        if (t == "powerseries" && !ring.contains("order")) ring["order"] = order;
        if (t == "quotient_x_pow" && !ring.contains("m")) ring["m"] = order;
    }
    return ring;
}

SearchLimits limits_from(const Json& payload, const CliOptions& opts) {
    std::optional<std::int64_t> budget = opts.budget;
    if (payload.is_object() && payload.contains("budget")) {
        Int raw = parse_int(payload.at("budget"));
        if (raw <= 0 || raw > (Int(1) << 40)) {
            throw SchemaError("\"budget\" must be a positive integer at most 2^40");
        }
        budget = raw.convert_to<std::int64_t>();
    }
    SearchLimits limits;
    if (budget) {
        limits.factor_budget = *budget;
        limits.brute_budget = *budget;
        limits.cyclic_budget = *budget;
    }
    return limits;
}

std::string string_field(const Json& j, const char* key) {
    const Json& v = json_require(j, key);
    if (!v.is_string()) throw SchemaError("\"" + std::string(key) + "\" must be a string");
    return v.get<std::string>();
}

// Negative and unknown verdicts are plain {verdict, reason}; strongly clean
// reports carry the command, ring and matrix alongside the certificate so
// they re-verify standalone.
Json verdict_report(const std::string& command, const RingPtr& ring, const Matrix& a,
                    const Verdict& verdict) {
    if (!verdict.is_clean()) {
        Json out;
        out["verdict"] = verdict.kind == Verdict::Kind::NotStronglyClean ? "not_strongly_clean"
                                                                         : "unknown";
        out["reason"] = verdict.reason;
        return out;
    }
    Json out = certificate_to_json(*verdict.certificate);
    out["command"] = command;
    out["ring"] = ring_to_json(*ring);
    out["matrix"] = matrix_to_json(a);
    return out;
}

// A user-supplied factor pair is validated like any internal one, but a
// failure is the user's fault, not a library bug.
SrFactorization user_factorization(const RingPtr& base, const Json& payload) {
    Polynomial h0 = parse_poly(base, json_require(payload, "h0"));
    Polynomial h1 = parse_poly(base, json_require(payload, "h1"));
    try {
        return SrFactorization::make_checked(h0.mul(h1), h0, h1);
    } catch (const VerificationError& e) {
        throw PreconditionError(e.what());
    }
}

Json lift_report(const std::string& command, const RingPtr& ring, const Matrix& a,
                 const LiftedFactorization& lifted) {
    CleanCertificate cert = lifted_certificate(a, lifted);
    Json out = certificate_to_json(cert);
    out["command"] = command;
    out["ring"] = ring_to_json(*ring);
    out["matrix"] = matrix_to_json(a);
    out["order"] = lifted.order();
    out["base_h0"] = poly_to_json(lifted.base().h0());
    out["base_h1"] = poly_to_json(lifted.base().h1());
    return out;
}

Json dispatch(const Json& request, const CliOptions& opts) {
    const std::string command = normalize_command(string_field(request, "command"));
    RingPtr ring = parse_ring(with_default_order(json_require(request, "ring"),
                                                 opts.default_order));
    const Json& payload = json_require(request, "payload");

    if (command == "charpoly") {
        Matrix a = parse_matrix(ring, json_require(payload, "matrix"));
        return poly_to_json(charpoly(a));
    }
    if (command == "resultant") {
        Polynomial f = parse_poly(ring, json_require(payload, "f"));
        Polynomial g = parse_poly(ring, json_require(payload, "g"));
        RingElement res = resultant(f, g);
        Json out;
        out["resultant"] = element_to_json(res);
        out["unit"] = ring->is_unit(res);
        if (auto bezout = bezout_certificate(f, g)) {
            out["u"] = poly_to_json(bezout->u());
            out["v"] = poly_to_json(bezout->v());
        }
        return out;
    }
    if (command == "coprime") {
        Polynomial f = parse_poly(ring, json_require(payload, "f"));
        Polynomial g = parse_poly(ring, json_require(payload, "g"));
        CoprimalityReport residues = coprime_all_residues(f, g);
        Json out;
        out["coprime"] = coprime(f, g);
        out["coprime_everywhere"] = residues.coprime_everywhere;
        if (residues.witness_prime) out["witness_prime"] = int_to_json(*residues.witness_prime);
        out["detail"] = residues.detail;
        return out;
    }
    if (command == "decide" || command == "oracle" || command == "classify_z_series_2x2") {
        Matrix a = parse_matrix(ring, json_require(payload, "matrix"));
        SearchLimits limits = limits_from(payload, opts);
        Verdict verdict = command == "decide"   ? decide(a, limits)
                          : command == "oracle" ? brute_force(a, limits)
                                                : classify_2x2_Z_powerseries(a, limits);
        return verdict_report(command, ring, a, verdict);
    }
    if (command == "lift_series" || command == "lift_quotient" || command == "lift_groupring") {
        if (!ring->base()) {
            throw PreconditionError("lift commands need an extension ring, not " + ring->name());
        }
        Matrix a = parse_matrix(ring, json_require(payload, "matrix"));
        SrFactorization fac = user_factorization(ring->base(), payload);
        LiftedFactorization lifted = command == "lift_series"     ? lift_series(a, fac)
                                     : command == "lift_quotient" ? lift_quotient(a, fac)
                                                                  : lift_groupring(a, fac);
        return lift_report(command, ring, a, lifted);
    }
    throw SchemaError("unknown command \"" + command + "\"");
}

}  // namespace

int run_request(const std::string& input, std::ostream& out, std::ostream& err,
                const CliOptions& opts) {
    try {
        Json request = Json::parse(input);
        Json output = dispatch(request, opts);
        // Every verdict-bearing report goes through the arithmetic-only
        // checker before it is printed.
        if (output.contains("verdict")) verify_report(output);
        out << output.dump() << "\n";
        return 0;
    } catch (const GuardError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const UnsupportedRingError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const VerificationError& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const SchemaError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DescriptorMismatchError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace cleanmat
