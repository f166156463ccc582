#pragma once

#include <string>

#include "json.hpp"

#include "cleanmat/clean.hpp"
#include "cleanmat/matrices.hpp"
#include "cleanmat/poly.hpp"
#include "cleanmat/rings.hpp"

namespace cleanmat {

using Json = nlohmann::json;

// Member access that reports absent keys as schema errors.
const Json& json_require(const Json& j, const char* key);

// Ring descriptors:
//   {"type":"Z"}
//   {"type":"Zmod","n":<int>}
//   {"type":"GF4"}
//   {"type":"dual","base":<ring>}
//   {"type":"powerseries","base":<ring>,"order":<int>}
//   {"type":"quotient_x_pow","base":<ring>,"m":<int>}
//   {"type":"groupring_c2","base":<ring>}
RingPtr parse_ring(const Json& j);
Json ring_to_json(const Ring& ring);

// Integers are JSON integer tokens or decimal strings; numbers that only
// survive parsing as lossy doubles are rejected.
Int parse_int(const Json& j);
Json int_to_json(const Int& v);

// Scalars as integers, GF4 as "0"/"1"/"a"/"b" (numeric 0/1 accepted),
// composite kinds as arrays of base elements, short arrays zero-padded.
RingElement parse_element(const RingPtr& ring, const Json& j);
Json element_to_json(const RingElement& e);

// {"coeffs":[c0,c1,...]} or a bare coefficient array, lowest degree first.
Polynomial parse_poly(const RingPtr& ring, const Json& j);
Json poly_to_json(const Polynomial& p);

// {"rows":r,"cols":c,"entries":[row-major]} or a bare array of row arrays.
Matrix parse_matrix(const RingPtr& ring, const Json& j);
Json matrix_to_json(const Matrix& m);

// {"verdict":"strongly_clean","source":...,"E":...,"U":...,"U_inv":...}
// plus "h0","h1","u","v" when a factorization certificate is attached.
Json certificate_to_json(const CleanCertificate& cert);

}  // namespace cleanmat
