#pragma once

#include "cleanmat/json_io.hpp"

namespace cleanmat {

// Re-checks a strongly-clean report using ring arithmetic only: the matrix
// data inside the report must satisfy every certificate identity from
// scratch.  Reports with a negative or unknown verdict pass vacuously.
// Throws VerificationError on the first identity that fails and SchemaError
// when the report is missing required fields.
void verify_report(const Json& report);

}  // namespace cleanmat
