#pragma once

#include <json.hpp>

#include "convsum/bigrational.hpp"
#include "convsum/convolution.hpp"
#include "convsum/eta.hpp"
#include "convsum/modforms.hpp"
#include "convsum/qseries.hpp"

namespace convsum {

// Insertion-ordered so that divisor keys come out in numeric order.
using Json = nlohmann::ordered_json;

// {"version": 1, "kind": "qseries", "truncation": T, "coeffs": ["num/den", ...]}
Json qseries_to_json(const QSeries& s);
// Throws InvalidArgument on schema violations.
QSeries qseries_from_json(const Json& j);

// {"level": N, "exponents": {"1": r1, "2": r2, ...}} over all divisors of N.
Json eta_to_json(const EtaQuotient& f);
EtaQuotient eta_from_json(const Json& j);

Json ligozat_to_json(const EtaQuotient& f, const LigozatReport& report);

// {"alpha", "beta", "sigma3": {"d": c}, "sigma": {"d": [c0, c1]}, "cusp": [[id, c], ...]}
Json formula_to_json(const ConvolutionFormula& f);
ConvolutionFormula formula_from_json(const Json& j);

Json verification_to_json(const VerificationReport& report);

// Element ids, eta exponent vectors, and the first `preview` coefficients.
Json basis_to_json(const Basis& basis, std::size_t preview = 20);

Json expansion_to_json(const TargetExpansion& e);

}  // namespace convsum
