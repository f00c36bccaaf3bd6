#pragma once

#include <string_view>

#include "json.hpp"

#include "hardy/conjugation.hpp"
#include "hardy/diffop.hpp"
#include "hardy/spectrum.hpp"
#include "hardy/symmetry.hpp"

// JSON encodings used by the CLI. Complex scalars are [re, im] pairs,
// polynomials are ascending lists of pairs, and a non-finite residual is the
// string "inf" (JSON has no infinity).

namespace hardy {

using nlohmann::json;

json to_json(cplx z);
cplx complex_from_json(const json& j);

json to_json(const Poly& p);
/// Accepts a list of [re, im] pairs or plain numbers, or a string for parse_poly.
Poly poly_from_json(const json& j);

json to_json(const SymbolPair& s);
SymbolPair symbols_from_json(const json& j);

json to_json(const ConjugationSpec& c);
ConjugationSpec conjugation_from_json(const json& j);

json to_json(const ClassificationReport& r);
ClassificationReport classification_from_json(const json& j);

json to_json(const SpectrumResult& r);
/// pairing_distances are recomputed from candidates and numeric eigenvalues.
SpectrumResult spectrum_from_json(const json& j);

json to_json(const OperatorMatrix& m);
OperatorMatrix matrix_from_json(const json& j);

json residual_to_json(double r);
double residual_from_json(const json& j);

/**
 * Parses the convenience grammar for polynomials in z, e.g. "1+2i*z^2" or
 * "-0.5+z". Terms: c, c*z, c*z^k, z, z^k with complex literals a, bi, i, or
 * a parenthesized sum "(1+2i)". The '*' may be omitted and like terms are
 * summed. Throws InvalidArgument on malformed input.
 */
Poly parse_poly(std::string_view text);

}  // namespace hardy
