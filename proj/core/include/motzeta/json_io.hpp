#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "motzeta/checks.hpp"
#include "motzeta/endo.hpp"
#include "motzeta/variety.hpp"
#include "motzeta/witt.hpp"

namespace motzeta {

// All numeric payloads are serialized as decimal strings so arbitrary
// precision survives any JSON reader; field order is fixed and output is
// byte-stable across runs.

// {"num":["1",...],"den":["1",...]} — coefficients by ascending degree
std::string witt_to_json(const WittVector& w);
WittVector witt_from_json(std::string_view text);

// {"counts":["3","5",...]}
std::string counts_to_json(const GhostSequence& g);
GhostSequence counts_from_json(std::string_view text);

// {"ambient":"affine"|"projective","dim":n,"p":prime,
//  "equations":[[[coeff,[e0,e1,...]],...],...]}
VarietySpec variety_from_json(std::string_view text);

struct CohomologyData {
    EndoComplex complex;
    std::uint64_t q = 0;
};

// {"q":int,"components":[{"degree":int,"matrix":[[...]]}],"twist":int}
CohomologyData cohomology_from_json(std::string_view text);

// {"rows":[{"n":1,"brute":"9","predicted":"9","pass":true},...],"pass":bool}
std::string report_to_json(const LefschetzReport& r);

// whole file as a string; throws std::invalid_argument on IO failure
std::string load_file(const std::string& path);

}  // namespace motzeta
