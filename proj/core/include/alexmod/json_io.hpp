#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

#include "alexmod/amalgam.hpp"
#include "alexmod/seifert.hpp"

namespace alexmod::io {

using nlohmann::json;

// Serialization conventions, shared by every producer and consumer:
//  - polynomial: list of [exponent, coefficient] pairs, exponents strictly
//    increasing, coefficients nonzero;
//  - integers: JSON numbers when they fit in 64 bits, decimal strings
//    otherwise (both accepted on input);
//  - matrices: row-major nested arrays.

json int_to_json(const Int& v);
Int int_from_json(const json& j, const std::string& where);

json poly_to_json(const laurent::LaurentPoly& p);
laurent::LaurentPoly poly_from_json(const json& j, const std::string& where);

json matrix_to_json(const exactlin::IntMatrix& m);
exactlin::IntMatrix matrix_from_json(const json& j, const std::string& where);

json presentation_to_json(const present::LambdaPresentation& p);
present::LambdaPresentation presentation_from_json(const json& j, const std::string& where);

json group_to_json(const abgrp::FgAbGroup& g);
json amalgam_to_json(const decomp::AmalgamData& a);
json lattice_to_json(const decomp::LatticePair& l);
json report_to_json(const decomp::DecompositionReport& r);
json knot_report_to_json(const knot::KnotReport& r);

/// Either a raw presentation or a Seifert matrix.
struct InputFile {
    std::optional<present::LambdaPresentation> presentation;
    std::optional<knot::SeifertMatrix> seifert;
};

/// Parses an input document ({"presentation": ...} or {"seifert": ...}).
/// Throws ParseError with a line (syntax) or field-path (semantic)
/// diagnostic.
InputFile parse_input(const std::string& text);

/// Canonical byte form: sorted keys, no insignificant whitespace.
std::string canonical_dump(const json& j);

}  // namespace alexmod::io
