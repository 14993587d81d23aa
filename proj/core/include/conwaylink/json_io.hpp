#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "conwaylink/knot_module.hpp"
#include "conwaylink/laurent.hpp"
#include "conwaylink/rationality.hpp"
#include "conwaylink/series.hpp"
#include "conwaylink/walgebra.hpp"

namespace cwl {

using json = nlohmann::ordered_json;

// Canonical encodings. Coefficients are decimal strings; term lists are
// sorted by exponent, so identical values serialize to identical bytes.
//   LaurentPoly:     {"vars":["x","y"],"terms":[{"e":[1,-1],"c":"3"}]}
//   TruncatedSeries: {"vars":["x"],"order":8,"terms":[{"e":[2],"c":"-1"}]}
//   WElement:        {"lambda":1,"terms":[{"i":1,"j":1,"w":true,"c":"-1"}],"order":24}
json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const json& j);

json to_json(const WElement& e);
WElement welement_from_json(const json& j);

// {"bound":{"M":6,"N":2},"order":37,"verdict":"no-fit","rank":{...}}
json to_json(const FitCertificate& cert);

json to_json(const ModulePresentation& pres);
// {"ring":"Z[t]","gens":["a","b"],"rels":[[entry,...],...]} where an entry is
// a term object {"e":[...],"c":"1"} or a list of term objects.
ModulePresentation presentation_from_json(const json& j);

// CSV with header "exponent,coefficient" (univariate polynomials).
std::string to_csv(const LaurentPoly& p);
// Family table: rows = exponent, one column per r value.
std::string family_csv(const std::vector<std::pair<std::int64_t, LaurentPoly>>& family);

// Tiny expression parser for univariate Laurent polynomials, e.g.
// "t^2-t+1", "1 - 2*z^2", "3t^-1". The variable name is inferred from the
// first letter seen and must be consistent.
LaurentPoly parse_poly(const std::string& text);

}  // namespace cwl
