#pragma once

#include "gaidec/decompose.hpp"
#include "gaidec/elicit.hpp"
#include "gaidec/gai.hpp"
#include "gaidec/kary.hpp"
#include "gaidec/polytope.hpp"
#include "gaidec/rational.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace gaidec::json_io {

// Key order inside documents is meaningful for byte determinism, so
// everything runs through the order-preserving json type.
using json = nlohmann::ordered_json;

// How rationals are rendered. Exact "p/q" strings by default; a nonnegative
// digit count switches to decimal approximations and stamps the document
// with "exact": false so nobody mistakes it for a value-preserving file.
struct RenderOptions {
    int decimal_digits = -1;

    bool exact() const { return decimal_digits < 0; }
    std::string render(const Rat& r) const;
};

// Parses text, rethrowing parse errors as ValidationError with the byte
// offset and the caller-supplied source name.
json parse_json(const std::string& text, const std::string& source);

json game_json(const kary::KaryGame& v, const RenderOptions& opts = {});
kary::KaryGame game_from_json(const json& j);

json mobius_json(const kary::MobiusMap& m, const RenderOptions& opts = {});
kary::MobiusMap mobius_from_json(const json& j);

json capacity_report_json(const kary::CapacityReport& r, const RenderOptions& opts = {});

json attributes_json(const gai::AttributeSpace& space);
gai::AttributeSpace attributes_from_json(const json& j);

json model_json(const gai::GaiModel& m, const RenderOptions& opts = {});
gai::GaiModel model_from_json(const json& j);

json tabulated_json(const gai::TabulatedFunction& u, const RenderOptions& opts = {});
gai::TabulatedFunction tabulated_from_json(const json& j);

// One stream record per vertex: {"support", "antichain", "mobius"}.
json vertex_json(const polytope::VertexCapacity& v, const RenderOptions& opts = {});
json vertex_census_json(const polytope::VertexCensus& c);

// Per-attribute bounds echoed back as "m" when they are not uniform,
// otherwise as "n"/"k".
json constraint_census_json(const decompose::ConstraintCensus& c, const std::vector<int>& m);
json constraint_census_json(const decompose::ConstraintCensus& c, int n, int k);

json decomposition_json(const decompose::MonotoneGaiDecomposition& d, const RenderOptions& opts = {});
decompose::MonotoneGaiDecomposition decomposition_from_json(const json& j);

json combination_json(const decompose::ConvexCombination& combo, const RenderOptions& opts = {});

json dataset_json(const elicit::PreferenceDataset& d);
elicit::PreferenceDataset dataset_from_json(const json& j);

json elicitation_json(const elicit::ElicitationResult& r, const RenderOptions& opts = {});
json soft_fit_json(const elicit::SoftFit& f, const RenderOptions& opts = {});

} // namespace gaidec::json_io
