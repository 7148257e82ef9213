#pragma once

#include <json.hpp>

#include "mdsa/bsigma.hpp"
#include "mdsa/ops_spectrum.hpp"
#include "mdsa/report.hpp"
#include "mdsa/series.hpp"
#include "mdsa/tensor.hpp"

namespace mdsa {

using json = nlohmann::json;

// AElement: [{"tau_set":[i,...],"xi_exps":{"i":r,...},"scalar":[[a,b],...]},...]
json to_json(const AElement& e);
AElement aelement_from_json(const json& j);

json to_json(const Bidegree& d); // [p, q]
Bidegree bidegree_from_json(const json& j);

// series: {"window":[lo,hi],"terms":[{"t":j,"s":e,"coeff":<AElement>},...]}
json to_json(const ASeries& f);
ASeries aseries_from_json(const json& j);

// BSigmaElement: {"terms":[{"u":e,"v":k,"scalar":[[a,b],...]},...]}
json to_json(const BSigmaElement& e);
BSigmaElement bsigma_from_json(const json& j);

// OpsElement: {"suspended":bool,"terms":[{"e":i,"scalar":[[a,b],...]},...]}
json to_json(const OpsElement& e);
OpsElement ops_from_json(const json& j);

json to_json(const BSigmaTensor& t);
json to_json(const OpsTensor& t);
json to_json(const TensorElement& t);
TensorElement tensor_from_json(const json& j);

json to_json(const CheckReport& r);

} // namespace mdsa

#include "mdsa/steinberger.hpp"

namespace mdsa {

// per-target status, witness combinations, and the caps used
json to_json(const ClosureResult& r, const ClosureCaps& caps);

} // namespace mdsa
