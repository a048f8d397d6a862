#pragma once

// JSON wire formats:
//   MuScalar        {"num": [[re,im],...], "den": [[re,im],...]}  ("p/q" strings)
//   AlgebraElement  [{"branch":"a"|"as","a":n,"m":n,"n":n,"coeff":MuScalar}]
//   InvariantForm   {"multiplets":[{"k","m","coeff"}], "q_rep": AlgebraElement}
//   structure constants, equations of motion, cover/cocycle configs and
//   validation reports as documented in the README.

#include "qsu2/bundle.hpp"
#include "qsu2/calculus.hpp"

#include <json.hpp>

namespace qsu2 {

using Json = nlohmann::json;

Json to_json(const MuScalar& s);
MuScalar muscalar_from_json(const Json& j);

Json to_json(const AlgebraElement& a);
AlgebraElement algebra_from_json(const Json& j);

Json to_json(const ChartFn& f);
ChartFn chartfn_from_json(const Json& j);

Json invariant_form_to_json(CalculusContext& ctx, const InvariantForm& f);
Json tensor2_to_json(const Tensor2Form& t);
Json structure_constants_to_json(CalculusContext& ctx);
Json eom_to_json(GaugeContext& g);
Json field_to_json(const FieldExpression& e);

// cover/cocycle configuration
struct CocycleConfig {
    CoverNerve cover;
    std::map<std::pair<int, int>, ChartCharacter> g;
};
Json cocycle_config_to_json(const CocycleConfig& c);
CocycleConfig cocycle_config_from_json(const Json& j);

}  // namespace qsu2
