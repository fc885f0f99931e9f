#pragma once

#include <json.hpp>

#include "tgp/example6.hpp"
#include "tgp/schurweyl.hpp"
#include "tgp/suite.hpp"

namespace tgp {

using json = nlohmann::json;

json to_json(const QPoly& p);                    // {"2": 1, "4": 1}
json to_json(const CharacterVector& v);          // {"2,1": 2, ...}
json to_json(const GDecomposition& g);           // mult map plus "rank"
json to_json(const MPoly& p);                    // [{"exponents": [...], "coeff": "p/q"}]
json to_json(const GroebnerBasis& g);            // {"order": ..., "generators": [...]}
json to_json(const TanisakiSet& s);
json to_json(const RatMat& m);                   // rows of coefficient strings
json to_json(const RepMatrices& m);
json to_json(const std::map<int, CharacterVector>& graded);
json to_json(const FlatReport& r);
json to_json(const SplitReport& r);
json to_json(const ModuleFingerprint& f);
json to_json(const Example6Report& r);
json to_json(const SuiteReport& r);

}  // namespace tgp
