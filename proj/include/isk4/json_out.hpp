#pragma once

#include "json.hpp"

#include "isk4/coloring.hpp"
#include "isk4/decompose.hpp"
#include "isk4/graph.hpp"
#include "isk4/recognizers.hpp"
#include "isk4/sparse_cycles.hpp"
#include "isk4/wheels.hpp"

namespace isk4 {

using json = nlohmann::ordered_json;

json to_json(const Graph& g);
json to_json(const Triangle& t);
json to_json(const K33Witness& w);
json to_json(const Isk4Witness& w);
json to_json(const LinkageWitness& w);
json to_json(const SpResult& r);
json to_json(const K4MinorCertificate& c);
json to_json(const Wheel& w);
json to_json(const ProperWheelReport& r);
json to_json(const CliqueCutset& c);
json to_json(const DecompositionStep& s);
json to_json(const ColorResult& r);
json to_json(const SparseCycleOutcome& o);
json to_json(const MinimalK13Result& r);
json to_json(const ClassReport& r);

}  // namespace isk4
