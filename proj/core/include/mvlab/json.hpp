#pragma once

#include <nlohmann/json.hpp>

#include "mvlab/covering.hpp"
#include "mvlab/hypergraph.hpp"
#include "mvlab/interval.hpp"
#include "mvlab/ksubset.hpp"
#include "mvlab/theorems.hpp"
#include "mvlab/turan.hpp"
#include "mvlab/visibility.hpp"

// JSON forms of the library's result objects. Sets always serialize as
// ascending element lists; families of sets keep their colex order.
namespace mvlab {

using json = nlohmann::json;

json to_json(const KSubset& s);
json mask_to_json(std::uint64_t bits);
// Exact intervals collapse to a bare number, others to [lo, hi].
json to_json(const Interval& v);
json to_json(const VertexSet& s);
json to_json(const Hypergraph& h);
json to_json(const VisibilityCertificate& c);
json to_json(const TransversalCertificate& c);
json to_json(const CoveringInstance& c);
json to_json(const MinTransversalEdges& c);
json to_json(const Pattern& p);
json to_json(const TuranResult& r);
json to_json(const Certificate& c);
json to_json(const VerificationReport& r);

} // namespace mvlab
