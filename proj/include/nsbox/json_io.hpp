#pragma once

#include <json.hpp>

#include "nsbox/correlations.hpp"
#include "nsbox/decompose.hpp"
#include "nsbox/families.hpp"
#include "nsbox/fpr.hpp"
#include "nsbox/hardy.hpp"
#include "nsbox/membership.hpp"
#include "nsbox/relabel.hpp"
#include "nsbox/repro.hpp"
#include "nsbox/witness.hpp"

namespace nsbox {

using Json = nlohmann::ordered_json;

/// {"P": [[[["num/den", ...]]]]}, nested [x][y][a][b], lowest terms out.
Json box_to_json(const Box& box);

/// Accepts "num/den" / integer strings / plain JSON integers as leaves,
/// reducing to lowest terms. Throws ParseError naming the offending path.
Box box_from_json(const Json& j);

Json to_json(const Rational& r);
Json to_json(const CorrelationSummary& s);
Json to_json(const FprReport& r);
Json to_json(const LocalityCertificate& c, const VertexSet& vset);
Json to_json(const Relabeling& r);
Json to_json(const PrDecomposition& d);
Json to_json(const HardyReport& r);
Json to_json(const WitnessVerdict& v);
Json to_json(const ReproFailure& f);
Json to_json(const ReproReport& r);
Json to_json(const FamilyPoint& p);

}  // namespace nsbox
