#pragma once

#include "heightlab/bounds.hpp"
#include "heightlab/families.hpp"
#include "heightlab/heights.hpp"
#include "heightlab/poly.hpp"
#include "heightlab/roots.hpp"
#include "heightlab/snfun.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace heightlab {

/// Insertion-ordered so that output is byte-stable.
using Json = nlohmann::ordered_json;

/// ["c0", "c1", ...], constant term first.
Json to_json(const IntPoly& p);
/// Accepts decimal strings or integers; throws DomainError otherwise.
IntPoly poly_from_json(const Json& j);

/// Each printed radius is widened to also cover the decimal rounding of the
/// printed center, so the printed disks still enclose the roots.
Json to_json(const ConjugateSet& cs);
Json to_json(const HeightValue& h);
Json to_json(const Interval& x);
Json to_json(const CnResult& c);
Json to_json(const IrreducibilityEvidence& e);
Json to_json(const AlternatingEvidence& e);
Json to_json(const BoundReport& r);
Json to_json(const std::vector<BoundReport>& reports);

/// Header plus one line per report: name,lhs,rhs,relation,margin,verdict.
std::string to_csv(const std::vector<BoundReport>& reports);

} // namespace heightlab
