#pragma once

#include <json.hpp>

#include "realbundles/cdga.hpp"
#include "realbundles/dga_oracle.hpp"
#include "realbundles/gauge_cohomology.hpp"
#include "realbundles/presentation.hpp"
#include "realbundles/series.hpp"
#include "realbundles/stratification.hpp"
#include "realbundles/topology.hpp"

namespace rb {

using json = nlohmann::json;

/// Integers are written as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise; both forms are accepted on input.
json integer_to_json(const Integer& v);
Integer integer_from_json(const json& j);

void to_json(json& j, const TruncatedSeries& s);
TruncatedSeries series_from_json(const json& j);

void to_json(json& j, const CurveTopology& c);
void from_json(const json& j, CurveTopology& c);
void to_json(json& j, const RealBundleType& b);
void from_json(const json& j, RealBundleType& b);
void to_json(json& j, const QuaternionicBundleType& q);
void from_json(const json& j, QuaternionicBundleType& q);
void to_json(json& j, const SurfaceDecomposition& d);
void from_json(const json& j, SurfaceDecomposition& d);

void to_json(json& j, const Stratum& s);
void from_json(const json& j, Stratum& s);
void to_json(json& j, const OrientabilityVerdict& v);
void from_json(const json& j, OrientabilityVerdict& v);
void to_json(json& j, const ContributionRule& r);
void from_json(const json& j, ContributionRule& r);

void to_json(json& j, const Generator& g);
void from_json(const json& j, Generator& g);
void to_json(json& j, const GradedAlgebraPresentation& p);
void from_json(const json& j, GradedAlgebraPresentation& p);

void to_json(json& j, const Citation& c);
void from_json(const json& j, Citation& c);
void to_json(json& j, const CohomologyReport& r);
void from_json(const json& j, CohomologyReport& r);

/// {generators, differential: {label: [{coefficient, monomial: {label: exponent}}]}, char}.
/// Coefficients are integers or "p/q" strings.
void to_json(json& j, const CDGA& c);
void from_json(const json& j, CDGA& c);

void to_json(json& j, const VerificationResult& v);

} // namespace rb

// TruncatedSeries has no default constructor.
template <>
struct nlohmann::adl_serializer<rb::TruncatedSeries> {
    static rb::TruncatedSeries from_json(const nlohmann::json& j) { return rb::series_from_json(j); }
    static void to_json(nlohmann::json& j, const rb::TruncatedSeries& s) { rb::to_json(j, s); }
};
