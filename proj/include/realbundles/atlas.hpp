#pragma once

#include <optional>
#include <vector>

#include "realbundles/gauge_cohomology.hpp"
#include "realbundles/json_io.hpp"
#include "realbundles/stratification.hpp"

namespace rb {

struct StrataEntry {
    Stratum stratum;
    /// Absent when the normal-bundle verdict is indeterminate.
    std::optional<ContributionRule> contribution;

    friend bool operator==(const StrataEntry&, const StrataEntry&) = default;
};

struct AtlasRow {
    CurveTopology curve;
    RealBundleType bundle;
    std::optional<GaugeCase> case_label;
    OrientabilityVerdict verdict;
    std::vector<StrataEntry> strata;
    std::optional<TruncatedSeries> bg_series;
    /// Full or partial moduli report; absent for even degree or genus < 2.
    std::optional<CohomologyReport> moduli;
    std::optional<CohomologyReport> fixed_determinant;
    bool quaternionic_valid = false;
    std::vector<Citation> citations;

    friend bool operator==(const AtlasRow&, const AtlasRow&) = default;
};

struct AtlasOptions {
    int genus_min = 1;
    int genus_max = 0; // min > max is an empty range
    long degree = 1;
    FieldSpec field;
    std::size_t truncation = 8;
    long max_codim = 8;
    unsigned threads = 1;
};

inline constexpr int kAtlasGenusLimit = 12;

/// Rank-two rows over every curve topology and bundle type in the genus range,
/// ordered by genus, curve kind, fixed circles, then w1.
std::vector<AtlasRow> atlas(const AtlasOptions& opt);

/// One row (rank two). Throws ValidationError on inconsistent input.
AtlasRow atlas_row(const CurveTopology& c, const RealBundleType& b, const FieldSpec& k, std::size_t n,
                   long max_codim);

void to_json(json& j, const StrataEntry& e);
void from_json(const json& j, StrataEntry& e);
void to_json(json& j, const AtlasRow& r);
void from_json(const json& j, AtlasRow& r);

} // namespace rb
