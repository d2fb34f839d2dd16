#pragma once

#include <string>
#include <vector>

#include "realbundles/atlas.hpp"

namespace rb {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// RFC 4180 style: header row, fields quoted only when needed.
std::string to_csv(const Table& t);
std::string to_markdown(const Table& t);
/// Several tables separated by one blank line.
std::string to_csv(const std::vector<Table>& ts);
std::string to_markdown(const std::vector<Table>& ts);

/// Coefficients joined by single spaces ("1 2 1").
std::string series_cell(const TruncatedSeries& s);
std::string contribution_cell(const std::optional<ContributionRule>& r);

Table bundles_table(const CurveTopology& c, const std::vector<RealBundleType>& bundles);
Table strata_table(const std::vector<StrataEntry>& strata);
/// Summary (field/value) followed by the degree/coefficient table.
std::vector<Table> report_tables(const CohomologyReport& r);
Table verification_table(const VerificationResult& v);
Table atlas_table(const std::vector<AtlasRow>& rows);

} // namespace rb
