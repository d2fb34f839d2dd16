#include "realbundles/tables.hpp"

#include <sstream>

namespace rb {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string md_field(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '|')
            out += '\\';
        out += ch == '\n' ? ' ' : ch;
    }
    return out;
}

std::string opt_cell(const std::optional<long>& v) { return v ? std::to_string(*v) : ""; }

template <class Seq>
std::string join(const Seq& xs, const char* sep) {
    std::ostringstream os;
    bool first = true;
    for (const auto& x : xs) {
        if (!first)
            os << sep;
        os << x;
        first = false;
    }
    return os.str();
}

} // namespace

std::string to_csv(const Table& t) {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            os << (i ? "," : "") << csv_field(cells[i]);
        os << '\n';
    };
    line(t.header);
    for (const auto& r : t.rows)
        line(r);
    return os.str();
}

std::string to_markdown(const Table& t) {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        os << '|';
        for (const auto& c : cells)
            os << ' ' << md_field(c) << " |";
        os << '\n';
    };
    line(t.header);
    os << '|';
    for (std::size_t i = 0; i < t.header.size(); ++i)
        os << " --- |";
    os << '\n';
    for (const auto& r : t.rows)
        line(r);
    return os.str();
}

std::string to_csv(const std::vector<Table>& ts) {
    std::string out;
    for (std::size_t i = 0; i < ts.size(); ++i)
        out += (i ? "\n" : "") + to_csv(ts[i]);
    return out;
}

std::string to_markdown(const std::vector<Table>& ts) {
    std::string out;
    for (std::size_t i = 0; i < ts.size(); ++i)
        out += (i ? "\n" : "") + to_markdown(ts[i]);
    return out;
}

std::string series_cell(const TruncatedSeries& s) {
    std::vector<std::string> parts;
    for (const auto& c : s.coeffs())
        parts.push_back(c.get_str());
    return join(parts, " ");
}

std::string contribution_cell(const std::optional<ContributionRule>& r) {
    if (!r)
        return "";
    if (r->kind == ContributionRule::Kind::Vanishing)
        return "Vanishing";
    return "Gysin+" + std::to_string(r->shift);
}

Table bundles_table(const CurveTopology& c, const std::vector<RealBundleType>& bundles) {
    Table t{{"genus", "curve_type", "fixed_circles", "rank", "degree", "w1", "moebius_count", "case",
             "orientability", "trigger"},
            {}};
    for (const auto& b : bundles) {
        std::string label, verdict, trigger;
        if (c.fixed_circles > 0)
            label = to_string(classify_gauge_case(c, b));
        if (b.rank == 2) {
            auto v = normal_bundle_orientability(c, b);
            verdict = to_string(v.kind);
            if (v.trigger)
                trigger = to_string(*v.trigger);
        }
        t.rows.push_back({std::to_string(c.genus), std::string(to_string(c.kind)), std::to_string(c.fixed_circles),
                          std::to_string(b.rank), std::to_string(b.degree), w1_to_string(b.w1),
                          std::to_string(b.moebius_count()), label, verdict, trigger});
    }
    return t;
}

Table strata_table(const std::vector<StrataEntry>& strata) {
    Table t{{"d1", "codim", "components", "contribution"}, {}};
    for (const auto& e : strata) {
        const auto& s = e.stratum;
        t.rows.push_back({std::to_string(s.scss_degree), std::to_string(s.real_codim),
                          s.fixed_component_count ? std::to_string(*s.fixed_component_count) : "",
                          contribution_cell(e.contribution)});
    }
    return t;
}

std::vector<Table> report_tables(const CohomologyReport& r) {
    Table summary{{"field", "value"}, {}};
    summary.rows.push_back({"subject", std::string(to_string(r.subject))});
    summary.rows.push_back({"case", r.case_label ? std::string(to_string(*r.case_label)) : ""});
    summary.rows.push_back({"genus", std::to_string(r.genus)});
    summary.rows.push_back({"degree", std::to_string(r.degree)});
    summary.rows.push_back({"char", std::to_string(r.field.characteristic)});
    summary.rows.push_back({"presentation", r.presentation ? to_string(*r.presentation) : ""});
    summary.rows.push_back({"partial_up_to", opt_cell(r.partial_up_to)});
    summary.rows.push_back({"real_dimension", opt_cell(r.real_dimension)});
    summary.rows.push_back({"statement", r.statement.value_or("")});
    summary.rows.push_back({"is_exterior", std::string(to_string(r.flags.is_exterior))});
    summary.rows.push_back({"ring_known", std::string(to_string(r.flags.ring_known))});
    if (r.flags.first_positive_betti_degree)
        summary.rows.push_back({"first_positive_betti_degree", std::to_string(*r.flags.first_positive_betti_degree)});
    std::vector<std::string> ids;
    for (const auto& c : r.citations)
        ids.push_back(c.id);
    summary.rows.push_back({"citations", join(ids, " ")});

    std::vector<Table> out{summary};
    if (r.series) {
        Table coeffs{{"degree", "dimension"}, {}};
        for (std::size_t m = 0; m <= r.series->truncation(); ++m)
            coeffs.rows.push_back({std::to_string(m), (*r.series)[m].get_str()});
        out.push_back(coeffs);
    }
    return out;
}

Table verification_table(const VerificationResult& v) {
    Table t{{"degree", "closed_form"}, {}};
    for (const auto& d : v.decompositions)
        t.header.push_back("oracle(" + std::to_string(d.decomposition.half_genus) + "," +
                           std::to_string(d.decomposition.boundary_circles) + ")");
    for (std::size_t m = 0; m < v.closed_form_dims.size(); ++m) {
        std::vector<std::string> row{std::to_string(m), v.closed_form_dims[m].get_str()};
        for (const auto& d : v.decompositions)
            row.push_back(m < d.oracle_dims.size() ? std::to_string(d.oracle_dims[m]) : "");
        t.rows.push_back(row);
    }
    return t;
}

Table atlas_table(const std::vector<AtlasRow>& rows) {
    Table t{{"genus", "curve_type", "fixed_circles", "rank", "degree", "w1", "case", "orientability", "trigger",
             "strata", "bg_series", "moduli_series", "moduli_partial_up_to", "fixed_determinant_series",
             "quaternionic_valid"},
            {}};
    for (const auto& r : rows) {
        std::vector<std::string> strata;
        for (const auto& e : r.strata) {
            std::string cell = std::to_string(e.stratum.scss_degree) + ":" + std::to_string(e.stratum.real_codim);
            if (e.contribution)
                cell += ":" + contribution_cell(e.contribution);
            strata.push_back(cell);
        }
        auto series_of = [](const std::optional<CohomologyReport>& rep) {
            return rep && rep->series ? series_cell(*rep->series) : std::string();
        };
        t.rows.push_back({std::to_string(r.curve.genus), std::string(to_string(r.curve.kind)),
                          std::to_string(r.curve.fixed_circles), std::to_string(r.bundle.rank),
                          std::to_string(r.bundle.degree), w1_to_string(r.bundle.w1),
                          r.case_label ? std::string(to_string(*r.case_label)) : "",
                          std::string(to_string(r.verdict.kind)),
                          r.verdict.trigger ? std::string(to_string(*r.verdict.trigger)) : "", join(strata, " "),
                          r.bg_series ? series_cell(*r.bg_series) : "", series_of(r.moduli),
                          r.moduli ? opt_cell(r.moduli->partial_up_to) : "", series_of(r.fixed_determinant),
                          r.quaternionic_valid ? "true" : "false"});
    }
    return t;
}

} // namespace rb
