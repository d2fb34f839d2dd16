#include "realbundles/atlas.hpp"

#include <algorithm>
#include <future>

#include "realbundles/error.hpp"

namespace rb {

namespace {

void merge_citations(std::vector<Citation>& into, const std::vector<Citation>& from) {
    for (const auto& c : from)
        if (std::find(into.begin(), into.end(), c) == into.end())
            into.push_back(c);
}

bool quaternionic_exists(const CurveTopology& c, long degree) {
    try {
        validate_quaternionic(c, 2, degree);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

} // namespace

AtlasRow atlas_row(const CurveTopology& c, const RealBundleType& b, const FieldSpec& k, std::size_t n,
                   long max_codim) {
    validate_field(k);
    validate_real_bundle(c, b);
    if (b.rank != 2)
        throw ValidationError("rank", "atlas rows are rank two");

    AtlasRow row;
    row.curve = c;
    row.bundle = b;
    row.verdict = normal_bundle_orientability(c, b);
    row.quaternionic_valid = quaternionic_exists(c, b.degree);

    const std::optional<int> circles = c.fixed_circles > 0 ? std::optional<int>(c.fixed_circles) : std::nullopt;
    for (const auto& s : enumerate_strata(c.genus, b.degree, max_codim, circles)) {
        StrataEntry e{s, std::nullopt};
        if (row.verdict.kind != Orientability::Indeterminate)
            e.contribution = stratum_contribution(row.verdict, s);
        row.strata.push_back(e);
    }

    if (c.fixed_circles > 0) {
        auto bg = bg_cohomology(c, b, k, n);
        row.case_label = bg.case_label;
        row.bg_series = bg.series;
        merge_citations(row.citations, bg.citations);
        if (c.genus >= 2 && b.degree % 2 != 0) {
            row.moduli = moduli_cohomology(c, b, k, n);
            row.fixed_determinant = fixed_determinant_invariants(c, b, k, n);
            merge_citations(row.citations, row.moduli->citations);
            merge_citations(row.citations, row.fixed_determinant->citations);
        }
    }
    return row;
}

std::vector<AtlasRow> atlas(const AtlasOptions& opt) {
    if (opt.genus_min > opt.genus_max)
        return {};
    if (opt.genus_min < 1 || opt.genus_max > kAtlasGenusLimit)
        throw ValidationError("bound", "atlas genus range must lie within 1.." + std::to_string(kAtlasGenusLimit));
    validate_field(opt.field);

    std::vector<std::pair<CurveTopology, RealBundleType>> jobs;
    for (int g = opt.genus_min; g <= opt.genus_max; ++g)
        for (const auto& c : enumerate_curves(g))
            for (const auto& b : enumerate_real_bundles(c, 2, opt.degree))
                jobs.emplace_back(c, b);

    std::vector<AtlasRow> rows(jobs.size());
    const unsigned workers = std::max(1U, std::min<unsigned>(opt.threads, static_cast<unsigned>(jobs.size())));
    auto work = [&](unsigned w) {
        for (std::size_t i = w; i < jobs.size(); i += workers)
            rows[i] = atlas_row(jobs[i].first, jobs[i].second, opt.field, opt.truncation, opt.max_codim);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::future<void>> futures;
        for (unsigned w = 0; w < workers; ++w)
            futures.push_back(std::async(std::launch::async, work, w));
        for (auto& f : futures)
            f.get();
    }
    return rows;
}

void to_json(json& j, const StrataEntry& e) {
    j = e.stratum;
    j["contribution"] = e.contribution ? json(*e.contribution) : json(nullptr);
}

void from_json(const json& j, StrataEntry& e) {
    e.stratum = j.get<Stratum>();
    if (j.contains("contribution") && !j.at("contribution").is_null())
        e.contribution = j.at("contribution").get<ContributionRule>();
    else
        e.contribution.reset();
}

void to_json(json& j, const AtlasRow& r) {
    j = json::object();
    j["curve"] = r.curve;
    j["bundle"] = r.bundle;
    j["case"] = r.case_label ? json(std::string(to_string(*r.case_label))) : json(nullptr);
    j["orientability"] = r.verdict;
    j["strata"] = r.strata;
    j["bg_series"] = r.bg_series ? json(*r.bg_series) : json(nullptr);
    j["moduli"] = r.moduli ? json(*r.moduli) : json(nullptr);
    j["fixed_determinant"] = r.fixed_determinant ? json(*r.fixed_determinant) : json(nullptr);
    j["quaternionic_valid"] = r.quaternionic_valid;
    j["citations"] = r.citations;
}

void from_json(const json& j, AtlasRow& r) {
    r.curve = j.at("curve").get<CurveTopology>();
    r.bundle = j.at("bundle").get<RealBundleType>();
    r.case_label = j.at("case").is_null() ? std::nullopt
                                          : std::optional(gauge_case_from_string(j.at("case").get<std::string>()));
    r.verdict = j.at("orientability").get<OrientabilityVerdict>();
    r.strata = j.at("strata").get<std::vector<StrataEntry>>();
    r.bg_series = j.at("bg_series").is_null() ? std::nullopt : std::optional(j.at("bg_series").get<TruncatedSeries>());
    r.moduli = j.at("moduli").is_null() ? std::nullopt : std::optional(j.at("moduli").get<CohomologyReport>());
    r.fixed_determinant = j.at("fixed_determinant").is_null()
                              ? std::nullopt
                              : std::optional(j.at("fixed_determinant").get<CohomologyReport>());
    r.quaternionic_valid = j.at("quaternionic_valid").get<bool>();
    r.citations = j.at("citations").get<std::vector<Citation>>();
}

} // namespace rb
