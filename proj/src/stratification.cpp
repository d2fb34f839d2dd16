#include "realbundles/stratification.hpp"

#include <algorithm>

#include "realbundles/error.hpp"

namespace rb {

namespace {

long floor_div2(long v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

bool same_parity(long x, long y) { return ((x - y) % 2) == 0; }

} // namespace

std::string_view to_string(Orientability o) {
    switch (o) {
    case Orientability::AllNonorientable: return "AllNonorientable";
    case Orientability::AllOrientable: return "AllOrientable";
    case Orientability::Indeterminate: return "Indeterminate";
    }
    return "?";
}

std::string_view to_string(OrientabilityTrigger t) {
    switch (t) {
    case OrientabilityTrigger::Parity: return "Parity";
    case OrientabilityTrigger::TypeIVanishingComponent: return "TypeIVanishingComponent";
    case OrientabilityTrigger::TypeII: return "TypeII";
    case OrientabilityTrigger::Converse: return "Converse";
    }
    return "?";
}

Orientability orientability_from_string(std::string_view s) {
    for (auto o : {Orientability::AllNonorientable, Orientability::AllOrientable, Orientability::Indeterminate})
        if (to_string(o) == s)
            return o;
    throw ValidationError("verdict", "unknown orientability verdict '" + std::string(s) + "'");
}

OrientabilityTrigger orientability_trigger_from_string(std::string_view s) {
    for (auto t : {OrientabilityTrigger::Parity, OrientabilityTrigger::TypeIVanishingComponent,
                   OrientabilityTrigger::TypeII, OrientabilityTrigger::Converse})
        if (to_string(t) == s)
            return t;
    throw ValidationError("verdict", "unknown orientability trigger '" + std::string(s) + "'");
}

long stratum_codimension(int genus, long degree, long scss_degree) {
    return 2 * scss_degree - degree + genus - 1;
}

long minimal_scss_degree(long degree) { return floor_div2(degree) + 1; }

std::uint64_t fixed_component_count(int fixed_circles) {
    if (fixed_circles < 1 || fixed_circles > 32)
        throw ValidationError("bound", "component count needs 1 <= a <= 32");
    return std::uint64_t{1} << (2 * fixed_circles - 2);
}

std::vector<Stratum> enumerate_strata(int genus, long degree, long max_codim, std::optional<int> fixed_circles) {
    if (max_codim < 0)
        throw ValidationError("max-codim", "max_codim must be non-negative");
    std::optional<std::uint64_t> components;
    if (fixed_circles && *fixed_circles >= 1)
        components = fixed_component_count(*fixed_circles);
    std::vector<Stratum> out;
    for (long d1 = minimal_scss_degree(degree);; ++d1) {
        const long codim = stratum_codimension(genus, degree, d1);
        if (codim > max_codim)
            break;
        out.push_back(Stratum{d1, codim, components});
    }
    return out;
}

OrientabilityVerdict normal_bundle_orientability(const CurveTopology& c, const RealBundleType& b) {
    validate_real_bundle(c, b);
    if (b.rank != 2)
        throw ValidationError("rank", "orientability of the stratification is only determined for rank two");

    if (same_parity(b.degree, c.genus))
        return {Orientability::AllNonorientable, OrientabilityTrigger::Parity};
    if (c.kind == CurveKind::TypeI && std::find(b.w1.begin(), b.w1.end(), false) != b.w1.end())
        return {Orientability::AllNonorientable, OrientabilityTrigger::TypeIVanishingComponent};
    if (c.kind == CurveKind::TypeII)
        return {Orientability::AllNonorientable, OrientabilityTrigger::TypeII};
    if (c.fixed_circles >= 1)
        return {Orientability::AllOrientable, OrientabilityTrigger::Converse};
    return {Orientability::Indeterminate, std::nullopt};
}

ContributionRule stratum_contribution(const OrientabilityVerdict& v, const Stratum& s) {
    switch (v.kind) {
    case Orientability::AllNonorientable: return {ContributionRule::Kind::Vanishing, 0};
    case Orientability::AllOrientable: return {ContributionRule::Kind::Gysin, s.real_codim};
    case Orientability::Indeterminate: break;
    }
    throw ValidationError("indeterminate", "no contribution rule for an indeterminate orientability verdict");
}

long betti_agreement_cutoff(int genus, long degree) {
    if (degree % 2 == 0)
        throw ValidationError("degree", "the Betti agreement cutoff is defined for odd degree only");
    return stratum_codimension(genus, degree, minimal_scss_degree(degree)) - 2;
}

} // namespace rb
