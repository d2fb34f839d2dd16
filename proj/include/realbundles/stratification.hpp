#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "realbundles/topology.hpp"

namespace rb {

/// Unstable Harder-Narasimhan stratum, labelled by the degree of the
/// maximal destabilizing line sub-bundle.
struct Stratum {
    long scss_degree = 0;
    long real_codim = 0;
    /// 2^(2a-2) when the curve has a >= 1 fixed circles.
    std::optional<std::uint64_t> fixed_component_count;

    friend bool operator==(const Stratum&, const Stratum&) = default;
};

enum class Orientability { AllNonorientable, AllOrientable, Indeterminate };
enum class OrientabilityTrigger { Parity, TypeIVanishingComponent, TypeII, Converse };

struct OrientabilityVerdict {
    Orientability kind = Orientability::Indeterminate;
    std::optional<OrientabilityTrigger> trigger;

    friend bool operator==(const OrientabilityVerdict&, const OrientabilityVerdict&) = default;
};

/// What a stratum contributes to the Thom-Gysin bookkeeping (coefficients in
/// characteristic != 2): nothing, or a copy of its cohomology shifted by the codimension.
struct ContributionRule {
    enum class Kind { Vanishing, Gysin };
    Kind kind = Kind::Vanishing;
    long shift = 0;

    friend bool operator==(const ContributionRule&, const ContributionRule&) = default;
};

std::string_view to_string(Orientability o);
std::string_view to_string(OrientabilityTrigger t);
Orientability orientability_from_string(std::string_view s);
OrientabilityTrigger orientability_trigger_from_string(std::string_view s);

/// Real codimension 2*d1 - d + g - 1 of the stratum with SCSS degree d1.
long stratum_codimension(int genus, long degree, long scss_degree);

/// Smallest SCSS degree d1 with d1 > d/2.
long minimal_scss_degree(long degree);

/// 2^(2a-2); a must be in 1..32.
std::uint64_t fixed_component_count(int fixed_circles);

/// All strata with codimension <= max_codim, ascending in d1. When
/// `fixed_circles` is given and >= 1, each stratum carries its component count.
std::vector<Stratum> enumerate_strata(int genus, long degree, long max_codim,
                                      std::optional<int> fixed_circles = std::nullopt);

/// Orientability of the normal bundles of every unstable stratum (rank two only).
OrientabilityVerdict normal_bundle_orientability(const CurveTopology& c, const RealBundleType& b);

ContributionRule stratum_contribution(const OrientabilityVerdict& v, const Stratum& s);

/// Degrees through which moduli and classifying-space Betti numbers agree
/// when the strata are orientable: minimal unstable codimension minus 2.
/// Odd degree only.
long betti_agreement_cutoff(int genus, long degree);

} // namespace rb
