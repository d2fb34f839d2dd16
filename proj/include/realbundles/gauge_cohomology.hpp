#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "realbundles/cdga.hpp"
#include "realbundles/field.hpp"
#include "realbundles/presentation.hpp"
#include "realbundles/series.hpp"
#include "realbundles/stratification.hpp"
#include "realbundles/topology.hpp"

namespace rb {

enum class Subject { ClassifyingSpace, ModuliSpace, ModuliStack, FixedDeterminantInvariants };
enum class Tristate { Yes, No, Unknown };

std::string_view to_string(Subject s);
std::string_view to_string(Tristate t);
Subject subject_from_string(std::string_view s);
Tristate tristate_from_string(std::string_view s);

/// Self-describing reference attached to every report: a stable id and the
/// mathematical statement the result rests on.
struct Citation {
    std::string id;
    std::string statement;

    friend bool operator==(const Citation&, const Citation&) = default;
};

struct ReportFlags {
    Tristate is_exterior = Tristate::Unknown;
    Tristate ring_known = Tristate::Unknown;
    /// Fixed-determinant exceptional case: degree of the first positive-degree
    /// non-zero Betti number of the invariant part, when it is determined.
    std::optional<int> first_positive_betti_degree;

    friend bool operator==(const ReportFlags&, const ReportFlags&) = default;
};

struct CohomologyReport {
    Subject subject = Subject::ClassifyingSpace;
    std::optional<GaugeCase> case_label;
    int genus = 0;
    long degree = 0;
    FieldSpec field;
    /// Absent when the result is a statement without a computed series.
    std::optional<TruncatedSeries> series;
    std::optional<GradedAlgebraPresentation> presentation;
    /// Set for partial reports; the series then stops at this degree.
    std::optional<long> partial_up_to;
    /// Real dimension of the moduli space, when the subject is a manifold.
    std::optional<long> real_dimension;
    /// Free-form result statement (e.g. a homotopy equivalence).
    std::optional<std::string> statement;
    ReportFlags flags;
    std::vector<Citation> citations;

    friend bool operator==(const CohomologyReport&, const CohomologyReport&) = default;
};

/// Closed-form cohomology of the classifying space of the real gauge group of
/// a rank-two Real bundle (requires a >= 1 and char != 2).
CohomologyReport bg_cohomology(const CurveTopology& c, const RealBundleType& b, const FieldSpec& k, std::size_t n);

/// The three closed-form Poincare series, through degree n.
TruncatedSeries generic_bg_series(int genus, std::size_t n);
TruncatedSeries all_moebius_bg_series(int genus, std::size_t n);
TruncatedSeries all_orientable_bg_series(int genus, std::size_t n);
TruncatedSeries bg_series_for_case(GaugeCase c, int genus, std::size_t n);

/// Koszul-Tate model of the E2 page for the given decomposition and circle
/// behaviours (identity-glued circles first, then antipodal ones).
CDGA build_koszul_tate(const SurfaceDecomposition& dec, const std::vector<CircleType>& circle_kinds,
                       const FieldSpec& k);

/// Cohomology of the moduli space of semi-stable bundles (odd degree, g >= 2).
CohomologyReport moduli_cohomology(const CurveTopology& c, const RealBundleType& b, const FieldSpec& k,
                                   std::size_t n);

/// Torsion-invariant cohomology of the fixed-determinant moduli space.
CohomologyReport fixed_determinant_invariants(const CurveTopology& c, const RealBundleType& b,
                                              const FieldSpec& k, std::size_t n);

/// Stack-level statement for rank-two Quaternionic bundles over curves with real points.
CohomologyReport quaternionic_stack_report(const CurveTopology& c, const QuaternionicBundleType& q);

/// Real dimension 4g - 3 of the odd-degree moduli space.
long moduli_real_dimension(int genus);

} // namespace rb
