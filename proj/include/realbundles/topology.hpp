#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rb {

/// Topological type of the real structure on a closed Riemann surface.
/// Type0: no real points. TypeI: real circles separate the surface.
/// TypeII: real circles do not separate.
enum class CurveKind { Type0, TypeI, TypeII };

struct CurveTopology {
    int genus = 0;
    CurveKind kind = CurveKind::Type0;
    int fixed_circles = 0;

    friend bool operator==(const CurveTopology&, const CurveTopology&) = default;
};

/// The surface as two copies of a genus `half_genus` surface with
/// `boundary_circles` boundary components, glued by the identity along
/// `identity_glued` of them and antipodally along the rest.
struct SurfaceDecomposition {
    int half_genus = 0;
    int boundary_circles = 1;
    int identity_glued = 0;

    friend bool operator==(const SurfaceDecomposition&, const SurfaceDecomposition&) = default;
};

/// Per fixed circle: true iff the real sub-bundle is a Moebius band there.
using W1Pattern = std::vector<bool>;

struct RealBundleType {
    int rank = 2;
    long degree = 0;
    W1Pattern w1;

    int moebius_count() const;
    friend bool operator==(const RealBundleType&, const RealBundleType&) = default;
};

struct QuaternionicBundleType {
    int rank = 2;
    long degree = 0;

    friend bool operator==(const QuaternionicBundleType&, const QuaternionicBundleType&) = default;
};

enum class GaugeCase { Generic, AllMoebius, AllOrientable };

/// Behaviour of the real structure over one boundary circle of the half surface.
enum class CircleType { IdentityOrientable, IdentityMoebius, Antipodal };

std::string_view to_string(CurveKind k);
std::string_view to_string(GaugeCase c);
std::string_view to_string(CircleType c);
CurveKind curve_kind_from_string(std::string_view s);
GaugeCase gauge_case_from_string(std::string_view s);

/// Parses a string of '0'/'1' characters; anything else is rejected.
W1Pattern w1_from_string(std::string_view bits);
std::string w1_to_string(const W1Pattern& w1);

/// Every violated curve constraint, as human-readable messages. Empty iff valid.
std::vector<std::string> curve_violations(const CurveTopology& c);
/// Throws ValidationError naming every violated constraint.
void validate_curve(const CurveTopology& c);

/// Checks w1 length against the circle count and the degree parity rule.
void validate_real_bundle(const CurveTopology& c, const RealBundleType& b);

/// All Real bundle types of the given rank and degree, w1 patterns in
/// lexicographic order of their bit strings.
std::vector<RealBundleType> enumerate_real_bundles(const CurveTopology& c, int rank, long degree);

/// Quaternionic existence rule: d = r(g-1) mod 2, and odd rank only without real points.
void validate_quaternionic(const CurveTopology& c, int rank, long degree);

/// Canonical decomposition: minimal number of boundary circles. Type0 rejected.
SurfaceDecomposition decompose_surface(const CurveTopology& c);
/// Every valid decomposition, ordered by increasing boundary_circles.
std::vector<SurfaceDecomposition> all_decompositions(const CurveTopology& c);
bool is_valid_decomposition(const CurveTopology& c, const SurfaceDecomposition& d);

/// Circle types for a bundle over a decomposition: the identity-glued circles
/// first (in w1 order), then the antipodal ones.
std::vector<CircleType> circle_types(const SurfaceDecomposition& dec, const RealBundleType& b);

GaugeCase classify_gauge_case(const CurveTopology& c, const RealBundleType& b);

/// All valid curve topologies of genus g, ordered by (kind, fixed circles).
std::vector<CurveTopology> enumerate_curves(int genus);

} // namespace rb
