#include "realbundles/topology.hpp"

#include <algorithm>
#include <sstream>

#include "realbundles/error.hpp"

namespace rb {

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out << (i ? "; " : "") << parts[i];
    return out.str();
}

bool is_odd(long v) { return v % 2 != 0; }

} // namespace

int RealBundleType::moebius_count() const {
    return static_cast<int>(std::count(w1.begin(), w1.end(), true));
}

std::string_view to_string(CurveKind k) {
    switch (k) {
    case CurveKind::Type0: return "0";
    case CurveKind::TypeI: return "I";
    case CurveKind::TypeII: return "II";
    }
    return "?";
}

std::string_view to_string(GaugeCase c) {
    switch (c) {
    case GaugeCase::Generic: return "Generic";
    case GaugeCase::AllMoebius: return "AllMoebius";
    case GaugeCase::AllOrientable: return "AllOrientable";
    }
    return "?";
}

std::string_view to_string(CircleType c) {
    switch (c) {
    case CircleType::IdentityOrientable: return "IdentityOrientable";
    case CircleType::IdentityMoebius: return "IdentityMoebius";
    case CircleType::Antipodal: return "Antipodal";
    }
    return "?";
}

CurveKind curve_kind_from_string(std::string_view s) {
    if (s == "0" || s == "Type0")
        return CurveKind::Type0;
    if (s == "I" || s == "TypeI")
        return CurveKind::TypeI;
    if (s == "II" || s == "TypeII")
        return CurveKind::TypeII;
    throw ValidationError("curve-type", "unknown curve type '" + std::string(s) + "' (expected 0, I or II)");
}

GaugeCase gauge_case_from_string(std::string_view s) {
    if (s == "Generic")
        return GaugeCase::Generic;
    if (s == "AllMoebius")
        return GaugeCase::AllMoebius;
    if (s == "AllOrientable")
        return GaugeCase::AllOrientable;
    throw ValidationError("case", "unknown gauge case label '" + std::string(s) + "'");
}

W1Pattern w1_from_string(std::string_view bits) {
    W1Pattern w1;
    w1.reserve(bits.size());
    for (char ch : bits) {
        if (ch != '0' && ch != '1')
            throw ValidationError("w1", "w1 must be a string of '0'/'1' characters, got '" + std::string(bits) + "'");
        w1.push_back(ch == '1');
    }
    return w1;
}

std::string w1_to_string(const W1Pattern& w1) {
    std::string s;
    s.reserve(w1.size());
    for (bool b : w1)
        s.push_back(b ? '1' : '0');
    return s;
}

std::vector<std::string> curve_violations(const CurveTopology& c) {
    std::vector<std::string> errors;
    const int g = c.genus;
    const int a = c.fixed_circles;
    if (g < 0)
        errors.push_back("genus must be non-negative");
    if (a < 0)
        errors.push_back("number of fixed circles must be non-negative");
    switch (c.kind) {
    case CurveKind::Type0:
        if (a != 0)
            errors.push_back("a type 0 curve has no fixed circles (a = 0)");
        break;
    case CurveKind::TypeI:
        if (a < 1)
            errors.push_back("a type I curve needs at least one fixed circle");
        if (a > g + 1)
            errors.push_back("a type I curve has at most g+1 fixed circles");
        if ((a - (g + 1)) % 2 != 0)
            errors.push_back("parity: a type I curve needs a = g+1 (mod 2)");
        break;
    case CurveKind::TypeII:
        if (a < 1)
            errors.push_back("a type II curve needs at least one fixed circle");
        if (a > g)
            errors.push_back("a type II curve has at most g fixed circles (a <= g violated)");
        break;
    }
    return errors;
}

void validate_curve(const CurveTopology& c) {
    auto errors = curve_violations(c);
    if (errors.empty())
        return;
    bool parity_only = errors.size() == 1 && errors.front().rfind("parity", 0) == 0;
    throw ValidationError(parity_only ? "parity" : "curve", "invalid curve: " + join(errors));
}

void validate_real_bundle(const CurveTopology& c, const RealBundleType& b) {
    validate_curve(c);
    if (b.rank < 1)
        throw ValidationError("rank", "rank must be positive");
    if (static_cast<int>(b.w1.size()) != c.fixed_circles)
        throw ValidationError("w1", "w1 has " + std::to_string(b.w1.size()) + " bits but the curve has " +
                                        std::to_string(c.fixed_circles) + " fixed circles");
    if (is_odd(b.degree) != is_odd(b.moebius_count()))
        throw ValidationError("parity", "degree must have the parity of the number of Moebius circles in w1");
}

std::vector<RealBundleType> enumerate_real_bundles(const CurveTopology& c, int rank, long degree) {
    validate_curve(c);
    if (rank < 1)
        throw ValidationError("rank", "rank must be positive");
    const int a = c.fixed_circles;
    if (a > 30)
        throw ValidationError("bound", "too many fixed circles to enumerate");
    std::vector<RealBundleType> out;
    const std::uint64_t total = std::uint64_t{1} << a;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        // bit (a-1-i) of mask is w1[i], so increasing mask is lexicographic order
        W1Pattern w1(static_cast<std::size_t>(a));
        int weight = 0;
        for (int i = 0; i < a; ++i) {
            w1[static_cast<std::size_t>(i)] = (mask >> (a - 1 - i)) & 1U;
            weight += w1[static_cast<std::size_t>(i)];
        }
        if (is_odd(weight) == is_odd(degree))
            out.push_back(RealBundleType{rank, degree, std::move(w1)});
    }
    return out;
}

void validate_quaternionic(const CurveTopology& c, int rank, long degree) {
    validate_curve(c);
    if (rank < 1)
        throw ValidationError("rank", "rank must be positive");
    const long expected = static_cast<long>(rank) * (c.genus - 1);
    if (is_odd(degree) != is_odd(expected))
        throw ValidationError("parity", "a Quaternionic bundle needs d = r(g-1) (mod 2)");
    if (rank % 2 != 0 && c.kind != CurveKind::Type0)
        throw ValidationError("real-points", "odd rank Quaternionic bundles require a curve without real points");
}

bool is_valid_decomposition(const CurveTopology& c, const SurfaceDecomposition& d) {
    if (d.half_genus < 0 || d.boundary_circles < 1)
        return false;
    if (2 * d.half_genus + d.boundary_circles - 1 != c.genus)
        return false;
    if (d.identity_glued != c.fixed_circles || d.identity_glued > d.boundary_circles)
        return false;
    switch (c.kind) {
    case CurveKind::Type0: return d.identity_glued == 0;
    case CurveKind::TypeI: return d.identity_glued == d.boundary_circles;
    case CurveKind::TypeII: return d.identity_glued > 0 && d.identity_glued < d.boundary_circles;
    }
    return false;
}

std::vector<SurfaceDecomposition> all_decompositions(const CurveTopology& c) {
    validate_curve(c);
    if (c.kind == CurveKind::Type0)
        throw ValidationError("real-points", "surface decompositions are only built for curves with real points");
    std::vector<SurfaceDecomposition> out;
    for (int n = 1; n <= c.genus + 1; ++n) {
        if ((c.genus + 1 - n) % 2 != 0)
            continue;
        SurfaceDecomposition d{(c.genus + 1 - n) / 2, n, c.fixed_circles};
        if (is_valid_decomposition(c, d))
            out.push_back(d);
    }
    return out;
}

SurfaceDecomposition decompose_surface(const CurveTopology& c) {
    auto all = all_decompositions(c);
    if (all.empty())
        throw ValidationError("decomposition", "no valid surface decomposition");
    return all.front();
}

std::vector<CircleType> circle_types(const SurfaceDecomposition& dec, const RealBundleType& b) {
    if (static_cast<int>(b.w1.size()) != dec.identity_glued)
        throw ValidationError("w1", "w1 length does not match the identity-glued circles");
    std::vector<CircleType> out;
    out.reserve(static_cast<std::size_t>(dec.boundary_circles));
    for (bool moebius : b.w1)
        out.push_back(moebius ? CircleType::IdentityMoebius : CircleType::IdentityOrientable);
    for (int i = dec.identity_glued; i < dec.boundary_circles; ++i)
        out.push_back(CircleType::Antipodal);
    return out;
}

GaugeCase classify_gauge_case(const CurveTopology& c, const RealBundleType& b) {
    validate_real_bundle(c, b);
    if (c.fixed_circles < 1)
        throw ValidationError("real-points", "gauge cohomology needs a real curve with real points (a >= 1)");
    const int m = b.moebius_count();
    if (c.kind == CurveKind::TypeI && m == c.fixed_circles)
        return GaugeCase::AllMoebius;
    if (m == 0)
        return GaugeCase::AllOrientable;
    return GaugeCase::Generic;
}

std::vector<CurveTopology> enumerate_curves(int genus) {
    std::vector<CurveTopology> out;
    if (genus < 0)
        return out;
    out.push_back({genus, CurveKind::Type0, 0});
    for (CurveKind k : {CurveKind::TypeI, CurveKind::TypeII})
        for (int a = 1; a <= genus + 1; ++a) {
            CurveTopology c{genus, k, a};
            if (curve_violations(c).empty())
                out.push_back(c);
        }
    return out;
}

} // namespace rb
