#include "realbundles/gauge_cohomology.hpp"

#include <algorithm>
#include <stdexcept>

#include "realbundles/error.hpp"

namespace rb {

namespace {

const Citation kRealBundleClassification{
    "real-bundle-classification",
    "Topological Real bundles are determined by rank, degree and w1 on the real circles, subject to "
    "d = total w1 (mod 2); with a >= 1 real circles there are 2^(a-1) types of each rank and degree."};
const Citation kGaugeGeneric{
    "gauge.generic",
    "For char k != 2 and a curve with real points, H*(BG; k) of a rank-two Real bundle is an exterior "
    "algebra with Poincare series (1+t)^g (1+t^3)^(g-1), outside the two special cases."};
const Citation kGaugeAllMoebius{
    "gauge.all-moebius",
    "Type I curve, real sub-bundle Moebius over every real circle: H*(BG; k) is free graded-commutative "
    "with Poincare series (1+t)^g (1+t^3)^g / (1-t^2)."};
const Citation kGaugeAllOrientable{
    "gauge.all-orientable",
    "Real sub-bundle orientable over every real circle: Poincare series (1+t)^g (1+t^3)^g / (1-t^4); "
    "the ring is free graded-commutative in characteristic 0."};
const Citation kOrientability{
    "strata.orientability",
    "Unstable normal bundles are all nonorientable if d = g (mod 2), or the curve is type I and w1 "
    "vanishes on some real circle, or the curve is type II; with real points and none of these, all "
    "are orientable."};
const Citation kThomVanishing{
    "strata.vanishing",
    "A nonorientable normal bundle over (S^1)^(2g) x RP^inf has zero relative cohomology in "
    "characteristic != 2, so such strata contribute nothing."};
const Citation kModuliIso{
    "moduli.isomorphism",
    "If every unstable normal bundle is nonorientable then H*(BG; k) is isomorphic to the equivariant "
    "cohomology of the semi-stable locus, and to H*(M; k) when d is odd."};
const Citation kModuliExterior{
    "moduli.exterior",
    "For g >= 2, d odd and char k != 2, H*(M; k) is exterior on g degree-1 and g-1 degree-3 "
    "generators except for one type (type I curve of even genus, Moebius over every real circle), "
    "where it is not exterior once g >= 4."};
const Citation kGysinCutoff{
    "moduli.gysin-cutoff",
    "With orientable strata of codimension at least g, the Thom-Gysin sequences give "
    "dim H^i(M) = dim H^i(BG) for i <= g-2."};
const Citation kFixedDeterminant{
    "fixed-determinant.factorization",
    "M is the quotient of M_Λ x (S^1)^g by the 2-torsion Real line bundles T_2, so "
    "H*(M; k) = H*(M_Λ; k)^(T_2) ⊗ Λ(g generators of degree 1) for char k != 2."};
const Citation kQuaternionicStack{
    "quaternionic.stack",
    "Over a curve with real points every rank-two Quaternionic bundle is semi-stable, so the moduli "
    "stack is homotopy equivalent to BG."};

void require_rank_two(int rank) {
    if (rank != 2)
        throw ValidationError("rank", "only rank-two bundles are supported");
}

void require_real_points(const CurveTopology& c) {
    if (c.fixed_circles < 1)
        throw ValidationError("real-points", "requires a real curve with real points (a >= 1)");
}

GradedAlgebraPresentation generic_presentation(int genus) {
    GradedAlgebraPresentation p;
    p.generators = numbered_generators("a", genus, 1, GeneratorKind::Exterior);
    auto c = numbered_generators("c", genus - 1, 3, GeneratorKind::Exterior);
    p.generators.insert(p.generators.end(), c.begin(), c.end());
    p.freeness = Freeness::Free;
    return p;
}

GradedAlgebraPresentation special_presentation(int genus, Generator even_generator, Freeness freeness) {
    GradedAlgebraPresentation p;
    p.generators = numbered_generators("a", genus, 1, GeneratorKind::Exterior);
    auto c = numbered_generators("c", genus, 3, GeneratorKind::Exterior);
    p.generators.insert(p.generators.end(), c.begin(), c.end());
    p.generators.push_back(std::move(even_generator));
    p.freeness = freeness;
    return p;
}

void require_moduli_hypotheses(const CurveTopology& c, const RealBundleType& b, const FieldSpec& k) {
    validate_field(k);
    validate_curve(c);
    require_rank_two(b.rank);
    if (c.genus < 2)
        throw ValidationError("genus", "moduli-space results need genus g >= 2");
    if (b.degree % 2 == 0)
        throw ValidationError("degree", "moduli-space results need odd degree (coarse moduli space)");
    validate_real_bundle(c, b);
    require_real_points(c);
}

} // namespace

std::string_view to_string(Subject s) {
    switch (s) {
    case Subject::ClassifyingSpace: return "ClassifyingSpace";
    case Subject::ModuliSpace: return "ModuliSpace";
    case Subject::ModuliStack: return "ModuliStack";
    case Subject::FixedDeterminantInvariants: return "FixedDeterminantInvariants";
    }
    return "?";
}

std::string_view to_string(Tristate t) {
    switch (t) {
    case Tristate::Yes: return "yes";
    case Tristate::No: return "no";
    case Tristate::Unknown: return "unknown";
    }
    return "?";
}

Subject subject_from_string(std::string_view s) {
    for (auto v : {Subject::ClassifyingSpace, Subject::ModuliSpace, Subject::ModuliStack,
                   Subject::FixedDeterminantInvariants})
        if (to_string(v) == s)
            return v;
    throw ValidationError("report", "unknown report subject '" + std::string(s) + "'");
}

Tristate tristate_from_string(std::string_view s) {
    for (auto v : {Tristate::Yes, Tristate::No, Tristate::Unknown})
        if (to_string(v) == s)
            return v;
    throw ValidationError("report", "unknown flag value '" + std::string(s) + "'");
}

long moduli_real_dimension(int genus) { return 4L * genus - 3; }

TruncatedSeries generic_bg_series(int genus, std::size_t n) {
    if (genus < 1)
        throw ValidationError("genus", "the generic series needs g >= 1");
    const auto g = static_cast<std::size_t>(genus);
    return one_plus_t_power(1, g, n) * one_plus_t_power(3, g - 1, n);
}

TruncatedSeries all_moebius_bg_series(int genus, std::size_t n) {
    const auto g = static_cast<std::size_t>(genus);
    return series_div_cyclotomic(one_plus_t_power(1, g, n) * one_plus_t_power(3, g, n), 2);
}

TruncatedSeries all_orientable_bg_series(int genus, std::size_t n) {
    const auto g = static_cast<std::size_t>(genus);
    return series_div_cyclotomic(one_plus_t_power(1, g, n) * one_plus_t_power(3, g, n), 4);
}

TruncatedSeries bg_series_for_case(GaugeCase c, int genus, std::size_t n) {
    switch (c) {
    case GaugeCase::Generic: return generic_bg_series(genus, n);
    case GaugeCase::AllMoebius: return all_moebius_bg_series(genus, n);
    case GaugeCase::AllOrientable: return all_orientable_bg_series(genus, n);
    }
    throw std::logic_error("unreachable gauge case");
}

CohomologyReport bg_cohomology(const CurveTopology& c, const RealBundleType& b, const FieldSpec& k,
                               std::size_t n) {
    validate_field(k);
    validate_curve(c);
    require_rank_two(b.rank);
    require_real_points(c);
    validate_real_bundle(c, b);

    CohomologyReport r;
    r.subject = Subject::ClassifyingSpace;
    r.genus = c.genus;
    r.degree = b.degree;
    r.field = k;
    const GaugeCase label = classify_gauge_case(c, b);
    r.case_label = label;
    r.series = bg_series_for_case(label, c.genus, n);
    r.citations = {kRealBundleClassification};

    switch (label) {
    case GaugeCase::Generic:
        r.presentation = generic_presentation(c.genus);
        r.flags.is_exterior = Tristate::Yes;
        r.flags.ring_known = Tristate::Yes;
        r.citations.push_back(kGaugeGeneric);
        break;
    case GaugeCase::AllMoebius:
        r.presentation = special_presentation(c.genus, {"z", 2, GeneratorKind::DividedPower},
                                              k.is_rational() ? Freeness::Free : Freeness::FreeCharZeroOnly);
        r.flags.is_exterior = Tristate::No;
        r.flags.ring_known = Tristate::Yes;
        r.citations.push_back(kGaugeAllMoebius);
        break;
    case GaugeCase::AllOrientable:
        r.presentation = special_presentation(c.genus, {"p", 4, GeneratorKind::Polynomial},
                                              k.is_rational() ? Freeness::Free : Freeness::FreeCharZeroOnly);
        r.flags.is_exterior = Tristate::No;
        r.flags.ring_known = k.is_rational() ? Tristate::Yes : Tristate::No;
        r.citations.push_back(kGaugeAllOrientable);
        break;
    }
    return r;
}

CDGA build_koszul_tate(const SurfaceDecomposition& dec, const std::vector<CircleType>& circle_kinds,
                       const FieldSpec& k) {
    validate_field(k);
    const int n = dec.boundary_circles;
    const int a = dec.identity_glued;
    if (dec.half_genus < 0 || n < 1 || a < 0 || a > n)
        throw ValidationError("decomposition", "invalid surface decomposition");
    if (static_cast<int>(circle_kinds.size()) != n)
        throw ValidationError("circles", "need one circle type per boundary circle");
    for (int i = 0; i < n; ++i) {
        const bool antipodal = circle_kinds[static_cast<std::size_t>(i)] == CircleType::Antipodal;
        if (antipodal != (i >= a))
            throw ValidationError("circles", "identity-glued circles must come first, antipodal ones last");
    }
    const int f = static_cast<int>(std::count_if(circle_kinds.begin(), circle_kinds.end(),
                                                 [](CircleType t) { return t != CircleType::IdentityMoebius; }));
    const int two_g_hat = 2 * dec.half_genus;

    std::vector<Generator> gens;
    auto append = [&gens](std::vector<Generator> more) { gens.insert(gens.end(), more.begin(), more.end()); };
    append(numbered_generators("q", f, 3, GeneratorKind::Exterior));
    append(numbered_generators("p", f, 4, GeneratorKind::Polynomial));
    append(numbered_generators("x", n - 1, 1, GeneratorKind::Exterior));
    append(numbered_generators("y", n - 1, 3, GeneratorKind::Exterior));
    gens.push_back({"z", 2, k.is_rational() ? GeneratorKind::Polynomial : GeneratorKind::DividedPower});
    append(numbered_generators("alpha", two_g_hat, 1, GeneratorKind::Exterior));
    append(numbered_generators("beta", two_g_hat, 3, GeneratorKind::Exterior));

    CDGA cdga = make_cdga(std::move(gens), k);
    auto p = [](int i) { return "p" + std::to_string(i); };
    for (int i = 1; i <= n - 1; ++i) {
        const std::string y = "y" + std::to_string(i);
        if (f == n)
            set_differential(cdga, y, {{Rational(1), {{p(i), 1}}}, {Rational(-1), {{p(n), 1}}}});
        else if (i <= f)
            set_differential(cdga, y, {{Rational(1), {{p(i), 1}}}});
    }
    if (f > 0) {
        std::vector<std::pair<Rational, std::map<std::string, std::uint32_t>>> terms;
        for (int i = 1; i <= f; ++i)
            terms.push_back({Rational(1), {{"q" + std::to_string(i), 1}}});
        set_differential(cdga, "z", terms);
    }
    return cdga;
}

CohomologyReport moduli_cohomology(const CurveTopology& c, const RealBundleType& b, const FieldSpec& k,
                                   std::size_t n) {
    require_moduli_hypotheses(c, b, k);
    const long dim = moduli_real_dimension(c.genus);
    const CohomologyReport bg = bg_cohomology(c, b, k, n);
    const OrientabilityVerdict verdict = normal_bundle_orientability(c, b);

    CohomologyReport r;
    r.subject = Subject::ModuliSpace;
    r.case_label = bg.case_label;
    r.genus = c.genus;
    r.degree = b.degree;
    r.field = k;
    r.real_dimension = dim;
    r.citations = {kRealBundleClassification, kOrientability};

    // Walk the strata up to the top dimension and collect their contributions.
    std::optional<long> min_gysin_shift;
    for (const Stratum& s : enumerate_strata(c.genus, b.degree, dim, c.fixed_circles)) {
        const ContributionRule rule = stratum_contribution(verdict, s);
        if (rule.kind == ContributionRule::Kind::Gysin)
            min_gysin_shift = std::min(min_gysin_shift.value_or(rule.shift), rule.shift);
    }

    if (!min_gysin_shift) {
        if (bg.case_label != GaugeCase::Generic)
            throw std::logic_error("vanishing strata contributions outside the generic case");
        r.series = bg.series->truncated(std::min<std::size_t>(n, static_cast<std::size_t>(dim)));
        r.presentation = bg.presentation;
        r.flags.is_exterior = Tristate::Yes;
        r.flags.ring_known = Tristate::Yes;
        r.citations.insert(r.citations.end(), {kThomVanishing, kModuliIso, kGaugeGeneric, kModuliExterior});
        return r;
    }

    if (bg.case_label != GaugeCase::AllMoebius)
        throw std::logic_error("orientable strata outside the all-Moebius case");
    const long cutoff = *min_gysin_shift - 2;
    if (cutoff != betti_agreement_cutoff(c.genus, b.degree))
        throw std::logic_error("Gysin cutoff disagrees with the minimal stratum codimension");
    r.partial_up_to = cutoff;
    r.series = bg.series->truncated(std::min<std::size_t>(n, static_cast<std::size_t>(cutoff)));
    r.flags.is_exterior = c.genus >= 4 ? Tristate::No : Tristate::Unknown;
    r.flags.ring_known = Tristate::No;
    r.citations.insert(r.citations.end(), {kGaugeAllMoebius, kGysinCutoff, kModuliExterior});
    return r;
}

CohomologyReport fixed_determinant_invariants(const CurveTopology& c, const RealBundleType& b,
                                              const FieldSpec& k, std::size_t n) {
    const CohomologyReport moduli = moduli_cohomology(c, b, k, n);
    const auto g = static_cast<std::size_t>(c.genus);

    CohomologyReport r;
    r.subject = Subject::FixedDeterminantInvariants;
    r.case_label = moduli.case_label;
    r.genus = c.genus;
    r.degree = b.degree;
    r.field = k;
    r.real_dimension = moduli.real_dimension;
    r.partial_up_to = moduli.partial_up_to;
    r.citations = moduli.citations;
    r.citations.push_back(kFixedDeterminant);

    // Divide out the Jacobian torus factor (1+t)^g.
    const TruncatedSeries& ms = *moduli.series;
    r.series = ms * series_inverse(one_plus_t_power(1, g, ms.truncation()));

    if (!moduli.partial_up_to) {
        GradedAlgebraPresentation p;
        p.generators = numbered_generators("c", c.genus - 1, 3, GeneratorKind::Exterior);
        p.freeness = Freeness::Free;
        r.presentation = std::move(p);
        r.flags.is_exterior = Tristate::Yes;
        r.flags.ring_known = Tristate::Yes;
        return r;
    }

    for (std::size_t m = 1; m <= r.series->truncation(); ++m)
        if ((*r.series)[m] != 0) {
            r.flags.first_positive_betti_degree = static_cast<int>(m);
            break;
        }
    const bool even_first = r.flags.first_positive_betti_degree && *r.flags.first_positive_betti_degree % 2 == 0;
    r.flags.is_exterior = even_first ? Tristate::No : Tristate::Unknown;
    r.flags.ring_known = Tristate::No;
    return r;
}

CohomologyReport quaternionic_stack_report(const CurveTopology& c, const QuaternionicBundleType& q) {
    require_rank_two(q.rank);
    validate_quaternionic(c, q.rank, q.degree);
    require_real_points(c);

    CohomologyReport r;
    r.subject = Subject::ModuliStack;
    r.genus = c.genus;
    r.degree = q.degree;
    r.statement = "M(E,τ̃) ≃ BG(E,τ̃): the moduli stack is homotopy equivalent to the classifying space "
                  "of the Quaternionic gauge group";
    r.citations = {kQuaternionicStack};
    return r;
}

} // namespace rb
