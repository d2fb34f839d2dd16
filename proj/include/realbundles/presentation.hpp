#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "realbundles/series.hpp"
#include "realbundles/topology.hpp"

namespace rb {

enum class GeneratorKind { Exterior, Polynomial, DividedPower };

struct Generator {
    std::string label;
    int degree = 1;
    GeneratorKind kind = GeneratorKind::Exterior;

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Placeholder relation that imposes nothing.
struct EmptyRelation {
    friend bool operator==(const EmptyRelation&, const EmptyRelation&) = default;
};

/// The sum of the listed (same-degree, exterior) generators is zero.
struct SumRelation {
    std::vector<std::string> labels;
    friend bool operator==(const SumRelation&, const SumRelation&) = default;
};

using Relation = std::variant<EmptyRelation, SumRelation>;

enum class Freeness { Free, FreeCharZeroOnly, Unknown };

struct GradedAlgebraPresentation {
    std::vector<Generator> generators;
    std::vector<Relation> relations;
    Freeness freeness = Freeness::Free;

    friend bool operator==(const GradedAlgebraPresentation&, const GradedAlgebraPresentation&) = default;
};

std::string_view to_string(GeneratorKind k);
std::string_view to_string(Freeness f);
GeneratorKind generator_kind_from_string(std::string_view s);
Freeness freeness_from_string(std::string_view s);

/// Throws ValidationError on degree/kind parity mismatches, duplicate labels
/// or malformed relations.
void validate_presentation(const GradedAlgebraPresentation& p);

/// Cohomology of the classifying space of the real loop group over one circle.
GradedAlgebraPresentation loop_group_presentation(CircleType circle);

/// Poincare series through degree n. Exterior generators give (1+t^d),
/// even generators 1/(1-t^d), and a sum relation among m exterior generators
/// of degree d replaces (1+t^d)^m with (1+t^d)^(m-1).
TruncatedSeries presentation_poincare(const GradedAlgebraPresentation& p, std::size_t n);

/// `count` generators labelled prefix1..prefixN.
std::vector<Generator> numbered_generators(std::string_view prefix, int count, int degree, GeneratorKind kind);

/// Compact form, e.g. "Λ(a1..a4; deg 1) ⊗ Λ(c1..c3; deg 3)".
std::string to_string(const GradedAlgebraPresentation& p);

} // namespace rb
