#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "realbundles/field.hpp"
#include "realbundles/presentation.hpp"

namespace rb {

using Rational = mpq_class;

/// Exponent of each generator, in generator-index order. For a divided-power
/// generator z the exponent k stands for the basis element γ_k(z).
using Monomial = std::vector<std::uint32_t>;

/// Linear combination of monomials. Zero coefficients are never stored.
using Element = std::map<Monomial, Rational>;

/// Finite-type graded-commutative differential algebra, free on its
/// generators, with the differential given on generators and extended by
///   δ(ab) = δ(a) b + (-1)^{|a|} a δ(b).
struct CDGA {
    std::vector<Generator> generators;
    /// differential[i] is the image of generators[i].
    std::vector<Element> differential;
    FieldSpec field;

    std::size_t size() const noexcept { return generators.size(); }
    /// Throws ValidationError for unknown labels.
    std::size_t index_of(std::string_view label) const;
    Monomial unit() const { return Monomial(generators.size(), 0); }
    Monomial generator_monomial(std::size_t i) const;
};

/// Builds a CDGA with zero differential; set images with `set_differential`.
CDGA make_cdga(std::vector<Generator> generators, FieldSpec field);
/// δ(label) = Σ coeff * Π gens, with each term given as (coefficient, {label -> exponent}).
void set_differential(CDGA& c, std::string_view label,
                      const std::vector<std::pair<Rational, std::map<std::string, std::uint32_t>>>& terms);

/// Generator kinds match degree parity, images are homogeneous of degree +1
/// with valid monomials, and in characteristic p no coefficient has a
/// denominator divisible by p.
void validate_cdga(const CDGA& c);

int monomial_degree(const CDGA& c, const Monomial& m);
std::string monomial_to_string(const CDGA& c, const Monomial& m);
std::string element_to_string(const CDGA& c, const Element& e);

/// Product of two basis monomials: (coefficient, monomial). The coefficient is
/// zero when an exterior generator would appear twice.
std::pair<Rational, Monomial> multiply(const CDGA& c, const Monomial& a, const Monomial& b);
Element multiply(const CDGA& c, const Element& a, const Element& b);

Element apply_differential(const CDGA& c, const Monomial& m);
Element apply_differential(const CDGA& c, const Element& e);

/// All basis monomials of total degree `degree`, lexicographic in
/// (generator index, exponent).
std::vector<Monomial> monomial_basis(const CDGA& c, int degree);

} // namespace rb
