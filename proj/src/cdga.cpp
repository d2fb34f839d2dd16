#include "realbundles/cdga.hpp"

#include <functional>
#include <sstream>

#include "realbundles/error.hpp"

namespace rb {

namespace {

void add_term(Element& e, const Monomial& m, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = e.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            e.erase(it);
    }
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

std::size_t CDGA::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].label == label)
            return i;
    throw ValidationError("cdga", "unknown generator '" + std::string(label) + "'");
}

Monomial CDGA::generator_monomial(std::size_t i) const {
    Monomial m = unit();
    m.at(i) = 1;
    return m;
}

CDGA make_cdga(std::vector<Generator> generators, FieldSpec field) {
    validate_field(field);
    CDGA c;
    c.differential.resize(generators.size());
    c.generators = std::move(generators);
    c.field = field;
    return c;
}

void set_differential(CDGA& c, std::string_view label,
                      const std::vector<std::pair<Rational, std::map<std::string, std::uint32_t>>>& terms) {
    Element image;
    for (const auto& [coeff, powers] : terms) {
        Monomial m = c.unit();
        for (const auto& [l, e] : powers)
            m[c.index_of(l)] += e;
        add_term(image, m, coeff);
    }
    c.differential.at(c.index_of(label)) = std::move(image);
}

void validate_cdga(const CDGA& c) {
    validate_field(c.field);
    GradedAlgebraPresentation as_presentation{c.generators, {}, Freeness::Free};
    validate_presentation(as_presentation);
    if (c.differential.size() != c.generators.size())
        throw ValidationError("cdga", "differential must list one image per generator");
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (const auto& [m, coeff] : c.differential[i]) {
            if (m.size() != c.size())
                throw ValidationError("cdga", "malformed monomial in the image of '" + c.generators[i].label + "'");
            for (std::size_t j = 0; j < m.size(); ++j)
                if (c.generators[j].kind == GeneratorKind::Exterior && m[j] > 1)
                    throw ValidationError("cdga", "exterior generator squared in the image of '" +
                                                      c.generators[i].label + "'");
            if (monomial_degree(c, m) != c.generators[i].degree + 1)
                throw ValidationError("homogeneity", "non-homogeneous differential: image of '" +
                                                         c.generators[i].label + "' must have degree " +
                                                         std::to_string(c.generators[i].degree + 1));
            if (c.field.characteristic != 0 &&
                mpz_divisible_ui_p(coeff.get_den_mpz_t(), c.field.characteristic))
                throw ValidationError("cdga", "coefficient denominator vanishes in the coefficient field");
        }
    }
}

int monomial_degree(const CDGA& c, const Monomial& m) {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        d += static_cast<int>(m[i]) * c.generators[i].degree;
    return d;
}

std::string monomial_to_string(const CDGA& c, const Monomial& m) {
    std::ostringstream out;
    bool any = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (any)
            out << "*";
        any = true;
        const Generator& g = c.generators[i];
        if (g.kind == GeneratorKind::DividedPower)
            out << "γ" << m[i] << "(" << g.label << ")";
        else {
            out << g.label;
            if (m[i] > 1)
                out << "^" << m[i];
        }
    }
    return any ? out.str() : "1";
}

std::string element_to_string(const CDGA& c, const Element& e) {
    if (e.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    // Reverse map order puts lower generator indices first.
    for (auto it = e.rbegin(); it != e.rend(); ++it) {
        const auto& [m, coeff] = *it;
        const Rational mag = abs(coeff);
        if (first)
            out << (coeff < 0 ? "-" : "");
        else
            out << (coeff < 0 ? " - " : " + ");
        first = false;
        if (mag != 1)
            out << mag.get_str() << "*";
        out << monomial_to_string(c, m);
    }
    return out.str();
}

std::pair<Rational, Monomial> multiply(const CDGA& c, const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    Rational coeff = 1;
    // Moving each odd generator of b left past the odd generators of a with
    // larger index contributes one sign flip per crossing.
    int odd_in_a_after = 0;
    int crossings = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        const Generator& g = c.generators[i];
        const bool odd = g.degree % 2 != 0;
        if (odd) {
            if (b[i] != 0)
                crossings += odd_in_a_after;
            if (a[i] != 0)
                ++odd_in_a_after;
        }
        r[i] = a[i] + b[i];
        if (g.kind == GeneratorKind::Exterior && r[i] > 1)
            return {Rational(0), r};
        if (g.kind == GeneratorKind::DividedPower && a[i] != 0 && b[i] != 0)
            coeff *= Rational(binomial(r[i], a[i]));
    }
    if (crossings % 2 != 0)
        coeff = -coeff;
    return {coeff, r};
}

Element multiply(const CDGA& c, const Element& a, const Element& b) {
    Element out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            auto [coeff, m] = multiply(c, ma, mb);
            if (coeff != 0)
                add_term(out, m, coeff * ca * cb);
        }
    return out;
}

Element apply_differential(const CDGA& c, const Monomial& m) {
    Element out;
    int prefix_degree = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        const Generator& g = c.generators[i];
        const Element& dg = c.differential[i];
        if (!dg.empty()) {
            // prefix * g^(e-1) * δg * suffix
            Monomial left(m.size(), 0);
            Monomial suffix(m.size(), 0);
            for (std::size_t j = 0; j < m.size(); ++j) {
                if (j < i)
                    left[j] = m[j];
                else if (j > i)
                    suffix[j] = m[j];
            }
            left[i] = m[i] - 1;
            Rational power_coeff = 1;
            if (g.kind == GeneratorKind::Polynomial)
                power_coeff = m[i];
            const Rational sign = (prefix_degree % 2 != 0) ? -1 : 1;
            for (const auto& [dm, dc] : dg) {
                auto [c1, m1] = multiply(c, left, dm);
                if (c1 == 0)
                    continue;
                auto [c2, m2] = multiply(c, m1, suffix);
                if (c2 == 0)
                    continue;
                add_term(out, m2, sign * power_coeff * dc * c1 * c2);
            }
        }
        prefix_degree += static_cast<int>(m[i]) * g.degree;
    }
    return out;
}

Element apply_differential(const CDGA& c, const Element& e) {
    Element out;
    for (const auto& [m, coeff] : e)
        for (const auto& [dm, dc] : apply_differential(c, m))
            add_term(out, dm, coeff * dc);
    return out;
}

std::vector<Monomial> monomial_basis(const CDGA& c, int degree) {
    std::vector<Monomial> out;
    if (degree < 0)
        return out;
    Monomial current = c.unit();
    // Remaining total degree achievable by generators at index >= i is
    // unbounded for even ones, so recursion is bounded only by `remaining`.
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
        if (i == c.size()) {
            if (remaining == 0)
                out.push_back(current);
            return;
        }
        const Generator& g = c.generators[i];
        const int max_exp = g.kind == GeneratorKind::Exterior ? 1 : remaining / g.degree;
        for (int e = 0; e <= max_exp && e * g.degree <= remaining; ++e) {
            current[i] = static_cast<std::uint32_t>(e);
            rec(i + 1, remaining - e * g.degree);
        }
        current[i] = 0;
    };
    rec(0, degree);
    return out;
}

} // namespace rb
