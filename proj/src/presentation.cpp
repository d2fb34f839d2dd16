#include "realbundles/presentation.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "realbundles/error.hpp"

namespace rb {

std::string_view to_string(GeneratorKind k) {
    switch (k) {
    case GeneratorKind::Exterior: return "Exterior";
    case GeneratorKind::Polynomial: return "Polynomial";
    case GeneratorKind::DividedPower: return "DividedPower";
    }
    return "?";
}

std::string_view to_string(Freeness f) {
    switch (f) {
    case Freeness::Free: return "Free";
    case Freeness::FreeCharZeroOnly: return "FreeCharZeroOnly";
    case Freeness::Unknown: return "Unknown";
    }
    return "?";
}

GeneratorKind generator_kind_from_string(std::string_view s) {
    for (auto k : {GeneratorKind::Exterior, GeneratorKind::Polynomial, GeneratorKind::DividedPower})
        if (to_string(k) == s)
            return k;
    throw ValidationError("generator", "unknown generator kind '" + std::string(s) + "'");
}

Freeness freeness_from_string(std::string_view s) {
    for (auto f : {Freeness::Free, Freeness::FreeCharZeroOnly, Freeness::Unknown})
        if (to_string(f) == s)
            return f;
    throw ValidationError("presentation", "unknown freeness claim '" + std::string(s) + "'");
}

void validate_presentation(const GradedAlgebraPresentation& p) {
    std::map<std::string, const Generator*> by_label;
    for (const auto& g : p.generators) {
        if (g.degree < 1)
            throw ValidationError("generator", "generator '" + g.label + "' must have positive degree");
        const bool odd = g.degree % 2 != 0;
        if ((g.kind == GeneratorKind::Exterior) != odd)
            throw ValidationError("generator", "generator '" + g.label +
                                                   "': exterior generators must have odd degree, "
                                                   "polynomial and divided-power generators even degree");
        if (!by_label.emplace(g.label, &g).second)
            throw ValidationError("generator", "duplicate generator label '" + g.label + "'");
    }
    std::set<std::string> used;
    for (const auto& r : p.relations) {
        const auto* sum = std::get_if<SumRelation>(&r);
        if (!sum)
            continue;
        if (sum->labels.size() < 2)
            throw ValidationError("relation", "a sum relation needs at least two generators");
        int degree = -1;
        for (const auto& label : sum->labels) {
            auto it = by_label.find(label);
            if (it == by_label.end())
                throw ValidationError("relation", "sum relation references unknown generator '" + label + "'");
            if (it->second->kind != GeneratorKind::Exterior)
                throw ValidationError("relation", "sum relations are supported among exterior generators only");
            if (degree >= 0 && it->second->degree != degree)
                throw ValidationError("relation", "sum relation mixes generator degrees");
            degree = it->second->degree;
            if (!used.insert(label).second)
                throw ValidationError("relation", "generator '" + label + "' appears in more than one sum relation");
        }
    }
}

GradedAlgebraPresentation loop_group_presentation(CircleType circle) {
    if (circle == CircleType::IdentityMoebius)
        return {};
    return {{{"q", 3, GeneratorKind::Exterior}, {"p", 4, GeneratorKind::Polynomial}}, {}, Freeness::Free};
}

TruncatedSeries presentation_poincare(const GradedAlgebraPresentation& p, std::size_t n) {
    validate_presentation(p);
    TruncatedSeries result = TruncatedSeries::one(n);
    for (const auto& g : p.generators) {
        const auto d = static_cast<std::size_t>(g.degree);
        if (g.kind == GeneratorKind::Exterior)
            result = series_mul(result, one_plus_t_power(d, 1, n));
        else
            result = series_div_cyclotomic(result, d);
    }
    // Each sum relation among m exterior generators removes one factor (1 + t^d),
    // since the quotient is exterior on m-1 generators.
    for (const auto& r : p.relations) {
        const auto* sum = std::get_if<SumRelation>(&r);
        if (!sum)
            continue;
        std::size_t d = 0;
        for (const auto& g : p.generators)
            if (g.label == sum->labels.front())
                d = static_cast<std::size_t>(g.degree);
        result = series_mul(result, series_inverse(one_plus_t_power(d, 1, n)));
    }
    return result;
}

std::vector<Generator> numbered_generators(std::string_view prefix, int count, int degree, GeneratorKind kind) {
    std::vector<Generator> out;
    for (int i = 1; i <= count; ++i)
        out.push_back({std::string(prefix) + std::to_string(i), degree, kind});
    return out;
}

namespace {

std::string_view functor_symbol(GeneratorKind k) {
    switch (k) {
    case GeneratorKind::Exterior: return "Λ";
    case GeneratorKind::Polynomial: return "S";
    case GeneratorKind::DividedPower: return "Γ";
    }
    return "?";
}

// Splits "abc12" into ("abc", 12); labels without a numeric suffix give -1.
std::pair<std::string, long> split_label(const std::string& label) {
    std::size_t i = label.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(label[i - 1])))
        --i;
    if (i == label.size() || i == 0)
        return {label, -1};
    return {label.substr(0, i), std::stol(label.substr(i))};
}

} // namespace

std::string to_string(const GradedAlgebraPresentation& p) {
    if (p.generators.empty())
        return "k";
    std::ostringstream out;
    std::size_t i = 0;
    bool first = true;
    while (i < p.generators.size()) {
        const Generator& g = p.generators[i];
        auto [prefix, index] = split_label(g.label);
        std::size_t j = i + 1;
        if (index >= 0) {
            long expect = index + 1;
            while (j < p.generators.size()) {
                const Generator& h = p.generators[j];
                auto [hp, hi] = split_label(h.label);
                if (h.kind != g.kind || h.degree != g.degree || hp != prefix || hi != expect)
                    break;
                ++expect;
                ++j;
            }
        }
        if (!first)
            out << " ⊗ ";
        first = false;
        out << functor_symbol(g.kind) << "(" << g.label;
        if (j - i > 2)
            out << ".." << p.generators[j - 1].label;
        else if (j - i == 2)
            out << "," << p.generators[j - 1].label;
        out << "; deg " << g.degree << ")";
        i = j;
    }
    for (const auto& r : p.relations) {
        const auto* sum = std::get_if<SumRelation>(&r);
        if (!sum)
            continue;
        out << " / (";
        for (std::size_t k = 0; k < sum->labels.size(); ++k)
            out << (k ? "+" : "") << sum->labels[k];
        out << ")";
    }
    return out.str();
}

} // namespace rb
