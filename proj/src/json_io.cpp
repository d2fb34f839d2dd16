#include "realbundles/json_io.hpp"

#include <limits>

#include "realbundles/error.hpp"

namespace rb {

namespace {

template <class T>
std::optional<T> optional_field(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null())
        return std::nullopt;
    return j.at(key).get<T>();
}

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
    j[key] = v ? json(*v) : json(nullptr);
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer())
        return Rational(integer_from_json(j));
    if (j.is_string()) {
        Rational q;
        if (q.set_str(j.get<std::string>(), 10) != 0)
            throw ValidationError("json", "bad rational coefficient '" + j.get<std::string>() + "'");
        q.canonicalize();
        return q;
    }
    throw ValidationError("json", "coefficients must be integers or \"p/q\" strings");
}

json rational_to_json(const Rational& q) {
    if (q.get_den() == 1)
        return integer_to_json(q.get_num());
    return q.get_str();
}

} // namespace

json integer_to_json(const Integer& v) {
    if (mpz_fits_slong_p(v.get_mpz_t()))
        return json(v.get_si());
    return json(v.get_str());
}

Integer integer_from_json(const json& j) {
    if (j.is_number_unsigned())
        return Integer(std::to_string(j.get<std::uint64_t>()));
    if (j.is_number_integer())
        return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string())
        return Integer(j.get<std::string>());
    throw ValidationError("json", "expected an integer");
}

void to_json(json& j, const TruncatedSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs())
        coeffs.push_back(integer_to_json(c));
    j = json{{"coefficients", coeffs}, {"truncation", s.truncation()}};
}

TruncatedSeries series_from_json(const json& j) {
    std::vector<Integer> coeffs;
    for (const auto& c : j.at("coefficients"))
        coeffs.push_back(integer_from_json(c));
    TruncatedSeries s(std::move(coeffs));
    if (j.at("truncation").get<std::size_t>() != s.truncation())
        throw ValidationError("json", "series truncation does not match its coefficient count");
    return s;
}

void to_json(json& j, const CurveTopology& c) {
    j = json{{"genus", c.genus}, {"curve_type", std::string(to_string(c.kind))}, {"fixed_circles", c.fixed_circles}};
}

void from_json(const json& j, CurveTopology& c) {
    c.genus = j.at("genus").get<int>();
    c.kind = curve_kind_from_string(j.at("curve_type").get<std::string>());
    c.fixed_circles = j.at("fixed_circles").get<int>();
}

void to_json(json& j, const RealBundleType& b) {
    j = json{{"rank", b.rank}, {"degree", b.degree}, {"w1", w1_to_string(b.w1)}};
}

void from_json(const json& j, RealBundleType& b) {
    b.rank = j.at("rank").get<int>();
    b.degree = j.at("degree").get<long>();
    b.w1 = w1_from_string(j.at("w1").get<std::string>());
}

void to_json(json& j, const QuaternionicBundleType& q) { j = json{{"rank", q.rank}, {"degree", q.degree}}; }

void from_json(const json& j, QuaternionicBundleType& q) {
    q.rank = j.at("rank").get<int>();
    q.degree = j.at("degree").get<long>();
}

void to_json(json& j, const SurfaceDecomposition& d) {
    j = json{{"half_genus", d.half_genus}, {"boundary_circles", d.boundary_circles},
             {"identity_glued", d.identity_glued}};
}

void from_json(const json& j, SurfaceDecomposition& d) {
    d.half_genus = j.at("half_genus").get<int>();
    d.boundary_circles = j.at("boundary_circles").get<int>();
    d.identity_glued = j.at("identity_glued").get<int>();
}

void to_json(json& j, const Stratum& s) {
    j = json{{"d1", s.scss_degree}, {"codim", s.real_codim}};
    put_optional(j, "fixed_component_count", s.fixed_component_count);
}

void from_json(const json& j, Stratum& s) {
    s.scss_degree = j.at("d1").get<long>();
    s.real_codim = j.at("codim").get<long>();
    s.fixed_component_count = optional_field<std::uint64_t>(j, "fixed_component_count");
}

void to_json(json& j, const OrientabilityVerdict& v) {
    j = json{{"verdict", std::string(to_string(v.kind))}};
    j["trigger"] = v.trigger ? json(std::string(to_string(*v.trigger))) : json(nullptr);
}

void from_json(const json& j, OrientabilityVerdict& v) {
    v.kind = orientability_from_string(j.at("verdict").get<std::string>());
    auto t = optional_field<std::string>(j, "trigger");
    v.trigger = t ? std::optional(orientability_trigger_from_string(*t)) : std::nullopt;
}

void to_json(json& j, const ContributionRule& r) {
    if (r.kind == ContributionRule::Kind::Vanishing)
        j = json{{"kind", "Vanishing"}};
    else
        j = json{{"kind", "Gysin"}, {"shift", r.shift}};
}

void from_json(const json& j, ContributionRule& r) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "Vanishing")
        r = {ContributionRule::Kind::Vanishing, 0};
    else if (kind == "Gysin")
        r = {ContributionRule::Kind::Gysin, j.at("shift").get<long>()};
    else
        throw ValidationError("json", "unknown contribution kind '" + kind + "'");
}

void to_json(json& j, const Generator& g) {
    j = json{{"label", g.label}, {"degree", g.degree}, {"kind", std::string(to_string(g.kind))}};
}

void from_json(const json& j, Generator& g) {
    g.label = j.at("label").get<std::string>();
    g.degree = j.at("degree").get<int>();
    g.kind = generator_kind_from_string(j.at("kind").get<std::string>());
}

void to_json(json& j, const GradedAlgebraPresentation& p) {
    json relations = json::array();
    for (const auto& r : p.relations) {
        if (const auto* sum = std::get_if<SumRelation>(&r))
            relations.push_back(json{{"type", "Sum"}, {"labels", sum->labels}});
        else
            relations.push_back(json{{"type", "Empty"}});
    }
    j = json{{"generators", p.generators},
             {"relations", relations},
             {"freeness", std::string(to_string(p.freeness))},
             {"text", to_string(p)}};
}

void from_json(const json& j, GradedAlgebraPresentation& p) {
    p.generators = j.at("generators").get<std::vector<Generator>>();
    p.relations.clear();
    for (const auto& r : j.at("relations")) {
        const auto type = r.at("type").get<std::string>();
        if (type == "Sum")
            p.relations.push_back(SumRelation{r.at("labels").get<std::vector<std::string>>()});
        else if (type == "Empty")
            p.relations.push_back(EmptyRelation{});
        else
            throw ValidationError("relation", "unsupported relation form '" + type + "'");
    }
    p.freeness = freeness_from_string(j.at("freeness").get<std::string>());
}

void to_json(json& j, const Citation& c) { j = json{{"id", c.id}, {"statement", c.statement}}; }

void from_json(const json& j, Citation& c) {
    c.id = j.at("id").get<std::string>();
    c.statement = j.at("statement").get<std::string>();
}

void to_json(json& j, const CohomologyReport& r) {
    j = json::object();
    j["subject"] = std::string(to_string(r.subject));
    j["case"] = r.case_label ? json(std::string(to_string(*r.case_label))) : json(nullptr);
    j["genus"] = r.genus;
    j["degree"] = r.degree;
    j["char"] = r.field.characteristic;
    put_optional(j, "series", r.series);
    put_optional(j, "presentation", r.presentation);
    put_optional(j, "partial_up_to", r.partial_up_to);
    put_optional(j, "real_dimension", r.real_dimension);
    put_optional(j, "statement", r.statement);
    json flags{{"is_exterior", std::string(to_string(r.flags.is_exterior))},
               {"ring_known", std::string(to_string(r.flags.ring_known))}};
    put_optional(flags, "first_positive_betti_degree", r.flags.first_positive_betti_degree);
    j["flags"] = flags;
    j["citations"] = r.citations;
}

void from_json(const json& j, CohomologyReport& r) {
    r.subject = subject_from_string(j.at("subject").get<std::string>());
    auto label = optional_field<std::string>(j, "case");
    r.case_label = label ? std::optional(gauge_case_from_string(*label)) : std::nullopt;
    r.genus = j.at("genus").get<int>();
    r.degree = j.at("degree").get<long>();
    r.field.characteristic = j.at("char").get<unsigned>();
    r.series = optional_field<TruncatedSeries>(j, "series");
    r.presentation = optional_field<GradedAlgebraPresentation>(j, "presentation");
    r.partial_up_to = optional_field<long>(j, "partial_up_to");
    r.real_dimension = optional_field<long>(j, "real_dimension");
    r.statement = optional_field<std::string>(j, "statement");
    const json& flags = j.at("flags");
    r.flags.is_exterior = tristate_from_string(flags.at("is_exterior").get<std::string>());
    r.flags.ring_known = tristate_from_string(flags.at("ring_known").get<std::string>());
    r.flags.first_positive_betti_degree = optional_field<int>(flags, "first_positive_betti_degree");
    r.citations = j.at("citations").get<std::vector<Citation>>();
}

void to_json(json& j, const CDGA& c) {
    json differential = json::object();
    for (std::size_t i = 0; i < c.size(); ++i) {
        json terms = json::array();
        for (const auto& [m, coeff] : c.differential[i]) {
            json mono = json::object();
            for (std::size_t k = 0; k < m.size(); ++k)
                if (m[k] != 0)
                    mono[c.generators[k].label] = m[k];
            terms.push_back(json{{"coefficient", rational_to_json(coeff)}, {"monomial", mono}});
        }
        differential[c.generators[i].label] = terms;
    }
    j = json{{"generators", c.generators}, {"differential", differential}, {"char", c.field.characteristic}};
}

void from_json(const json& j, CDGA& c) {
    FieldSpec field{j.value("char", 0U)};
    c = make_cdga(j.at("generators").get<std::vector<Generator>>(), field);
    if (!j.contains("differential"))
        return;
    for (const auto& [label, terms] : j.at("differential").items()) {
        std::vector<std::pair<Rational, std::map<std::string, std::uint32_t>>> parsed;
        for (const auto& term : terms)
            parsed.emplace_back(rational_from_json(term.at("coefficient")),
                                term.at("monomial").get<std::map<std::string, std::uint32_t>>());
        set_differential(c, label, parsed);
    }
}

void to_json(json& j, const VerificationResult& v) {
    json closed = json::array();
    for (const auto& c : v.closed_form_dims)
        closed.push_back(integer_to_json(c));
    json decs = json::array();
    for (const auto& d : v.decompositions) {
        json entry{{"decomposition", d.decomposition}, {"oracle_dims", d.oracle_dims}, {"pass", d.pass}};
        put_optional(entry, "first_mismatch_degree", d.first_mismatch_degree);
        decs.push_back(entry);
    }
    j = json{{"pass", v.pass},
             {"case", std::string(to_string(v.case_label))},
             {"oracle_dims", v.oracle_dims},
             {"closed_form_dims", closed},
             {"decompositions", decs}};
    put_optional(j, "first_mismatch_degree", v.first_mismatch_degree);
    if (v.mismatch_values)
        j["mismatch"] = json{{"oracle", v.mismatch_values->first},
                             {"closed_form", integer_to_json(v.mismatch_values->second)}};
}

} // namespace rb
