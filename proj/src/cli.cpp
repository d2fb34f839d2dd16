#include "realbundles/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

#include "realbundles/atlas.hpp"
#include "realbundles/error.hpp"
#include "realbundles/json_io.hpp"
#include "realbundles/tables.hpp"

namespace rb {

namespace {

struct Flags {
    std::string genus;
    std::string curve_type;
    int circles = 0;
    std::optional<std::string> w1;
    int rank = 2;
    std::optional<long> degree;
    unsigned characteristic = 0;
    std::size_t truncate = 8;
    std::optional<long> max_codim;
    std::string format = "json";
    bool quaternionic = false;
    unsigned threads = 1;
};

void add_common(CLI::App* sub, Flags& f) {
    sub->add_option("--genus", f.genus, "genus g (atlas: lo..hi)");
    sub->add_option("--curve-type", f.curve_type, "0, I or II");
    sub->add_option("--circles", f.circles, "number of real circles a");
    sub->add_option("--w1", f.w1, "first Stiefel-Whitney classes on the circles, e.g. 101");
    sub->add_option("--rank", f.rank, "bundle rank")->capture_default_str();
    sub->add_option("--degree", f.degree, "bundle degree");
    sub->add_option("--char", f.characteristic, "field characteristic (0 or an odd prime)")->capture_default_str();
    sub->add_option("--truncate", f.truncate, "series known through degree N")->capture_default_str();
    sub->add_option("--max-codim", f.max_codim, "largest stratum codimension");
    sub->add_option("--format", f.format, "json, csv or markdown")
        ->check(CLI::IsMember({"json", "csv", "markdown"}))
        ->capture_default_str();
    sub->add_flag("--quaternionic", f.quaternionic, "bg: Quaternionic stack report instead");
    sub->add_option("--threads", f.threads, "worker threads (verify, atlas)")->capture_default_str();
}

int parse_int(const std::string& s, const char* what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (s.empty() || used != s.size())
        throw ValidationError("genus", std::string("cannot parse ") + what + " '" + s + "'");
    return v;
}

int genus_of(const Flags& f) {
    if (f.genus.empty())
        throw ValidationError("genus", "--genus is required");
    return parse_int(f.genus, "genus");
}

CurveTopology curve_of(const Flags& f) {
    if (f.curve_type.empty())
        throw ValidationError("curve-type", "--curve-type is required");
    CurveTopology c{genus_of(f), curve_kind_from_string(f.curve_type), f.circles};
    validate_curve(c);
    return c;
}

long parity_default_degree(const W1Pattern& w1) {
    return static_cast<long>(std::count(w1.begin(), w1.end(), true) % 2);
}

/// Bundle from --w1/--degree. When --w1 is omitted it must be forced by the
/// curve (a = 0) or the degree (a single admissible pattern).
RealBundleType bundle_of(const Flags& f, const CurveTopology& c) {
    if (f.w1) {
        RealBundleType b{f.rank, 0, w1_from_string(*f.w1)};
        b.degree = f.degree.value_or(parity_default_degree(b.w1));
        validate_real_bundle(c, b);
        return b;
    }
    if (c.fixed_circles == 0) {
        RealBundleType b{f.rank, f.degree.value_or(0), {}};
        validate_real_bundle(c, b);
        return b;
    }
    if (!f.degree)
        throw ValidationError("w1", "--w1 is required when the curve has real points");
    auto all = enumerate_real_bundles(c, f.rank, *f.degree);
    if (all.size() != 1)
        throw ValidationError("w1", "--w1 is required: " + std::to_string(all.size()) +
                                        " bundle types have this degree");
    return all.front();
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void emit_tables(std::ostream& out, const Flags& f, const std::vector<Table>& ts) {
    out << (f.format == "csv" ? to_csv(ts) : to_markdown(ts));
}

json bundle_entry(const CurveTopology& c, const RealBundleType& b) {
    json j = b;
    j["moebius_count"] = b.moebius_count();
    j["case"] = c.fixed_circles > 0 ? json(std::string(to_string(classify_gauge_case(c, b)))) : json(nullptr);
    j["orientability"] = b.rank == 2 ? json(normal_bundle_orientability(c, b)) : json(nullptr);
    return j;
}

int cmd_classify(const Flags& f, std::ostream& out) {
    const auto c = curve_of(f);
    if (!f.degree)
        throw ValidationError("degree", "--degree is required");
    if (f.rank < 1)
        throw ValidationError("rank", "rank must be positive");
    const auto bundles = enumerate_real_bundles(c, f.rank, *f.degree);
    if (f.format == "json") {
        json rows = json::array();
        for (const auto& b : bundles)
            rows.push_back(bundle_entry(c, b));
        emit_json(out, json{{"curve", c}, {"rank", f.rank}, {"degree", *f.degree}, {"bundles", rows}});
    } else {
        emit_tables(out, f, {bundles_table(c, bundles)});
    }
    return kExitOk;
}

int cmd_strata(const Flags& f, std::ostream& out) {
    const int g = genus_of(f);
    if (!f.degree)
        throw ValidationError("degree", "--degree is required");
    if (f.rank != 2)
        throw ValidationError("rank", "strata are defined for rank two");
    if (g < 0)
        throw ValidationError("genus", "genus must be non-negative");
    const long max_codim = f.max_codim.value_or(std::max(0L, 4L * g - 3));

    std::optional<OrientabilityVerdict> verdict;
    std::optional<int> circles;
    if (!f.curve_type.empty()) {
        const auto c = curve_of(f);
        const auto b = bundle_of(f, c);
        verdict = normal_bundle_orientability(c, b);
        if (c.fixed_circles > 0)
            circles = c.fixed_circles;
    }
    std::vector<StrataEntry> entries;
    for (const auto& s : enumerate_strata(g, *f.degree, max_codim, circles)) {
        StrataEntry e{s, std::nullopt};
        if (verdict && verdict->kind != Orientability::Indeterminate)
            e.contribution = stratum_contribution(*verdict, s);
        entries.push_back(e);
    }
    if (f.format == "json")
        emit_json(out, json{{"genus", g},
                            {"degree", *f.degree},
                            {"max_codim", max_codim},
                            {"orientability", verdict ? json(*verdict) : json(nullptr)},
                            {"strata", entries}});
    else
        emit_tables(out, f, {strata_table(entries)});
    return kExitOk;
}

void emit_report(std::ostream& out, const Flags& f, const CohomologyReport& r) {
    if (f.format == "json")
        emit_json(out, r);
    else
        emit_tables(out, f, report_tables(r));
}

int cmd_bg(const Flags& f, std::ostream& out) {
    const FieldSpec k{f.characteristic};
    validate_field(k);
    const auto c = curve_of(f);
    if (f.quaternionic) {
        if (!f.degree)
            throw ValidationError("degree", "--degree is required");
        emit_report(out, f, quaternionic_stack_report(c, QuaternionicBundleType{f.rank, *f.degree}));
        return kExitOk;
    }
    emit_report(out, f, bg_cohomology(c, bundle_of(f, c), k, f.truncate));
    return kExitOk;
}

int cmd_moduli(const Flags& f, std::ostream& out) {
    const FieldSpec k{f.characteristic};
    validate_field(k);
    const auto c = curve_of(f);
    const auto b = bundle_of(f, c);
    const auto moduli = moduli_cohomology(c, b, k, f.truncate);
    const auto fixed = fixed_determinant_invariants(c, b, k, f.truncate);
    if (f.format == "json") {
        json j = moduli;
        j["fixed_determinant"] = fixed;
        emit_json(out, j);
    } else {
        auto ts = report_tables(moduli);
        for (auto& t : report_tables(fixed))
            ts.push_back(std::move(t));
        emit_tables(out, f, ts);
    }
    return kExitOk;
}

int cmd_verify(const Flags& f, std::ostream& out) {
    const FieldSpec k{f.characteristic};
    validate_field(k);
    const auto c = curve_of(f);
    const auto result = verify_bg(c, bundle_of(f, c), k, f.truncate, f.threads);
    if (f.format == "json")
        emit_json(out, result);
    else
        emit_tables(out, f, {verification_table(result)});
    return result.pass ? kExitOk : kExitMismatch;
}

int cmd_atlas(const Flags& f, std::ostream& out) {
    AtlasOptions opt;
    opt.field = FieldSpec{f.characteristic};
    opt.degree = f.degree.value_or(1);
    opt.truncation = f.truncate;
    opt.threads = f.threads;
    if (f.rank != 2)
        throw ValidationError("rank", "atlas rows are rank two");
    if (!f.genus.empty()) {
        const auto dots = f.genus.find("..");
        if (dots == std::string::npos) {
            opt.genus_min = opt.genus_max = parse_int(f.genus, "genus");
        } else {
            opt.genus_min = parse_int(f.genus.substr(0, dots), "genus range");
            opt.genus_max = parse_int(f.genus.substr(dots + 2), "genus range");
        }
    }
    opt.max_codim = f.max_codim.value_or(std::max(0L, 4L * opt.genus_max - 3));
    const auto rows = atlas(opt);
    if (f.format == "json")
        emit_json(out, json{{"rows", rows}});
    else
        emit_tables(out, f, {atlas_table(rows)});
    return kExitOk;
}

void emit_error(std::ostream& out, const std::string& code, const std::string& message) {
    emit_json(out, json{{"error", {{"code", code}, {"message", message}}}});
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"Cohomology of moduli of Real and Quaternionic rank-two bundles over real curves", "realbundles"};
    app.require_subcommand(1, 1);
    Flags f;
    const std::vector<std::pair<const char*, const char*>> commands = {
        {"classify", "list Real bundle types for a curve, rank and degree"},
        {"strata", "unstable strata with codimensions and contributions"},
        {"bg", "cohomology of the classifying space of the real gauge group"},
        {"moduli", "cohomology of the moduli space and its fixed-determinant part"},
        {"verify", "check the closed form against the exact E2 oracle"},
        {"atlas", "tabulate every configuration over a genus range"},
    };
    for (const auto& [name, help] : commands)
        add_common(app.add_subcommand(name, help), f);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        emit_error(out, "usage", e.what());
        return kExitInvalid;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        if (name == "classify")
            return cmd_classify(f, out);
        if (name == "strata")
            return cmd_strata(f, out);
        if (name == "bg")
            return cmd_bg(f, out);
        if (name == "moduli")
            return cmd_moduli(f, out);
        if (name == "verify")
            return cmd_verify(f, out);
        return cmd_atlas(f, out);
    } catch (const ValidationError& e) {
        emit_error(out, e.code(), e.what());
        return kExitInvalid;
    } catch (const nlohmann::json::exception& e) {
        emit_error(out, "json", e.what());
        return kExitInvalid;
    } catch (const std::exception& e) {
        emit_error(out, "internal", e.what());
        return kExitInternal;
    }
}

} // namespace rb
