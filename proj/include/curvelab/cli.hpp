#pragma once

#include "curvelab/branches.hpp"
#include "curvelab/contact.hpp"
#include "curvelab/corpus.hpp"
#include "curvelab/error.hpp"
#include "curvelab/implicit.hpp"
#include "curvelab/intersection.hpp"
#include "curvelab/parametric.hpp"
#include "curvelab/parse.hpp"
#include "curvelab/real_degree.hpp"
#include "curvelab/relations.hpp"

#include "json.hpp"

#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace curvelab {

using Json = nlohmann::ordered_json;

enum class Command {
    AnalyzeImplicit,
    AnalyzeParametric,
    Intersect,
    Milnor,
    ContactSet,
    Implicitize,
    Branches,
    Verify,
    Degree,
    CorpusRun,
};

inline const std::map<std::string, Command>& command_names() {
    static const std::map<std::string, Command> names{
        {"analyze-implicit", Command::AnalyzeImplicit},
        {"analyze-parametric", Command::AnalyzeParametric},
        {"intersect", Command::Intersect},
        {"milnor", Command::Milnor},
        {"contact-set", Command::ContactSet},
        {"implicitize", Command::Implicitize},
        {"branches", Command::Branches},
        {"verify", Command::Verify},
        {"degree", Command::Degree},
        {"corpus", Command::CorpusRun},
    };
    return names;
}

inline Command parse_command(const std::string& name) {
    auto it = command_names().find(name);
    if (it == command_names().end()) fail(Errc::InvalidArgument, "unknown command " + name);
    return it->second;
}

inline constexpr unsigned kMinPrecision = 16;

/// Default precision, overridden by CURVELAB_PRECISION.
inline unsigned default_precision() {
    const char* env = std::getenv("CURVELAB_PRECISION");
    if (!env || !*env) return kDefaultPrecision;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v < kMinPrecision || v > kPrecisionCap)
        fail(Errc::InvalidArgument, std::string("CURVELAB_PRECISION must be an integer in [16, 4096], got ") + env);
    return static_cast<unsigned>(v);
}

enum class OutputFormat { Text, Json };

/// A command with its positional arguments and flags. Flag values are kept
/// as text; boolean flags map to "true".
struct JobSpec {
    Command command = Command::AnalyzeImplicit;
    std::vector<std::string> args;
    unsigned precision = kDefaultPrecision;
    OutputFormat output_format = OutputFormat::Text;
    std::map<std::string, std::string> flags;

    void validate() const {
        if (precision < kMinPrecision || precision > kPrecisionCap)
            fail(Errc::InvalidArgument, "precision " + std::to_string(precision) + " outside [16, 4096]");
        static const std::set<std::string> known{"radius", "trials", "strict-hypotheses", "seed", "corpus", "kind", "name"};
        for (const auto& [k, v] : flags)
            if (!known.count(k)) fail(Errc::InvalidArgument, "unknown flag --" + k);
    }
    bool flag(const std::string& k) const {
        auto it = flags.find(k);
        return it != flags.end() && it->second != "false";
    }
    std::optional<std::string> value(const std::string& k) const {
        auto it = flags.find(k);
        if (it == flags.end()) return std::nullopt;
        return it->second;
    }
};

struct RunResult {
    int exit_code = 0;
    std::string output;
    Json report;
};

namespace detail {

inline Json count_json(const Count& c, const std::optional<BiPoly>& certificate) {
    if (c.finite()) return Json{{"finite", c.value()}};
    Json inf;
    inf["certificate"] = certificate ? Json(to_string(*certificate)) : Json(nullptr);
    return Json{{"infinite", inf}};
}

inline Json count_json(const CertifiedCount& c) { return count_json(c.value, c.certificate); }
inline Json count_json(const InterResult& c) { return count_json(c.value, c.certificate); }

inline InterResult milnor_certified(const BiPoly& f) {
    require_through_origin(f, "milnor_number");
    return intersection_multiplicity(f.derivative(Var::X), f.derivative(Var::Y));
}

inline Json checks_json(const Report& r) {
    Json arr = Json::array();
    for (const auto& c : r.checks) {
        Json j{{"id", c.id}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}};
        if (!c.note.empty()) j["note"] = c.note;
        arr.push_back(j);
    }
    return arr;
}

inline bool all_pass(const Json& checks) {
    for (const auto& c : checks)
        if (!c.at("pass").get<bool>()) return false;
    return true;
}

inline Json error_json(const Error& e) {
    Json j{{"code", std::string(errc_name(e.code()))}, {"message", e.detail()}};
    if (auto* pe = dynamic_cast<const ParseError*>(&e)) {
        j["line"] = pe->line();
        j["column"] = pe->column();
        j["expected"] = pe->expected();
    }
    return j;
}

inline std::string count_text(const Json& c) {
    if (c.contains("finite")) return std::to_string(c["finite"].get<unsigned>());
    const auto& cert = c["infinite"]["certificate"];
    return cert.is_null() ? "infinite" : "infinite (certificate " + cert.get<std::string>() + ")";
}

/// Human-readable rendering of a report object.
inline std::string render_text(const Json& r) {
    std::ostringstream os;
    for (const auto& [k, v] : r.items()) {
        if (k == "checks") continue;
        os << k << ": ";
        if (v.is_object() && (v.contains("finite") || v.contains("infinite"))) os << count_text(v);
        else if (v.is_string()) os << v.get<std::string>();
        else os << v.dump();
        os << "\n";
    }
    if (r.contains("checks"))
        for (const auto& c : r["checks"]) {
            os << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["id"].get<std::string>() << ": "
               << c["lhs"].get<std::string>() << " | " << c["rhs"].get<std::string>();
            if (c.contains("note")) os << " (" << c["note"].get<std::string>() << ")";
            os << "\n";
        }
    return os.str();
}

inline Json branch_json(const BranchData& b) {
    Json j{{"m", b.m}};
    j["beta"] = b.beta ? Json(*b.beta) : Json(nullptr);
    j["tangent"] = b.tangent.to_string();
    j["param"] = b.param.to_string();
    j["normal_form"] = b.normal.to_string();
    return j;
}

/// Known maximal real counts for a node, by the sign of the tangent cone's
/// discriminant. These are quoted values, not computed ones.
inline std::optional<Json> node_annotation(const BiPoly& f, const Count& milnor) {
    if (!milnor.finite() || milnor.value() != 1) return std::nullopt;
    BiPoly q = tangent_cone(f);
    Rat a = q.coeff(2, 0), b = q.coeff(1, 1), c = q.coeff(0, 2);
    bool plus = b * b - 4 * a * c < 0;
    return Json{{"type", plus ? "A1+" : "A1-"},
                {"max_real_inflections", plus ? 0 : 2},
                {"max_real_vertices", plus ? 4 : 6},
                {"source", "literature value, not computed"}};
}

} // namespace detail

/// Invariant report of an implicit germ. Branch-derived fields (beta,
/// lambda, contact_set) are present only when the rational expansion succeeds.
inline Json analyze_implicit(const BiPoly& f, const std::string& name, unsigned precision) {
    require_through_origin(f, "analyze-implicit");
    Json r;
    r["name"] = name;
    r["input"] = to_string(f);
    r["mult"] = multiplicity(f);
    auto milnor = detail::milnor_certified(f);
    r["milnor"] = detail::count_json(milnor);
    r["inflections"] = detail::count_json(inflection_count(f));
    r["vertices"] = detail::count_json(vertex_count(f));
    if (auto note = detail::node_annotation(f, milnor.value)) r["real_counts"] = *note;
    Report checks;
    try {
        auto bs = rational_branches(f, precision);
        if (bs.size() == 1 && bs[0].beta) {
            r["beta"] = *bs[0].beta;
            // The normal form is similar to the germ only when no shear was applied.
            if (bs[0].frame.kind == Frame::Kind::Swap || bs[0].frame.c == 0) {
                r["lambda"] = osculating_circle(bs[0].normal).lambda;
                checks.append(verify_lambda_identity(f, bs[0].normal));
            }
            checks.append(bounds_check(f, bs[0]));
        }
        r["contact_set"] = contact_set_from_branches(bs).to_string();
    } catch (const Error& e) {
        r["branch_status"] = std::string(errc_name(e.code())) + ": " + e.detail();
    }
    r["checks"] = detail::checks_json(checks);
    return r;
}

/// Invariant report of a parametrized germ; mult is min(ord x, ord y), and
/// the Milnor number comes from the implicit equation when one is available.
inline Json analyze_parametric(const Param& g, const std::string& name) {
    Json r;
    r["name"] = name;
    r["input"] = g.to_string();
    auto ox = g.x().finite_order(), oy = g.y().finite_order();
    unsigned mult = ox && oy ? std::min(*ox, *oy) : (ox ? *ox : *oy);
    r["mult"] = mult;
    Report checks;
    std::optional<BiPoly> f;
    try {
        f = implicitize(g);
    } catch (const Error&) {
    }
    r["milnor"] = f ? detail::count_json(detail::milnor_certified(*f)) : Json(nullptr);
    r["inflections"] = detail::count_json(inflection_order(g), std::nullopt);
    r["vertices"] = detail::count_json(vertex_order(g), std::nullopt);
    try {
        r["beta"] = first_puiseux_exponent(g);
        auto rel = lambda_relation(g);
        r["lambda"] = rel.lambda;
        Check c;
        c.id = "osculating.vertices";
        c.lhs = "V_gamma = " + rel.vertices.to_string();
        c.rhs = "I_gamma + lambda - 3 = " +
                (rel.inflections.finite() ? std::to_string(rel.inflections.value() + rel.lambda - 3) : "infinite");
        c.pass = rel.holds();
        checks.add(c);
    } catch (const Error&) {
    }
    if (f) {
        r["implicit"] = to_string(*f);
        checks.append(verify_bridge(*f, g));
    }
    r["checks"] = detail::checks_json(checks);
    return r;
}

/// Checks for one corpus entry: expected values, branch identities, and the
/// bounds and lambda identity for irreducible entries. An error becomes a
/// failing check.
inline Json corpus_entry_report(const CorpusEntry& e, unsigned precision);

namespace detail {

inline Json corpus_entry_checks(const CorpusEntry& e, unsigned precision) {
    BiPoly f = e.equation();
    Json r = analyze_implicit(f, e.name, precision);
    Json checks = r["checks"];
    auto rendered = [&](const std::string& field) -> std::optional<std::string> {
        if (!r.contains(field)) return std::nullopt;
        const auto& v = r[field];
        if (v.is_object()) return v.contains("finite") ? std::to_string(v["finite"].get<unsigned>()) : "infinite";
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    };
    for (const auto& [field, want] : e.expected) {
        auto got = rendered(field);
        checks.push_back(Json{{"id", "expected." + field},
                              {"lhs", field + " = " + (got ? *got : std::string("unavailable"))},
                              {"rhs", want},
                              {"pass", got && *got == want}});
    }
    if (!e.branches.empty()) {
        Report rep = verify_multibranch(f, e.branches);
        for (const auto& c : detail::checks_json(rep)) checks.push_back(c);
        for (const auto& [g, fi] : e.branches) {
            try {
                auto rel = lambda_relation(g);
                checks.push_back(Json{{"id", "osculating.vertices"},
                                      {"lhs", "V_gamma = " + rel.vertices.to_string()},
                                      {"rhs", "I_gamma + lambda - 3 with lambda = " + std::to_string(rel.lambda)},
                                      {"pass", rel.holds()}});
            } catch (const Error&) {
            }
        }
    }
    r["checks"] = checks;
    return r;
}

} // namespace detail

inline Json corpus_entry_report(const CorpusEntry& e, unsigned precision) {
    try {
        return detail::corpus_entry_checks(e, precision);
    } catch (const Error& err) {
        Json r{{"name", e.name}, {"error", detail::error_json(err)}};
        r["checks"] = Json::array({Json{{"id", "evaluation"},
                                        {"lhs", std::string(errc_name(err.code()))},
                                        {"rhs", "no error"},
                                        {"pass", false},
                                        {"note", err.detail()}}});
        return r;
    }
}

namespace detail {

inline Json verify_report_json(const std::string& name, const Report& rep) {
    Json r{{"name", name}, {"checks", checks_json(rep)}};
    if (!rep.notes.empty()) r["notes"] = rep.notes;
    r["passed"] = rep.passed();
    return r;
}

inline void need_args(const JobSpec& job, std::size_t lo, std::size_t hi, const std::string& usage) {
    if (job.args.size() < lo || job.args.size() > hi) fail(Errc::InvalidArgument, "usage: " + usage);
}

inline Rat parse_radius(const JobSpec& job) {
    auto v = job.value("radius");
    if (!v) return Rat(1, 16);
    BiPoly p = parse_poly(*v);
    if (p.total_degree() > 0) fail(Errc::InvalidArgument, "radius must be a rational number");
    Rat r = p.constant_term();
    if (r <= 0) fail(Errc::InvalidArgument, "radius must be positive");
    return r;
}

inline unsigned parse_unsigned(const JobSpec& job, const std::string& key, unsigned dflt) {
    auto v = job.value(key);
    if (!v) return dflt;
    char* end = nullptr;
    unsigned long n = std::strtoul(v->c_str(), &end, 10);
    if (v->empty() || *end != '\0') fail(Errc::InvalidArgument, "--" + key + " expects a natural number");
    return static_cast<unsigned>(n);
}

inline Json run_verify(const JobSpec& job) {
    need_args(job, 1, 64, "verify {bridge|multibranch|table1|bounds|constancy|all} ...");
    const std::string& what = job.args[0];
    if (what == "bridge") {
        need_args(job, 3, 3, "verify bridge <f> <param>");
        return verify_report_json("bridge", verify_bridge(parse_poly(job.args[1]), parse_param(job.args[2])));
    }
    if (what == "multibranch") {
        if (job.args.size() < 4 || job.args.size() % 2 != 0)
            fail(Errc::InvalidArgument, "usage: verify multibranch <f> (<param> <poly>)+");
        std::vector<std::pair<Param, BiPoly>> bs;
        for (std::size_t k = 2; k + 1 < job.args.size(); k += 2)
            bs.emplace_back(parse_param(job.args[k]), parse_poly(job.args[k + 1]));
        return verify_report_json("multibranch", verify_multibranch(parse_poly(job.args[1]), bs));
    }
    if (what == "table1") {
        need_args(job, 1, 1, "verify table1");
        return verify_report_json("table1", table1_suite());
    }
    if (what == "bounds") {
        need_args(job, 2, 2, "verify bounds <f>");
        BiPoly f = parse_poly(job.args[1]);
        auto bs = rational_branches(f, job.precision);
        if (bs.size() != 1) fail(Errc::NotIrreducible, std::to_string(bs.size()) + " branches through the origin");
        return verify_report_json("bounds", bounds_check(f, bs[0]));
    }
    if (what == "constancy") {
        need_args(job, 2, 2, "verify constancy <f>");
        auto res = constancy_probe(parse_poly(job.args[1]), parse_unsigned(job, "trials", 200),
                                   parse_unsigned(job, "seed", 1));
        Json r = verify_report_json("constancy", res.report);
        r["observed"] = res.values;
        r["observed_infinite"] = res.saw_infinite;
        return r;
    }
    if (what == "all") {
        need_args(job, 1, 1, "verify all");
        Json r{{"name", "all"}};
        Json checks = checks_json(table1_suite());
        for (const auto& e : load_corpus(job.value("corpus").value_or("corpus")))
            for (auto c : corpus_entry_report(e, job.precision)["checks"]) {
                c["id"] = e.name + "." + c["id"].get<std::string>();
                checks.push_back(c);
            }
        r["checks"] = checks;
        r["passed"] = all_pass(checks);
        return r;
    }
    fail(Errc::InvalidArgument, "unknown verify target " + what);
}

inline Json run_degree(const JobSpec& job) {
    Rat radius = parse_radius(job);
    std::string kind = job.value("kind").value_or(job.args.size() == 1 ? "inflection" : "custom");
    DegreeReport rep;
    if (kind == "custom") {
        need_args(job, 2, 2, "degree <P> <Q> [--radius r]");
        rep = winding_degree(parse_poly(job.args[0]), parse_poly(job.args[1]), radius);
    } else {
        need_args(job, 1, 1, "degree <f> --kind {inflection|vertex} [--radius r]");
        BiPoly f = parse_poly(job.args[0]);
        if (kind == "inflection") rep = inflection_degree(f, radius);
        else if (kind == "vertex") rep = vertex_degree(f, radius);
        else fail(Errc::InvalidArgument, "--kind must be inflection, vertex or custom");
    }
    return Json{{"map_kind", std::string(map_kind_name(rep.map_kind))},
                {"radius", to_string(rep.radius)},
                {"degree", rep.degree},
                {"samples_used", rep.samples_used}};
}

inline Json dispatch(const JobSpec& job) {
    std::string name = job.value("name").value_or("");
    auto named = [&](const std::string& input) { return name.empty() ? input : name; };
    switch (job.command) {
    case Command::AnalyzeImplicit:
        need_args(job, 1, 1, "analyze-implicit <f>");
        return analyze_implicit(parse_poly(job.args[0]), named(job.args[0]), job.precision);
    case Command::AnalyzeParametric:
        need_args(job, 1, 1, "analyze-parametric <param>");
        return analyze_parametric(parse_param(job.args[0]), named(job.args[0]));
    case Command::Intersect: {
        need_args(job, 2, 2, "intersect <f> <g>");
        BiPoly f = parse_poly(job.args[0]), g = parse_poly(job.args[1]);
        return Json{{"f", to_string(f)}, {"g", to_string(g)}, {"intersection", count_json(intersection_multiplicity(f, g))}};
    }
    case Command::Milnor: {
        need_args(job, 1, 1, "milnor <f>");
        BiPoly f = parse_poly(job.args[0]);
        return Json{{"input", to_string(f)}, {"milnor", count_json(milnor_certified(f))}};
    }
    case Command::ContactSet: {
        need_args(job, 1, 1, "contact-set <f>");
        BiPoly f = parse_poly(job.args[0]);
        auto bs = rational_branches(f, job.precision);
        Json r{{"input", to_string(f)}, {"contact_set", contact_set_from_branches(bs).to_string()}};
        // Closed form for branches sharing tangents, under the chosen hypotheses.
        std::map<std::string, std::vector<BranchInvariants>> groups;
        bool singular = true;
        for (const auto& b : bs) {
            if (!b.beta) singular = false;
            else groups[b.tangent.to_string()].push_back({b.m, *b.beta});
        }
        if (singular) {
            std::vector<std::vector<BranchInvariants>> gs;
            for (auto& [d, g] : groups) gs.push_back(g);
            try {
                r["closed_form"] = contact_set_shared_tangents(gs, job.flag("strict-hypotheses")).to_string();
            } catch (const Error& e) {
                r["closed_form"] = std::string(errc_name(e.code())) + ": " + e.detail();
            }
        }
        return r;
    }
    case Command::Implicitize: {
        need_args(job, 1, 1, "implicitize <param>");
        Param g = parse_param(job.args[0]);
        return Json{{"input", g.to_string()}, {"implicit", to_string(implicitize(g))}};
    }
    case Command::Branches: {
        need_args(job, 1, 1, "branches <f>");
        BiPoly f = parse_poly(job.args[0]);
        Json arr = Json::array();
        for (const auto& b : rational_branches(f, job.precision)) arr.push_back(branch_json(b));
        return Json{{"input", to_string(f)}, {"branches", arr}};
    }
    case Command::Verify: return run_verify(job);
    case Command::Degree: return run_degree(job);
    case Command::CorpusRun: {
        need_args(job, 1, 2, "corpus run [dir]");
        if (job.args[0] != "run") fail(Errc::InvalidArgument, "usage: corpus run [dir]");
        std::string dir = job.args.size() == 2 ? job.args[1] : job.value("corpus").value_or("corpus");
        Json entries = Json::array();
        bool passed = true;
        for (const auto& e : load_corpus(dir)) {
            Json r = corpus_entry_report(e, job.precision);
            passed = passed && all_pass(r["checks"]);
            entries.push_back(r);
        }
        return Json{{"entries", entries}, {"passed", passed}};
    }
    }
    fail(Errc::Internal, "unhandled command");
}

inline bool report_failed(const Json& r) {
    if (r.contains("passed") && !r["passed"].get<bool>()) return true;
    if (r.contains("checks") && !all_pass(r["checks"])) return true;
    return false;
}

} // namespace detail

/// Runs a job. Exit code 0 on success, 1 on a mathematical error or a
/// failing check, 2 on an input error.
inline RunResult run(const JobSpec& job) {
    RunResult out;
    try {
        job.validate();
        out.report = detail::dispatch(job);
        bool infinite_milnor = job.command == Command::Milnor && out.report["milnor"].contains("infinite");
        out.exit_code = detail::report_failed(out.report) || infinite_milnor ? 1 : 0;
    } catch (const Error& e) {
        out.report = Json{{"error", detail::error_json(e)}};
        out.exit_code = is_input_error(e.code()) ? 2 : 1;
    }
    if (job.output_format == OutputFormat::Json) {
        out.output = out.report.dump(2) + "\n";
    } else if (out.report.contains("error")) {
        out.output = "error: " + out.report["error"]["code"].get<std::string>() + ": " +
                     out.report["error"]["message"].get<std::string>() + "\n";
    } else if (out.report.contains("entries")) {
        for (const auto& e : out.report["entries"]) out.output += detail::render_text(e) + "\n";
        out.output += out.report["passed"].get<bool>() ? "corpus: all checks passed\n" : "corpus: FAILED\n";
    } else if (out.report.contains("branches")) {
        out.output = "input: " + out.report["input"].get<std::string>() + "\n";
        for (const auto& b : out.report["branches"]) {
            out.output += "branch m=" + std::to_string(b["m"].get<unsigned>());
            if (!b["beta"].is_null()) out.output += " beta=" + std::to_string(b["beta"].get<unsigned>());
            out.output += " tangent=" + b["tangent"].get<std::string>() + " param=" + b["param"].get<std::string>() + "\n";
        }
    } else {
        out.output = detail::render_text(out.report);
    }
    return out;
}

} // namespace curvelab
