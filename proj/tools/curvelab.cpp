#include "curvelab/cli.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
    using namespace curvelab;
    CLI::App app{"Exact local invariants of plane curve germs"};
    app.require_subcommand(1);

    JobSpec job;
    std::string corpus_dir;
    bool json = false;
    bool strict = false;
    std::optional<unsigned> precision;
    std::string radius, kind, name;
    unsigned trials = 200;
    std::uint64_t seed = 1;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--precision", precision, "series precision in [16, 4096]");
        sub->add_flag("--json", json, "JSON output");
        sub->add_option("--name", name, "report name");
    };

    std::vector<std::string> args;
    auto simple = [&](const std::string& cmd, const std::string& help, std::size_t n, const std::string& what) {
        auto* sub = app.add_subcommand(cmd, help);
        sub->add_option(what, args, what)->required()->expected(static_cast<int>(n));
        add_common(sub);
        return sub;
    };
    simple("analyze-implicit", "invariants of f(x, y) = 0 at the origin", 1, "f");
    simple("analyze-parametric", "invariants of t -> (x(t), y(t))", 1, "param");
    simple("intersect", "local intersection multiplicity", 2, "polys");
    simple("milnor", "Milnor number", 1, "f");
    auto* cs = simple("contact-set", "orders of f along smooth probes", 1, "f");
    cs->add_flag("--strict-hypotheses", strict, "strict hypotheses for the closed form");
    simple("implicitize", "implicit equation of a (t^m, y(t)) parametrization", 1, "param");
    simple("branches", "rational Puiseux branches", 1, "f");

    auto* verify = app.add_subcommand("verify", "check identities: bridge, multibranch, table1, bounds, constancy, all");
    verify->add_option("target", args, "target and its inputs")->required()->expected(1, 64);
    verify->add_option("--trials", trials, "random changes for constancy");
    verify->add_option("--seed", seed, "random seed for constancy");
    verify->add_option("--corpus", corpus_dir, "corpus directory for 'all'");
    add_common(verify);

    auto* degree = app.add_subcommand("degree", "winding degree of (P, Q), or of (f, i_f) / (f, v_f)");
    degree->add_option("polys", args, "f, or P and Q")->required()->expected(1, 2);
    degree->add_option("--radius", radius, "circle radius (rational)");
    degree->add_option("--kind", kind, "inflection, vertex or custom");
    add_common(degree);

    auto* corpus = app.add_subcommand("corpus", "run the corpus checks");
    corpus->add_option("action", args, "run [dir]")->required()->expected(1, 2);
    add_common(corpus);

    CLI11_PARSE(app, argc, argv);

    auto* sub = app.get_subcommands().front();
    try {
        job.command = parse_command(sub->get_name());
        job.precision = precision ? *precision : default_precision();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    job.args = args;
    job.output_format = json ? OutputFormat::Json : OutputFormat::Text;
    if (!name.empty()) job.flags["name"] = name;
    if (strict) job.flags["strict-hypotheses"] = "true";
    if (!radius.empty()) job.flags["radius"] = radius;
    if (!kind.empty()) job.flags["kind"] = kind;
    if (!corpus_dir.empty()) job.flags["corpus"] = corpus_dir;
    if (sub == verify) {
        job.flags["trials"] = std::to_string(trials);
        job.flags["seed"] = std::to_string(seed);
    }

    RunResult r = run(job);
    (r.exit_code == 2 ? std::cerr : std::cout) << r.output;
    return r.exit_code;
}
