#include "howe_cli/cli.hpp"

#include "howe/json_io.hpp"
#include "howe_cli/suites.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace howe::cli {

namespace {

struct Options {
    std::string space, orbit, orbit_prime, target_space, cycle, suite = "all", max_dims = "4,6", nu;
    bool real = false;
    bool json = false;
    std::uint64_t seed = 1;
};

class Payloads {
public:
    explicit Payloads(std::istream& in) : in_(in) {}

    Json get(const std::string& flag, const std::string& value) {
        if (value.empty())
            throw Error(ErrorCode::MalformedInput, "missing required flag " + flag);
        std::string text = value;
        if (value == "-") {
            if (stdin_used_)
                throw Error(ErrorCode::MalformedInput, "only one payload may come from stdin");
            stdin_used_ = true;
            text.assign(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
        }
        try {
            return Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw Error(ErrorCode::MalformedInput, "invalid JSON for " + flag, e.what());
        }
    }

private:
    std::istream& in_;
    bool stdin_used_ = false;
};

std::string indent(const std::string& block, std::size_t width) {
    std::istringstream lines(block);
    std::string line, out;
    while (std::getline(lines, line))
        out += std::string(width, ' ') + line + "\n";
    return out;
}

std::string side_by_side(const std::string& left, const std::string& right, const std::string& arrow) {
    std::vector<std::string> l, r;
    std::string line;
    for (std::istringstream s(left); std::getline(s, line);)
        l.push_back(line);
    for (std::istringstream s(right); std::getline(s, line);)
        r.push_back(line);
    std::size_t width = 0;
    for (const auto& x : l)
        width = std::max(width, x.size());
    std::string out;
    for (std::size_t k = 0; k < std::max(l.size(), r.size()); ++k) {
        std::string a = k < l.size() ? l[k] : "";
        a.resize(width, ' ');
        out += a + (k == 0 ? arrow : std::string(arrow.size(), ' ')) + (k < r.size() ? r[k] : "") + "\n";
    }
    return out;
}

std::string group_line(const GroupDescriptor& g) { return g.name() + " (dim " + std::to_string(g.lie_dim()) + ")"; }

std::pair<int, int> parse_max_dims(const std::string& text) {
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos)
            throw std::invalid_argument(text);
        std::size_t used = 0;
        const int a = std::stoi(text.substr(0, comma), &used);
        const int b = std::stoi(text.substr(comma + 1));
        if (a < 1 || b < 1 || a > kDefaultBound || b > kDefaultBound)
            throw std::invalid_argument(text);
        return {a, b};
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::MalformedInput, "--max-dims expects two positive integers \"a,b\" up to " +
                                                   std::to_string(kDefaultBound),
                    text);
    }
}

// Each command fills `json` and `text`; the text is a rendering of the same data.
struct Rendered {
    Json json;
    std::string text;
    int exit_code = 0;
};

Rendered cmd_orbits(const Options& o, Payloads& p) {
    const auto v = space_from_json(p.get("--space", o.space));
    const auto orbits = enumerate_orbits(v);
    Rendered r;
    r.json = {{"space", to_json(v)}, {"orbits", Json::array()}};
    r.text = std::to_string(orbits.size()) + " orbits in " + to_string(v) + "\n";
    for (std::size_t k = 0; k < orbits.size(); ++k) {
        r.json["orbits"].push_back(to_json(orbits[k]));
        r.text += "\n#" + std::to_string(k + 1) + " " + to_string(orbits[k].diagram()) + "\n" +
                  indent(render_diagram(orbits[k]), 2);
    }
    return r;
}

Rendered cmd_descend(const Options& o, Payloads& p) {
    const auto op = tableau_from_json(p.get("--orbit-prime", o.orbit_prime));
    const auto v = space_from_json(p.get("--target-space", o.target_space));
    validate(op);
    Rendered r;
    if (o.real) {
        const auto kd = k_descent(op, v);
        r.json = {{"source", to_json(op)}, {"target", kd ? to_json(*kd) : Json(nullptr)}};
        r.text = kd ? side_by_side(render_diagram(op), render_diagram(*kd), "  ->  ")
                    : "no real descent: the required embedding fails over R\n";
        return r;
    }
    const auto dr = generalized_descent(op, v);
    r.json = to_json(dr);
    r.text = side_by_side(render_diagram(op), render_diagram(dr.target), "  ->  ") + "\nU  = " + to_string(dr.U) +
             "\nU1 = " + to_string(dr.U1) + "\nKer T = " + to_string(dr.kernel()) + "\na = " + std::to_string(dr.a) +
             ", b = " + std::to_string(dr.b) + ", s = " + std::to_string(dr.s) +
             (dr.strict ? ", strict\n" : ", not strict\n");
    return r;
}

Rendered cmd_lift(const Options& o, Payloads& p) {
    const auto orbit = tableau_from_json(p.get("--orbit", o.orbit));
    const auto vp = space_from_json(p.get("--target-space", o.target_space));
    validate(orbit);
    const auto lifted = theta_lift(orbit, vp);
    const auto candidates = lift_candidates(orbit, vp);
    Rendered r;
    r.json = {{"orbit", to_json(orbit)}, {"lift", to_json(lifted)}, {"candidates", Json::array()}};
    for (const auto& c : candidates)
        r.json["candidates"].push_back(to_json(c));
    r.text = side_by_side(render_diagram(orbit), render_diagram(lifted), "  =>  ") + "\ncandidates:";
    for (const auto& c : candidates)
        r.text += " " + to_string(c.diagram());
    r.text += "\n";
    return r;
}

Rendered cmd_stabilizer(const Options& o, Payloads& p) {
    const auto orbit = tableau_from_json(p.get("--orbit", o.orbit));
    const auto g = stabilizer(orbit);
    const int dim = orbit_dimension(orbit);
    Rendered r;
    r.json = {{"orbit", to_json(orbit)}, {"stabilizer", to_json(g)}, {"orbit_dimension", dim}};
    r.text = render_diagram(orbit) + "M_X = " + group_line(g) + "\norbit dimension = " + std::to_string(dim) + "\n";
    return r;
}

Rendered cmd_whittaker(const Options& o, Payloads& p) {
    const auto orbit = tableau_from_json(p.get("--orbit", o.orbit));
    const auto w = whittaker_datum(orbit);
    Rendered r;
    r.json = to_json(w);
    r.text = render_diagram(orbit) + "  j  dim g_j\n";
    for (auto [j, dim] : w.grading) {
        std::string js = std::to_string(j);
        r.text += std::string(3 - std::min<std::size_t>(3, js.size()), ' ') + js + "  " + std::to_string(dim) + "\n";
    }
    r.text += "dim u = " + std::to_string(w.dim_u) + ", dim n = " + std::to_string(w.dim_n) +
              ", dim g_-1 = " + std::to_string(w.dim_g_minus1) +
              (w.heisenberg_case ? " (Heisenberg case)\n" : " (character case)\n") + "M_X = " + group_line(w.stabilizer) +
              "\n";
    return r;
}

Rendered cmd_pair_factor(const Options& o, Payloads& p) {
    const auto op = tableau_from_json(p.get("--orbit-prime", o.orbit_prime));
    const auto v = space_from_json(p.get("--target-space", o.target_space));
    validate(op);
    const auto dr = generalized_descent(op, v);
    const auto pf = pair_factorization(dr);
    const auto dims = reduced_pair_dims(dr);
    Rendered r;
    r.json = {{"descent", to_json(dr)}, {"factorization", to_json(pf)}, {"reduced_pair_dims", to_json(dims)}};
    r.text = side_by_side(render_diagram(op), render_diagram(dr.target), "  ->  ") + "\nM_XX' = " +
             group_line(pf.M_XXp) + "\nL     = " + group_line(pf.L) + "  on " + to_string(pf.L_space) +
             "\nL'    = " + group_line(pf.Lp) + "  on " + to_string(pf.Lp_space) +
             "\ndim W_gamma = " + std::to_string(dims.W_gamma) + ", dim W0 = " + std::to_string(dims.W0) + "\n";
    return r;
}

Rendered cmd_cycle_lift(const Options& o, Payloads& p) {
    const auto c = cycle_from_json(p.get("--cycle", o.cycle));
    const auto op = tableau_from_json(p.get("--orbit-prime", o.orbit_prime));
    const auto vp = space_from_json(p.get("--target-space", o.target_space));
    const auto lifted = dlift_cycle(c.complex_orbit, op, c, vp);
    Rendered r;
    r.json = to_json(lifted);
    r.text = "dlift over " + to_string(c.complex_orbit.diagram()) + " -> " + to_string(op.diagram()) + " in " +
             to_string(vp) + "\n";
    if (lifted.empty())
        r.text += "  (zero cycle)\n";
    for (const auto& [orbit, m] : lifted.terms)
        r.text += "\n" + std::to_string(m) + " x\n" + indent(render_diagram(orbit), 2);
    return r;
}

Rendered cmd_range(const Options& o, Payloads& p) {
    const auto v = space_from_json(p.get("--space", o.space));
    const auto vp = space_from_json(p.get("--target-space", o.target_space));
    if (o.nu.empty())
        throw Error(ErrorCode::MalformedInput, "missing required flag --nu");
    Rational nu;
    try {
        nu = parse_rational(o.nu);
    } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::MalformedInput, "--nu expects a rational", o.nu);
    }
    const auto rr = range_report(nu, v, vp);
    Rendered r;
    r.json = to_json(rr);
    r.text = "dim circ V = " + format_rational(rr.dim_circ_V) + "\nexponent   = " + format_rational(rr.exponent) +
             "\nthreshold  = " + format_rational(rr.threshold) + "\nnu         = " + format_rational(rr.nu) + "\n" +
             (rr.in_range ? "in the convergent range\n" : "not in the convergent range\n");
    return r;
}

Rendered cmd_verify(const Options& o, Payloads&) {
    const auto [a, b] = parse_max_dims(o.max_dims);
    std::vector<std::string> suites;
    if (o.suite == "all")
        suites = suite_names();
    else if (std::find(suite_names().begin(), suite_names().end(), o.suite) != suite_names().end())
        suites = {o.suite};
    else
        throw Error(ErrorCode::MalformedInput, "unknown suite", o.suite);
    Rendered r;
    r.json = {{"max_dims", {a, b}}, {"seed", o.seed}, {"suites", Json::array()}};
    bool all_pass = true;
    for (const auto& name : suites) {
        const auto rep = run_suite(name, SuiteOptions{a, b, o.seed});
        all_pass = all_pass && rep.passed();
        r.json["suites"].push_back({{"name", rep.name},
                                    {"checks", rep.checks},
                                    {"failures", rep.failures},
                                    {"skipped", rep.skipped},
                                    {"seconds", rep.seconds},
                                    {"failure_details", rep.failure_details}});
        std::ostringstream line;
        line.precision(2);
        line << std::fixed << rep.name << ": " << rep.checks << " checks, "
             << (rep.passed() ? "all pass" : std::to_string(rep.failures) + " FAILED");
        if (rep.skipped)
            line << " (" << rep.skipped << " samples without a defined lift)";
        line << " [" << rep.seconds << " s]\n";
        for (const auto& d : rep.failure_details)
            line << "  " << d << "\n";
        r.text += line.str();
    }
    r.json["passed"] = all_pass;
    r.text += all_pass ? "all pairs pass\n" : "verification FAILED\n";
    r.exit_code = all_pass ? 0 : 2;
    return r;
}

} // namespace

Outcome run(const std::vector<std::string>& args, std::istream& in) {
    CLI::App app{"Combinatorics of nilpotent orbits, descent and theta lifts for classical dual pairs", "howe"};
    app.require_subcommand(1);
    Options o;
    const auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Emit JSON instead of text"); };

    auto* orbits = app.add_subcommand("orbits", "Enumerate nilpotent orbits of a formed space");
    orbits->add_option("--space", o.space, "FormedSpace JSON (or - for stdin)")->required();
    json_flag(orbits);

    auto* descend = app.add_subcommand("descend", "Generalized descent of an orbit to V");
    descend->add_option("--orbit-prime", o.orbit_prime, "Tableau JSON of O'")->required();
    descend->add_option("--target-space", o.target_space, "FormedSpace JSON of V")->required();
    descend->add_flag("--real", o.real, "Real descent of a real orbit (no result when it does not exist)");
    json_flag(descend);

    auto* lift = app.add_subcommand("lift", "Theta lift of a complex orbit to V'");
    lift->add_option("--orbit", o.orbit, "Tableau JSON of O")->required();
    lift->add_option("--target-space", o.target_space, "FormedSpace JSON of V'")->required();
    json_flag(lift);

    auto* stab = app.add_subcommand("stabilizer", "Reductive stabilizer M_X and orbit dimension");
    stab->add_option("--orbit", o.orbit, "Tableau JSON")->required();
    json_flag(stab);

    auto* whit = app.add_subcommand("whittaker", "Grading dimensions and Whittaker datum");
    whit->add_option("--orbit", o.orbit, "Tableau JSON")->required();
    json_flag(whit);

    auto* pf = app.add_subcommand("pair-factor", "Stabilizer factorization of a descent pair");
    pf->add_option("--orbit-prime", o.orbit_prime, "Tableau JSON of O'")->required();
    pf->add_option("--target-space", o.target_space, "FormedSpace JSON of V")->required();
    json_flag(pf);

    auto* cl = app.add_subcommand("cycle-lift", "Cycle-level lift along a strict descent pair");
    cl->add_option("--cycle", o.cycle, "Cycle JSON over O")->required();
    cl->add_option("--orbit-prime", o.orbit_prime, "Complex tableau JSON of O'")->required();
    cl->add_option("--target-space", o.target_space, "Real FormedSpace JSON of V'")->required();
    json_flag(cl);

    auto* range = app.add_subcommand("range", "Convergent-range report");
    range->add_option("--nu", o.nu, "Growth exponent (rational)")->required();
    range->add_option("--space", o.space, "FormedSpace JSON of V")->required();
    range->add_option("--target-space", o.target_space, "FormedSpace JSON of V'")->required();
    json_flag(range);

    auto* verify = app.add_subcommand("verify", "Run oracle verification suites");
    verify->add_option("--suite", o.suite, "all, orbits, tensor, descent, dim-identity, lift, stabilizer, cycles, range");
    verify->add_option("--max-dims", o.max_dims, "Bounds \"a,b\" on dim V and dim V'");
    verify->add_option("--seed", o.seed, "Seed for sampled checks");
    json_flag(verify);

    Outcome outcome;
    std::ostringstream out, err;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        outcome.exit_code = app.exit(e, out, err) == 0 ? 0 : 1;
        if (outcome.exit_code != 0)
            out << Json{{"code", "MalformedInput"}, {"message", e.what()}, {"context", ""}}.dump() << "\n";
        outcome.out = out.str();
        outcome.err = err.str();
        return outcome;
    }

    Payloads payloads(in);
    try {
        Rendered r;
        if (*orbits)
            r = cmd_orbits(o, payloads);
        else if (*descend)
            r = cmd_descend(o, payloads);
        else if (*lift)
            r = cmd_lift(o, payloads);
        else if (*stab)
            r = cmd_stabilizer(o, payloads);
        else if (*whit)
            r = cmd_whittaker(o, payloads);
        else if (*pf)
            r = cmd_pair_factor(o, payloads);
        else if (*cl)
            r = cmd_cycle_lift(o, payloads);
        else if (*range)
            r = cmd_range(o, payloads);
        else
            r = cmd_verify(o, payloads);
        out << (o.json ? r.json.dump(2) + "\n" : r.text);
        outcome.exit_code = r.exit_code;
    } catch (const Error& e) {
        out << error_json(e).dump() << "\n";
        err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        outcome.exit_code = e.code() == ErrorCode::MalformedInput ? 1 : 2;
    }
    outcome.out = out.str();
    outcome.err = err.str();
    return outcome;
}

} // namespace howe::cli
