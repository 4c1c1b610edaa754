// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.
#include "howe/cycles.hpp"
#include "howe/oracle.hpp"
#include "howe/theta.hpp"
#include "howe_cli/cli.hpp"
#include "howe_cli/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace howe;

namespace {

constexpr double kEnumerationLimit = 60;   // seconds
constexpr double kDescentLimit = 180;
constexpr double kVerifyLimit = 300;
constexpr int kMaxV = 4;
constexpr int kMaxVp = 6;

const SpaceType csym{Field::C, Division::C, 1}, calt{Field::C, Division::C, -1};
const SpaceType rsym{Field::R, Division::R, 1}, ralt{Field::R, Division::R, -1};

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::printf("[%s] %d. %s (%.1f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.empty() ? "" : ": ",
                o.detail.c_str());
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::vector<std::pair<FormedSpace, FormedSpace>> complex_pairs() {
    std::vector<std::pair<FormedSpace, FormedSpace>> out;
    for (const auto& v : all_spaces(kMaxV, false))
        for (const auto& vp : all_spaces(kMaxVp, false))
            if (!v.is_zero() && !vp.is_zero() && is_dual_pair(v, vp))
                out.emplace_back(v, vp);
    return out;
}

Tableau row_tableau(const FormedSpace& space, std::initializer_list<std::pair<int, int>> rows) {
    std::vector<Row> out;
    for (auto [t, m] : rows)
        out.push_back({t, FormedSpace::with_dim({Field::C, Division::C, t % 2 ? space.epsilon() : -space.epsilon()}, m)});
    return Tableau(space, out);
}

Outcome suite_outcome(const std::string& name, const cli::SuiteOptions& opts) {
    const auto rep = cli::run_suite(name, opts);
    std::string detail = std::to_string(rep.checks) + " checks";
    if (rep.skipped)
        detail += ", " + std::to_string(rep.skipped) + " samples without a defined lift";
    if (!rep.passed())
        detail += ", " + std::to_string(rep.failures) + " failures; first: " + rep.failure_details.front();
    return {rep.passed(), detail};
}

} // namespace

int main() {
    report(1, "orbit enumeration matches brute force", [] {
        const auto start = std::chrono::steady_clock::now();
        const std::vector<std::pair<FormedSpace, std::size_t>> cases{
            {FormedSpace::with_dim(calt, 2), 2},         {FormedSpace::with_dim(calt, 4), 4},
            {FormedSpace::with_dim(csym, 3), 2},         {FormedSpace::with_dim(csym, 4), 3},
            {FormedSpace::with_signature(rsym, 2, 1), 2}, {FormedSpace::with_dim(ralt, 2), 3},
        };
        Outcome o;
        for (const auto& [v, listed] : cases) {
            const auto n = enumerate_orbits(v).size();
            for (std::uint64_t seed : {1, 7, 2024})
                if (brute_force_orbit_count(v, seed) != n) {
                    o.pass = false;
                    o.detail += to_string(v) + " differs under seed " + std::to_string(seed) + "; ";
                }
            if (n != listed) {
                o.pass = false;
                o.detail += to_string(v) + " has " + std::to_string(n) + " orbits; ";
            }
        }
        const double t = seconds_since(start);
        if (t >= kEnumerationLimit) {
            o.pass = false;
            o.detail += "over the time limit";
        }
        return o;
    });

    report(2, "descent elements realize generalized descent", [] {
        const auto start = std::chrono::steady_clock::now();
        int count = 0, bad = 0;
        std::string first;
        for (const auto& [v, vp] : complex_pairs())
            for (const auto& op : enumerate_orbits(vp)) {
                if (!in_moment_image(op, v))
                    continue;
                ++count;
                const auto c = check_descent(generalized_descent(op, v));
                if (!(c.ok())) {
                    if (!bad++)
                        first = to_string(vp) + " " + to_string(op.diagram());
                }
            }
        Outcome o{bad == 0 && seconds_since(start) < kDescentLimit, std::to_string(count) + " descents"};
        if (bad)
            o.detail += ", " + std::to_string(bad) + " failures; first " + first;
        return o;
    });

    report(3, "dimension identity", [] {
        int count = 0, bad = 0;
        for (const auto& [v, vp] : complex_pairs())
            for (const auto& op : enumerate_orbits(vp)) {
                if (!in_moment_image(op, v))
                    continue;
                ++count;
                if (!verify_dimension_identity(generalized_descent(op, v)).holds())
                    ++bad;
            }
        const auto w = verify_dimension_identity(generalized_descent(
            row_tableau(FormedSpace::with_dim(csym, 4), {{3, 1}, {1, 1}}), FormedSpace::with_dim(calt, 4)));
        const bool worked = w.g_minus1 == 2 && w.gp_minus1 == 0 && w.W0 == 4 && w.ker_T == 2 && w.invariants == 1;
        std::ostringstream d;
        d << count << " pairs, worked instance " << w.g_minus1 << " + " << w.gp_minus1 << " = " << w.W0 << " - "
          << w.ker_T << "*" << w.invariants;
        return Outcome{bad == 0 && worked, d.str()};
    });

    report(4, "lift and descent coherence", [] { return suite_outcome("lift", {kMaxV, kMaxVp, 1}); });

    report(5, "stabilizer factorization", [] { return suite_outcome("stabilizer", {kMaxV, 6, 1}); });

    report(6, "cycle transport laws", [] { return suite_outcome("cycles", {kMaxV, kMaxVp, 1}); });

    report(7, "convergent range table", [] {
        Outcome o;
        const auto expect = [&](const FormedSpace& v, const Rational& value) {
            if (dim_circ(v) != value) {
                o.pass = false;
                o.detail += to_string(v) + " gives " + format_rational(dim_circ(v)) + "; ";
            }
        };
        for (int n = 1; n <= 6; ++n) {
            expect(FormedSpace::with_signature(rsym, n, 0), n - 2);
            expect(FormedSpace::with_dim(ralt, 2 * n), 2 * n);
            expect(FormedSpace::with_signature({Field::R, Division::C, 1}, n, 0), 2 * n - 1);
            expect(FormedSpace::with_signature({Field::R, Division::H, 1}, n, 0), Rational(8 * n - 1, 2));
            expect(FormedSpace::with_dim({Field::R, Division::H, -1}, n), Rational(8 * n - 3, 2));
        }
        const auto in = range_report(1, FormedSpace::with_dim(ralt, 4), FormedSpace::with_signature(rsym, 5, 0));
        const auto out = range_report(1, FormedSpace::with_dim(ralt, 4), FormedSpace::with_signature(rsym, 4, 0));
        if (!(in.in_range && in.threshold == Rational(3, 4) && !out.in_range && out.threshold == 1)) {
            o.pass = false;
            o.detail += "range reports";
        }
        return o;
    });

    report(8, "full verify run", [] {
        const auto start = std::chrono::steady_clock::now();
        std::istringstream in;
        const auto r = cli::run({"verify", "--suite", "all", "--max-dims", "4,6"}, in);
        const double t = seconds_since(start);
        Outcome o{r.exit_code == 0 && t < kVerifyLimit, "exit " + std::to_string(r.exit_code)};
        if (r.exit_code != 0)
            o.detail += "\n" + r.out;
        return o;
    });

    std::printf("%d of 8 criteria failed\n", failures);
    return failures;
}
