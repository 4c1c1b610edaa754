#include "howe_cli/suites.hpp"

#include "howe/cycles.hpp"
#include "howe/error.hpp"
#include "howe/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

namespace howe::cli {

namespace {

constexpr std::size_t kMaxDetails = 8;
constexpr int kSamplesPerPair = 200;

class Tally {
public:
    explicit Tally(SuiteReport& r) : r_(r) {}

    void check(bool ok, const std::function<std::string()>& detail) {
        ++r_.checks;
        if (ok)
            return;
        ++r_.failures;
        if (r_.failure_details.size() < kMaxDetails)
            r_.failure_details.push_back(detail());
    }
    void skip() { ++r_.skipped; }

private:
    SuiteReport& r_;
};

std::string pair_label(const FormedSpace& v, const FormedSpace& vp) { return to_string(v) + " x " + to_string(vp); }

std::vector<std::pair<FormedSpace, FormedSpace>> dual_pairs(const SuiteOptions& o, bool include_real) {
    std::vector<std::pair<FormedSpace, FormedSpace>> out;
    const auto vs = all_spaces(o.max_v, include_real);
    const auto vps = all_spaces(o.max_vp, include_real);
    for (const auto& v : vs)
        for (const auto& vp : vps)
            if (is_dual_pair(v, vp))
                out.emplace_back(v, vp);
    return out;
}

void suite_orbits(const SuiteOptions& o, Tally& t) {
    const auto counted = [&](const FormedSpace& v) {
        const auto orbits = enumerate_orbits(v);
        const auto brute = brute_force_orbit_count(v, o.seed);
        t.check(orbits.size() == brute, [&] {
            return to_string(v) + ": enumerated " + std::to_string(orbits.size()) + ", oracle " + std::to_string(brute);
        });
    };
    for (const auto& v : all_spaces(o.max_vp, false))
        counted(v);
    for (const auto& v : all_spaces(std::min(o.max_vp, 4), true))
        if (v.base() == Field::R && v.division() == Division::R)
            counted(v);
    for (const auto& v : all_spaces(o.max_vp, true)) {
        const auto orbits = enumerate_orbits(v);
        for (std::size_t k = 0; k < orbits.size(); ++k) {
            t.check(is_valid(orbits[k]), [&] { return to_string(v) + ": invalid " + to_string(orbits[k].diagram()); });
            if (k > 0)
                t.check(canonical_less(orbits[k - 1], orbits[k]),
                        [&] { return to_string(v) + ": order or duplicate at " + std::to_string(k); });
        }
        if (v.base() == Field::R && v.division() != Division::C) {
            const auto complex = enumerate_orbits(complexify(v));
            for (const auto& orbit : orbits) {
                const Tableau c = complexify(orbit);
                t.check(std::find(complex.begin(), complex.end(), c) != complex.end(),
                        [&] { return to_string(v) + ": complexification of " + to_string(orbit.diagram()); });
            }
        }
    }
}

void suite_tensor(const SuiteOptions&, Tally& t) {
    for (const auto& a : all_spaces(8, true))
        for (int m = 1; a.base_dim() * m <= 8; ++m) {
            const auto expected = tensor_with_sl2(a, m);
            const auto got = read_space(tensor_model(model_of(a), m));
            t.check(got == expected, [&] {
                return to_string(a) + " (x) F^" + std::to_string(m) + ": oracle " + to_string(got) + ", table " +
                       to_string(expected);
            });
        }
}

void suite_descent(const SuiteOptions& o, Tally& t) {
    for (const auto& [v, vp] : dual_pairs(o, true)) {
        const auto orbits = enumerate_orbits(vp);
        for (const auto& op : orbits) {
            const bool image = in_moment_image(op, v);
            if (v.base() == Field::C)
                for (const auto& lower : orbits)
                    if (closure_leq(lower, op) && image)
                        t.check(in_moment_image(lower, v), [&] {
                            return pair_label(v, vp) + ": moment image not closed below " + to_string(op.diagram());
                        });
            if (!image)
                continue;
            const auto dr = generalized_descent(op, v);
            const auto c = check_descent(dr);
            t.check(c.ok(), [&] {
                return pair_label(v, vp) + ": " + to_string(op.diagram()) + " -> " + to_string(dr.target.diagram()) +
                       " oracle gave " + to_string(c.phi.diagram());
            });
            if (v.base() == Field::R) {
                const auto kd = k_descent(op, v);
                t.check(kd && *kd == dr.target && kd->diagram() == dr.target.diagram(),
                        [&] { return pair_label(v, vp) + ": real descent disagrees with generalized descent"; });
                if (kd && v.division() != Division::C)
                    t.check(enumerate_orbits(complexify(v)).size() > 0 &&
                                std::ranges::count(enumerate_orbits(complexify(v)), complexify(*kd)) == 1,
                            [&] { return pair_label(v, vp) + ": complexified real descent is not a complex orbit"; });
            }
        }
    }
}

void suite_dim_identity(const SuiteOptions& o, Tally& t) {
    for (const auto& [v, vp] : dual_pairs(o, true))
        for (const auto& op : enumerate_orbits(vp)) {
            if (!in_moment_image(op, v))
                continue;
            const auto dr = generalized_descent(op, v);
            try {
                const auto r = verify_dimension_identity(dr);
                const auto combinatorial = reduced_pair_dims(dr);
                t.check(combinatorial.W0 == r.W0 && combinatorial.W_gamma == r.d * r.ker_T * r.invariants,
                        [&] { return pair_label(v, vp) + ": weight count disagrees with matrices"; });
            } catch (const Error& e) {
                t.check(false, [&] { return pair_label(v, vp) + ": " + e.what() + " at " + e.context(); });
            }
        }
}

void suite_lift(const SuiteOptions& o, Tally& t) {
    Sampler rng(o.seed);
    for (const auto& [v, vp] : dual_pairs(o, false)) {
        std::map<Tableau, std::optional<Tableau>, CanonicalLess> lifts;
        const auto lift_of = [&](const Tableau& orbit) -> const std::optional<Tableau>& {
            auto it = lifts.find(orbit);
            if (it == lifts.end()) {
                std::optional<Tableau> l;
                try {
                    l = theta_lift(orbit, vp);
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::EmptyLift && e.code() != ErrorCode::AmbiguousMaximum)
                        throw;
                }
                it = lifts.emplace(orbit, l).first;
            }
            return it->second;
        };
        std::vector<DescentRealization> realizations;
        for (const auto& op : enumerate_orbits(vp)) {
            if (!in_moment_image(op, v))
                continue;
            const auto dr = generalized_descent(op, v);
            realizations.push_back(construct_descent_element(op, v));
            const auto& l = lift_of(dr.target);
            t.check(l && closure_leq(op, *l), [&] {
                return pair_label(v, vp) + ": lift of the descent of " + to_string(op.diagram()) + " misses it";
            });
            if (dr.strict)
                t.check(l && *l == op, [&] {
                    return pair_label(v, vp) + ": strict descent of " + to_string(op.diagram()) + " lifts to " +
                           (l ? to_string(l->diagram()) : std::string("nothing"));
                });
        }
        std::vector<std::pair<LieAlgebra, LieAlgebra>> algebras;
        for (const auto& r : realizations)
            algebras.emplace_back(LieAlgebra(r.v), LieAlgebra(r.source.model));
        for (int s = 0; s < kSamplesPerPair; ++s) {
            const std::size_t k = rng.index(realizations.size());
            const auto& r = realizations[k];
            const auto& [g, gp] = algebras[k];
            Matrix T = random_null_cone_element(r.v, r.H, r.source.model, r.source.H, rng);
            T = random_isometry(gp, rng) * T * inverse(random_isometry(g, rng));
            const auto [x, xp] = moment_maps(T, r.v, r.source.model);
            const Tableau orbit = identify(x, g);
            const Tableau orbit_prime = identify(xp, gp);
            const auto& l = lift_of(orbit);
            if (!l) {
                t.skip();
                continue;
            }
            t.check(closure_leq(orbit_prime, *l), [&] {
                return pair_label(v, vp) + ": sample " + std::to_string(s) + " gives " +
                       to_string(orbit_prime.diagram()) + " outside the lift " + to_string(l->diagram());
            });
        }
    }
}

void suite_stabilizer(const SuiteOptions& o, Tally& t) {
    for (const auto& v : all_spaces(o.max_vp, true))
        for (const auto& orbit : enumerate_orbits(v)) {
            const auto real = realize_triple(orbit);
            const LieAlgebra g(real.model);
            const int combinatorial = stabilizer(orbit).lie_dim();
            const int oracle = triple_centralizer_dim(real.X, real.H, g);
            t.check(combinatorial == oracle, [&] {
                return to_string(v) + " " + to_string(orbit.diagram()) + ": stabilizer " + std::to_string(combinatorial) +
                       ", centralizer " + std::to_string(oracle);
            });
            const auto w = whittaker_datum(orbit);
            int total = 0;
            bool symmetric = true;
            for (auto [j, dim] : w.grading) {
                total += dim;
                symmetric = symmetric && w.grading.count(-j) && w.grading.at(-j) == dim;
            }
            t.check(total == static_cast<int>(g.dim()) && symmetric && w.dim_g_minus1 % 2 == 0,
                    [&] { return to_string(v) + " " + to_string(orbit.diagram()) + ": grading invariants"; });
        }
    for (const auto& [v, vp] : dual_pairs(o, true))
        for (const auto& op : enumerate_orbits(vp)) {
            if (!in_moment_image(op, v))
                continue;
            const auto dr = generalized_descent(op, v);
            const auto pf = pair_factorization(dr);
            t.check(stabilizer(op).lie_dim() == pf.M_XXp.lie_dim() + pf.Lp.lie_dim() &&
                        stabilizer(dr.target).lie_dim() >= pf.M_XXp.lie_dim() + pf.L.lie_dim() &&
                        is_dual_pair(pf.L_space, pf.Lp_space),
                    [&] { return pair_label(v, vp) + ": factorization of " + to_string(op.diagram()); });
        }
}

Cycle random_cycle(const Tableau& complex_orbit, const FormedSpace& real_space, const std::vector<Tableau>& forms,
                   Sampler& rng) {
    Cycle c = make_cycle(complex_orbit, real_space);
    for (const auto& f : forms)
        add_term(c, f, rng.index(10));
    return c;
}

void suite_cycles(const SuiteOptions& o, Tally& t) {
    struct PairData {
        FormedSpace v, vp;
        Tableau o, op;
    };
    const SpaceType sym{Field::R, Division::R, 1}, alt{Field::R, Division::R, -1};
    const SpaceType csym{Field::C, Division::C, 1}, calt{Field::C, Division::C, -1};
    const auto row = [](int t, FormedSpace m) { return Row{t, m}; };
    const std::vector<PairData> pairs{
        {FormedSpace::with_dim(alt, 2), FormedSpace::with_signature(sym, 2, 1),
         Tableau(FormedSpace::with_dim(calt, 2), {row(2, FormedSpace::with_dim(csym, 1))}),
         Tableau(FormedSpace::with_dim(csym, 3), {row(3, FormedSpace::with_dim(csym, 1))})},
        {FormedSpace::with_signature(sym, 2, 1), FormedSpace::with_dim(alt, 4),
         Tableau(FormedSpace::with_dim(csym, 3), {row(3, FormedSpace::with_dim(csym, 1))}),
         Tableau(FormedSpace::with_dim(calt, 4), {row(4, FormedSpace::with_dim(csym, 1))})},
    };
    Sampler rng(o.seed);
    for (const auto& p : pairs) {
        const auto forms = real_forms(p.o, p.v);
        const auto lift = [&](const Cycle& c) { return dlift_cycle(p.o, p.op, c, p.vp); };
        for (int s = 0; s < 60; ++s) {
            const Cycle c1 = random_cycle(p.o, p.v, forms, rng);
            const Cycle c2 = random_cycle(p.o, p.v, forms, rng);
            const long m = static_cast<long>(rng.index(5));
            const auto l1 = lift(c1), l2 = lift(c2), l12 = lift(c1 + c2);
            const std::string where = to_string(p.v) + " sample " + std::to_string(s);
            t.check(l12 == l1 + l2, [&] { return where + ": not additive"; });
            t.check(lift(m * c1) == m * l1, [&] { return where + ": not homogeneous"; });
            t.check(cycle_leq(l1, l12), [&] { return where + ": not monotone"; });
            if (cycle_leq(c1, c2))
                t.check(cycle_leq(l1, l2), [&] { return where + ": not monotone on comparable pair"; });
            t.check(l1.total() <= c1.total(), [&] { return where + ": multiplicity created"; });
            t.check(cycle_leq(c1, c1) && (!(cycle_leq(c1, c2) && cycle_leq(c2, c1)) || c1 == c2),
                    [&] { return where + ": order axioms"; });
        }
    }
    // the forward pair's worked instance
    const auto& p = pairs.front();
    Cycle c = make_cycle(p.o, p.v);
    add_term(c, Tableau(p.v, {row(2, FormedSpace::with_signature(sym, 1, 0))}), 2);
    add_term(c, Tableau(p.v, {row(2, FormedSpace::with_signature(sym, 0, 1))}), 5);
    Cycle expected = make_cycle(p.op, p.vp);
    add_term(expected, Tableau(p.vp, {row(3, FormedSpace::with_signature(sym, 1, 0))}), 2);
    t.check(dlift_cycle(p.o, p.op, c, p.vp) == expected, [] { return "worked instance of the forward pair"; });
}

void suite_range(const SuiteOptions&, Tally& t) {
    for (const auto& v : all_spaces(12, true)) {
        if (v.base() != Field::R)
            continue;
        const int n = v.dim();
        Rational expected;
        switch (v.division()) {
        case Division::R: expected = v.epsilon() == 1 ? n - 2 : n; break;
        case Division::C: expected = 2 * n - 1; break;
        case Division::H: expected = v.epsilon() == 1 ? Rational(8 * n - 1, 2) : Rational(8 * n - 3, 2); break;
        }
        expected.canonicalize();
        t.check(dim_circ(v) == expected, [&] { return to_string(v) + ": dim circ " + format_rational(dim_circ(v)); });
    }
    const SpaceType sym{Field::R, Division::R, 1}, alt{Field::R, Division::R, -1};
    const auto r5 = range_report(1, FormedSpace::with_dim(alt, 4), FormedSpace::with_signature(sym, 5, 0));
    const auto r4 = range_report(1, FormedSpace::with_dim(alt, 4), FormedSpace::with_signature(sym, 4, 0));
    t.check(r5.in_range && r5.threshold == Rational(3, 4), [] { return "sympl 4 / orth 5 should be in range"; });
    t.check(!r4.in_range && r4.threshold == 1, [] { return "sympl 4 / orth 4 should be out of range"; });
    Rational last = 3;
    for (int k = 1; k <= 8; ++k) {
        const auto r = range_report(1, FormedSpace::with_dim(alt, 4), FormedSpace::with_signature(sym, k, 0));
        t.check(r.threshold < last, [&] { return "threshold not decreasing at dim V' = " + std::to_string(k); });
        last = r.threshold;
    }
}

using SuiteFn = void (*)(const SuiteOptions&, Tally&);

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> r{
        {"orbits", suite_orbits},         {"tensor", suite_tensor}, {"descent", suite_descent},
        {"dim-identity", suite_dim_identity}, {"lift", suite_lift},     {"stabilizer", suite_stabilizer},
        {"cycles", suite_cycles},         {"range", suite_range},
    };
    return r;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"orbits", "tensor",     "descent", "dim-identity",
                                                "lift",   "stabilizer", "cycles",  "range"};
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
    const auto it = registry().find(name);
    if (it == registry().end())
        throw std::invalid_argument("unknown suite: " + name);
    SuiteReport report;
    report.name = name;
    Tally tally(report);
    const auto start = std::chrono::steady_clock::now();
    try {
        it->second(options, tally);
    } catch (const Error& e) {
        tally.check(false, [&] { return std::string("unexpected ") + std::string(to_string(e.code())) + ": " + e.what(); });
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace howe::cli
