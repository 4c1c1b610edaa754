#include "support.hpp"

using namespace fixtures;

namespace {

struct Pair {
    FormedSpace v, vp;
    Tableau o, op;
};

Pair forward() { return {ra(2), rs(2, 1), ctab(ca(2), {{2, 1}}), ctab(cs(3), {{3, 1}})}; }
Pair reversed() { return {rs(2, 1), ra(4), ctab(cs(3), {{3, 1}}), ctab(ca(4), {{4, 1}})}; }

Cycle cycle_of(const Pair& p, std::initializer_list<std::pair<Tableau, long>> terms) {
    Cycle c = make_cycle(p.o, p.v);
    for (const auto& [t, m] : terms)
        add_term(c, t, m);
    return c;
}

Cycle random_cycle(const Pair& p, Sampler& rng) {
    Cycle c = make_cycle(p.o, p.v);
    for (const auto& f : real_forms(p.o, p.v))
        add_term(c, f, static_cast<long>(rng.index(8)));
    return c;
}

} // namespace

TEST_CASE("real forms") {
    const auto forms = real_forms(ctab(ca(2), {{2, 1}}), ra(2));
    CHECK(forms.size() == 2);
    for (const auto& f : forms)
        CHECK(f.diagram() == std::vector<int>{2});
    CHECK(real_forms(ctab(cs(3), {{3, 1}}), rs(2, 1)).size() == 1);
}

TEST_CASE("cycle validation") {
    const auto p = forward();
    Cycle c = make_cycle(p.o, p.v);
    CHECK(code_of([&] { add_term(c, zero_orbit(p.v), 1); }) == ErrorCode::InvalidCycle);
    CHECK(code_of([&] { add_term(c, Tableau(p.v, {{2, rs(1, 0)}}), -1); }) == ErrorCode::InvalidCycle);
    add_term(c, Tableau(p.v, {{2, rs(1, 0)}}), 0);
    CHECK(c.empty());
}

TEST_CASE("worked cycle lift") {
    const auto p = forward();
    const Tableau plus(p.v, {{2, rs(1, 0)}}), minus(p.v, {{2, rs(0, 1)}});
    const Cycle c = cycle_of(p, {{plus, 2}, {minus, 5}});
    const Cycle lifted = dlift_cycle(p.o, p.op, c, p.vp);
    Cycle expected = make_cycle(p.op, p.vp);
    add_term(expected, Tableau(p.vp, {{3, rs(1, 0)}}), 2);
    CHECK(lifted == expected);
    CHECK(dlift_cycle(p.o, p.op, make_cycle(p.o, p.v), p.vp).empty());
    CHECK(dlift_cycle(p.o, p.op, cycle_of(p, {{minus, 3}}), p.vp).empty());
}

TEST_CASE("cycle lift needs a strict descent pair") {
    const auto p = forward();
    CHECK(code_of([&] { dlift_cycle(p.o, ctab(cs(3), {{1, 3}}), make_cycle(p.o, p.v), p.vp); }) ==
          ErrorCode::NotDescentPair);
}

TEST_CASE("cycle order") {
    const auto p = forward();
    const Tableau plus(p.v, {{2, rs(1, 0)}}), minus(p.v, {{2, rs(0, 1)}});
    const auto c12 = cycle_of(p, {{plus, 1}, {minus, 2}});
    const auto c22 = cycle_of(p, {{plus, 2}, {minus, 2}});
    const auto c21 = cycle_of(p, {{plus, 2}, {minus, 1}});
    CHECK(cycle_leq(c12, c22));
    CHECK_FALSE(cycle_leq(c21, c12));
    CHECK_FALSE(cycle_leq(c12, c21));
    CHECK(cycle_leq(c12, c12));
    const auto other = make_cycle(p.op, p.vp);
    CHECK(code_of([&] { cycle_leq(c12, other); }) == ErrorCode::IncomparableSupports);
}

TEST_CASE("cycle lift laws on random cycles") {
    for (const auto& p : {forward(), reversed()}) {
        Sampler rng(7);
        const auto lift = [&](const Cycle& c) { return dlift_cycle(p.o, p.op, c, p.vp); };
        for (int s = 0; s < 60; ++s) {
            const Cycle a = random_cycle(p, rng), b = random_cycle(p, rng);
            const long m = static_cast<long>(rng.index(6));
            CHECK(lift(a + b) == lift(a) + lift(b));
            CHECK(lift(m * a) == m * lift(a));
            CHECK(lift(a).total() <= a.total());
            if (cycle_leq(a, b))
                CHECK(cycle_leq(lift(a), lift(b)));
            CHECK(cycle_leq(lift(a), lift(a + b)));
            if (cycle_leq(a, b) && cycle_leq(b, a))
                CHECK(a == b);
        }
    }
}

TEST_CASE("d1 table") {
    CHECK(d1(rsym) == 1);
    CHECK(d1(ralt) == 0);
    CHECK(d1({Field::R, Division::C, 1}) == 1);
    CHECK(d1({Field::R, Division::C, -1}) == 1);
    CHECK(d1({Field::R, Division::H, 1}) == 1);
    CHECK(d1({Field::R, Division::H, -1}) == 3);
}

TEST_CASE("dim circ") {
    CHECK(dim_circ(rs(3, 2)) == 3);
    CHECK(dim_circ(ra(6)) == 6);
    CHECK(dim_circ(FormedSpace::with_dim({Field::R, Division::H, -1}, 2)) == Rational(13, 2));
    CHECK(dim_circ(FormedSpace::with_signature({Field::R, Division::C, 1}, 1, 1)) == 3);
    CHECK(dim_circ(FormedSpace::with_signature({Field::R, Division::H, 1}, 1, 0)) == Rational(7, 2));
}

TEST_CASE("range report") {
    const auto in = range_report(1, ra(4), rs(5, 0));
    CHECK(in.threshold == Rational(3, 4));
    CHECK(in.in_range);
    const auto out = range_report(1, ra(4), rs(4, 0));
    CHECK(out.threshold == 1);
    CHECK_FALSE(out.in_range);
    CHECK(code_of([] { range_report(1, ra(4), ra(4)); }) == ErrorCode::IncompatiblePair);
    CHECK(code_of([] { range_report(1, rs(2, 0), ra(4)); }) == ErrorCode::NonpositiveDimCirc);
}

TEST_CASE("threshold decreases as V' grows") {
    for (int n = 2; n <= 8; n += 2) {
        Rational last = range_report(0, ra(n), rs(1, 0)).threshold;
        for (int m = 2; m <= 12; ++m) {
            const Rational t = range_report(0, ra(n), rs(m, 0)).threshold;
            CHECK(t < last);
            last = t;
        }
    }
}

TEST_CASE("equality hypotheses") {
    const auto sp = isometry_group(ra(4));
    CHECK(equality_hypotheses(ctab(cs(4), {{3, 1}, {1, 1}}), sp));
    CHECK_FALSE(equality_hypotheses(ctab(ca(4), {{2, 2}}), sp));
    CHECK_FALSE(equality_hypotheses(zero_orbit(ca(4)), sp));
}
