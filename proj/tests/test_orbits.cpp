#include "support.hpp"

#include <algorithm>

using namespace fixtures;

namespace {

std::vector<std::vector<int>> diagrams(const std::vector<Tableau>& orbits) {
    std::vector<std::vector<int>> out;
    for (const auto& o : orbits)
        out.push_back(o.diagram());
    return out;
}

} // namespace

TEST_CASE("validate") {
    CHECK_NOTHROW(validate(Tableau(rs(2, 1), {{3, rs(1, 0)}})));
    CHECK(code_of([] { validate(Tableau(rs(2, 1), {{3, rs(0, 1)}})); }) == ErrorCode::NotAdmissible);
    CHECK(code_of([] { validate(Tableau(ca(4), {{2, cs(1)}, {2, cs(1)}})); }) == ErrorCode::BadShape);
    CHECK(code_of([] { validate(Tableau(ca(2), {{2, ca(2)}})); }) == ErrorCode::BadSign);
}

TEST_CASE("enumeration on the listed spaces") {
    const auto sp4 = enumerate_orbits(ca(4));
    CHECK(diagrams(sp4) == std::vector<std::vector<int>>{{4}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(diagrams(enumerate_orbits(cs(3))) == std::vector<std::vector<int>>{{3}, {1, 1, 1}});
    const auto o21 = enumerate_orbits(rs(2, 1));
    REQUIRE(o21.size() == 2);
    CHECK(std::ranges::count(o21, Tableau(rs(2, 1), {{3, rs(1, 0)}})) == 1);
    CHECK(std::ranges::count(o21, zero_orbit(rs(2, 1))) == 1);
}

TEST_CASE("enumeration agrees with the brute force oracle") {
    for (const auto& v : {ca(2), ca(4), cs(3), cs(4), rs(2, 1), ra(2), cs(2), rs(1, 1)}) {
        CAPTURE(to_string(v));
        CHECK(enumerate_orbits(v).size() == brute_force_orbit_count(v, 1));
    }
}

TEST_CASE("enumerated tableaux are valid, distinct and sorted") {
    for (const auto& v : all_spaces(6)) {
        CAPTURE(to_string(v));
        const auto orbits = enumerate_orbits(v);
        REQUIRE_FALSE(orbits.empty());
        for (const auto& o : orbits)
            CHECK(is_valid(o));
        CHECK(std::ranges::is_sorted(orbits, CanonicalLess{}));
        CHECK(std::ranges::adjacent_find(orbits) == orbits.end());
        CHECK(std::ranges::count(orbits, zero_orbit(v)) == 1);
    }
}

TEST_CASE("enumeration bound") {
    CHECK(code_of([] { enumerate_orbits(ca(14)); }) == ErrorCode::BoundExceeded);
}

TEST_CASE("stabilizers") {
    const auto s = stabilizer(ctab(ca(4), {{2, 1}, {1, 2}}));
    CHECK(s.name() == "O(1,C) x Sp(2,C)");
    CHECK(s.lie_dim() == 3);
    CHECK(stabilizer(zero_orbit(rs(2, 1))) == isometry_group(rs(2, 1)));
    CHECK(stabilizer(Tableau(ra(2), {{2, rs(1, 0)}})).name() == "O(1)");
}

TEST_CASE("stabilizer dimension equals the oracle triple centralizer") {
    for (const auto& v : all_spaces(5))
        for (const auto& o : enumerate_orbits(v)) {
            CAPTURE(to_string(o.diagram()));
            const auto r = realize_triple(o);
            const LieAlgebra g(r.model);
            CHECK(stabilizer(o).lie_dim() == triple_centralizer_dim(r.X, r.H, g));
            CHECK(orbit_dimension(o) == static_cast<int>(g.dim()) - centralizer_dim(r.X, g));
        }
}

TEST_CASE("orbit dimensions") {
    CHECK(orbit_dimension(ctab(ca(2), {{2, 1}})) == 2);
    CHECK(orbit_dimension(zero_orbit(rs(3, 2))) == 0);
    CHECK(orbit_dimension(ctab(ca(4), {{2, 1}, {1, 2}})) == 4);
}

TEST_CASE("closure order") {
    const auto a = ctab(ca(4), {{2, 1}, {1, 2}});
    const auto b = ctab(ca(4), {{2, 2}});
    CHECK(closure_leq(a, b));
    CHECK_FALSE(closure_leq(b, a));
    CHECK(closure_leq(a, a));
}

TEST_CASE("closure order is a partial order compatible with dimension") {
    for (const auto& v : all_spaces(6, false)) {
        const auto orbits = enumerate_orbits(v);
        for (const auto& a : orbits)
            for (const auto& b : orbits) {
                if (!closure_leq(a, b))
                    continue;
                CHECK(orbit_dimension(a) <= orbit_dimension(b));
                if (closure_leq(b, a))
                    CHECK(a == b);
                for (const auto& c : orbits)
                    if (closure_leq(b, c))
                        CHECK(closure_leq(a, c));
            }
    }
}

TEST_CASE("column partitions and conjugation") {
    CHECK(column_partition(ctab(cs(4), {{3, 1}, {1, 1}})) == std::vector<int>{2, 1, 1});
    CHECK(column_partition(ctab(ca(4), {{2, 2}})) == std::vector<int>{2, 2});
    CHECK(column_partition(zero_orbit(cs(4))) == std::vector<int>{4});
    for (const auto& v : all_spaces(6, false))
        for (const auto& o : enumerate_orbits(v))
            CHECK(conjugate_partition(column_partition(o)) == o.diagram());
}

TEST_CASE("dominance") {
    CHECK(dominates({3, 1}, {2, 2}));
    CHECK(dominates({2, 2}, {2, 1, 1}));
    CHECK_FALSE(dominates({2, 2}, {3, 1}));
    CHECK_FALSE(dominates({3, 3}, {4, 1, 1}));
    CHECK_FALSE(dominates({4, 1, 1}, {3, 3}));
}

TEST_CASE("Whittaker data") {
    const auto nonzero = [](std::map<int, int> m) {
        std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
        return m;
    };
    const auto w2 = whittaker_datum(ctab(ca(2), {{2, 1}}));
    CHECK(nonzero(w2.grading) == std::map<int, int>{{-2, 1}, {0, 1}, {2, 1}});
    CHECK_FALSE(w2.heisenberg_case);
    const auto w211 = whittaker_datum(ctab(ca(4), {{2, 1}, {1, 2}}));
    CHECK(nonzero(w211.grading) == std::map<int, int>{{-2, 1}, {-1, 2}, {0, 4}, {1, 2}, {2, 1}});
    CHECK(w211.dim_g_minus1 == 2);
    CHECK(w211.heisenberg_case);
    const auto w3 = whittaker_datum(ctab(cs(3), {{3, 1}}));
    CHECK(w3.grading.at(2) == 1);
    CHECK(w3.grading.at(0) == 1);
    CHECK(nonzero(w3.grading).count(-1) == 0);
    CHECK_FALSE(w3.heisenberg_case);
}

TEST_CASE("Whittaker grading matches the oracle") {
    for (const auto& v : all_spaces(5))
        for (const auto& o : enumerate_orbits(v)) {
            const auto r = realize_triple(o);
            const auto oracle = grading_dims(r.H, LieAlgebra(r.model));
            auto w = whittaker_datum(o).grading;
            std::erase_if(w, [](const auto& kv) { return kv.second == 0; });
            auto expected = oracle;
            std::erase_if(expected, [](const auto& kv) { return kv.second == 0; });
            CHECK(w == expected);
        }
}

TEST_CASE("complexification keeps the diagram") {
    for (const auto& v : all_spaces(6))
        if (v.base() == Field::R && v.division() != Division::C)
            for (const auto& o : enumerate_orbits(v)) {
                // a quaternionic row of multiplicity m becomes a complex row of multiplicity 2m
                std::vector<int> expected;
                for (int t : o.diagram())
                    expected.insert(expected.end(), v.division() == Division::H ? 2 : 1, t);
                const auto c = complexify(o);
                CHECK(c.diagram() == expected);
                CHECK(is_valid(c));
            }
}

TEST_CASE("rendering") {
    CHECK(render_diagram(Tableau(rs(2, 1), {{3, rs(1, 0)}})) == "###  [(1,0)]\n");
}
