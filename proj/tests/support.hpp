#pragma once

#include "howe/cycles.hpp"
#include "howe/error.hpp"
#include "howe/forms.hpp"
#include "howe/oracle.hpp"
#include "howe/orbits.hpp"
#include "howe/theta.hpp"

#include "doctest.h"

#include <functional>

namespace fixtures {

using namespace howe;

inline const SpaceType csym{Field::C, Division::C, 1};
inline const SpaceType calt{Field::C, Division::C, -1};
inline const SpaceType rsym{Field::R, Division::R, 1};
inline const SpaceType ralt{Field::R, Division::R, -1};

inline FormedSpace cs(int n) { return FormedSpace::with_dim(csym, n); }
inline FormedSpace ca(int n) { return FormedSpace::with_dim(calt, n); }
inline FormedSpace rs(int p, int q) { return FormedSpace::with_signature(rsym, p, q); }
inline FormedSpace ra(int n) { return FormedSpace::with_dim(ralt, n); }

// Tableau over base C with rows given as (length, multiplicity dimension).
inline Tableau ctab(const FormedSpace& space, std::initializer_list<std::pair<int, int>> rows) {
    std::vector<Row> out;
    for (auto [t, m] : rows) {
        const int eps = (t % 2 == 1) ? space.epsilon() : -space.epsilon();
        out.push_back({t, FormedSpace::with_dim({Field::C, Division::C, eps}, m)});
    }
    return Tableau(space, out);
}

inline ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a howe::Error");
    return ErrorCode::MalformedInput;
}

} // namespace fixtures
