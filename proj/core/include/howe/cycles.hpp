#pragma once

#include "howe/matrix.hpp"
#include "howe/orbits.hpp"

#include <map>

namespace howe {

/// Formal non-negative combination of real orbits lying over one complex orbit.
struct Cycle {
    Tableau complex_orbit;
    FormedSpace real_space;
    std::map<Tableau, long, CanonicalLess> terms; // zero multiplicities are never stored

    long multiplicity(const Tableau& orbit) const;
    long total() const;
    bool empty() const { return terms.empty(); }

    friend bool operator==(const Cycle& a, const Cycle& b) {
        return a.complex_orbit == b.complex_orbit && a.real_space == b.real_space && a.terms == b.terms;
    }
};

Cycle make_cycle(const Tableau& complex_orbit, const FormedSpace& real_space);

/// Throws InvalidCycle.
void validate(const Cycle& c);

/// Adds m >= 0 copies of a real orbit. Throws InvalidCycle.
void add_term(Cycle& c, const Tableau& orbit, long m);

/// Throws IncomparableSupports when the ambient data differ.
Cycle operator+(const Cycle& a, const Cycle& b);
Cycle operator*(long m, const Cycle& c);

/// Real orbits over `complex_orbit` in `real_space`, in canonical order.
std::vector<Tableau> real_forms(const Tableau& complex_orbit, const FormedSpace& real_space, int bound = kDefaultBound);

/// Cycle-level lift along a strict descent pair (O, O'): multiplicities move from each real descent
/// sO to the real orbit sO' over O' in Vp_real that descends to it. Throws NotDescentPair.
Cycle dlift_cycle(const Tableau& o, const Tableau& op, const Cycle& c, const FormedSpace& vp_real,
                  int bound = kDefaultBound);

/// Componentwise order. Throws IncomparableSupports.
bool cycle_leq(const Cycle& a, const Cycle& b);

/// dim_F {t in D : conj(t) = epsilon t}.
int d1(const SpaceType& type);
Rational dim_circ(const FormedSpace& v);

struct RangeReport {
    Rational dim_circ_V;
    Rational exponent;
    Rational threshold;
    Rational nu;
    bool in_range = false;
};

/// Throws NonpositiveDimCirc or IncompatiblePair.
RangeReport range_report(const Rational& nu, const FormedSpace& v, const FormedSpace& vp);

/// k >= 1 for the column partition [c_0, ..., c_k] of O', and c_0 > c_1 when G is a real symplectic group.
bool equality_hypotheses(const Tableau& op, const GroupDescriptor& g);

} // namespace howe
