#include "howe/cycles.hpp"

#include "howe/error.hpp"
#include "howe/theta.hpp"

#include <algorithm>

namespace howe {

long Cycle::multiplicity(const Tableau& orbit) const {
    const auto it = terms.find(orbit);
    return it == terms.end() ? 0 : it->second;
}

long Cycle::total() const {
    long sum = 0;
    for (const auto& [orbit, m] : terms)
        sum += m;
    return sum;
}

Cycle make_cycle(const Tableau& complex_orbit, const FormedSpace& real_space) {
    Cycle c{complex_orbit, real_space, {}};
    validate(c);
    return c;
}

namespace {

bool lies_over(const Tableau& orbit, const Tableau& complex_orbit) {
    try {
        return complexify(orbit) == complex_orbit;
    } catch (const Error&) {
        return false;
    }
}

void require_same_support(const Cycle& a, const Cycle& b) {
    if (!(a.complex_orbit == b.complex_orbit) || a.real_space != b.real_space)
        throw Error(ErrorCode::IncomparableSupports, "cycles live over different orbits or spaces");
}

} // namespace

void validate(const Cycle& c) {
    if (c.complex_orbit.space().base() != Field::C || !is_valid(c.complex_orbit))
        throw Error(ErrorCode::InvalidCycle, "complex orbit must be a valid tableau over C");
    if (c.real_space.base() != Field::R)
        throw Error(ErrorCode::InvalidCycle, "real space must have base R");
    if (c.real_space.division() == Division::C)
        throw Error(ErrorCode::InvalidCycle, "unitary groups are not modeled at cycle level");
    if (complexify(c.real_space) != c.complex_orbit.space())
        throw Error(ErrorCode::InvalidCycle, "real space does not complexify to the orbit's space");
    for (const auto& [orbit, m] : c.terms) {
        if (m <= 0)
            throw Error(ErrorCode::InvalidCycle, "multiplicities must be positive");
        if (orbit.space() != c.real_space || !is_valid(orbit) || !lies_over(orbit, c.complex_orbit))
            throw Error(ErrorCode::InvalidCycle, "term is not a real form of the complex orbit",
                        to_string(orbit.diagram()));
    }
}

void add_term(Cycle& c, const Tableau& orbit, long m) {
    if (m < 0)
        throw Error(ErrorCode::InvalidCycle, "negative multiplicity");
    if (orbit.space() != c.real_space || !is_valid(orbit) || !lies_over(orbit, c.complex_orbit))
        throw Error(ErrorCode::InvalidCycle, "term is not a real form of the complex orbit", to_string(orbit.diagram()));
    if (m > 0)
        c.terms[orbit] += m;
}

Cycle operator+(const Cycle& a, const Cycle& b) {
    require_same_support(a, b);
    Cycle out = a;
    for (const auto& [orbit, m] : b.terms)
        out.terms[orbit] += m;
    return out;
}

Cycle operator*(long m, const Cycle& c) {
    if (m < 0)
        throw Error(ErrorCode::InvalidCycle, "negative scalar");
    Cycle out{c.complex_orbit, c.real_space, {}};
    if (m == 0)
        return out;
    for (const auto& [orbit, k] : c.terms)
        out.terms[orbit] = m * k;
    return out;
}

std::vector<Tableau> real_forms(const Tableau& complex_orbit, const FormedSpace& real_space, int bound) {
    std::vector<Tableau> out;
    for (auto& orbit : enumerate_orbits(real_space, bound))
        if (lies_over(orbit, complex_orbit))
            out.push_back(std::move(orbit));
    return out;
}

Cycle dlift_cycle(const Tableau& o, const Tableau& op, const Cycle& c, const FormedSpace& vp_real, int bound) {
    validate(c);
    if (!(c.complex_orbit == o))
        throw Error(ErrorCode::NotDescentPair, "cycle does not live over the given orbit");
    if (vp_real.base() != Field::R || vp_real.division() == Division::C || complexify(vp_real) != op.space() ||
        !is_dual_pair(c.real_space, vp_real))
        throw Error(ErrorCode::NotDescentPair, "target space does not match the pair", to_string(vp_real));
    if (!is_dual_pair(o.space(), op.space()) || !in_moment_image(op, o.space()))
        throw Error(ErrorCode::NotDescentPair, "orbit is not in the moment image");
    const auto dr = generalized_descent(op, o.space());
    if (!(dr.target == o) || !dr.strict)
        throw Error(ErrorCode::NotDescentPair, "orbits do not form a strict descent pair",
                    to_string(op.diagram()) + " -> " + to_string(o.diagram()));
    Cycle out{op, vp_real, {}};
    for (const auto& sop : real_forms(op, vp_real, bound)) {
        const auto so = k_descent(sop, c.real_space);
        if (!so)
            continue;
        if (const long m = c.multiplicity(*so); m > 0)
            out.terms[sop] += m;
    }
    return out;
}

bool cycle_leq(const Cycle& a, const Cycle& b) {
    require_same_support(a, b);
    return std::all_of(a.terms.begin(), a.terms.end(),
                       [&](const auto& term) { return term.second <= b.multiplicity(term.first); });
}

int d1(const SpaceType& type) {
    if (type.base == Field::C)
        return type.epsilon == 1 ? 1 : 0;
    switch (type.division) {
    case Division::R: return type.epsilon == 1 ? 1 : 0;
    case Division::C: return 1;
    case Division::H: return type.epsilon == 1 ? 1 : 3;
    }
    return 0;
}

Rational dim_circ(const FormedSpace& v) {
    Rational out = Rational(v.base_dim()) - Rational(2 * d1(v.type()), v.type().d());
    out.canonicalize();
    return out;
}

RangeReport range_report(const Rational& nu, const FormedSpace& v, const FormedSpace& vp) {
    require_dual_pair(v, vp);
    RangeReport r;
    r.dim_circ_V = dim_circ(v);
    if (sgn(r.dim_circ_V) <= 0)
        throw Error(ErrorCode::NonpositiveDimCirc, "dim circ V = " + format_rational(r.dim_circ_V), to_string(v));
    r.exponent = Rational(vp.base_dim()) / r.dim_circ_V;
    r.threshold = 2 - r.exponent;
    r.nu = nu;
    r.in_range = nu > r.threshold;
    return r;
}

bool equality_hypotheses(const Tableau& op, const GroupDescriptor& g) {
    const auto cols = column_partition(op);
    if (cols.size() < 2)
        return false;
    const bool real_symplectic = std::any_of(g.factors.begin(), g.factors.end(),
                                             [](const GroupFactor& f) { return f.family == GroupFamily::SpR; });
    return !real_symplectic || cols[0] > cols[1];
}

} // namespace howe
