#include "howe/theta.hpp"

#include "howe/error.hpp"

#include <algorithm>

namespace howe {

bool is_dual_pair(const FormedSpace& v, const FormedSpace& vp) {
    return v.base() == vp.base() && v.division() == vp.division() && v.epsilon() * vp.epsilon() == -1;
}

void require_dual_pair(const FormedSpace& v, const FormedSpace& vp) {
    if (!is_dual_pair(v, vp))
        throw Error(ErrorCode::IncompatiblePair, "spaces do not form a type I dual pair",
                    to_string(v) + " / " + to_string(vp));
}

int descent_form_sign(int r) { return -sl2_form_scale(r) * sl2_form_scale(r + 1); }

namespace {

struct DescentParts {
    std::vector<Row> rows; // rows of O of length >= 2
    FormedSpace embedded;  // sum of mult (x) F^t over those rows
    FormedSpace u1;
    int s = 0;
};

DescentParts split_source(const Tableau& op, const FormedSpace& v) {
    require_dual_pair(v, op.space());
    validate(op);
    DescentParts parts{{}, FormedSpace::zero(v.type()), FormedSpace::zero(v.type()), 0};
    for (const auto& row : op.rows()) {
        const int r = row.t - 1;
        const FormedSpace m = descent_form_sign(r) > 0 ? row.mult : row.mult.negated();
        if (r >= 2) {
            parts.rows.push_back(Row{r, m});
            parts.embedded = direct_sum(parts.embedded, tensor_with_sl2(m, r));
        } else if (r == 1) {
            parts.u1 = m;
        } else {
            parts.s = row.mult.dim();
        }
    }
    return parts;
}

} // namespace

bool in_moment_image(const Tableau& op, const FormedSpace& v) {
    const auto parts = split_source(op, v);
    return embeds(direct_sum(parts.embedded, parts.u1), v);
}

DescentResult generalized_descent(const Tableau& op, const FormedSpace& v) {
    auto parts = split_source(op, v);
    if (!embeds(direct_sum(parts.embedded, parts.u1), v))
        throw Error(ErrorCode::NotInImage, "orbit is not in the image of the moment map",
                    to_string(op.diagram()) + " over " + to_string(v));
    DescentResult out;
    out.source = op;
    out.U = orth_complement(parts.embedded, v);
    out.U1 = parts.u1;
    out.a = parts.u1.dim();
    out.b = orth_complement(parts.u1, out.U).dim();
    out.s = parts.s;
    out.strict = out.b == 0;
    if (!out.U.is_zero())
        parts.rows.push_back(Row{1, out.U});
    out.target = Tableau(v, std::move(parts.rows));
    validate(out.target);
    return out;
}

std::vector<Tableau> lift_candidates(const Tableau& o, const FormedSpace& vp, int bound) {
    require_dual_pair(o.space(), vp);
    std::vector<Tableau> out;
    for (auto& cand : enumerate_orbits(vp, bound))
        if (in_moment_image(cand, o.space()) && generalized_descent(cand, o.space()).target == o)
            out.push_back(std::move(cand));
    return out;
}

Tableau theta_lift(const Tableau& o, const FormedSpace& vp, int bound) {
    if (o.space().base() != Field::C || vp.base() != Field::C)
        throw Error(ErrorCode::UnsupportedBase, "theta lift of orbits is computed for complex dual pairs");
    validate(o);
    const auto candidates = lift_candidates(o, vp, bound);
    if (candidates.empty())
        throw Error(ErrorCode::EmptyLift, "no orbit descends to the given orbit",
                    to_string(o.diagram()) + " -> " + to_string(vp));
    std::vector<const Tableau*> maximal;
    for (const auto& c : candidates) {
        const bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](const Tableau& d) {
            return !(d == c) && closure_leq(c, d);
        });
        if (!dominated)
            maximal.push_back(&c);
    }
    if (maximal.size() != 1) {
        std::string list;
        for (const auto* m : maximal)
            list += to_string(m->diagram()) + " ";
        throw Error(ErrorCode::AmbiguousMaximum, "lift candidates have several maximal elements", list);
    }
    return *maximal.front();
}

PairFactorization pair_factorization(const DescentResult& dr) {
    PairFactorization out;
    for (const auto& row : dr.source.rows())
        if (row.t >= 3)
            out.M_XXp *= isometry_group(row.mult);
    out.M_XXp *= isometry_group(dr.U1);
    out.L_space = dr.kernel();
    out.Lp_space = dr.source.mult_of(1);
    out.L = isometry_group(out.L_space);
    out.Lp = isometry_group(out.Lp_space);
    return out;
}

std::map<int, int> weight_dims(const Tableau& tab) {
    std::map<int, int> out;
    for (const auto& row : tab.rows())
        for (int k = 0; k < row.t; ++k)
            out[-(row.t - 1) + 2 * k] += row.mult.dim();
    return out;
}

ReducedPairDims reduced_pair_dims(const DescentResult& dr) {
    const int d = dr.target.space().type().d();
    const auto w = weight_dims(dr.target);
    const auto wp = weight_dims(dr.source);
    ReducedPairDims out;
    out.W_gamma = d * dr.b * dr.s;
    for (auto [k, dim] : w)
        if (auto it = wp.find(k); it != wp.end())
            out.W0 += d * dim * it->second;
    return out;
}

std::optional<Tableau> k_descent(const Tableau& op_real, const FormedSpace& v_real) {
    if (op_real.space().base() != Field::R || v_real.base() != Field::R)
        throw Error(ErrorCode::IncompatiblePair, "real descent needs real forms on both sides");
    if (!in_moment_image(op_real, v_real))
        return std::nullopt;
    return generalized_descent(op_real, v_real).target;
}

} // namespace howe
