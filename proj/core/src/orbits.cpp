#include "howe/orbits.hpp"

#include "howe/error.hpp"
#include "howe/oracle.hpp"

#include <algorithm>
#include <functional>

namespace howe {

std::vector<int> Tableau::diagram() const {
    std::vector<int> out;
    for (const auto& row : rows_)
        out.insert(out.end(), static_cast<std::size_t>(row.mult.dim()), row.t);
    return out;
}

FormedSpace Tableau::mult_of(int t) const {
    for (const auto& row : rows_)
        if (row.t == t)
            return row.mult;
    return FormedSpace::zero({space_.base(), space_.division(), space_.epsilon() * (t % 2 == 1 ? 1 : -1)});
}

namespace {

SpaceType row_type(const FormedSpace& space, int t) {
    return {space.base(), space.division(), space.epsilon() * ((t - 1) % 2 == 0 ? 1 : -1)};
}

int compare_mult(const FormedSpace& a, const FormedSpace& b) {
    if (a.p() != b.p())
        return a.p() > b.p() ? -1 : 1;
    if (a.q() != b.q())
        return a.q() > b.q() ? -1 : 1;
    return 0;
}

} // namespace

bool canonical_less(const Tableau& a, const Tableau& b) {
    if (a.space() != b.space())
        return a.space() < b.space();
    const auto da = a.diagram();
    const auto db = b.diagram();
    if (da != db)
        return da > db;
    for (std::size_t k = 0; k < a.rows().size() && k < b.rows().size(); ++k)
        if (int c = compare_mult(a.rows()[k].mult, b.rows()[k].mult); c != 0)
            return c < 0;
    return false;
}

void validate(const Tableau& tab) {
    const auto& rows = tab.rows();
    if (rows.empty() && !tab.space().is_zero())
        throw Error(ErrorCode::NotAdmissible, "empty tableau for a nonzero space");
    for (std::size_t j = 0; j < rows.size(); ++j) {
        if (rows[j].t < 1)
            throw Error(ErrorCode::BadShape, "row length must be positive", "row " + std::to_string(j));
        if (rows[j].mult.is_zero())
            throw Error(ErrorCode::BadShape, "row with zero multiplicity space", "row " + std::to_string(j));
        if (j > 0 && rows[j].t >= rows[j - 1].t)
            throw Error(ErrorCode::BadShape, "row lengths must be strictly decreasing", "row " + std::to_string(j));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) {
        const auto& m = rows[j].mult;
        if (m.base() != tab.space().base() || m.division() != tab.space().division())
            throw Error(ErrorCode::MismatchedType, "multiplicity space over a different field or division algebra",
                        "row " + std::to_string(j));
        if (m.epsilon() != row_type(tab.space(), rows[j].t).epsilon)
            throw Error(ErrorCode::BadSign, "multiplicity space has the wrong epsilon", "row " + std::to_string(j));
    }
    std::vector<FormedSpace> parts;
    for (const auto& row : rows)
        parts.push_back(tensor_with_sl2(row.mult, row.t));
    if (direct_sum(parts, tab.space().type()) != tab.space())
        throw Error(ErrorCode::NotAdmissible, "tensor decomposition does not recover the ambient space",
                    to_string(direct_sum(parts, tab.space().type())) + " != " + to_string(tab.space()));
}

bool is_valid(const Tableau& tab) {
    try {
        validate(tab);
        return true;
    } catch (const Error&) {
        return false;
    }
}

Tableau zero_orbit(const FormedSpace& space) {
    if (space.is_zero())
        return Tableau(space, {});
    return Tableau(space, {Row{1, space}});
}

namespace {

// Partitions of n as (length, count) blocks with strictly decreasing lengths.
void partitions(int n, int max_part, std::vector<std::pair<int, int>>& current,
                const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
    if (n == 0) {
        emit(current);
        return;
    }
    for (int t = std::min(n, max_part); t >= 1; --t)
        for (int i = n / t; i >= 1; --i) {
            current.emplace_back(t, i);
            partitions(n - t * i, t - 1, current, emit);
            current.pop_back();
        }
}

std::vector<FormedSpace> candidate_mults(SpaceType type, int dim) {
    std::vector<FormedSpace> out;
    if (type.kind() == InvariantKind::Signature) {
        for (int p = dim; p >= 0; --p)
            out.push_back(FormedSpace::with_signature(type, p, dim - p));
    } else {
        try {
            out.push_back(FormedSpace::with_dim(type, dim));
        } catch (const Error&) {
            // parity excludes this row length
        }
    }
    return out;
}

} // namespace

std::vector<Tableau> enumerate_orbits(const FormedSpace& space, int bound) {
    if (space.base_dim() > bound)
        throw Error(ErrorCode::BoundExceeded,
                    "space dimension " + std::to_string(space.base_dim()) + " exceeds bound " + std::to_string(bound));
    std::vector<Tableau> out;
    if (space.is_zero()) {
        out.push_back(zero_orbit(space));
        return out;
    }
    std::vector<std::pair<int, int>> current;
    partitions(space.dim(), space.dim(), current, [&](const std::vector<std::pair<int, int>>& blocks) {
        std::vector<std::vector<FormedSpace>> choices;
        for (auto [t, i] : blocks) {
            choices.push_back(candidate_mults(row_type(space, t), i));
            if (choices.back().empty())
                return;
        }
        std::vector<std::size_t> pick(blocks.size(), 0);
        while (true) {
            std::vector<Row> rows;
            for (std::size_t k = 0; k < blocks.size(); ++k)
                rows.push_back(Row{blocks[k].first, choices[k][pick[k]]});
            Tableau tab(space, std::move(rows));
            if (is_valid(tab))
                out.push_back(std::move(tab));
            std::size_t k = 0;
            while (k < pick.size() && ++pick[k] == choices[k].size())
                pick[k++] = 0;
            if (k == pick.size())
                break;
        }
    });
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

GroupDescriptor stabilizer(const Tableau& tab) {
    validate(tab);
    GroupDescriptor g;
    for (const auto& row : tab.rows())
        g *= isometry_group(row.mult);
    return g;
}

int orbit_dimension(const Tableau& tab, int bound) {
    const auto real = realize_triple(tab, bound);
    const LieAlgebra g(real.model);
    return static_cast<int>(g.dim()) - centralizer_dim(real.X, g);
}

bool dominates(const std::vector<int>& larger, const std::vector<int>& smaller) {
    int a = 0, b = 0;
    for (std::size_t k = 0; k < std::max(larger.size(), smaller.size()); ++k) {
        a += k < larger.size() ? larger[k] : 0;
        b += k < smaller.size() ? smaller[k] : 0;
        if (a < b)
            return false;
    }
    return true;
}

bool closure_leq(const Tableau& a, const Tableau& b) {
    if (a.space() != b.space())
        throw Error(ErrorCode::MismatchedType, "orbits live in different algebras");
    if (a.space().base() != Field::C)
        throw Error(ErrorCode::UnsupportedRealClosure, "closure order is only defined for complex orbits");
    return dominates(b.diagram(), a.diagram());
}

std::vector<int> conjugate_partition(const std::vector<int>& partition) {
    std::vector<int> out;
    if (partition.empty())
        return out;
    const int longest = *std::max_element(partition.begin(), partition.end());
    for (int k = 1; k <= longest; ++k)
        out.push_back(static_cast<int>(std::count_if(partition.begin(), partition.end(), [k](int x) { return x >= k; })));
    return out;
}

std::vector<int> column_partition(const Tableau& tab) { return conjugate_partition(tab.diagram()); }

WhittakerDatum whittaker_datum(const Tableau& tab, int bound) {
    const auto real = realize_triple(tab, bound);
    const LieAlgebra g(real.model);
    WhittakerDatum out;
    out.grading = grading_dims(real.H, g);
    for (auto [j, dim] : out.grading)
        if (j <= -2)
            out.dim_u += dim;
    out.dim_g_minus1 = out.grading.count(-1) ? out.grading.at(-1) : 0;
    out.dim_n = out.dim_u + out.dim_g_minus1;
    out.heisenberg_case = out.dim_g_minus1 != 0;
    out.stabilizer = stabilizer(tab);
    return out;
}

Tableau complexify(const Tableau& tab) {
    std::vector<Row> rows;
    for (const auto& row : tab.rows())
        rows.push_back(Row{row.t, complexify(row.mult)});
    return Tableau(complexify(tab.space()), std::move(rows));
}

std::string to_string(const std::vector<int>& partition) {
    std::string out = "[";
    for (std::size_t k = 0; k < partition.size(); ++k)
        out += (k ? "," : "") + std::to_string(partition[k]);
    return out + "]";
}

namespace {

std::string short_form(const FormedSpace& m) {
    if (m.kind() == InvariantKind::Signature)
        return "(" + std::to_string(m.p()) + "," + std::to_string(m.q()) + ")";
    return "dim " + std::to_string(m.dim());
}

} // namespace

std::string render_diagram(const Tableau& tab) {
    std::string out;
    const int width = tab.rows().empty() ? 0 : tab.rows().front().t;
    for (const auto& row : tab.rows())
        for (int k = 0; k < row.mult.dim(); ++k) {
            std::string line(static_cast<std::size_t>(row.t), '#');
            if (k == 0)
                line += std::string(static_cast<std::size_t>(width - row.t + 2), ' ') + "[" + short_form(row.mult) + "]";
            out += line + "\n";
        }
    return out;
}

} // namespace howe
