#pragma once

#include "howe/forms.hpp"

#include <map>
#include <vector>

namespace howe {

/// Largest dimension over the base field that enumeration and the matrix oracle accept by default.
inline constexpr int kDefaultBound = 12;

/// One isotypic block: rows of length `t`, one row per D-dimension of `mult`.
struct Row {
    int t = 1;
    FormedSpace mult;

    friend auto operator<=>(const Row&, const Row&) = default;
};

/// A nilpotent orbit as an admissible epsilon-Hermitian Young tableau.
///
/// Rows are kept with strictly decreasing `t`. Construction does not validate; call `validate`.
class Tableau {
public:
    Tableau() = default;
    Tableau(FormedSpace space, std::vector<Row> rows) : space_(space), rows_(std::move(rows)) {}

    const FormedSpace& space() const noexcept { return space_; }
    const std::vector<Row>& rows() const noexcept { return rows_; }

    /// Row lengths with repetition, weakly decreasing (the partition d^gamma).
    std::vector<int> diagram() const;
    /// Multiplicity space of rows of length t, or the zero space.
    FormedSpace mult_of(int t) const;
    bool is_zero_orbit() const { return rows_.size() == 1 && rows_.front().t == 1; }

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    FormedSpace space_;
    std::vector<Row> rows_;
};

/// Canonical order: same ambient space grouped, larger diagrams (lexicographically) first,
/// then larger positive indices first.
bool canonical_less(const Tableau& a, const Tableau& b);

struct CanonicalLess {
    bool operator()(const Tableau& a, const Tableau& b) const { return canonical_less(a, b); }
};

/// Throws BadShape, BadSign, MismatchedType or NotAdmissible.
void validate(const Tableau& tab);
bool is_valid(const Tableau& tab);

Tableau zero_orbit(const FormedSpace& space);

std::vector<Tableau> enumerate_orbits(const FormedSpace& space, int bound = kDefaultBound);

/// M_X as the product of isometry groups of the multiplicity spaces.
GroupDescriptor stabilizer(const Tableau& tab);

/// Dimension of the G-orbit, computed from the oracle's adjoint kernel.
int orbit_dimension(const Tableau& tab, int bound = kDefaultBound);

/// Dominance order on diagrams; complex orbits only.
bool closure_leq(const Tableau& a, const Tableau& b);

bool dominates(const std::vector<int>& larger, const std::vector<int>& smaller);
std::vector<int> conjugate_partition(const std::vector<int>& partition);
std::vector<int> column_partition(const Tableau& tab);

struct WhittakerDatum {
    std::map<int, int> grading; // j -> dim g_j over the base field
    int dim_u = 0;
    int dim_n = 0;
    int dim_g_minus1 = 0;
    bool heisenberg_case = false;
    GroupDescriptor stabilizer;
};

WhittakerDatum whittaker_datum(const Tableau& tab, int bound = kDefaultBound);

/// Complex orbit underlying a real orbit (rows complexified, diagram doubled for quaternionic spaces).
Tableau complexify(const Tableau& tab);

std::string to_string(const std::vector<int>& partition);
/// ASCII diagram, one row per line, multiplicity forms in brackets on the first row of each block.
std::string render_diagram(const Tableau& tab);

} // namespace howe
