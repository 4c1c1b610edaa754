#include "howe/oracle.hpp"

#include "howe/error.hpp"

#include <array>
#include <set>

namespace howe {

namespace {

// Integer quaternions a0 + a1 i + a2 j + a3 k; the complex numbers are the first two slots.
using Quat = std::array<int, 4>;

Quat qmul(const Quat& a, const Quat& b) {
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Quat qconj(const Quat& a) { return {a[0], -a[1], -a[2], -a[3]}; }

Quat unit(int a) {
    Quat e{0, 0, 0, 0};
    e[static_cast<std::size_t>(a)] = 1;
    return e;
}

// Re(conj(e_a) w e_b) on the real basis of D.
Matrix coordinate_gram(const Quat& w, int d) {
    Matrix g(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            g(a, b) = qmul(qmul(qconj(unit(a)), w), unit(b))[0];
    return g;
}

// Matrix of v -> v u on the real basis of D.
Matrix right_mult(const Quat& u, int d) {
    Matrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (int b = 0; b < d; ++b) {
        const Quat img = qmul(unit(b), u);
        for (int a = 0; a < d; ++a)
            m(a, b) = img[static_cast<std::size_t>(a)];
    }
    return m;
}

Matrix standard_symplectic(std::size_t n) {
    Matrix j(n, n);
    for (std::size_t i = 0; i < n / 2; ++i) {
        j(i, n / 2 + i) = 1;
        j(n / 2 + i, i) = -1;
    }
    return j;
}

std::size_t nullity(const Matrix& m) { return m.cols() - rank(m); }

Matrix stack_vectorized(const std::vector<Matrix>& mats, std::size_t rows) {
    Matrix out(rows, mats.size());
    for (std::size_t c = 0; c < mats.size(); ++c) {
        const Matrix v = mats[c].vectorize();
        for (std::size_t r = 0; r < rows; ++r)
            out(r, c) = v(r, 0);
    }
    return out;
}

// Columns vec(L(B_i)) for a linear map L on g.
template <class F>
Matrix image_columns(const LieAlgebra& g, F&& map) {
    std::vector<Matrix> images;
    for (const auto& b : g.basis())
        images.push_back(map(b));
    const std::size_t rows = images.empty() ? 0 : images.front().rows() * images.front().cols();
    return stack_vectorized(images, rows);
}

// Element Z of g with L(Z) = rhs, if any.
template <class F>
std::optional<Matrix> solve_in(const LieAlgebra& g, F&& map, const Matrix& rhs) {
    if (g.dim() == 0)
        return rhs.is_zero() ? std::optional<Matrix>(Matrix(g.model().size(), g.model().size())) : std::nullopt;
    const auto coords = solve(image_columns(g, map), rhs.vectorize());
    if (!coords)
        return std::nullopt;
    std::vector<Rational> c(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i)
        c[i] = (*coords)(i, 0);
    return g.element(c);
}

int sl2_sign(int t) { return sl2_form_scale(t); }

} // namespace

FormModel model_of(const FormedSpace& space) {
    FormModel m{space.type(), {}, {}};
    const int n = space.dim();
    if (space.base() == Field::C || space.division() == Division::R) {
        if (space.epsilon() == -1) {
            m.gram = standard_symplectic(static_cast<std::size_t>(n));
        } else {
            std::vector<Rational> diag;
            for (int k = 0; k < n; ++k)
                diag.emplace_back(k < space.p() ? 1 : -1);
            if (space.base() == Field::C)
                diag.assign(static_cast<std::size_t>(n), Rational(1));
            m.gram = Matrix::diagonal(diag);
        }
        return m;
    }
    const int d = space.type().d();
    std::vector<Quat> weights;
    if (space.kind() == InvariantKind::Dimension) {
        weights.assign(static_cast<std::size_t>(n), Quat{0, 0, 1, 0});
    } else {
        const int sign = space.epsilon() == 1 ? 1 : 0;
        for (int k = 0; k < n; ++k) {
            const int s = k < space.p() ? 1 : -1;
            weights.push_back(sign ? Quat{s, 0, 0, 0} : Quat{0, -s, 0, 0});
        }
    }
    std::vector<Matrix> blocks;
    for (const auto& w : weights)
        blocks.push_back(coordinate_gram(w, d));
    m.gram = block_diag(blocks);
    std::vector<Quat> units{Quat{0, 1, 0, 0}};
    if (d == 4)
        units.push_back(Quat{0, 0, 1, 0});
    for (const auto& u : units)
        m.structure.push_back(block_diag(std::vector<Matrix>(static_cast<std::size_t>(n), right_mult(u, d))));
    return m;
}

FormedSpace read_space(const FormModel& model) {
    const auto& t = model.type;
    const std::size_t n = model.size();
    if (rank(model.gram) != n)
        throw Error(ErrorCode::InvalidSpace, "degenerate form");
    const int d = t.d();
    if (n % static_cast<std::size_t>(d) != 0)
        throw Error(ErrorCode::InvalidSpace, "size is not a multiple of dim D");
    if (t.kind() == InvariantKind::Dimension)
        return FormedSpace::with_dim(t, static_cast<int>(n) / d);
    Matrix form = model.gram;
    if (t.division == Division::C && t.epsilon == -1)
        form = model.gram * model.structure.at(0);
    const auto in = inertia(form);
    return FormedSpace::with_signature(t, in.positive / d, in.negative / d);
}

FormModel direct_sum(const std::vector<FormModel>& parts, SpaceType type) {
    FormModel out{type, {}, {}};
    std::vector<Matrix> grams;
    std::size_t structures = 0;
    for (const auto& p : parts) {
        grams.push_back(p.gram);
        structures = std::max(structures, p.structure.size());
    }
    out.gram = block_diag(grams);
    for (std::size_t s = 0; s < structures; ++s) {
        std::vector<Matrix> blocks;
        for (const auto& p : parts)
            blocks.push_back(p.structure.empty() ? Matrix(p.size(), p.size()) : p.structure[s]);
        out.structure.push_back(block_diag(blocks));
    }
    return out;
}

Sl2Module sl2_module(int m) {
    const auto n = static_cast<std::size_t>(m);
    Sl2Module s{Matrix(n, n), Matrix(n, n), Matrix(n, n), Matrix(n, n)};
    for (int i = 0; i < m; ++i) {
        const auto k = static_cast<std::size_t>(i);
        s.H(k, k) = -(m - 1) + 2 * i;
        if (i + 1 < m)
            s.X(k + 1, k) = 1;
        if (i > 0)
            s.Y(k - 1, k) = i * (m - i);
        s.form(k, n - 1 - k) = (i % 2 == 0 ? 1 : -1) * sl2_sign(m);
    }
    return s;
}

FormModel tensor_model(const FormModel& model, int m) {
    const auto sl = sl2_module(m);
    FormModel out{model.type, kron(model.gram, sl.form), {}};
    if (m % 2 == 0)
        out.type = model.type.flipped();
    for (const auto& s : model.structure)
        out.structure.push_back(kron(s, Matrix::identity(static_cast<std::size_t>(m))));
    return out;
}

MatrixRealization realize_triple(const Tableau& tab, int bound) {
    validate(tab);
    if (tab.space().base_dim() > bound)
        throw Error(ErrorCode::BoundExceeded, "space dimension " + std::to_string(tab.space().base_dim()) +
                                                  " exceeds bound " + std::to_string(bound));
    MatrixRealization out;
    std::vector<FormModel> parts;
    std::vector<Matrix> xs, hs, ys;
    std::size_t offset = 0;
    for (const auto& row : tab.rows()) {
        const FormModel mult = model_of(row.mult);
        const auto sl = sl2_module(row.t);
        const Matrix id = Matrix::identity(mult.size());
        parts.push_back(tensor_model(mult, row.t));
        xs.push_back(kron(id, sl.X));
        hs.push_back(kron(id, sl.H));
        ys.push_back(kron(id, sl.Y));
        out.rows.push_back(RealizedRow{row.t, mult, offset});
        offset += parts.back().size();
    }
    out.model = direct_sum(parts, tab.space().type());
    out.X = block_diag(xs);
    out.H = block_diag(hs);
    out.Y = block_diag(ys);
    for (std::size_t i = 0; i < out.H.rows(); ++i)
        out.weights[static_cast<int>(out.H(i, i).get_num().get_si())].push_back(i);
    return out;
}

LieAlgebra::LieAlgebra(const FormModel& model) : LieAlgebra(model, {}) {}

LieAlgebra::LieAlgebra(const FormModel& model, const std::vector<std::pair<std::size_t, std::size_t>>& zero_entries)
    : model_(model) {
    const std::size_t n = model.size();
    const std::size_t n2 = n * n;
    const std::size_t blocks = 1 + model.structure.size();
    Matrix c(n2 * blocks + zero_entries.size(), n2);
    const Matrix& g = model.gram;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t col = a * n + b;
            // E_ab^T G + G E_ab
            for (std::size_t k = 0; k < n; ++k) {
                c(b * n + k, col) += g(a, k);
                c(k * n + b, col) += g(k, a);
            }
            // E_ab S - S E_ab
            for (std::size_t s = 0; s < model.structure.size(); ++s) {
                const Matrix& st = model.structure[s];
                const std::size_t base = n2 * (s + 1);
                for (std::size_t k = 0; k < n; ++k) {
                    c(base + a * n + k, col) += st(b, k);
                    c(base + k * n + b, col) -= st(k, a);
                }
            }
        }
    for (std::size_t z = 0; z < zero_entries.size(); ++z)
        c(n2 * blocks + z, zero_entries[z].first * n + zero_entries[z].second) = 1;
    const Matrix ns = null_space(c);
    for (std::size_t j = 0; j < ns.cols(); ++j)
        basis_.push_back(Matrix::unvectorize(ns.columns(j, 1), n, n));
}

bool LieAlgebra::contains(const Matrix& z) const {
    if (z.rows() != model_.size() || z.cols() != model_.size())
        return false;
    if (!(z.transpose() * model_.gram + model_.gram * z).is_zero())
        return false;
    for (const auto& s : model_.structure)
        if (!commutator(z, s).is_zero())
            return false;
    return true;
}

Matrix LieAlgebra::element(const std::vector<Rational>& coords) const {
    Matrix out(model_.size(), model_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (sgn(coords.at(i)) != 0)
            out += basis_[i] * coords[i];
    return out;
}

bool is_sl2_triple(const Triple& tr) {
    return commutator(tr.H, tr.X) == tr.X * Rational(2) && commutator(tr.H, tr.Y) == tr.Y * Rational(-2) &&
           commutator(tr.X, tr.Y) == tr.H;
}

Triple complete_triple(const Matrix& X, const LieAlgebra& g) {
    const std::size_t n = g.model().size();
    if (X.is_zero())
        return Triple{X, Matrix(n, n), Matrix(n, n)};
    const auto y0 = solve_in(g, [&](const Matrix& b) { return commutator(commutator(X, b), X); }, X * Rational(2));
    if (!y0)
        throw Error(ErrorCode::NotNilpotent, "no neutral element: X is not nilpotent");
    const Matrix H = commutator(X, *y0);
    const auto y = solve_in(
        g, [&](const Matrix& b) { return vstack({commutator(X, b), commutator(H, b) + b * Rational(2)}); },
        vstack({H, Matrix(n, n)}));
    if (!y)
        throw Error(ErrorCode::NotNilpotent, "Jacobson-Morozov completion failed");
    Triple tr{X, H, *y};
    if (!is_sl2_triple(tr))
        throw Error(ErrorCode::NotNilpotent, "completed triple fails the bracket relations");
    return tr;
}

Tableau identify(const Matrix& X, const LieAlgebra& g) {
    const FormModel& model = g.model();
    if (!g.contains(X))
        throw Error(ErrorCode::NotInAlgebra, "matrix is not in the isometry Lie algebra");
    const std::size_t n = model.size();
    const FormedSpace space = read_space(model);
    if (n == 0)
        return Tableau(space, {});
    if (!X.power(static_cast<unsigned>(n)).is_zero())
        throw Error(ErrorCode::NotNilpotent, "matrix is not nilpotent");
    std::vector<std::size_t> ranks{n};
    Matrix p = Matrix::identity(n);
    for (std::size_t k = 1; k <= n + 1; ++k) {
        p = p * X;
        ranks.push_back(rank(p));
    }
    const Triple tr = complete_triple(X, g);
    std::vector<Row> rows;
    for (std::size_t t = n; t >= 1; --t) {
        const std::size_t at_least_t = ranks[t - 1] - ranks[t];
        const std::size_t at_least_next = ranks[t] - ranks[t + 1];
        const std::size_t count = at_least_t - at_least_next;
        if (count == 0)
            continue;
        const int ti = static_cast<int>(t);
        const Matrix lowest = null_space(vstack({tr.H + Matrix::identity(n) * Rational(ti - 1), tr.Y}));
        if (lowest.cols() != count)
            throw Error(ErrorCode::NotNilpotent, "weight spaces disagree with the rank sequence");
        FormModel mult{SpaceType{model.type.base, model.type.division, model.type.epsilon * (ti % 2 == 1 ? 1 : -1)},
                       lowest.transpose() * model.gram * X.power(t - 1) * lowest * Rational(sl2_sign(ti)),
                       {}};
        for (const auto& s : model.structure) {
            const auto r = solve(lowest, s * lowest);
            if (!r)
                throw Error(ErrorCode::NotInAlgebra, "lowest weight space is not D-stable");
            mult.structure.push_back(*r);
        }
        rows.push_back(Row{ti, read_space(mult)});
    }
    Tableau out(space, std::move(rows));
    validate(out);
    return out;
}

Tableau identify(const Matrix& X, const FormModel& model) { return identify(X, LieAlgebra(model)); }

Matrix adjoint(const Matrix& T, const FormModel& v, const FormModel& vp) {
    return inverse(v.gram) * T.transpose() * vp.gram;
}

std::pair<Matrix, Matrix> moment_maps(const Matrix& T, const FormModel& v, const FormModel& vp) {
    const Matrix ts = adjoint(T, v, vp);
    return {ts * T, T * ts};
}

bool is_d_linear(const Matrix& T, const FormModel& v, const FormModel& vp) {
    for (std::size_t s = 0; s < v.structure.size() && s < vp.structure.size(); ++s)
        if (!(T * v.structure[s] == vp.structure[s] * T))
            return false;
    return true;
}

DescentRealization construct_descent_element(const Tableau& op, const FormedSpace& v, int bound) {
    const DescentResult dr = generalized_descent(op, v);
    if (v.base_dim() > bound)
        throw Error(ErrorCode::BoundExceeded, "space dimension exceeds bound");
    DescentRealization out;
    out.source = realize_triple(op, bound);
    std::vector<FormModel> parts;
    std::vector<Matrix> hs;
    struct Placement {
        std::size_t src_offset, dst_offset, mult_size;
        int t;
    };
    std::vector<Placement> placed;
    std::size_t offset = 0;
    for (const auto& row : out.source.rows) {
        if (row.t < 2)
            continue;
        FormModel m = row.mult;
        m.gram *= Rational(descent_form_sign(row.t - 1));
        parts.push_back(tensor_model(m, row.t - 1));
        hs.push_back(kron(Matrix::identity(m.size()), sl2_module(row.t - 1).H));
        placed.push_back(Placement{row.offset, offset, m.size(), row.t});
        offset += parts.back().size();
    }
    const FormModel kernel = model_of(dr.kernel());
    parts.push_back(kernel);
    hs.push_back(Matrix(kernel.size(), kernel.size()));
    out.v = direct_sum(parts, v.type());
    out.H = block_diag(hs);
    out.T = Matrix(out.source.model.size(), out.v.size());
    for (const auto& p : placed) {
        for (std::size_t a = 0; a < p.mult_size; ++a)
            for (int i = 0; i + 1 < p.t; ++i) {
                const std::size_t col = p.dst_offset + a * static_cast<std::size_t>(p.t - 1) + static_cast<std::size_t>(i);
                const std::size_t row = p.src_offset + a * static_cast<std::size_t>(p.t) + static_cast<std::size_t>(i + 1);
                out.T(row, col) = 1;
            }
    }
    return out;
}

DescentCheck check_descent(const DescentResult& dr, int bound) {
    const auto real = construct_descent_element(dr.source, dr.target.space(), bound);
    DescentCheck c;
    c.space_matches = read_space(real.v) == dr.target.space();
    const auto [x, xp] = moment_maps(real.T, real.v, real.source.model);
    c.phi = identify(x, real.v);
    c.phi_prime = identify(xp, real.source.model);
    c.target_matches = c.phi == dr.target;
    c.source_matches = c.phi_prime == dr.source && xp == real.source.X;
    c.lifts = real.source.H * real.T - real.T * real.H == real.T && is_d_linear(real.T, real.v, real.source.model);
    const Matrix ker = null_space(real.T);
    c.kernel_nondegenerate = ker.cols() == 0 || rank(ker.transpose() * real.v.gram * ker) == ker.cols();
    return c;
}

int centralizer_dim(const Matrix& X, const LieAlgebra& g) {
    if (g.dim() == 0)
        return 0;
    return static_cast<int>(nullity(image_columns(g, [&](const Matrix& b) { return commutator(b, X); })));
}

int triple_centralizer_dim(const Matrix& X, const Matrix& H, const LieAlgebra& g) {
    if (g.dim() == 0)
        return 0;
    return static_cast<int>(
        nullity(image_columns(g, [&](const Matrix& b) { return vstack({commutator(b, X), commutator(b, H)}); })));
}

std::map<int, int> grading_dims(const Matrix& H, const LieAlgebra& g) {
    std::map<int, int> out;
    if (g.dim() == 0)
        return out;
    int top = 0;
    for (std::size_t i = 0; i < H.rows(); ++i)
        top = std::max(top, static_cast<int>(Rational(abs(H(i, i))).get_num().get_si()));
    int total = 0;
    for (int j = -2 * top; j <= 2 * top; ++j) {
        const int dim = static_cast<int>(
            nullity(image_columns(g, [&](const Matrix& b) { return commutator(H, b) - b * Rational(j); })));
        out[j] = dim;
        total += dim;
    }
    if (total != static_cast<int>(g.dim()))
        throw Error(ErrorCode::NotInAlgebra, "neutral element is not diagonalizable with integral weights");
    return out;
}

namespace {

std::map<int, int> weight_space_dims(const Matrix& H) {
    std::map<int, int> out;
    const std::size_t n = H.rows();
    for (int k = -static_cast<int>(n); k <= static_cast<int>(n); ++k) {
        const auto dim = nullity(H - Matrix::identity(n) * Rational(k));
        if (dim)
            out[k] = static_cast<int>(dim);
    }
    return out;
}

} // namespace

DimensionIdentityReport verify_dimension_identity(const DescentResult& dr, int bound) {
    const auto real = construct_descent_element(dr.source, dr.target.space(), bound);
    const LieAlgebra g(real.v);
    const LieAlgebra gp(real.source.model);
    DimensionIdentityReport r;
    r.d = real.v.type.d();
    const auto gr = grading_dims(real.H, g);
    const auto grp = grading_dims(real.source.H, gp);
    r.g_minus1 = gr.count(-1) ? gr.at(-1) : 0;
    r.gp_minus1 = grp.count(-1) ? grp.at(-1) : 0;
    const auto w = weight_space_dims(real.H);
    const auto wp = weight_space_dims(real.source.H);
    for (auto [k, dim] : w)
        if (auto it = wp.find(k); it != wp.end())
            r.W0 += dim * it->second / r.d;
    r.ker_T = static_cast<int>(nullity(real.T)) / r.d;
    r.invariants = static_cast<int>(nullity(vstack({real.source.X, real.source.Y}))) / r.d;
    if (!r.holds())
        throw Error(ErrorCode::IdentityViolated,
                    std::to_string(r.g_minus1) + " + " + std::to_string(r.gp_minus1) + " != " + std::to_string(r.W0) +
                        " - " + std::to_string(r.d) + "*" + std::to_string(r.ker_T) + "*" + std::to_string(r.invariants),
                    to_string(dr.source.diagram()) + " / " + to_string(dr.target.diagram()));
    return r;
}

Sampler::Sampler(std::uint64_t seed) : engine_(seed) {}

int Sampler::entry() { return std::uniform_int_distribution<int>(-9, 9)(engine_); }

std::size_t Sampler::index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }

Matrix random_null_cone_element(const FormModel& v, const Matrix& H, const FormModel& vp, const Matrix& Hp,
                                Sampler& rng) {
    Matrix r(vp.size(), v.size());
    for (std::size_t a = 0; a < vp.size(); ++a)
        for (std::size_t b = 0; b < v.size(); ++b)
            if (Hp(a, a) >= H(b, b) + 1)
                r(a, b) = rng.entry();
    if (v.structure.empty())
        return r;
    // average over the units 1, i (and j, k) to make r D-linear
    std::vector<std::pair<Matrix, Matrix>> units{{Matrix::identity(v.size()), Matrix::identity(vp.size())}};
    for (std::size_t s = 0; s < v.structure.size(); ++s)
        units.emplace_back(v.structure[s], vp.structure[s]);
    if (v.structure.size() == 2)
        units.emplace_back(v.structure[1] * v.structure[0], vp.structure[1] * vp.structure[0]);
    Matrix t(vp.size(), v.size());
    for (std::size_t u = 0; u < units.size(); ++u) {
        const Matrix term = units[u].second * r * units[u].first;
        if (u == 0)
            t += term;
        else
            t -= term;
    }
    return t;
}

Matrix random_isometry(const LieAlgebra& g, Sampler& rng) {
    const std::size_t n = g.model().size();
    const Matrix id = Matrix::identity(n);
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<Rational> c;
        for (std::size_t i = 0; i < g.dim(); ++i) {
            c.emplace_back(rng.entry(), 9);
            c.back().canonicalize();
        }
        const Matrix z = g.element(c);
        try {
            return inverse(id - z) * (id + z);
        } catch (const std::domain_error&) {
            continue;
        }
    }
    return id;
}

namespace {

FormModel witt_model(const FormedSpace& v) {
    const std::size_t n = static_cast<std::size_t>(v.base_dim());
    FormModel m{v.type(), Matrix(n, n), {}};
    if (v.base() == Field::C || v.division() == Division::R) {
        if (v.epsilon() == -1) {
            for (std::size_t i = 0; i < n; ++i)
                m.gram(i, n - 1 - i) = i < n / 2 ? 1 : -1;
            return m;
        }
        const std::size_t hyper = v.base() == Field::C ? n / 2 : static_cast<std::size_t>(std::min(v.p(), v.q()));
        const int middle_sign = v.base() == Field::C || v.p() >= v.q() ? 1 : -1;
        for (std::size_t i = 0; i < n; ++i)
            m.gram(i, n - 1 - i) = 0;
        for (std::size_t i = 0; i < hyper; ++i) {
            m.gram(i, n - 1 - i) = 1;
            m.gram(n - 1 - i, i) = 1;
        }
        for (std::size_t i = hyper; i < n - hyper; ++i)
            m.gram(i, i) = middle_sign;
        return m;
    }
    throw Error(ErrorCode::UnsupportedBase, "brute force counting covers base C and real orthogonal/symplectic spaces",
                to_string(v));
}

} // namespace

std::size_t brute_force_orbit_count(const FormedSpace& v, std::uint64_t seed) {
    const FormModel model = witt_model(v);
    const std::size_t n = model.size();
    std::vector<std::pair<std::size_t, std::size_t>> lower;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            lower.emplace_back(i, j);
    const LieAlgebra nil(model, lower);
    const LieAlgebra g(model);
    std::set<Tableau, CanonicalLess> seen;
    Sampler rng(seed);
    const auto add = [&](const std::vector<Rational>& coords) { seen.insert(identify(nil.element(coords), g)); };
    const std::size_t dim = nil.dim();
    std::size_t box = 1;
    for (std::size_t k = 0; k < dim && box <= 6561; ++k)
        box *= 3;
    if (box <= 6561) {
        for (std::size_t code = 0; code < box; ++code) {
            std::vector<Rational> c(dim);
            std::size_t x = code;
            for (std::size_t k = 0; k < dim; ++k, x /= 3)
                c[k] = static_cast<int>(x % 3) - 1;
            add(c);
        }
    } else {
        add(std::vector<Rational>(dim));
        for (int s = 0; s < 2000; ++s) {
            std::vector<Rational> c(dim);
            for (auto& x : c)
                x = static_cast<int>(rng.index(3)) - 1;
            add(c);
        }
    }
    for (int s = 0; s < 32; ++s) {
        std::vector<Rational> c(dim);
        for (auto& x : c)
            x = rng.entry();
        add(c);
    }
    return seen.size();
}

} // namespace howe
