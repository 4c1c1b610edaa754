#pragma once

#include "howe/matrix.hpp"
#include "howe/orbits.hpp"
#include "howe/theta.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace howe {

/// A formed space as concrete matrices over the base field.
///
/// `gram` is the matrix of b = Re h (for base C, the bilinear form itself); `structure` holds the
/// matrices of right multiplication by i (D = C) or by i and j (D = H). D-linear maps are the
/// matrices commuting with every structure matrix.
struct FormModel {
    SpaceType type{};
    Matrix gram;
    std::vector<Matrix> structure;

    std::size_t size() const { return gram.rows(); }
};

/// Standard diagonal model of a formed space.
FormModel model_of(const FormedSpace& space);

/// Reads the discrete invariants back by Sylvester counting. Throws InvalidSpace on a degenerate form.
FormedSpace read_space(const FormModel& model);

/// Orthogonal sum, in order.
FormModel direct_sum(const std::vector<FormModel>& parts, SpaceType type);

/// The irreducible sl2 module F^m with basis v_i = X^i v_0 and its invariant form.
struct Sl2Module {
    Matrix X, H, Y, form;
};

Sl2Module sl2_module(int m);

/// model (x) F^m with the sl2 form on the second factor.
FormModel tensor_model(const FormModel& model, int m);

struct RealizedRow {
    int t = 1;
    FormModel mult;
    std::size_t offset = 0;
};

struct MatrixRealization {
    FormModel model;
    Matrix X, H, Y;
    std::map<int, std::vector<std::size_t>> weights; // k -> basis indices of V_k
    std::vector<RealizedRow> rows;
};

/// Block realization of the tableau. Throws BoundExceeded.
MatrixRealization realize_triple(const Tableau& tab, int bound = kDefaultBound);

/// The isometry Lie algebra of a model, as an explicit basis.
class LieAlgebra {
public:
    explicit LieAlgebra(const FormModel& model);
    /// Subalgebra of g cut out by additional vanishing entries (i, j).
    LieAlgebra(const FormModel& model, const std::vector<std::pair<std::size_t, std::size_t>>& zero_entries);

    const FormModel& model() const noexcept { return model_; }
    const std::vector<Matrix>& basis() const noexcept { return basis_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    bool contains(const Matrix& z) const;
    /// Element with the given coordinates in the basis.
    Matrix element(const std::vector<Rational>& coords) const;

private:
    FormModel model_;
    std::vector<Matrix> basis_;
};

struct Triple {
    Matrix X, H, Y;
};

bool is_sl2_triple(const Triple& tr);

/// Jacobson-Morozov completion inside g. Throws NotNilpotent if no triple exists.
Triple complete_triple(const Matrix& X, const LieAlgebra& g);

/// Tableau of a nilpotent element of g. Throws NotInAlgebra or NotNilpotent.
Tableau identify(const Matrix& X, const LieAlgebra& g);
Tableau identify(const Matrix& X, const FormModel& model);

/// T* with b'(Tv, v') = b(v, T* v'), for T : V -> V'.
Matrix adjoint(const Matrix& T, const FormModel& v, const FormModel& vp);

/// (phi(T), phi'(T)) = (T* T, T T*).
std::pair<Matrix, Matrix> moment_maps(const Matrix& T, const FormModel& v, const FormModel& vp);

/// True when T commutes with the structure matrices.
bool is_d_linear(const Matrix& T, const FormModel& v, const FormModel& vp);

struct DescentRealization {
    MatrixRealization source; // realization of O' on V'
    FormModel v;              // model of V adapted to T
    Matrix T;                 // V -> V'
    Matrix H;                 // neutral element of the descended triple on V
};

/// Builds T with T*T in the descended orbit and T T* = X'. Throws NotInImage.
DescentRealization construct_descent_element(const Tableau& op, const FormedSpace& v, int bound = kDefaultBound);

struct DescentCheck {
    Tableau phi;       // identify(T* T)
    Tableau phi_prime; // identify(T T*)
    bool space_matches = false;
    bool target_matches = false;
    bool source_matches = false;
    bool lifts = false; // T(V_k) in V'_{k+1}
    bool kernel_nondegenerate = false;

    bool ok() const { return space_matches && target_matches && source_matches && lifts && kernel_nondegenerate; }
};

DescentCheck check_descent(const DescentResult& dr, int bound = kDefaultBound);

int centralizer_dim(const Matrix& X, const LieAlgebra& g);
/// dim{Z in g : [Z, X] = 0, [Z, H] = 0}.
int triple_centralizer_dim(const Matrix& X, const Matrix& H, const LieAlgebra& g);
/// j -> dim of the ad(H) eigenspace of weight j in g.
std::map<int, int> grading_dims(const Matrix& H, const LieAlgebra& g);

struct DimensionIdentityReport {
    int g_minus1 = 0;  // over the base field
    int gp_minus1 = 0;
    int W0 = 0;
    int ker_T = 0;     // D-dimension
    int invariants = 0; // D-dimension of the invariants of O'
    int d = 1;

    int rhs() const { return W0 - d * ker_T * invariants; }
    bool holds() const { return g_minus1 + gp_minus1 == rhs(); }
};

/// All five quantities from matrices. Throws IdentityViolated when the identity fails.
DimensionIdentityReport verify_dimension_identity(const DescentResult& dr, int bound = kDefaultBound);

/// Seeded integer entries in [-9, 9].
class Sampler {
public:
    explicit Sampler(std::uint64_t seed);
    int entry();
    std::size_t index(std::size_t n);

private:
    std::mt19937_64 engine_;
};

/// A random D-linear T : V -> V' raising the weights of the given neutral elements by at least one,
/// so that both moment images are nilpotent.
Matrix random_null_cone_element(const FormModel& v, const Matrix& H, const FormModel& vp, const Matrix& Hp,
                                Sampler& rng);

/// Random isometry by the Cayley transform of a random element of g.
Matrix random_isometry(const LieAlgebra& g, Sampler& rng);

/// Number of distinct orbits among nilpotents of a minimal parabolic nilradical in a Witt-adapted
/// basis, identified by rank sequences and forms. Base C and (R,R,+-1) only; throws UnsupportedBase.
std::size_t brute_force_orbit_count(const FormedSpace& v, std::uint64_t seed);

} // namespace howe
