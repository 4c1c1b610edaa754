#pragma once

#include "howe/orbits.hpp"

#include <optional>
#include <utility>

namespace howe {

/// Generalized descent of O' (in g') to O (in g) along Hom(V, V').
struct DescentResult {
    Tableau source;   // O'
    Tableau target;   // O
    FormedSpace U;    // complement in V of the part coming from rows of length >= 3
    FormedSpace U1;   // image of the length-2 rows of O'
    int a = 0;        // D-dim U1
    int b = 0;        // D-dim Ker T
    int s = 0;        // D-dim of the invariants of O'
    bool strict = false;

    FormedSpace kernel() const { return orth_complement(U1, U); }
    friend bool operator==(const DescentResult&, const DescentResult&) = default;
};

/// Stabilizer factorization attached to a descent: M'_{X'} = M_{X,X'} x L', M_X contains M_{X,X'} x L.
/// The homomorphism alpha_T is the identity on M_{X,X'} and trivial on L'.
struct PairFactorization {
    GroupDescriptor M_XXp;
    GroupDescriptor L;
    GroupDescriptor Lp;
    FormedSpace L_space;  // Ker T
    FormedSpace Lp_space; // invariants of O' in V'
};

/// Throws IncompatiblePair unless the spaces share base and division with epsilon * epsilon' = -1.
void require_dual_pair(const FormedSpace& v, const FormedSpace& vp);
bool is_dual_pair(const FormedSpace& v, const FormedSpace& vp);

/// Sign picked up by the multiplicity form when a row of length r+1 becomes a row of length r.
/// Depends on the normalization of the sl2 forms; see sl2_form_scale.
int descent_form_sign(int r);

bool in_moment_image(const Tableau& op, const FormedSpace& v);

/// Throws NotInImage.
DescentResult generalized_descent(const Tableau& op, const FormedSpace& v);

/// Closure-maximal O' over V' whose generalized descent to V is O (complex only).
/// Throws EmptyLift or AmbiguousMaximum.
Tableau theta_lift(const Tableau& o, const FormedSpace& vp, int bound = kDefaultBound);

/// All O' over V' with generalized descent O, in canonical order.
std::vector<Tableau> lift_candidates(const Tableau& o, const FormedSpace& vp, int bound = kDefaultBound);

PairFactorization pair_factorization(const DescentResult& dr);

struct ReducedPairDims {
    int W_gamma = 0; // dim_F Hom_D(Ker T, invariants of O')
    int W0 = 0;      // sum_k dim_F Hom_D(V_k, V'_k)
};

/// Weight-space count from the two tableaux.
ReducedPairDims reduced_pair_dims(const DescentResult& dr);

/// Weight multiplicities (D-dimensions) of the neutral element of an sl2-triple in the orbit.
std::map<int, int> weight_dims(const Tableau& tab);

/// Descent of real orbits; std::nullopt when the required embedding fails over R.
std::optional<Tableau> k_descent(const Tableau& op_real, const FormedSpace& v_real);

} // namespace howe
