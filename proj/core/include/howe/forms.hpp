#pragma once

#include <compare>
#include <string>
#include <vector>

namespace howe {

enum class Field { R, C };
enum class Division { R, C, H };

/// Whether a (field, division, epsilon) type is classified by a signature or by its dimension alone.
enum class InvariantKind { Signature, Dimension };

struct SpaceType {
    Field base = Field::C;
    Division division = Division::C;
    int epsilon = 1;

    InvariantKind kind() const;
    /// dim_F D
    int d() const;
    SpaceType flipped() const { return {base, division, -epsilon}; }

    friend auto operator<=>(const SpaceType&, const SpaceType&) = default;
};

/// A non-degenerate epsilon-Hermitian space over a division algebra, up to isometry.
///
/// Dimensions stored here are D-dimensions; `base_dim()` converts to dimension over F.
/// The zero space is a valid member of every type.
class FormedSpace {
public:
    FormedSpace() = default;

    static FormedSpace with_signature(SpaceType type, int p, int q);
    static FormedSpace with_dim(SpaceType type, int n);
    static FormedSpace zero(SpaceType type);

    const SpaceType& type() const noexcept { return type_; }
    Field base() const noexcept { return type_.base; }
    Division division() const noexcept { return type_.division; }
    int epsilon() const noexcept { return type_.epsilon; }
    InvariantKind kind() const { return type_.kind(); }

    int p() const noexcept { return p_; }
    int q() const noexcept { return q_; }
    /// D-dimension.
    int dim() const noexcept { return p_ + q_; }
    int base_dim() const { return type_.d() * dim(); }
    bool is_zero() const noexcept { return dim() == 0; }

    /// The space with form -B. Same invariants unless signature-classified.
    FormedSpace negated() const;

    friend auto operator<=>(const FormedSpace&, const FormedSpace&) = default;

private:
    FormedSpace(SpaceType type, int p, int q) : type_(type), p_(p), q_(q) {}

    SpaceType type_;
    // For dimension-classified spaces the dimension lives in p_ and q_ is 0.
    int p_ = 0;
    int q_ = 0;
};

FormedSpace direct_sum(const FormedSpace& a, const FormedSpace& b);

/// Every nonzero formed space with base-field dimension <= max_base_dim, complex ones first.
std::vector<FormedSpace> all_spaces(int max_base_dim, bool include_real = true);
FormedSpace direct_sum(const std::vector<FormedSpace>& parts, SpaceType type);

/// Signature of the invariant form on the m-dimensional sl2 module: (ceil(m/2), floor(m/2)) for odd m.
int sl2_form_positive(int m);

/// Normalization of (.,.)_m on the weight basis v_0 (lowest), ..., v_{m-1} = X^{m-1} v_0:
/// (v_0, v_{m-1}) = sl2_form_scale(m) = (-1)^floor((m-1)/2). For odd m this gives the signature above.
int sl2_form_scale(int m);

/// A tensored with (F^m, (.,.)_m).
FormedSpace tensor_with_sl2(const FormedSpace& a, int m);

bool embeds(const FormedSpace& a, const FormedSpace& b);

/// The complement C with a + C = b. Throws NotEmbeddable.
FormedSpace orth_complement(const FormedSpace& a, const FormedSpace& b);

/// Complexification, defined for division R and H over base R.
FormedSpace complexify(const FormedSpace& a);

enum class GroupFamily { O, SpR, U, SpPQ, OStar, OC, SpC };

struct GroupFactor {
    GroupFamily family;
    int p = 0; // O(p,q), U(p,q), Sp(p,q); for dimension families the parameter shown in the name
    int q = 0;

    std::string name() const;
    /// Dimension as a real Lie group (families over R) or complex Lie group (over C).
    int lie_dim() const;

    friend auto operator<=>(const GroupFactor&, const GroupFactor&) = default;
};

/// Product of classical groups; the empty product is the trivial group.
struct GroupDescriptor {
    std::vector<GroupFactor> factors;

    std::string name() const;
    int lie_dim() const;
    bool trivial() const { return factors.empty(); }
    GroupDescriptor& operator*=(const GroupDescriptor& other);

    friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// Isometry group of a single space; zero spaces give the trivial group.
GroupDescriptor isometry_group(const FormedSpace& a);

std::string to_string(Field f);
std::string to_string(Division d);
std::string to_string(const FormedSpace& a);

} // namespace howe
