#include "howe/forms.hpp"

#include "howe/error.hpp"

#include <numeric>

namespace howe {

InvariantKind SpaceType::kind() const {
    if (base == Field::C)
        return InvariantKind::Dimension;
    switch (division) {
    case Division::R:
    case Division::H:
        return epsilon == 1 ? InvariantKind::Signature : InvariantKind::Dimension;
    case Division::C:
        return InvariantKind::Signature;
    }
    return InvariantKind::Dimension;
}

int SpaceType::d() const {
    if (base == Field::C)
        return 1;
    switch (division) {
    case Division::R: return 1;
    case Division::C: return 2;
    case Division::H: return 4;
    }
    return 1;
}

namespace {

void check_type(const SpaceType& t) {
    if (t.epsilon != 1 && t.epsilon != -1)
        throw Error(ErrorCode::InvalidSpace, "epsilon must be +1 or -1");
    if (t.base == Field::C && t.division != Division::C)
        throw Error(ErrorCode::InvalidSpace, "base field C requires division algebra C");
}

bool needs_even_dim(const SpaceType& t) {
    return t.epsilon == -1 && t.division != Division::H &&
           (t.base == Field::C || t.division == Division::R);
}

} // namespace

FormedSpace FormedSpace::with_signature(SpaceType type, int p, int q) {
    check_type(type);
    if (type.kind() != InvariantKind::Signature)
        throw Error(ErrorCode::InvalidSpace, "type is classified by dimension, not signature");
    if (p < 0 || q < 0)
        throw Error(ErrorCode::InvalidSpace, "negative signature");
    return FormedSpace(type, p, q);
}

FormedSpace FormedSpace::with_dim(SpaceType type, int n) {
    check_type(type);
    if (type.kind() != InvariantKind::Dimension)
        throw Error(ErrorCode::InvalidSpace, "type is classified by signature, not dimension");
    if (n < 0)
        throw Error(ErrorCode::InvalidSpace, "negative dimension");
    if (needs_even_dim(type) && n % 2 != 0)
        throw Error(ErrorCode::InvalidSpace, "alternating forms need even dimension");
    return FormedSpace(type, n, 0);
}

FormedSpace FormedSpace::zero(SpaceType type) {
    return type.kind() == InvariantKind::Signature ? with_signature(type, 0, 0) : with_dim(type, 0);
}

FormedSpace FormedSpace::negated() const {
    if (kind() == InvariantKind::Signature)
        return FormedSpace(type_, q_, p_);
    return *this;
}

FormedSpace direct_sum(const FormedSpace& a, const FormedSpace& b) {
    if (a.type() != b.type())
        throw Error(ErrorCode::MismatchedType, "direct sum of spaces of different types",
                    to_string(a) + " + " + to_string(b));
    if (a.kind() == InvariantKind::Signature)
        return FormedSpace::with_signature(a.type(), a.p() + b.p(), a.q() + b.q());
    return FormedSpace::with_dim(a.type(), a.dim() + b.dim());
}

FormedSpace direct_sum(const std::vector<FormedSpace>& parts, SpaceType type) {
    return std::accumulate(parts.begin(), parts.end(), FormedSpace::zero(type),
                           [](const FormedSpace& acc, const FormedSpace& x) { return direct_sum(acc, x); });
}

std::vector<FormedSpace> all_spaces(int max_base_dim, bool include_real) {
    std::vector<FormedSpace> out;
    for (int eps : {1, -1})
        for (int n = 1; n <= max_base_dim; ++n)
            if (eps == 1 || n % 2 == 0)
                out.push_back(FormedSpace::with_dim({Field::C, Division::C, eps}, n));
    if (!include_real)
        return out;
    for (Division div : {Division::R, Division::C, Division::H})
        for (int eps : {1, -1}) {
            const SpaceType type{Field::R, div, eps};
            for (int n = 1; n * type.d() <= max_base_dim; ++n) {
                if (type.kind() == InvariantKind::Signature) {
                    for (int p = n; p >= 0; --p)
                        out.push_back(FormedSpace::with_signature(type, p, n - p));
                } else if (eps == 1 || div == Division::H || n % 2 == 0) {
                    out.push_back(FormedSpace::with_dim(type, n));
                }
            }
        }
    return out;
}

int sl2_form_positive(int m) { return (m + 1) / 2; }

int sl2_form_scale(int m) { return ((m - 1) / 2) % 2 == 0 ? 1 : -1; }

FormedSpace tensor_with_sl2(const FormedSpace& a, int m) {
    if (m < 1)
        throw Error(ErrorCode::InvalidSpace, "sl2 module dimension must be positive");
    if (m % 2 == 1) {
        if (a.kind() == InvariantKind::Dimension)
            return FormedSpace::with_dim(a.type(), a.dim() * m);
        const int pos = sl2_form_positive(m);
        const int neg = m / 2;
        return FormedSpace::with_signature(a.type(), a.p() * pos + a.q() * neg, a.p() * neg + a.q() * pos);
    }
    // an alternating factor has a Lagrangian, so the product is split
    const SpaceType out = a.type().flipped();
    const int n = a.dim() * m;
    if (out.kind() == InvariantKind::Signature)
        return FormedSpace::with_signature(out, n / 2, n / 2);
    return FormedSpace::with_dim(out, n);
}

bool embeds(const FormedSpace& a, const FormedSpace& b) {
    if (a.type() != b.type())
        throw Error(ErrorCode::MismatchedType, "embedding between spaces of different types",
                    to_string(a) + " -> " + to_string(b));
    if (a.kind() == InvariantKind::Signature)
        return a.p() <= b.p() && a.q() <= b.q();
    return a.dim() <= b.dim();
}

FormedSpace orth_complement(const FormedSpace& a, const FormedSpace& b) {
    if (!embeds(a, b))
        throw Error(ErrorCode::NotEmbeddable, "space does not embed", to_string(a) + " -> " + to_string(b));
    if (a.kind() == InvariantKind::Signature)
        return FormedSpace::with_signature(a.type(), b.p() - a.p(), b.q() - a.q());
    return FormedSpace::with_dim(a.type(), b.dim() - a.dim());
}

FormedSpace complexify(const FormedSpace& a) {
    if (a.base() == Field::C)
        return a;
    switch (a.division()) {
    case Division::R:
        return FormedSpace::with_dim({Field::C, Division::C, a.epsilon()}, a.dim());
    case Division::H:
        return FormedSpace::with_dim({Field::C, Division::C, -a.epsilon()}, 2 * a.dim());
    case Division::C:
        break;
    }
    throw Error(ErrorCode::UnsupportedBase, "unitary groups complexify to general linear groups, which are not modeled",
                to_string(a));
}

std::string GroupFactor::name() const {
    const auto s = [](int x) { return std::to_string(x); };
    // definite forms: O(n), U(n), Sp(n)
    const auto pq = [&] { return p == 0 || q == 0 ? s(p + q) : s(p) + "," + s(q); };
    switch (family) {
    case GroupFamily::O: return "O(" + pq() + ")";
    case GroupFamily::SpR: return "Sp(" + s(p) + ",R)";
    case GroupFamily::U: return "U(" + pq() + ")";
    case GroupFamily::SpPQ: return "Sp(" + pq() + ")";
    case GroupFamily::OStar: return "O*(" + s(2 * p) + ")";
    case GroupFamily::OC: return "O(" + s(p) + ",C)";
    case GroupFamily::SpC: return "Sp(" + s(p) + ",C)";
    }
    return "?";
}

int GroupFactor::lie_dim() const {
    const int n = p + q;
    switch (family) {
    case GroupFamily::O:
    case GroupFamily::OC: return n * (n - 1) / 2;
    case GroupFamily::SpR:
    case GroupFamily::SpC: return n * (n + 1) / 2;
    case GroupFamily::U: return n * n;
    case GroupFamily::SpPQ: return n * (2 * n + 1);
    case GroupFamily::OStar: return n * (2 * n - 1);
    }
    return 0;
}

std::string GroupDescriptor::name() const {
    if (factors.empty())
        return "1";
    std::string out;
    for (const auto& f : factors)
        out += (out.empty() ? "" : " x ") + f.name();
    return out;
}

int GroupDescriptor::lie_dim() const {
    int total = 0;
    for (const auto& f : factors)
        total += f.lie_dim();
    return total;
}

GroupDescriptor& GroupDescriptor::operator*=(const GroupDescriptor& other) {
    factors.insert(factors.end(), other.factors.begin(), other.factors.end());
    return *this;
}

GroupDescriptor isometry_group(const FormedSpace& a) {
    if (a.is_zero())
        return {};
    GroupFactor f{GroupFamily::O, a.p(), a.q()};
    if (a.base() == Field::C) {
        f = {a.epsilon() == 1 ? GroupFamily::OC : GroupFamily::SpC, a.dim(), 0};
    } else {
        switch (a.division()) {
        case Division::R:
            f = a.epsilon() == 1 ? GroupFactor{GroupFamily::O, a.p(), a.q()} : GroupFactor{GroupFamily::SpR, a.dim(), 0};
            break;
        case Division::C:
            f = {GroupFamily::U, a.p(), a.q()};
            break;
        case Division::H:
            f = a.epsilon() == 1 ? GroupFactor{GroupFamily::SpPQ, a.p(), a.q()}
                                 : GroupFactor{GroupFamily::OStar, a.dim(), 0};
            break;
        }
    }
    return GroupDescriptor{{f}};
}

std::string to_string(Field f) { return f == Field::R ? "R" : "C"; }

std::string to_string(Division d) {
    switch (d) {
    case Division::R: return "R";
    case Division::C: return "C";
    case Division::H: return "H";
    }
    return "?";
}

std::string to_string(const FormedSpace& a) {
    std::string out = "(" + to_string(a.base()) + "," + to_string(a.division()) + "," +
                      (a.epsilon() == 1 ? "+1" : "-1") + ",";
    if (a.kind() == InvariantKind::Signature)
        out += "(" + std::to_string(a.p()) + "," + std::to_string(a.q()) + "))";
    else
        out += "dim " + std::to_string(a.dim()) + ")";
    return out;
}

} // namespace howe
