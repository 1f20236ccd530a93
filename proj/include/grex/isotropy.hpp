#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "grex/qsqrt2.hpp"

namespace grex {

using Vec4 = std::array<QSqrt2, 4>;

/// 4x4 matrix over Q(sqrt 2).
struct Mat4 {
    std::array<QSqrt2, 16> e;

    static Mat4 identity();
    static Mat4 zero() { return Mat4{}; }

    QSqrt2& at(std::size_t i, std::size_t j) { return e[4 * i + j]; }
    const QSqrt2& at(std::size_t i, std::size_t j) const { return e[4 * i + j]; }

    friend Mat4 operator*(const Mat4& x, const Mat4& y);
    Vec4 apply(const Vec4& v) const;
    Mat4 transpose() const;
    Mat4 operator-() const;
    bool operator==(const Mat4&) const = default;

    bool is_orthogonal() const; // M^T M = I, exact
};

struct GroupElement {
    std::string label; // word in the generators, exponent-collapsed ("fr4")
    Mat4 mat;
};

/// A finite matrix group given by its full element list, identity first.
struct RepMatrixGroup {
    std::vector<GroupElement> elements;
    std::vector<std::string> generator_names;

    std::size_t order() const { return elements.size(); }
    /// Index of the element with this matrix; -1 if absent.
    int index_of(const Mat4& m) const;
};

/// Multiplicative closure with shortest-word labels (BFS; ties resolved by
/// generator order).  Throws OrderMismatch if the closure size differs from
/// expected_order, and checks that every generator is orthogonal.
RepMatrixGroup group_closure(const std::vector<GroupElement>& generators, std::size_t expected_order);

/// Subspace of Q(sqrt2)^4, basis rows kept in reduced echelon form so that
/// equality of subspaces is equality of representations.
struct Subspace {
    std::vector<Vec4> basis;

    std::size_t dim() const { return basis.size(); }
    bool operator==(const Subspace&) const = default;
    bool operator<(const Subspace& o) const;
    bool contains(const Subspace& other) const; // other <= this
};

Subspace make_subspace(std::vector<Vec4> spanning); // echelonizes
Subspace intersect(const Subspace& s, const Subspace& t);

/// ker(g - I) and ker(g + I), zero-dimensional ones omitted.  For an
/// orthogonal matrix of finite order these eigenspaces carry every real
/// fixed line of g.
std::vector<Subspace> fixed_line_components(const Mat4& g);

struct IsotropyPair {
    Subspace space;
    std::vector<std::size_t> stabilizer; // element indices, sorted
};

/// Eigenspace components of all non-identity elements, closed under pairwise
/// intersection; each subspace paired with the stabilizer of a generic line
/// of it.  Pairs dominated by another pair (subspace and stabilizer both
/// contained) are pruned.
std::vector<IsotropyPair> isotropy_subgroups(const RepMatrixGroup& rep);

/// True iff the element set is an elementary abelian 2-group: closed (else
/// NotASubgroup), every element squares to the identity, all pairs commute.
bool elementary_abelian_check(const RepMatrixGroup& rep, const std::vector<std::size_t>& subgroup);

enum class FieldType { real, complex_numbers };

/// Exponent bound cn - c + 1 from the real dimension cn = 4 of the
/// representation; requires every isotropy subgroup to be elementary abelian
/// (else IsotropyNotInFamily).
unsigned projective_exponent_bound(const RepMatrixGroup& rep, FieldType field);

/// Labels of the given element indices, sorted.
std::vector<std::string> stabilizer_labels(const RepMatrixGroup& rep, const std::vector<std::size_t>& subgroup);

} // namespace grex
