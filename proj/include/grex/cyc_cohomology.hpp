#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "grex/f2poly.hpp"
#include "grex/poly.hpp"

namespace grex {

/// Row vectors over F2, used for the degreewise elimination.
class F2Matrix {
  public:
    F2Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t i, std::size_t j, bool v = true);
    bool get(std::size_t i, std::size_t j) const;

    std::size_t rank() const;
    /// Basis of { x : x M = 0 } (combinations of rows summing to zero),
    /// each vector given as coefficients over the rows.
    std::vector<std::vector<std::uint8_t>> left_kernel() const;
    /// Rank of this matrix stacked on top of `other` (same column count).
    std::size_t stacked_rank(const F2Matrix& other) const;

  private:
    std::size_t rows_, cols_, words_;
    std::vector<std::uint64_t> bits_;
};

/// A graded F2 algebra together with one ring endomorphism g, standing for
/// the action of a generator of a cyclic 2-group of order q on the algebra.
struct GradedAction {
    Presentation pres;
    RingMap action;
    unsigned group_order; // q = 2^m, q >= 2

    GradedAction(Presentation p, RingMap a, unsigned q);
};

/// dim ker(1+g) on the degree-t monomial basis (over F2, 1-g = 1+g).
unsigned invariants_dim(const GradedAction& ga, unsigned t);

/// dim coker(1+g) on the degree-t basis.
unsigned coinvariants_dim(const GradedAction& ga, unsigned t);

/// E2-row dimensions from the 2-periodic resolution with alternating maps
/// 1+g and the norm N = sum_{i<q} g^i, both over F2:
///   s = 0        -> ker(1+g)
///   s odd        -> ker(N) / im(1+g)
///   s even >= 2  -> ker(1+g) / im(N)
struct RowTable {
    unsigned s_max, t_max;
    std::vector<unsigned> dims; // (s_max+1) x (t_max+1), row major

    unsigned at(unsigned s, unsigned t) const { return dims[s * (t_max + 1) + t]; }
};

RowTable row_dims(const GradedAction& ga, unsigned s_max, unsigned t_max);

/// Row s matches the series expansion degreewise through degree T.
bool verify_row_series(const GradedAction& ga, unsigned s, const RationalSeries& expected, unsigned T);

struct GenerationDegreeReport {
    unsigned degree;
    bool surjective;
    unsigned kernel_dim;
};

/// For each degree d <= T, the image of (invariants (x) gens) in the
/// coinvariants under multiply-then-project: surjectivity and the kernel
/// dimension of the assembled map.
std::vector<GenerationDegreeReport> module_generation_check(const GradedAction& ga,
                                                            const std::vector<F2Poly>& gens,
                                                            unsigned T);

/// Matrix of (1+g) on the degree-t basis (rows = images of basis monomials).
F2Matrix one_plus_g_matrix(const GradedAction& ga, unsigned t);
/// Matrix of the norm sum_{i<q} g^i on the degree-t basis.
F2Matrix norm_matrix(const GradedAction& ga, unsigned t);

} // namespace grex
