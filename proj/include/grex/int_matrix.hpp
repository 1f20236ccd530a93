#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "grex/errors.hpp"

namespace grex {

/// Dense matrix of arbitrary-precision integers, row major.
class IntMatrix {
  public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, mpz_class(0)) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const std::vector<mpz_class>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    const std::vector<mpz_class>& entries() const { return e_; }

    bool operator==(const IntMatrix&) const = default;

  private:
    std::size_t rows_, cols_;
    std::vector<mpz_class> e_;
};

/// Diagonal of a Smith normal form.  divisors has length min(rows, cols),
/// entries are non-negative, each divides the next, zeros sorted last.
struct SmithForm {
    std::vector<mpz_class> divisors;
    std::size_t rank = 0; // number of non-zero divisors
};

/// Smith normal form by row/column reduction; the pivot is the entry of
/// minimal non-zero absolute value in the remaining submatrix, re-scanned
/// after every elimination round.
SmithForm smith_normal_form(const IntMatrix& m);

/// Exact determinant of a square matrix (Bareiss fraction-free elimination;
/// no code shared with smith_normal_form).
mpz_class determinant(const IntMatrix& m);

/// gcd of all k x k minors (0 if every minor vanishes).  Enumerates all
/// row/column subsets, so only sensible for small matrices.
mpz_class minor_gcd(const IntMatrix& m, std::size_t k);

} // namespace grex
