#include "grex/int_matrix.hpp"

#include <algorithm>

namespace grex {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<mpz_class>& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m.at(i, i) = d[i];
    return m;
}

namespace {

// Working copy with cheap row swaps.
struct Work {
    std::vector<std::vector<mpz_class>> row;
    std::size_t nrows, ncols;

    explicit Work(const IntMatrix& m) : nrows(m.rows()), ncols(m.cols()) {
        row.resize(nrows);
        for (std::size_t i = 0; i < nrows; ++i) {
            row[i].resize(ncols);
            for (std::size_t j = 0; j < ncols; ++j)
                row[i][j] = m.at(i, j);
        }
    }

    void swap_rows(std::size_t a, std::size_t b) { std::swap(row[a], row[b]); }

    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < nrows; ++i)
            std::swap(row[i][a], row[i][b]);
    }

    // row[i] -= q * row[t], columns from `from` on (earlier ones are zero).
    void submul_row(std::size_t i, std::size_t t, const mpz_class& q, std::size_t from) {
        for (std::size_t j = from; j < ncols; ++j)
            mpz_submul(row[i][j].get_mpz_t(), q.get_mpz_t(), row[t][j].get_mpz_t());
    }

    void submul_col(std::size_t j, std::size_t t, const mpz_class& q, std::size_t from) {
        for (std::size_t i = from; i < nrows; ++i)
            mpz_submul(row[i][j].get_mpz_t(), q.get_mpz_t(), row[i][t].get_mpz_t());
    }
};

// Entry of minimal non-zero absolute value in the submatrix [t.., t..];
// ties resolved by least fill-in (fewest other non-zeros in the pivot's row
// and column), which keeps intermediate entries small on the large dense
// instances.
bool find_pivot(const Work& w, std::size_t t, std::size_t& pi, std::size_t& pj) {
    std::vector<std::size_t> rnnz(w.nrows, 0), cnnz(w.ncols, 0);
    for (std::size_t i = t; i < w.nrows; ++i)
        for (std::size_t j = t; j < w.ncols; ++j)
            if (w.row[i][j] != 0) {
                ++rnnz[i];
                ++cnnz[j];
            }

    bool found = false;
    std::size_t best_cost = 0;
    for (std::size_t i = t; i < w.nrows; ++i) {
        for (std::size_t j = t; j < w.ncols; ++j) {
            const mpz_class& v = w.row[i][j];
            if (v == 0)
                continue;
            const int cmp = found ? mpz_cmpabs(v.get_mpz_t(), w.row[pi][pj].get_mpz_t()) : -1;
            const std::size_t cost = (rnnz[i] - 1) * (cnnz[j] - 1);
            if (cmp < 0 || (cmp == 0 && cost < best_cost)) {
                pi = i;
                pj = j;
                best_cost = cost;
                found = true;
            }
        }
    }
    return found;
}

// Quotient rounded to nearest, so the remainder has at most half the
// pivot's absolute value.
void nearest_div(mpz_class& q, const mpz_class& a, const mpz_class& b) {
    static thread_local mpz_class rem, twice;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    twice = abs(rem) * 2;
    if (mpz_cmpabs(twice.get_mpz_t(), b.get_mpz_t()) > 0)
        q += (mpz_sgn(rem.get_mpz_t()) == mpz_sgn(b.get_mpz_t())) ? 1 : -1;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    Work w(m);
    const std::size_t r = std::min(w.nrows, w.ncols);
    SmithForm out;
    out.divisors.assign(r, mpz_class(0));

    mpz_class q, rem;
    for (std::size_t t = 0; t < r; ++t) {
        for (;;) {
            std::size_t pi = t, pj = t;
            if (!find_pivot(w, t, pi, pj))
                goto done; // remaining submatrix is zero
            if (pi != t)
                w.swap_rows(t, pi);
            if (pj != t)
                w.swap_cols(t, pj);

            const mpz_class& p = w.row[t][t];
            // One elimination round; remainders smaller than the pivot may
            // survive and become the pivot on the next scan.
            for (std::size_t i = t + 1; i < w.nrows; ++i) {
                if (w.row[i][t] == 0)
                    continue;
                nearest_div(q, w.row[i][t], p);
                if (q != 0)
                    w.submul_row(i, t, q, t);
            }
            for (std::size_t j = t + 1; j < w.ncols; ++j) {
                if (w.row[t][j] == 0)
                    continue;
                nearest_div(q, w.row[t][j], p);
                if (q != 0)
                    w.submul_col(j, t, q, t);
            }

            bool clear = true;
            for (std::size_t i = t + 1; i < w.nrows && clear; ++i)
                clear = (w.row[i][t] == 0);
            for (std::size_t j = t + 1; j < w.ncols && clear; ++j)
                clear = (w.row[t][j] == 0);
            if (!clear)
                continue;

            // Divisibility fix-up: the pivot must divide the rest of the
            // submatrix; if not, fold the offending row into row t and redo.
            bool fixed = true;
            for (std::size_t i = t + 1; i < w.nrows && fixed; ++i) {
                for (std::size_t j = t + 1; j < w.ncols; ++j) {
                    mpz_tdiv_r(rem.get_mpz_t(), w.row[i][j].get_mpz_t(), p.get_mpz_t());
                    if (rem != 0) {
                        for (std::size_t jj = t; jj < w.ncols; ++jj)
                            w.row[t][jj] += w.row[i][jj];
                        fixed = false;
                        break;
                    }
                }
            }
            if (fixed)
                break;
        }
        out.divisors[t] = abs(w.row[t][t]);
    }

done:
    out.rank = 0;
    for (const mpz_class& d : out.divisors)
        if (d != 0)
            ++out.rank;
    return out;
}

mpz_class determinant(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw UsageError("determinant: matrix must be square");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;

    // Bareiss fraction-free elimination.
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m.at(i, j);

    mpz_class prev(1);
    int sign = 1;
    mpz_class num;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && a[s][k] == 0)
                ++s;
            if (s == n)
                return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : mpz_class(-a[n - 1][n - 1]);
}

namespace {

// All k-subsets of {0..n-1} in lexicographic order.
bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
    const std::size_t k = s.size();
    std::size_t i = k;
    while (i-- > 0) {
        if (s[i] + (k - i) < n) {
            ++s[i];
            for (std::size_t j = i + 1; j < k; ++j)
                s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_subset(std::size_t k) {
    std::vector<std::size_t> s(k);
    for (std::size_t i = 0; i < k; ++i)
        s[i] = i;
    return s;
}

} // namespace

mpz_class minor_gcd(const IntMatrix& m, std::size_t k) {
    if (k < 1 || k > std::min(m.rows(), m.cols()))
        throw UsageError("minor_gcd: k out of range");

    mpz_class g(0);
    std::vector<std::size_t> rows = first_subset(k);
    do {
        std::vector<std::size_t> cols = first_subset(k);
        do {
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    sub.at(i, j) = m.at(rows[i], cols[j]);
            mpz_class d = determinant(sub);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            if (g == 1)
                return g;
        } while (next_subset(cols, m.cols()));
    } while (next_subset(rows, m.rows()));
    return g;
}

} // namespace grex
