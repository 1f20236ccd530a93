#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "grex/errors.hpp"

namespace grex {

/// Dense integer polynomial in one variable t; coefficient index = degree.
/// Trailing zero coefficients are trimmed, so the zero polynomial is empty.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(long c) { return IntPoly({c}); }
    // c * t^d
    static IntPoly monomial(unsigned d, long c = 1);

    const std::vector<mpz_class>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    mpz_class coeff(long k) const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    bool operator==(const IntPoly&) const = default;

    std::string str() const; // e.g. "1 + t - 2*t^3"

  private:
    void trim();
    std::vector<mpz_class> c_;
};

/// Coefficient of t^k in (1 + t + ... + t^{q-1})^x.  Zero outside [0, x(q-1)].
mpz_class qnomial(unsigned x, unsigned q, long k);

/// The whole coefficient row of (1 + t + ... + t^{q-1})^x.
IntPoly qnomial_row(unsigned x, unsigned q);

/// num/den as an exact power series.  The denominator must have constant
/// term +-1; the sign is normalized so that it is +1.
class RationalSeries {
  public:
    RationalSeries(IntPoly num, IntPoly den);
    static RationalSeries from_factors(IntPoly num, const std::vector<IntPoly>& den_factors);

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    /// Power series coefficients c_0..c_T, exact.
    std::vector<mpz_class> expand(unsigned T) const;

    bool operator==(const RationalSeries&) const = default;

  private:
    IntPoly num_, den_;
};

/// Exact equality of rational functions: cross-multiplied polynomial identity.
bool rational_equal(const RationalSeries& a, const RationalSeries& b);

/// Signed sum over a common denominator; signs are +1 / -1.
RationalSeries linear_combination(const std::vector<std::pair<int, RationalSeries>>& terms);

struct SeriesIdentity {
    std::string name;
    std::vector<std::pair<int, RationalSeries>> lhs;
    RationalSeries rhs;
};

struct IdentityCheck {
    std::string name;
    bool pass = false;
};

/// The bundled list of generating-function identities used by the graded
/// computations (M16, SD16, C4xC4 semidirect, D8*C4 central product).
const std::vector<SeriesIdentity>& poincare_identities();

std::vector<IdentityCheck> poincare_identity_suite(const std::vector<SeriesIdentity>& identities);
std::vector<IdentityCheck> poincare_identity_suite();

} // namespace grex
