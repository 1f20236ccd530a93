#include "grex/poly.hpp"

#include <sstream>

namespace grex {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    trim();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs)
        c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::monomial(unsigned d, long c) {
    std::vector<mpz_class> v(d + 1, mpz_class(0));
    v[d] = c;
    return IntPoly(std::move(v));
}

mpz_class IntPoly::coeff(long k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= c_.size())
        return 0;
    return c_[static_cast<std::size_t>(k)];
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        c[i] += b.c_[i];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        c[i] -= b.c_[i];
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero())
        return IntPoly();
    std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        c[i] = -c_[i];
    return IntPoly(std::move(c));
}

std::string IntPoly::str() const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t d = 0; d < c_.size(); ++d) {
        if (c_[d] == 0)
            continue;
        mpz_class a = c_[d];
        if (first) {
            if (a < 0)
                out << "-", a = -a;
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        if (d == 0)
            out << a.get_str();
        else {
            if (a != 1)
                out << a.get_str() << "*";
            out << "t";
            if (d > 1)
                out << "^" << d;
        }
        first = false;
    }
    return out.str();
}

mpz_class qnomial(unsigned x, unsigned q, long k) {
    if (q < 2)
        throw UsageError("qnomial: q must be >= 2");
    if (k < 0 || k > static_cast<long>(x) * static_cast<long>(q - 1))
        return 0;
    return qnomial_row(x, q).coeff(k);
}

IntPoly qnomial_row(unsigned x, unsigned q) {
    if (q < 2)
        throw UsageError("qnomial_row: q must be >= 2");
    std::vector<mpz_class> base(q, mpz_class(1));
    IntPoly b(std::move(base));
    IntPoly row = IntPoly::constant(1);
    for (unsigned i = 0; i < x; ++i)
        row = row * b;
    return row;
}

RationalSeries::RationalSeries(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    mpz_class c0 = den_.coeff(0);
    if (c0 == -1) {
        num_ = -num_;
        den_ = -den_;
    } else if (c0 != 1) {
        throw NonUnitDenominator("denominator constant term is " + c0.get_str() + ", must be +-1");
    }
}

RationalSeries RationalSeries::from_factors(IntPoly num, const std::vector<IntPoly>& den_factors) {
    IntPoly den = IntPoly::constant(1);
    for (const IntPoly& f : den_factors)
        den = den * f;
    return RationalSeries(std::move(num), std::move(den));
}

std::vector<mpz_class> RationalSeries::expand(unsigned T) const {
    // den has constant term 1, so coefficients satisfy
    //   c_k = num_k - sum_{i=1..k} den_i * c_{k-i}.
    std::vector<mpz_class> c(T + 1, mpz_class(0));
    for (unsigned k = 0; k <= T; ++k) {
        mpz_class v = num_.coeff(k);
        for (unsigned i = 1; i <= k && i < den_.coeffs().size(); ++i)
            mpz_submul(v.get_mpz_t(), den_.coeffs()[i].get_mpz_t(), c[k - i].get_mpz_t());
        c[k] = v;
    }
    return c;
}

bool rational_equal(const RationalSeries& a, const RationalSeries& b) {
    return a.num() * b.den() == b.num() * a.den();
}

RationalSeries linear_combination(const std::vector<std::pair<int, RationalSeries>>& terms) {
    IntPoly num;
    IntPoly den = IntPoly::constant(1);
    for (const auto& [sign, r] : terms) {
        IntPoly t = r.num();
        if (sign < 0)
            t = -t;
        num = num * r.den() + t * den;
        den = den * r.den();
    }
    return RationalSeries(std::move(num), std::move(den));
}

namespace {

IntPoly one_minus_t_pow(unsigned k) {
    // 1 - t^k
    std::vector<mpz_class> c(k + 1, mpz_class(0));
    c[0] = 1;
    c[k] = -1;
    return IntPoly(std::move(c));
}

std::vector<SeriesIdentity> build_identities() {
    const IntPoly one = IntPoly::constant(1);
    const IntPoly t = IntPoly::monomial(1);
    const IntPoly m1 = one_minus_t_pow(1);  // 1 - t
    const IntPoly m2 = one_minus_t_pow(2);  // 1 - t^2
    const IntPoly m4 = one_minus_t_pow(4);  // 1 - t^4
    const IntPoly p1 = IntPoly{1, 1};       // 1 + t
    const IntPoly p2 = IntPoly{1, 0, 1};    // 1 + t^2

    auto rs = [](IntPoly n, std::vector<IntPoly> d) { return RationalSeries::from_factors(std::move(n), d); };

    std::vector<SeriesIdentity> ids;

    // Numerator identity behind the M16 total series:
    // 1 + (1-t)t^2 + t^3 + t(1+t^2)(1-t) - t^3(1-t) = 1 + t.
    ids.push_back({"m16 numerator identity",
                   {{+1, rs(one, {})},
                    {+1, rs(m1 * IntPoly::monomial(2), {})},
                    {+1, rs(IntPoly::monomial(3), {})},
                    {+1, rs(t * p2 * m1, {})},
                    {-1, rs(IntPoly::monomial(3) * m1, {})}},
                   rs(p1, {})});

    // M16 limit-page line sum: lines s = 0, 1, 2 add up to the total series.
    ids.push_back({"m16 line sum",
                   {{+1, rs(one, {m1, m4})},
                    {+1, rs(IntPoly::monomial(3), {m1, m4})},
                    {+1, rs(t, {m2})},
                    {-1, rs(IntPoly::monomial(3), {m4})},
                    {+1, rs(IntPoly::monomial(2), {m4})}},
                   rs(p1, {m1, m4})});

    // M16 total: (1+t)/((1-t)(1-t^4)) = 1/((1-t)^2(1+t^2)).
    ids.push_back({"m16 total series",
                   {{+1, rs(p1, {m1, m4})}},
                   rs(one, {m1, m1, p2})});

    // Coinvariants of the swap action on F2[x,y]:
    // (1+t)/(1-t^2)^2 = 1/((1-t)(1-t^2)).
    ids.push_back({"m16 coinvariant series",
                   {{+1, rs(p1, {m2, m2})}},
                   rs(one, {m1, m2})});

    // Kernel of the two-generator presentation of the coinvariants:
    // (1+t)/((1-t)(1-t^2)) - t/((1-t)(1-t^2)) = 1/((1-t)(1-t^2)).
    ids.push_back({"m16 coinvariant kernel balance",
                   {{+1, rs(p1, {m1, m2})}, {-1, rs(t, {m1, m2})}},
                   rs(one, {m1, m2})});

    // SD16 line sum:
    // (1+t^3)/((1-t)(1-t^4)) + t/(1-t^4) + t^2/(1-t^4) = 1/((1-t)^2(1+t^2)).
    ids.push_back({"sd16 line sum",
                   {{+1, rs(IntPoly{1, 0, 0, 1}, {m1, m4})},
                    {+1, rs(t, {m4})},
                    {+1, rs(IntPoly::monomial(2), {m4})}},
                   rs(one, {m1, m1, p2})});

    // C4 semidirect C4: (1+2t+t^2)/(1-t^2)^2 = 1/(1-t)^2.
    ids.push_back({"c4sdc4 total series",
                   {{+1, rs(IntPoly{1, 2, 1}, {m2, m2})}},
                   rs(one, {m1, m1})});

    // D8*C4 0-line before differentials:
    // (1+t)/(1-t^4) + 3t(1+t)/((1-t)(1-t^4)) = (1+3t+2t^2)/((1-t)(1-t^4)).
    ids.push_back({"d8cpc4 0-line assembly",
                   {{+1, rs(p1, {m4})},
                    {+1, rs(t * p1, {m1, m4})},
                    {+1, rs(t * p1, {m1, m4})},
                    {+1, rs(t * p1, {m1, m4})}},
                   rs(IntPoly{1, 3, 2}, {m1, m4})});

    // D8*C4 total after the differentials out of the 0-line:
    // (1+3t+2t^2)/((1-t)(1-t^4)) - (t+t^2)/(1-t^4) = (1+t+t^2)/((1-t)^2(1+t^2)).
    ids.push_back({"d8cpc4 total series",
                   {{+1, rs(IntPoly{1, 3, 2}, {m1, m4})},
                    {-1, rs(IntPoly{0, 1, 1}, {m4})}},
                   rs(IntPoly{1, 1, 1}, {m1, m1, p2})});

    return ids;
}

} // namespace

const std::vector<SeriesIdentity>& poincare_identities() {
    static const std::vector<SeriesIdentity> ids = build_identities();
    return ids;
}

std::vector<IdentityCheck> poincare_identity_suite(const std::vector<SeriesIdentity>& identities) {
    std::vector<IdentityCheck> out;
    out.reserve(identities.size());
    for (const SeriesIdentity& id : identities) {
        RationalSeries lhs = linear_combination(id.lhs);
        out.push_back({id.name, rational_equal(lhs, id.rhs)});
    }
    return out;
}

std::vector<IdentityCheck> poincare_identity_suite() {
    return poincare_identity_suite(poincare_identities());
}

} // namespace grex
