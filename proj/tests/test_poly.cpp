#include <doctest.h>

#include "grex/poly.hpp"

using namespace grex;

namespace {

// Independent convolution oracle for q-nomial rows.
std::vector<long> conv_row(unsigned x, unsigned q) {
    std::vector<long> row{1};
    for (unsigned i = 0; i < x; ++i) {
        std::vector<long> next(row.size() + q - 1, 0);
        for (std::size_t a = 0; a < row.size(); ++a)
            for (unsigned b = 0; b < q; ++b)
                next[a + b] += row[a];
        row = std::move(next);
    }
    return row;
}

RationalSeries one_over(std::vector<unsigned> pows) {
    IntPoly den = IntPoly::constant(1);
    for (unsigned k : pows) {
        std::vector<mpz_class> c(k + 1, mpz_class(0));
        c[0] = 1;
        c[k] = -1;
        den = den * IntPoly(std::move(c));
    }
    return RationalSeries(IntPoly::constant(1), den);
}

} // namespace

TEST_CASE("qnomial reduces to binomial coefficients at q = 2") {
    for (unsigned x = 0; x <= 10; ++x)
        for (long k = -1; k <= static_cast<long>(x) + 1; ++k) {
            mpz_class binom(0);
            if (k >= 0 && k <= static_cast<long>(x))
                mpz_bin_uiui(binom.get_mpz_t(), x, static_cast<unsigned long>(k));
            CHECK(qnomial(x, 2, k) == binom);
        }
}

TEST_CASE("trinomial row x = 3") {
    const std::vector<long> want = {1, 3, 6, 7, 6, 3, 1};
    const auto oracle = conv_row(3, 3);
    REQUIRE(oracle.size() == want.size());
    for (std::size_t k = 0; k < want.size(); ++k) {
        CHECK(oracle[k] == want[k]);
        CHECK(qnomial(3, 3, static_cast<long>(k)) == want[k]);
    }
}

TEST_CASE("5-nomial coefficient (x=3, k=6)") {
    CHECK(qnomial(3, 5, 6) == 19);
    CHECK(qnomial(3, 5, 6) == conv_row(3, 5)[6]);
}

TEST_CASE("qnomial vanishes outside [0, x(q-1)]") {
    CHECK(qnomial(3, 3, -1) == 0);
    CHECK(qnomial(3, 3, 7) == 0);
    CHECK(qnomial(0, 5, 0) == 1);
}

TEST_CASE("qnomial symmetry and row sums") {
    for (unsigned x = 0; x <= 8; ++x)
        for (unsigned q = 2; q <= 7; ++q) {
            const long top = static_cast<long>(x) * (q - 1);
            mpz_class sum(0), qx;
            mpz_ui_pow_ui(qx.get_mpz_t(), q, x);
            for (long k = 0; k <= top; ++k) {
                CHECK(qnomial(x, q, k) == qnomial(x, q, top - k));
                sum += qnomial(x, q, k);
            }
            CHECK(sum == qx);
        }
}

TEST_CASE("expand of geometric series") {
    const auto c = one_over({1}).expand(4);
    for (int k = 0; k <= 4; ++k)
        CHECK(c[k] == 1);
}

TEST_CASE("expand of 1/((1-t)(1-t^2))") {
    const auto c = one_over({1, 2}).expand(5);
    const std::vector<long> want = {1, 1, 2, 2, 3, 3};
    for (std::size_t k = 0; k < want.size(); ++k)
        CHECK(c[k] == want[k]);
}

TEST_CASE("expand of (1+t)/((1-t)(1-t^4))") {
    // Division oracle: coefficients of 1/((1-t)(1-t^4)) count solutions of
    // a + 4b = d; the numerator shifts and adds.
    std::vector<long> base(7, 0);
    for (int d = 0; d <= 6; ++d)
        for (int b = 0; 4 * b <= d; ++b)
            ++base[d];
    std::vector<long> want(7);
    for (int d = 0; d <= 6; ++d)
        want[d] = base[d] + (d > 0 ? base[d - 1] : 0);

    const RationalSeries s(IntPoly{1, 1}, IntPoly{1, -1} * IntPoly{1, 0, 0, 0, -1});
    const auto c = s.expand(6);
    for (int d = 0; d <= 6; ++d)
        CHECK(c[d] == want[d]);
    CHECK(want == std::vector<long>{1, 2, 2, 2, 3, 4, 4});
}

TEST_CASE("expansion of a product is the convolution of expansions") {
    const RationalSeries a(IntPoly{1, 2}, IntPoly{1, -1, 0, 3});
    const RationalSeries b(IntPoly{2, 0, -1}, IntPoly{1, 1, 1});
    const RationalSeries ab(a.num() * b.num(), a.den() * b.den());
    const unsigned T = 16;
    const auto ca = a.expand(T), cb = b.expand(T), cab = ab.expand(T);
    for (unsigned k = 0; k <= T; ++k) {
        mpz_class conv(0);
        for (unsigned i = 0; i <= k; ++i)
            conv += ca[i] * cb[k - i];
        CHECK(conv == cab[k]);
    }
}

TEST_CASE("rational_equal identities") {
    const RationalSeries m16_lhs(IntPoly{1, 1}, IntPoly{1, -1} * IntPoly{1, 0, 0, 0, -1});
    const RationalSeries m16_rhs(IntPoly{1}, IntPoly{1, -1} * IntPoly{1, -1} * IntPoly{1, 0, 1});
    CHECK(rational_equal(m16_lhs, m16_rhs));

    const RationalSeries c4_lhs(IntPoly{1, 2, 1}, IntPoly{1, 0, -1} * IntPoly{1, 0, -1});
    const RationalSeries c4_rhs(IntPoly{1}, IntPoly{1, -1} * IntPoly{1, -1});
    CHECK(rational_equal(c4_lhs, c4_rhs));

    CHECK_FALSE(rational_equal(one_over({1}), one_over({2})));
}

TEST_CASE("rational_equal agrees with truncated expansion on the bundled identities") {
    for (const SeriesIdentity& id : poincare_identities()) {
        const RationalSeries lhs = linear_combination(id.lhs);
        const bool eq = rational_equal(lhs, id.rhs);
        const auto ca = lhs.expand(32), cb = id.rhs.expand(32);
        CHECK(eq == (ca == cb));
    }
}

TEST_CASE("linear_combination assembles the M16 numerator identity") {
    const IntPoly t = IntPoly::monomial(1);
    const IntPoly one_minus_t{1, -1};
    std::vector<std::pair<int, RationalSeries>> terms = {
        {+1, RationalSeries(IntPoly{1}, IntPoly{1})},
        {+1, RationalSeries(one_minus_t * IntPoly::monomial(2), IntPoly{1})},
        {+1, RationalSeries(IntPoly::monomial(3), IntPoly{1})},
        {+1, RationalSeries(t * IntPoly{1, 0, 1} * one_minus_t, IntPoly{1})},
        {-1, RationalSeries(IntPoly::monomial(3) * one_minus_t, IntPoly{1})},
    };
    CHECK(rational_equal(linear_combination(terms), RationalSeries(IntPoly{1, 1}, IntPoly{1})));
}

TEST_CASE("linear_combination: x - x = 0") {
    const RationalSeries x(IntPoly{3, 1, 4}, IntPoly{1, -2, 0, 5});
    const RationalSeries zero = linear_combination({{+1, x}, {-1, x}});
    CHECK(zero.num().is_zero());
}

TEST_CASE("SD16 line sum") {
    const IntPoly m1{1, -1};
    const IntPoly m4{1, 0, 0, 0, -1};
    std::vector<std::pair<int, RationalSeries>> terms = {
        {+1, RationalSeries(IntPoly{1, 0, 0, 1}, m1 * m4)},
        {+1, RationalSeries(IntPoly::monomial(1), m4)},
        {+1, RationalSeries(IntPoly::monomial(2), m4)},
    };
    const RationalSeries rhs(IntPoly{1}, m1 * m1 * IntPoly{1, 0, 1});
    CHECK(rational_equal(linear_combination(terms), rhs));
}

TEST_CASE("denominator normalization and errors") {
    const RationalSeries s(IntPoly{1}, IntPoly{-1, 1}); // 1/(t-1) -> (-1)/(1-t)
    CHECK(s.den().coeff(0) == 1);
    CHECK(s.num().coeff(0) == -1);
    CHECK_THROWS_AS(RationalSeries(IntPoly{1}, IntPoly{0, 1}), NonUnitDenominator);
    CHECK_THROWS_AS(RationalSeries(IntPoly{1}, IntPoly{2}), NonUnitDenominator);
    CHECK_THROWS_AS(RationalSeries(IntPoly{1}, IntPoly()), NonUnitDenominator);
}

TEST_CASE("identity suite passes, a perturbed copy fails") {
    for (const IdentityCheck& c : poincare_identity_suite())
        CHECK_MESSAGE(c.pass, c.name);

    auto perturbed = poincare_identities();
    auto& victim = perturbed[2]; // m16 total series
    victim.lhs[0].second =
        RationalSeries(victim.lhs[0].second.num() + IntPoly::monomial(1), victim.lhs[0].second.den());
    const auto checks = poincare_identity_suite(perturbed);
    CHECK_FALSE(checks[2].pass);
    CHECK(checks[0].pass);
}

TEST_CASE("polynomial printing") {
    CHECK(IntPoly{1, 1}.str() == "1 + t");
    CHECK(IntPoly({0, 0, -2}).str() == "-2*t^2");
    CHECK(IntPoly().str() == "0");
}
