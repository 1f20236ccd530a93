#include <doctest.h>

#include <set>

#include "grex/fixtures.hpp"
#include "grex/isotropy.hpp"

using namespace grex;

namespace {

const std::string kFixtures = GREX_FIXTURE_DIR;

RepMatrixGroup closed_rep(const std::string& file, std::size_t order) {
    Fixture f = load_fixture(kFixtures + "/" + file);
    const auto& fx = std::get<RepGroupFixture>(f);
    return group_closure(fx.generators, order);
}

std::vector<std::size_t> indices_of(const RepMatrixGroup& rep, const std::vector<Mat4>& mats) {
    std::vector<std::size_t> out;
    for (const Mat4& m : mats) {
        const int idx = rep.index_of(m);
        REQUIRE(idx >= 0);
        out.push_back(static_cast<std::size_t>(idx));
    }
    std::sort(out.begin(), out.end());
    return out;
}

const Mat4& by_label(const RepMatrixGroup& rep, const std::string& label) {
    for (const GroupElement& e : rep.elements)
        if (e.label == label)
            return e.mat;
    FAIL("missing element ", label);
    return rep.elements[0].mat;
}

} // namespace

TEST_CASE("Q(sqrt2) arithmetic") {
    const QSqrt2 a(mpq_class(1), mpq_class(1));  // 1 + sqrt2
    const QSqrt2 b(mpq_class(1), mpq_class(-1)); // 1 - sqrt2
    CHECK(a * b == QSqrt2(-1));
    CHECK(QSqrt2::half_sqrt2() * QSqrt2::half_sqrt2() == QSqrt2(mpq_class(1, 2), mpq_class(0)));
    CHECK(a * a.inverse() == QSqrt2(1));
    CHECK_THROWS_AS(QSqrt2().inverse(), UsageError);
    CHECK((a - a).is_zero());
}

TEST_CASE("group closures have the declared orders") {
    CHECK(closed_rep("m16_rep.json", 16).order() == 16);
    CHECK(closed_rep("sd16_rep.json", 16).order() == 16);
    CHECK(closed_rep("d8cpc4_rep.json", 16).order() == 16);
    CHECK(closed_rep("q8_rep.json", 8).order() == 8);
    CHECK(group_closure({{"e", Mat4::identity()}}, 1).order() == 1);
}

TEST_CASE("closure size mismatches are rejected") {
    Fixture f = load_fixture(kFixtures + "/m16_rep.json");
    const auto& fx = std::get<RepGroupFixture>(f);
    CHECK_THROWS_AS(group_closure(fx.generators, 8), OrderMismatch);
    CHECK_THROWS_AS(group_closure(fx.generators, 32), OrderMismatch);
}

TEST_CASE("generators must be orthogonal") {
    Mat4 bad = Mat4::identity();
    bad.at(0, 0) = QSqrt2(2);
    CHECK_THROWS_AS(group_closure({{"a", bad}}, 1), IllFormed);
}

TEST_CASE("fixed lines in the M16 representation") {
    const RepMatrixGroup rep = closed_rep("m16_rep.json", 16);
    const Mat4& r = by_label(rep, "r");
    const Mat4& f = by_label(rep, "f");
    const Mat4 r2 = r * r, r4 = r2 * r2;

    // r^4 = -Id fixes every line
    CHECK(r4 == -Mat4::identity());
    const auto all = fixed_line_components(r4);
    REQUIRE(all.size() == 1);
    CHECK(all[0].dim() == 4);

    // f r^2 fixes no line
    CHECK(fixed_line_components(f * r2).empty());

    // f r^4 = -T is an involution: its +1 eigenspace is the plane
    // x1 = -x2, y1 = -y2, its -1 eigenspace the complementary diagonal.
    const auto comps = fixed_line_components(f * r4);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].dim() == 2);
    CHECK(comps[1].dim() == 2);
    const Subspace anti = make_subspace(
        {Vec4{QSqrt2(1), QSqrt2(0), QSqrt2(-1), QSqrt2(0)}, Vec4{QSqrt2(0), QSqrt2(1), QSqrt2(0), QSqrt2(-1)}});
    CHECK(comps[0] == anti);
    const Subspace diag = make_subspace(
        {Vec4{QSqrt2(1), QSqrt2(0), QSqrt2(1), QSqrt2(0)}, Vec4{QSqrt2(0), QSqrt2(1), QSqrt2(0), QSqrt2(1)}});
    CHECK(comps[1] == diag);
}

TEST_CASE("eigenspace components really consist of eigenvectors") {
    const RepMatrixGroup rep = closed_rep("m16_rep.json", 16);
    for (const GroupElement& e : rep.elements) {
        for (const Subspace& s : fixed_line_components(e.mat)) {
            for (const Vec4& v : s.basis) {
                const Vec4 gv = e.mat.apply(v);
                bool plus = true, minus = true;
                for (std::size_t i = 0; i < 4; ++i) {
                    plus = plus && (gv[i] == v[i]);
                    minus = minus && (gv[i] == -v[i]);
                }
                CHECK((plus || minus));
            }
        }
        // the +1 and -1 eigenspaces can only intersect in 0
        const auto comps = fixed_line_components(e.mat);
        if (comps.size() == 2)
            CHECK(intersect(comps[0], comps[1]).dim() == 0);
    }
}

TEST_CASE("M16 line stabilizers are contained in the Klein four group") {
    const RepMatrixGroup rep = closed_rep("m16_rep.json", 16);
    const Mat4& r = by_label(rep, "r");
    const Mat4& f = by_label(rep, "f");
    const Mat4 r4 = r * r * r * r;
    const auto klein = indices_of(rep, {Mat4::identity(), f, f * r4, r4});

    const auto pairs = isotropy_subgroups(rep);
    CHECK(pairs.size() == 3);
    for (const auto& p : pairs) {
        CHECK(std::includes(klein.begin(), klein.end(), p.stabilizer.begin(), p.stabilizer.end()));
        CHECK(elementary_abelian_check(rep, p.stabilizer));
    }
}

TEST_CASE("SD16 stabilizers are <r4>, <s,sr4>, <sr2,sr6>") {
    const RepMatrixGroup rep = closed_rep("sd16_rep.json", 16);
    const Mat4& r = by_label(rep, "r");
    const Mat4& s = by_label(rep, "s");
    const Mat4 r2 = r * r, r4 = r2 * r2, r6 = r4 * r2;

    std::set<std::vector<std::size_t>> want = {
        indices_of(rep, {Mat4::identity(), r4}),
        indices_of(rep, {Mat4::identity(), s, s * r4, r4}),
        indices_of(rep, {Mat4::identity(), s * r2, s * r6, r4}),
    };
    std::set<std::vector<std::size_t>> got;
    for (const auto& p : isotropy_subgroups(rep))
        got.insert(p.stabilizer);
    CHECK(got == want);
}

TEST_CASE("D8*C4 maximal stabilizers are the three Klein four groups") {
    const RepMatrixGroup rep = closed_rep("d8cpc4_rep.json", 16);
    const Mat4& s = by_label(rep, "s");
    const Mat4& r = by_label(rep, "r");
    const Mat4& g = by_label(rep, "g");
    const Mat4 r2 = r * r, r3 = r2 * r;

    std::set<std::vector<std::size_t>> want = {
        indices_of(rep, {Mat4::identity(), s, s * r2, r2}),
        indices_of(rep, {Mat4::identity(), s * r, s * r3, r2}),
        indices_of(rep, {Mat4::identity(), r * g, r3 * g, r2}),
    };

    std::set<std::vector<std::size_t>> stabs;
    for (const auto& p : isotropy_subgroups(rep))
        stabs.insert(p.stabilizer);
    std::set<std::vector<std::size_t>> maximal;
    for (const auto& a : stabs) {
        bool is_max = true;
        for (const auto& b : stabs)
            if (a != b && std::includes(b.begin(), b.end(), a.begin(), a.end()))
                is_max = false;
        if (is_max)
            maximal.insert(a);
    }
    CHECK(maximal == want);

    // the central rho^2 = -Id lies in every stabilizer
    const auto central = indices_of(rep, {r2});
    for (const auto& st : stabs)
        CHECK(std::includes(st.begin(), st.end(), central.begin(), central.end()));
}

TEST_CASE("Q8 acts freely away from the center") {
    const RepMatrixGroup rep = closed_rep("q8_rep.json", 8);
    const auto pairs = isotropy_subgroups(rep);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].space.dim() == 4);
    const Mat4& i = by_label(rep, "i");
    CHECK(pairs[0].stabilizer == indices_of(rep, {Mat4::identity(), i * i}));
}

TEST_CASE("every returned stabilizer is a subgroup fixing its subspace") {
    for (const char* file : {"m16_rep.json", "sd16_rep.json", "d8cpc4_rep.json", "q8_rep.json"}) {
        const RepMatrixGroup rep = closed_rep(file, std::string(file) == "q8_rep.json" ? 8 : 16);
        for (const auto& p : isotropy_subgroups(rep)) {
            CHECK_NOTHROW(elementary_abelian_check(rep, p.stabilizer)); // closure check inside
            for (const std::size_t idx : p.stabilizer) {
                const Mat4& m = rep.elements[idx].mat;
                for (const Vec4& v : p.space.basis) {
                    const Vec4 mv = m.apply(v);
                    bool plus = true, minus = true;
                    for (std::size_t i = 0; i < 4; ++i) {
                        plus = plus && (mv[i] == v[i]);
                        minus = minus && (mv[i] == -v[i]);
                    }
                    CHECK((plus || minus));
                }
            }
        }
    }
}

TEST_CASE("elementary abelian check") {
    const RepMatrixGroup rep = closed_rep("m16_rep.json", 16);
    const Mat4& r = by_label(rep, "r");
    const Mat4& f = by_label(rep, "f");
    const Mat4 r4 = r * r * r * r;
    CHECK(elementary_abelian_check(rep, indices_of(rep, {Mat4::identity(), f, f * r4, r4})));
    CHECK(elementary_abelian_check(rep, {0}));

    // <r> is closed but has elements of order 8
    std::vector<Mat4> powers{Mat4::identity()};
    for (int k = 0; k < 7; ++k)
        powers.push_back(powers.back() * r);
    CHECK_FALSE(elementary_abelian_check(rep, indices_of(rep, powers)));

    // {e, f, r} is not closed
    CHECK_THROWS_AS(elementary_abelian_check(rep, indices_of(rep, {Mat4::identity(), f, r})),
                    NotASubgroup);
}

TEST_CASE("projective exponent bound") {
    const RepMatrixGroup m16 = closed_rep("m16_rep.json", 16);
    CHECK(projective_exponent_bound(m16, FieldType::real) == 4);
    CHECK(projective_exponent_bound(m16, FieldType::complex_numbers) == 3);
    CHECK(projective_exponent_bound(closed_rep("sd16_rep.json", 16), FieldType::real) == 4);
    CHECK(projective_exponent_bound(closed_rep("d8cpc4_rep.json", 16), FieldType::real) == 4);
    CHECK(projective_exponent_bound(closed_rep("q8_rep.json", 8), FieldType::real) == 4);
}

TEST_CASE("a C4 with a pointwise-fixed plane is rejected by the family check") {
    // rotation by pi/2 on the first summand, identity on the second: the
    // fixed plane has stabilizer C4, which is not elementary abelian.
    Mat4 rot{};
    rot.at(0, 1) = QSqrt2(-1);
    rot.at(1, 0) = QSqrt2(1);
    rot.at(2, 2) = QSqrt2(1);
    rot.at(3, 3) = QSqrt2(1);
    const RepMatrixGroup rep = group_closure({{"r", rot}}, 4);
    CHECK_THROWS_AS(projective_exponent_bound(rep, FieldType::real), IsotropyNotInFamily);
}

TEST_CASE("shortest-word labels") {
    const RepMatrixGroup rep = closed_rep("m16_rep.json", 16);
    CHECK(rep.elements[0].label == "e");
    const Mat4& r = by_label(rep, "r");
    const Mat4& f = by_label(rep, "f");
    const Mat4 r4 = r * r * r * r;
    CHECK(rep.elements[static_cast<std::size_t>(rep.index_of(r4))].label == "r4");
    CHECK(rep.elements[static_cast<std::size_t>(rep.index_of(f * r4))].label == "fr4");
    CHECK(stabilizer_labels(rep, indices_of(rep, {Mat4::identity(), f, f * r4, r4})) ==
          std::vector<std::string>{"e", "f", "fr4", "r4"});
}
