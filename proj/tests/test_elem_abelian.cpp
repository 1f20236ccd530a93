#include <doctest.h>

#include <algorithm>
#include <set>

#include "grex/elem_abelian.hpp"

using namespace grex;

TEST_CASE("GroupSpec validates primality") {
    CHECK_NOTHROW(GroupSpec(2, 3));
    CHECK_NOTHROW(GroupSpec(11, 1));
    CHECK_THROWS_AS(GroupSpec(1, 1), UsageError);
    CHECK_THROWS_AS(GroupSpec(4, 2), UsageError);
    CHECK_THROWS_AS(GroupSpec(9, 1), UsageError);
}

TEST_CASE("generators for (2,1) and (2,2)") {
    CHECK(cyclic_subgroup_generators(GroupSpec(2, 1)) == std::vector<FpVector>{{1}});
    const std::vector<FpVector> want = {{0, 1}, {1, 0}, {1, 1}};
    CHECK(cyclic_subgroup_generators(GroupSpec(2, 2)) == want);
}

TEST_CASE("generator count is (p^n - 1)/(p - 1)") {
    CHECK(cyclic_subgroup_generators(GroupSpec(3, 3)).size() == 13);
    CHECK(cyclic_subgroup_generators(GroupSpec(5, 2)).size() == 6);
    CHECK(cyclic_subgroup_generators(GroupSpec(7, 2)).size() == 8);
}

TEST_CASE("nonzero elements") {
    const std::vector<FpVector> want22 = {{0, 1}, {1, 0}, {1, 1}};
    CHECK(nonzero_elements(GroupSpec(2, 2)) == want22);
    const std::vector<FpVector> want31 = {{1}, {2}};
    CHECK(nonzero_elements(GroupSpec(3, 1)) == want31);
    CHECK(nonzero_elements(GroupSpec(2, 8)).size() == 255);
}

TEST_CASE("n = 0 gives empty enumerations") {
    CHECK(nonzero_elements(GroupSpec(3, 0)).empty());
    CHECK(cyclic_subgroup_generators(GroupSpec(3, 0)).empty());
}

TEST_CASE("trailing-one convention for (3,2)") {
    const std::vector<FpVector> want = {{0, 1}, {1, 0}, {1, 1}, {2, 1}};
    CHECK(cyclic_subgroup_generators(GroupSpec(3, 2), GeneratorNormalization::trailing_one) == want);
}

namespace {

FpVector scale(const FpVector& v, unsigned c, unsigned p) {
    FpVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = (v[i] * c) % p;
    return out;
}

} // namespace

TEST_CASE("every non-zero vector is a scalar multiple of exactly one generator") {
    for (auto [p, n] : std::initializer_list<std::pair<unsigned, unsigned>>{{2, 3}, {3, 2}, {5, 2}, {7, 1}}) {
        const GroupSpec spec(p, n);
        for (auto norm : {GeneratorNormalization::leading_one, GeneratorNormalization::trailing_one}) {
            const auto gens = cyclic_subgroup_generators(spec, norm);
            const auto elts = nonzero_elements(spec);
            CHECK(gens.size() * (p - 1) == elts.size());

            // sorted and duplicate-free
            CHECK(std::is_sorted(gens.begin(), gens.end()));
            CHECK(std::is_sorted(elts.begin(), elts.end()));
            CHECK(std::adjacent_find(gens.begin(), gens.end()) == gens.end());
            CHECK(std::adjacent_find(elts.begin(), elts.end()) == elts.end());

            for (const FpVector& v : elts) {
                std::size_t hits = 0;
                for (const FpVector& g : gens)
                    for (unsigned c = 1; c < p; ++c)
                        if (scale(g, c, p) == v)
                            ++hits;
                CHECK(hits == 1);
            }
        }
    }
}
