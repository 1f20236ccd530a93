#include "grex/elem_abelian.hpp"

namespace grex {

bool is_prime(unsigned p) {
    if (p < 2)
        return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

namespace {

// Counting in base p with index 0 most significant is exactly the
// lexicographic successor.
bool next_vector(FpVector& v, unsigned p) {
    std::size_t i = v.size();
    while (i-- > 0) {
        if (v[i] + 1 < p) {
            ++v[i];
            return true;
        }
        v[i] = 0;
    }
    return false;
}

bool is_canonical(const FpVector& v, GeneratorNormalization norm) {
    if (norm == GeneratorNormalization::leading_one) {
        for (unsigned c : v)
            if (c != 0)
                return c == 1;
    } else {
        for (std::size_t i = v.size(); i-- > 0;)
            if (v[i] != 0)
                return v[i] == 1;
    }
    return false; // zero vector
}

} // namespace

std::vector<FpVector> nonzero_elements(const GroupSpec& spec) {
    std::vector<FpVector> out;
    if (spec.n == 0)
        return out;
    FpVector v(spec.n, 0);
    while (next_vector(v, spec.p))
        out.push_back(v);
    return out;
}

std::vector<FpVector> cyclic_subgroup_generators(const GroupSpec& spec, GeneratorNormalization norm) {
    std::vector<FpVector> out;
    if (spec.n == 0)
        return out;
    FpVector v(spec.n, 0);
    while (next_vector(v, spec.p))
        if (is_canonical(v, norm))
            out.push_back(v);
    return out;
}

} // namespace grex
