#pragma once

#include <cstdint>
#include <vector>

#include "grex/errors.hpp"

namespace grex {

bool is_prime(unsigned p);

/// The elementary abelian group C_p^n.
struct GroupSpec {
    unsigned p;
    unsigned n;

    GroupSpec(unsigned p_, unsigned n_) : p(p_), n(n_) {
        if (!is_prime(p))
            throw UsageError("GroupSpec: p = " + std::to_string(p) + " is not prime");
    }
};

/// Vector over F_p, one residue in [0, p-1] per coordinate.
using FpVector = std::vector<unsigned>;

enum class GeneratorNormalization {
    leading_one,  // first non-zero coordinate (from index 0) equals 1
    trailing_one, // last non-zero coordinate equals 1
};

/// All p^n - 1 non-zero vectors in lexicographic order.
std::vector<FpVector> nonzero_elements(const GroupSpec& spec);

/// One canonical generator per order-p cyclic subgroup, lexicographic order.
/// Length (p^n - 1)/(p - 1).
std::vector<FpVector> cyclic_subgroup_generators(
    const GroupSpec& spec, GeneratorNormalization norm = GeneratorNormalization::leading_one);

} // namespace grex
