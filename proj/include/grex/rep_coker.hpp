#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

#include "grex/elem_abelian.hpp"
#include "grex/int_matrix.hpp"

namespace grex {

/// Mod-p pairing of cyclic-subgroup generators (rows) against non-identity
/// elements (columns): entry = <generator, element> mod p.
struct PairingMatrix {
    GroupSpec spec;
    std::size_t rows, cols;
    std::vector<std::uint8_t> values; // row major, entries in [0, p-1]

    std::uint8_t at(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
};

/// Isomorphism type of a finite abelian p-group: order -> multiplicity.
/// Trivial summands (order 1) are reported.
struct AbelianGroupType {
    std::map<mpz_class, std::size_t> counts;

    bool operator==(const AbelianGroupType&) const = default;
};

struct CokerOptions {
    GeneratorNormalization norm = GeneratorNormalization::leading_one;
    std::size_t size_ceiling = 1024; // largest accepted p^n - 1
};

PairingMatrix pairing_matrix(const GroupSpec& spec,
                             GeneratorNormalization norm = GeneratorNormalization::leading_one);

/// Square 0/1 matrix of dimension p^n - 1: entry k = C[row, col] != 0 places
/// a 1 at row (k - 1) + (p - 1)*row, same column.
IntMatrix expand_character_matrix(const PairingMatrix& c);

/// Elementary-divisor multiset of the expanded pairing matrix: the cokernel
/// of the representation-ring edge map over the cyclic subgroups.
AbelianGroupType cokernel_structure(const GroupSpec& spec, const CokerOptions& opt = {});

/// Group-theoretic exponent: the largest order present (1 for the trivial group).
mpz_class structure_exponent(const AbelianGroupType& g);

enum class ConjectureRange {
    corrected, // sum j = 0..p-2 (matches every table; the binomial case for p = 2)
    literal,   // sum j = 0..p-1 as printed
};

/// Conjectured multiplicity of Z/p^k for k = 0..n-1 via q-nomial block sums.
std::map<unsigned, mpz_class> predicted_exponents(const GroupSpec& spec,
                                                  ConjectureRange range = ConjectureRange::corrected);

struct ConjectureRow {
    unsigned k;
    mpz_class computed;
    mpz_class predicted;
    bool match;
};

struct ConjectureReport {
    unsigned p, n;
    std::vector<ConjectureRow> rows;
    bool pass;
};

/// Compare the computed cokernel against the prediction, per k.
ConjectureReport verify_conjecture(const GroupSpec& spec,
                                   ConjectureRange range = ConjectureRange::corrected,
                                   const CokerOptions& opt = {});

struct KTheoryBounds {
    unsigned complex_bound;
    unsigned real_bound;
};

/// Lower bounds on the C-exponent of KU and KO for C_2^n: the complex parity
/// formula and the mod-8 case table.
KTheoryBounds k_theory_lower_bounds(unsigned n);

} // namespace grex
