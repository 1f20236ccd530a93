#include "grex/rep_coker.hpp"

#include "grex/poly.hpp"

namespace grex {

namespace {

std::size_t pow_size(const GroupSpec& spec) {
    std::size_t v = 1;
    for (unsigned i = 0; i < spec.n; ++i)
        v *= spec.p;
    return v;
}

} // namespace

PairingMatrix pairing_matrix(const GroupSpec& spec, GeneratorNormalization norm) {
    if (spec.n == 0)
        throw UsageError("pairing_matrix: n must be >= 1");
    const auto gens = cyclic_subgroup_generators(spec, norm);
    const auto elts = nonzero_elements(spec);
    PairingMatrix c{spec, gens.size(), elts.size(), {}};
    c.values.resize(c.rows * c.cols);
    for (std::size_t i = 0; i < c.rows; ++i) {
        for (std::size_t j = 0; j < c.cols; ++j) {
            unsigned dot = 0;
            for (unsigned k = 0; k < spec.n; ++k)
                dot = (dot + gens[i][k] * elts[j][k]) % spec.p;
            c.values[i * c.cols + j] = static_cast<std::uint8_t>(dot);
        }
    }
    return c;
}

IntMatrix expand_character_matrix(const PairingMatrix& c) {
    const unsigned p = c.spec.p;
    const std::size_t dim = c.cols; // p^n - 1
    IntMatrix d(dim, dim);
    for (std::size_t row = 0; row < c.rows; ++row)
        for (std::size_t col = 0; col < c.cols; ++col)
            if (unsigned k = c.at(row, col); k != 0)
                d.at((k - 1) + (p - 1) * row, col) = 1;
    return d;
}

AbelianGroupType cokernel_structure(const GroupSpec& spec, const CokerOptions& opt) {
    if (spec.n == 0)
        throw UsageError("cokernel_structure: n must be >= 1");
    const std::size_t dim = pow_size(spec) - 1;
    if (dim > opt.size_ceiling)
        throw UsageError("cokernel_structure: p^n - 1 = " + std::to_string(dim) +
                         " exceeds the size ceiling " + std::to_string(opt.size_ceiling));

    const SmithForm snf = smith_normal_form(expand_character_matrix(pairing_matrix(spec, opt.norm)));
    AbelianGroupType g;
    for (const mpz_class& d : snf.divisors) {
        if (d == 0)
            throw ZeroDivisorError("cokernel_structure: zero elementary divisor (free summand)");
        ++g.counts[d];
    }
    return g;
}

mpz_class structure_exponent(const AbelianGroupType& g) {
    if (g.counts.empty())
        return 1;
    return g.counts.rbegin()->first;
}

std::map<unsigned, mpz_class> predicted_exponents(const GroupSpec& spec, ConjectureRange range) {
    if (spec.n == 0)
        throw UsageError("predicted_exponents: n must be >= 1");
    const unsigned jmax = (range == ConjectureRange::corrected) ? spec.p - 2 : spec.p - 1;
    const IntPoly row = qnomial_row(spec.n, spec.p);
    std::map<unsigned, mpz_class> out;
    for (unsigned k = 0; k < spec.n; ++k) {
        mpz_class e(0);
        for (unsigned j = 0; j <= jmax; ++j)
            e += row.coeff(static_cast<long>(spec.p - 1) * (k + 1) - j);
        out[k] = e;
    }
    return out;
}

ConjectureReport verify_conjecture(const GroupSpec& spec, ConjectureRange range, const CokerOptions& opt) {
    const AbelianGroupType computed = cokernel_structure(spec, opt);
    const auto predicted = predicted_exponents(spec, range);

    // Re-key the computed structure by the p-adic valuation of the order.
    std::map<unsigned, mpz_class> comp;
    for (const auto& [order, mult] : computed.counts) {
        mpz_class v = order;
        unsigned k = 0;
        while (v > 1) {
            if (!mpz_divisible_ui_p(v.get_mpz_t(), spec.p))
                throw ZeroDivisorError("verify_conjecture: divisor " + order.get_str() +
                                       " is not a power of p");
            mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), spec.p);
            ++k;
        }
        comp[k] = static_cast<unsigned long>(mult);
    }

    ConjectureReport report{spec.p, spec.n, {}, true};
    unsigned kmax = spec.n - 1;
    for (const auto& [k, _] : comp)
        kmax = std::max(kmax, k);
    for (unsigned k = 0; k <= kmax; ++k) {
        mpz_class c = comp.count(k) ? comp.at(k) : mpz_class(0);
        mpz_class p = predicted.count(k) ? predicted.at(k) : mpz_class(0);
        bool match = (c == p);
        report.rows.push_back({k, c, p, match});
        report.pass = report.pass && match;
    }
    return report;
}

KTheoryBounds k_theory_lower_bounds(unsigned n) {
    if (n < 1)
        throw UsageError("k_theory_lower_bounds: n must be >= 1");
    KTheoryBounds b{};
    b.complex_bound = (n % 2 == 0) ? n + 1 : n;
    static const unsigned real_offset[8] = {2, 1, 1, 0, 1, 0, 3, 2};
    b.real_bound = n + real_offset[n % 8];
    return b;
}

} // namespace grex
