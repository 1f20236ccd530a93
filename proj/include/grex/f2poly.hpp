#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "grex/errors.hpp"

namespace grex {

/// Exponent vector over the generators of a presentation.
using Exponents = std::vector<unsigned>;

struct F2Generator {
    std::string name;
    unsigned degree; // positive

    bool operator==(const F2Generator&) const = default;
};

/// Graded F2 polynomial algebra with weighted generators modulo a monomial
/// relation ideal.
class Presentation {
  public:
    Presentation(std::vector<F2Generator> gens, std::vector<Exponents> relations);

    const std::vector<F2Generator>& generators() const { return gens_; }
    const std::vector<Exponents>& relations() const { return rels_; }
    std::size_t ngens() const { return gens_.size(); }

    int generator_index(std::string_view name) const; // -1 if absent
    unsigned degree_of(const Exponents& m) const;
    /// Not divisible by any relation monomial.
    bool reduced(const Exponents& m) const;

    bool operator==(const Presentation&) const = default;

  private:
    std::vector<F2Generator> gens_;
    std::vector<Exponents> rels_;
};

/// Element of the quotient: a set of reduced monomials (coefficients are 1).
/// Addition is symmetric difference.
class F2Poly {
  public:
    F2Poly() = default;
    explicit F2Poly(std::vector<Exponents> monomials); // XORs duplicates away

    static F2Poly one(std::size_t ngens) { return F2Poly({Exponents(ngens, 0)}); }
    static F2Poly generator(std::size_t ngens, std::size_t i);

    const std::set<Exponents>& monomials() const { return m_; }
    bool is_zero() const { return m_.empty(); }

    friend F2Poly operator+(const F2Poly& a, const F2Poly& b); // symmetric difference
    bool operator==(const F2Poly&) const = default;
    bool operator<(const F2Poly& o) const { return m_ < o.m_; }

  private:
    std::set<Exponents> m_;
};

/// Product in the quotient: monomials that land in the relation ideal vanish.
F2Poly multiply(const Presentation& pres, const F2Poly& a, const F2Poly& b);

/// Degree if homogeneous (the zero polynomial counts as homogeneous of any
/// degree); nullopt otherwise.
std::optional<unsigned> homogeneous_degree(const Presentation& pres, const F2Poly& p);

/// Dimension of the degree-d piece of the quotient.
unsigned graded_dimension(const Presentation& pres, unsigned d);

/// The monomial basis counted by graded_dimension, graded-lexicographic
/// (exponent of the first generator decreasing first).
std::vector<Exponents> enumerate_basis(const Presentation& pres, unsigned d);

/// Ring endomorphism of the quotient given by generator images.  Construction
/// checks that images are homogeneous of the right degree and that every
/// relation maps to zero in the quotient.
class RingMap {
  public:
    RingMap(Presentation domain, std::vector<F2Poly> images);

    static RingMap identity(const Presentation& pres);

    const Presentation& domain() const { return domain_; }
    const F2Poly& image(std::size_t i) const { return images_[i]; }
    const std::vector<F2Poly>& images() const { return images_; }

    bool operator==(const RingMap&) const = default;

  private:
    Presentation domain_;
    std::vector<F2Poly> images_;
};

/// Substitute generator images and reduce.  The input must be reduced.
F2Poly apply_map(const RingMap& f, const F2Poly& p);

/// Smallest m <= bound with f^m = id on the generators; nullopt if none.
std::optional<unsigned> map_order(const RingMap& f, unsigned bound);

} // namespace grex
