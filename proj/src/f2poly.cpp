#include "grex/f2poly.hpp"

#include <algorithm>

namespace grex {

namespace {

bool divides(const Exponents& a, const Exponents& b) {
    // a | b as monomials
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

} // namespace

Presentation::Presentation(std::vector<F2Generator> gens, std::vector<Exponents> relations)
    : gens_(std::move(gens)), rels_(std::move(relations)) {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].degree == 0)
            throw IllFormed("Presentation: generator " + gens_[i].name + " has degree 0");
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            if (gens_[i].name == gens_[j].name)
                throw IllFormed("Presentation: duplicate generator name " + gens_[i].name);
    }
    for (const Exponents& r : rels_) {
        if (r.size() != gens_.size())
            throw IllFormed("Presentation: relation arity mismatch");
        bool constant = std::all_of(r.begin(), r.end(), [](unsigned e) { return e == 0; });
        if (constant)
            throw IllFormed("Presentation: constant relation");
    }
}

int Presentation::generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name)
            return static_cast<int>(i);
    return -1;
}

unsigned Presentation::degree_of(const Exponents& m) const {
    unsigned d = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        d += m[i] * gens_[i].degree;
    return d;
}

bool Presentation::reduced(const Exponents& m) const {
    for (const Exponents& r : rels_)
        if (divides(r, m))
            return false;
    return true;
}

F2Poly::F2Poly(std::vector<Exponents> monomials) {
    for (Exponents& m : monomials) {
        auto it = m_.find(m);
        if (it != m_.end())
            m_.erase(it); // characteristic 2
        else
            m_.insert(std::move(m));
    }
}

F2Poly F2Poly::generator(std::size_t ngens, std::size_t i) {
    Exponents e(ngens, 0);
    e[i] = 1;
    return F2Poly({std::move(e)});
}

F2Poly operator+(const F2Poly& a, const F2Poly& b) {
    F2Poly out = a;
    for (const Exponents& m : b.m_) {
        auto it = out.m_.find(m);
        if (it != out.m_.end())
            out.m_.erase(it);
        else
            out.m_.insert(m);
    }
    return out;
}

F2Poly multiply(const Presentation& pres, const F2Poly& a, const F2Poly& b) {
    F2Poly out;
    for (const Exponents& ma : a.monomials()) {
        for (const Exponents& mb : b.monomials()) {
            Exponents m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = ma[i] + mb[i];
            if (!pres.reduced(m))
                continue; // lies in the relation ideal
            out = out + F2Poly({std::move(m)});
        }
    }
    return out;
}

std::optional<unsigned> homogeneous_degree(const Presentation& pres, const F2Poly& p) {
    std::optional<unsigned> d;
    for (const Exponents& m : p.monomials()) {
        unsigned dm = pres.degree_of(m);
        if (d && *d != dm)
            return std::nullopt;
        d = dm;
    }
    return p.is_zero() ? std::optional<unsigned>(0) : d;
}

namespace {

void enumerate_rec(const Presentation& pres, std::size_t i, unsigned remaining, Exponents& cur,
                   std::vector<Exponents>& out) {
    if (i == pres.ngens()) {
        if (remaining == 0 && pres.reduced(cur))
            out.push_back(cur);
        return;
    }
    const unsigned deg = pres.generators()[i].degree;
    // Highest power first: graded-lexicographic order with the first
    // generator most significant.
    for (unsigned e = remaining / deg + 1; e-- > 0;) {
        cur[i] = e;
        enumerate_rec(pres, i + 1, remaining - e * deg, cur, out);
    }
    cur[i] = 0;
}

} // namespace

std::vector<Exponents> enumerate_basis(const Presentation& pres, unsigned d) {
    std::vector<Exponents> out;
    Exponents cur(pres.ngens(), 0);
    if (pres.ngens() == 0) {
        if (d == 0)
            out.push_back(cur);
        return out;
    }
    enumerate_rec(pres, 0, d, cur, out);
    return out;
}

unsigned graded_dimension(const Presentation& pres, unsigned d) {
    return static_cast<unsigned>(enumerate_basis(pres, d).size());
}

RingMap::RingMap(Presentation domain, std::vector<F2Poly> images)
    : domain_(std::move(domain)), images_(std::move(images)) {
    if (images_.size() != domain_.ngens())
        throw IllFormed("RingMap: one image per generator required");
    for (std::size_t i = 0; i < images_.size(); ++i) {
        auto d = homogeneous_degree(domain_, images_[i]);
        if (!d)
            throw IllFormed("RingMap: image of " + domain_.generators()[i].name + " is not homogeneous");
        if (!images_[i].is_zero() && *d != domain_.generators()[i].degree)
            throw IllFormed("RingMap: image of " + domain_.generators()[i].name + " has wrong degree");
        for (const Exponents& m : images_[i].monomials())
            if (!domain_.reduced(m))
                throw IllFormed("RingMap: image of " + domain_.generators()[i].name + " is not reduced");
    }
    // Well-definedness: every relation monomial must map into the ideal.
    for (const Exponents& r : domain_.relations()) {
        F2Poly img = F2Poly::one(domain_.ngens());
        for (std::size_t i = 0; i < r.size(); ++i)
            for (unsigned e = 0; e < r[i]; ++e)
                img = multiply(domain_, img, images_[i]);
        if (!img.is_zero())
            throw IllFormed("RingMap: relation does not map to zero in the quotient");
    }
}

RingMap RingMap::identity(const Presentation& pres) {
    std::vector<F2Poly> images;
    for (std::size_t i = 0; i < pres.ngens(); ++i)
        images.push_back(F2Poly::generator(pres.ngens(), i));
    return RingMap(pres, std::move(images));
}

F2Poly apply_map(const RingMap& f, const F2Poly& p) {
    const Presentation& pres = f.domain();
    for (const Exponents& m : p.monomials())
        if (!pres.reduced(m))
            throw IllFormed("apply_map: input contains a relation-divisible monomial");
    F2Poly out;
    for (const Exponents& m : p.monomials()) {
        F2Poly term = F2Poly::one(pres.ngens());
        for (std::size_t i = 0; i < m.size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e)
                term = multiply(pres, term, f.image(i));
        out = out + term;
    }
    return out;
}

std::optional<unsigned> map_order(const RingMap& f, unsigned bound) {
    const RingMap id = RingMap::identity(f.domain());
    std::vector<F2Poly> cur = f.images();
    for (unsigned m = 1; m <= bound; ++m) {
        if (cur == id.images())
            return m;
        for (std::size_t i = 0; i < cur.size(); ++i)
            cur[i] = apply_map(f, cur[i]);
    }
    return std::nullopt;
}

} // namespace grex
