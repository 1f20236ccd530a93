#include "grex/cyc_cohomology.hpp"

#include <algorithm>

namespace grex {

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

void F2Matrix::set(std::size_t i, std::size_t j, bool v) {
    std::uint64_t& w = bits_[i * words_ + j / 64];
    const std::uint64_t mask = std::uint64_t(1) << (j % 64);
    if (v)
        w |= mask;
    else
        w &= ~mask;
}

bool F2Matrix::get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1;
}

namespace {

std::size_t gauss_rank(std::vector<std::uint64_t>& bits, std::size_t rows, std::size_t cols,
                       std::size_t words) {
    std::size_t rank = 0;
    for (std::size_t j = 0; j < cols && rank < rows; ++j) {
        const std::size_t wj = j / 64;
        const std::uint64_t mask = std::uint64_t(1) << (j % 64);
        std::size_t piv = rank;
        while (piv < rows && !(bits[piv * words + wj] & mask))
            ++piv;
        if (piv == rows)
            continue;
        if (piv != rank)
            for (std::size_t w = 0; w < words; ++w)
                std::swap(bits[piv * words + w], bits[rank * words + w]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank)
                continue;
            if (bits[i * words + wj] & mask)
                for (std::size_t w = 0; w < words; ++w)
                    bits[i * words + w] ^= bits[rank * words + w];
        }
        ++rank;
    }
    return rank;
}

} // namespace

std::size_t F2Matrix::rank() const {
    auto copy = bits_;
    return gauss_rank(copy, rows_, cols_, words_);
}

std::vector<std::vector<std::uint8_t>> F2Matrix::left_kernel() const {
    // Augment each row with an identity tag and eliminate; rows reduced to
    // zero expose kernel combinations in the tag part.
    const std::size_t tag_words = (rows_ + 63) / 64;
    const std::size_t total = words_ + tag_words;
    std::vector<std::uint64_t> aug(rows_ * total, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t w = 0; w < words_; ++w)
            aug[i * total + w] = bits_[i * words_ + w];
        aug[i * total + words_ + i / 64] |= std::uint64_t(1) << (i % 64);
    }

    std::size_t rank = 0;
    for (std::size_t j = 0; j < cols_ && rank < rows_; ++j) {
        const std::size_t wj = j / 64;
        const std::uint64_t mask = std::uint64_t(1) << (j % 64);
        std::size_t piv = rank;
        while (piv < rows_ && !(aug[piv * total + wj] & mask))
            ++piv;
        if (piv == rows_)
            continue;
        if (piv != rank)
            for (std::size_t w = 0; w < total; ++w)
                std::swap(aug[piv * total + w], aug[rank * total + w]);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == rank)
                continue;
            if (aug[i * total + wj] & mask)
                for (std::size_t w = 0; w < total; ++w)
                    aug[i * total + w] ^= aug[rank * total + w];
        }
        ++rank;
    }

    std::vector<std::vector<std::uint8_t>> kernel;
    for (std::size_t i = rank; i < rows_; ++i) {
        std::vector<std::uint8_t> v(rows_, 0);
        for (std::size_t r = 0; r < rows_; ++r)
            v[r] = (aug[i * total + words_ + r / 64] >> (r % 64)) & 1;
        kernel.push_back(std::move(v));
    }
    return kernel;
}

std::size_t F2Matrix::stacked_rank(const F2Matrix& other) const {
    if (other.cols_ != cols_)
        throw UsageError("stacked_rank: column mismatch");
    std::vector<std::uint64_t> bits;
    bits.reserve((rows_ + other.rows_) * words_);
    bits.insert(bits.end(), bits_.begin(), bits_.end());
    bits.insert(bits.end(), other.bits_.begin(), other.bits_.end());
    return gauss_rank(bits, rows_ + other.rows_, cols_, words_);
}

GradedAction::GradedAction(Presentation p, RingMap a, unsigned q)
    : pres(std::move(p)), action(std::move(a)), group_order(q) {
    if (q < 2 || (q & (q - 1)) != 0)
        throw UsageError("GradedAction: group order must be a power of 2, >= 2");
    if (!(action.domain() == pres))
        throw IllFormed("GradedAction: action domain differs from the presentation");
    auto ord = map_order(action, q);
    if (!ord || q % *ord != 0)
        throw IllFormed("GradedAction: the action's order does not divide the group order");
}

namespace {

// Matrix of a ring map on the degree-t basis; row i = coordinates of the
// image of basis monomial i.
F2Matrix map_matrix(const RingMap& f, const std::vector<Exponents>& basis) {
    std::map<Exponents, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i)
        index[basis[i]] = i;
    F2Matrix m(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        F2Poly img = apply_map(f, F2Poly({basis[i]}));
        for (const Exponents& mono : img.monomials()) {
            auto it = index.find(mono);
            if (it == index.end())
                throw IllFormed("map_matrix: image leaves the graded piece");
            m.set(i, it->second);
        }
    }
    return m;
}

F2Matrix xor_matrices(F2Matrix a, const F2Matrix& b) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (b.get(i, j))
                a.set(i, j, !a.get(i, j));
    return a;
}

struct DegreeData {
    std::vector<Exponents> basis;
    F2Matrix one_plus_g;
    F2Matrix norm;
};

DegreeData degree_data(const GradedAction& ga, unsigned t) {
    auto basis = enumerate_basis(ga.pres, t);
    const std::size_t n = basis.size();

    F2Matrix g = map_matrix(ga.action, basis);
    F2Matrix one(n, n);
    for (std::size_t i = 0; i < n; ++i)
        one.set(i, i);
    F2Matrix opg = xor_matrices(g, one);

    // N = sum of the matrices of g^0 .. g^{q-1}, summed over F2.
    std::map<Exponents, std::size_t> index;
    for (std::size_t c = 0; c < n; ++c)
        index[basis[c]] = c;
    F2Matrix norm(n, n);
    F2Matrix power(n, n);
    for (std::size_t i = 0; i < n; ++i)
        power.set(i, i);
    for (unsigned i = 0; i < ga.group_order; ++i) {
        norm = xor_matrices(std::move(norm), power);
        // next power: apply g to each row.
        F2Matrix next(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            std::vector<Exponents> monos;
            for (std::size_t c = 0; c < n; ++c)
                if (power.get(r, c))
                    monos.push_back(basis[c]);
            F2Poly img = apply_map(ga.action, F2Poly(std::move(monos)));
            for (const Exponents& m : img.monomials())
                next.set(r, index.at(m));
        }
        power = std::move(next);
    }
    return {std::move(basis), std::move(opg), std::move(norm)};
}

} // namespace

F2Matrix one_plus_g_matrix(const GradedAction& ga, unsigned t) {
    return degree_data(ga, t).one_plus_g;
}

F2Matrix norm_matrix(const GradedAction& ga, unsigned t) {
    return degree_data(ga, t).norm;
}

unsigned invariants_dim(const GradedAction& ga, unsigned t) {
    // kernel of (1+g)
    const DegreeData d = degree_data(ga, t);
    return static_cast<unsigned>(d.one_plus_g.left_kernel().size());
}

unsigned coinvariants_dim(const GradedAction& ga, unsigned t) {
    // cokernel of (1+g)
    const DegreeData d = degree_data(ga, t);
    return static_cast<unsigned>(d.basis.size() - d.one_plus_g.rank());
}

RowTable row_dims(const GradedAction& ga, unsigned s_max, unsigned t_max) {
    RowTable table{s_max, t_max, std::vector<unsigned>((s_max + 1) * (t_max + 1), 0)};
    for (unsigned t = 0; t <= t_max; ++t) {
        const DegreeData d = degree_data(ga, t);
        const std::size_t dim = d.basis.size();
        const std::size_t r_opg = d.one_plus_g.rank();
        const std::size_t r_norm = d.norm.rank();
        for (unsigned s = 0; s <= s_max; ++s) {
            std::size_t v;
            if (s == 0)
                v = dim - r_opg;
            else if (s % 2 == 1)
                v = (dim - r_norm) - r_opg; // ker N / im(1+g)
            else
                v = (dim - r_opg) - r_norm; // ker(1+g) / im N
            table.dims[s * (t_max + 1) + t] = static_cast<unsigned>(v);
        }
    }
    return table;
}

bool verify_row_series(const GradedAction& ga, unsigned s, const RationalSeries& expected, unsigned T) {
    const RowTable table = row_dims(ga, s, T);
    const auto coeffs = expected.expand(T);
    for (unsigned t = 0; t <= T; ++t)
        if (coeffs[t] != table.at(s, t))
            return false;
    return true;
}

std::vector<GenerationDegreeReport> module_generation_check(const GradedAction& ga,
                                                            const std::vector<F2Poly>& gens,
                                                            unsigned T) {
    std::vector<unsigned> gen_degrees;
    for (const F2Poly& u : gens) {
        auto d = homogeneous_degree(ga.pres, u);
        if (!d)
            throw IllFormed("module_generation_check: generators must be homogeneous");
        gen_degrees.push_back(*d);
    }

    // Kernel bases of (1+g) per degree, reused across target degrees.
    std::vector<DegreeData> data;
    std::vector<std::vector<F2Poly>> inv_basis(T + 1);
    for (unsigned t = 0; t <= T; ++t) {
        data.push_back(degree_data(ga, t));
        for (const auto& combo : data[t].one_plus_g.left_kernel()) {
            std::vector<Exponents> monos;
            for (std::size_t i = 0; i < combo.size(); ++i)
                if (combo[i])
                    monos.push_back(data[t].basis[i]);
            inv_basis[t].emplace_back(std::move(monos));
        }
    }

    std::vector<GenerationDegreeReport> out;
    for (unsigned d = 0; d <= T; ++d) {
        const DegreeData& dd = data[d];
        std::map<Exponents, std::size_t> index;
        for (std::size_t i = 0; i < dd.basis.size(); ++i)
            index[dd.basis[i]] = i;

        std::size_t domain_dim = 0;
        std::vector<F2Poly> products;
        for (std::size_t ui = 0; ui < gens.size(); ++ui) {
            if (gen_degrees[ui] > d)
                continue;
            const unsigned e = d - gen_degrees[ui];
            domain_dim += inv_basis[e].size();
            for (const F2Poly& v : inv_basis[e])
                products.push_back(multiply(ga.pres, v, gens[ui]));
        }

        F2Matrix prod_rows(products.size(), dd.basis.size());
        for (std::size_t r = 0; r < products.size(); ++r)
            for (const Exponents& m : products[r].monomials())
                prod_rows.set(r, index.at(m));

        const std::size_t rank_im_opg = dd.one_plus_g.rank();
        const std::size_t coker_dim = dd.basis.size() - rank_im_opg;
        const std::size_t image_dim = prod_rows.stacked_rank(dd.one_plus_g) - rank_im_opg;
        out.push_back({d, image_dim == coker_dim,
                       static_cast<unsigned>(domain_dim - image_dim)});
    }
    return out;
}

} // namespace grex
