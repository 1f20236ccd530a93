#include "grex/isotropy.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace grex {

Mat4 Mat4::identity() {
    Mat4 m{};
    for (std::size_t i = 0; i < 4; ++i)
        m.at(i, i) = QSqrt2(1);
    return m;
}

Mat4 operator*(const Mat4& x, const Mat4& y) {
    Mat4 out{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            QSqrt2 s;
            for (std::size_t k = 0; k < 4; ++k)
                s = s + x.at(i, k) * y.at(k, j);
            out.at(i, j) = s;
        }
    return out;
}

Vec4 Mat4::apply(const Vec4& v) const {
    Vec4 out{};
    for (std::size_t i = 0; i < 4; ++i) {
        QSqrt2 s;
        for (std::size_t k = 0; k < 4; ++k)
            s = s + at(i, k) * v[k];
        out[i] = s;
    }
    return out;
}

Mat4 Mat4::transpose() const {
    Mat4 out{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            out.at(i, j) = at(j, i);
    return out;
}

Mat4 Mat4::operator-() const {
    Mat4 out{};
    for (std::size_t i = 0; i < 16; ++i)
        out.e[i] = -e[i];
    return out;
}

bool Mat4::is_orthogonal() const {
    return transpose() * *this == identity();
}

int RepMatrixGroup::index_of(const Mat4& m) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i].mat == m)
            return static_cast<int>(i);
    return -1;
}

namespace {

// "f","r","r","r","r" -> "fr4"; empty word -> "e".
std::string collapse_word(const std::vector<std::string>& word) {
    if (word.empty())
        return "e";
    std::string out;
    std::size_t i = 0;
    while (i < word.size()) {
        std::size_t j = i;
        while (j < word.size() && word[j] == word[i])
            ++j;
        out += word[i];
        if (j - i > 1)
            out += std::to_string(j - i);
        i = j;
    }
    return out;
}

} // namespace

RepMatrixGroup group_closure(const std::vector<GroupElement>& generators, std::size_t expected_order) {
    if (expected_order == 0 || expected_order > 64)
        throw UsageError("group_closure: expected order must be in 1..64");
    for (const GroupElement& g : generators)
        if (!g.mat.is_orthogonal())
            throw IllFormed("group_closure: generator " + g.label + " is not orthogonal");

    RepMatrixGroup rep;
    for (const GroupElement& g : generators)
        rep.generator_names.push_back(g.label);

    rep.elements.push_back({"e", Mat4::identity()});
    std::deque<std::pair<Mat4, std::vector<std::string>>> queue;
    queue.emplace_back(Mat4::identity(), std::vector<std::string>{});
    while (!queue.empty()) {
        auto [mat, word] = queue.front();
        queue.pop_front();
        for (const GroupElement& g : generators) {
            Mat4 next = mat * g.mat;
            if (rep.index_of(next) >= 0)
                continue;
            auto next_word = word;
            next_word.push_back(g.label);
            rep.elements.push_back({collapse_word(next_word), next});
            queue.emplace_back(next, next_word);
            if (rep.elements.size() > expected_order)
                throw OrderMismatch("group_closure: more than " + std::to_string(expected_order) +
                                    " elements generated");
        }
    }
    if (rep.elements.size() != expected_order)
        throw OrderMismatch("group_closure: closure has " + std::to_string(rep.elements.size()) +
                            " elements, expected " + std::to_string(expected_order));
    return rep;
}

namespace {

// Reduced row echelon form in place; returns pivot column per row.
std::vector<std::size_t> rref(std::vector<Vec4>& rows) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 4 && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col].is_zero())
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[rank], rows[piv]);
        const QSqrt2 inv = rows[rank][col].inverse();
        for (auto& x : rows[rank])
            x = x * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col].is_zero())
                continue;
            const QSqrt2 f = rows[i][col];
            for (std::size_t j = 0; j < 4; ++j)
                rows[i][j] = rows[i][j] - f * rows[rank][j];
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

// Basis of { x : rows * x = 0 } (x as a column), echelonized.
std::vector<Vec4> kernel_of_rows(std::vector<Vec4> rows) {
    const std::vector<std::size_t> pivots = rref(rows);
    std::vector<bool> is_pivot(4, false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;

    std::vector<Vec4> kernel;
    for (std::size_t free = 0; free < 4; ++free) {
        if (is_pivot[free])
            continue;
        Vec4 v{};
        v[free] = QSqrt2(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -rows[r][free];
        kernel.push_back(v);
    }
    rref(kernel);
    return kernel;
}

} // namespace

Subspace make_subspace(std::vector<Vec4> spanning) {
    rref(spanning);
    return Subspace{std::move(spanning)};
}

bool Subspace::operator<(const Subspace& o) const {
    auto key = [](const Subspace& s) {
        std::vector<std::vector<std::pair<std::string, std::string>>> k;
        for (const Vec4& v : s.basis) {
            std::vector<std::pair<std::string, std::string>> row;
            for (const QSqrt2& x : v)
                row.emplace_back(x.a.get_str(), x.b.get_str());
            k.push_back(std::move(row));
        }
        return k;
    };
    return key(*this) < key(o);
}

bool Subspace::contains(const Subspace& other) const {
    std::vector<Vec4> rows = basis;
    rows.insert(rows.end(), other.basis.begin(), other.basis.end());
    rref(rows);
    return rows.size() == basis.size();
}

Subspace intersect(const Subspace& s, const Subspace& t) {
    // Constraints cutting out a row space: the kernel of its basis rows.
    std::vector<Vec4> constraints = kernel_of_rows(s.basis);
    std::vector<Vec4> ct = kernel_of_rows(t.basis);
    constraints.insert(constraints.end(), ct.begin(), ct.end());
    return Subspace{kernel_of_rows(std::move(constraints))};
}

std::vector<Subspace> fixed_line_components(const Mat4& g) {
    std::vector<Subspace> out;
    for (int sign : {+1, -1}) {
        // rows of (g - sign*I)
        std::vector<Vec4> rows(4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                rows[i][j] = (i == j) ? g.at(i, j) - QSqrt2(sign) : g.at(i, j);
        std::vector<Vec4> ker = kernel_of_rows(std::move(rows));
        if (!ker.empty())
            out.push_back(Subspace{std::move(ker)});
    }
    return out;
}

namespace {

bool fixes_subspace(const Mat4& g, const Subspace& s) {
    // s lies in ker(g - I) or in ker(g + I)
    for (int sign : {+1, -1}) {
        bool all = true;
        for (const Vec4& v : s.basis) {
            Vec4 gv = g.apply(v);
            for (std::size_t i = 0; i < 4 && all; ++i)
                all = (gv[i] == (sign > 0 ? v[i] : -v[i]));
            if (!all)
                break;
        }
        if (all)
            return true;
    }
    return false;
}

} // namespace

std::vector<IsotropyPair> isotropy_subgroups(const RepMatrixGroup& rep) {
    std::set<Subspace> spaces;
    for (std::size_t i = 1; i < rep.elements.size(); ++i)
        for (Subspace& s : fixed_line_components(rep.elements[i].mat))
            spaces.insert(std::move(s));

    // Close under pairwise intersection.
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<Subspace> cur(spaces.begin(), spaces.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                Subspace meet = intersect(cur[i], cur[j]);
                if (meet.dim() > 0 && spaces.insert(meet).second)
                    grew = true;
            }
    }

    std::vector<IsotropyPair> pairs;
    for (const Subspace& s : spaces) {
        std::vector<std::size_t> stab{0};
        for (std::size_t i = 1; i < rep.elements.size(); ++i)
            if (fixes_subspace(rep.elements[i].mat, s))
                stab.push_back(i);
        pairs.push_back({s, std::move(stab)});
    }

    // Prune dominated pairs: subspace and stabilizer both contained in
    // another pair's.
    std::vector<IsotropyPair> out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < pairs.size() && !dominated; ++j) {
            if (i == j)
                continue;
            bool space_le = pairs[j].space.contains(pairs[i].space);
            bool stab_le = std::includes(pairs[j].stabilizer.begin(), pairs[j].stabilizer.end(),
                                         pairs[i].stabilizer.begin(), pairs[i].stabilizer.end());
            if (space_le && stab_le && !(pairs[i].space == pairs[j].space))
                dominated = true;
        }
        if (!dominated)
            out.push_back(pairs[i]);
    }
    return out;
}

bool elementary_abelian_check(const RepMatrixGroup& rep, const std::vector<std::size_t>& subgroup) {
    // Closure first.
    std::set<std::size_t> members(subgroup.begin(), subgroup.end());
    for (std::size_t a : subgroup)
        for (std::size_t b : subgroup) {
            int idx = rep.index_of(rep.elements[a].mat * rep.elements[b].mat);
            if (idx < 0 || !members.count(static_cast<std::size_t>(idx)))
                throw NotASubgroup("elementary_abelian_check: set not closed under multiplication");
        }
    const Mat4 id = Mat4::identity();
    for (std::size_t a : subgroup)
        if (!(rep.elements[a].mat * rep.elements[a].mat == id))
            return false;
    for (std::size_t a : subgroup)
        for (std::size_t b : subgroup)
            if (!(rep.elements[a].mat * rep.elements[b].mat == rep.elements[b].mat * rep.elements[a].mat))
                return false;
    return true;
}

unsigned projective_exponent_bound(const RepMatrixGroup& rep, FieldType field) {
    for (const IsotropyPair& p : isotropy_subgroups(rep))
        if (!elementary_abelian_check(rep, p.stabilizer))
            throw IsotropyNotInFamily("projective_exponent_bound: a line stabilizer is not elementary abelian");
    const unsigned real_dim = 4; // cn
    const unsigned c = (field == FieldType::real) ? 1 : 2;
    return real_dim - c + 1;
}

std::vector<std::string> stabilizer_labels(const RepMatrixGroup& rep, const std::vector<std::size_t>& subgroup) {
    std::vector<std::string> out;
    for (std::size_t i : subgroup)
        out.push_back(rep.elements[i].label);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace grex
