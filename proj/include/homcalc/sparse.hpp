#pragma once

// Sparse exact linear algebra over Q: rank, kernel bases, linear solves and
// cohomology dimensions. Everything is immutable after construction and all
// operations are pure, so values can be shared freely across threads.

#include "homcalc/errors.hpp"
#include "homcalc/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace homcalc {

class SparseMatrix {
public:
    using Index = std::size_t;
    using EntryMap = std::map<std::pair<Index, Index>, Rational>;

    SparseMatrix(Index rows, Index cols) : rows_(rows), cols_(cols) {}

    static SparseMatrix identity(Index n) {
        SparseMatrix m(n, n);
        for (Index i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }

    // Zero values are not stored.
    void set(Index r, Index c, const Rational& v) {
        if (r >= rows_ || c >= cols_) throw Error("SparseMatrix::set: index out of bounds");
        if (v == 0)
            entries_.erase({r, c});
        else
            entries_[{r, c}] = v;
    }

    void add(Index r, Index c, const Rational& v) {
        if (v == 0) return;
        if (r >= rows_ || c >= cols_) throw Error("SparseMatrix::add: index out of bounds");
        auto it = entries_.find({r, c});
        if (it == entries_.end()) {
            entries_.emplace(std::make_pair(r, c), v);
        } else {
            it->second += v;
            if (it->second == 0) entries_.erase(it);
        }
    }

    Rational at(Index r, Index c) const {
        auto it = entries_.find({r, c});
        return it == entries_.end() ? Rational(0) : it->second;
    }

    const EntryMap& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t nnz() const { return entries_.size(); }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    Index rows_, cols_;
    EntryMap entries_;
};

inline SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw Error("SparseMatrix multiply: shape mismatch");
    // Row-major sketches of both factors.
    std::vector<std::vector<std::pair<SparseMatrix::Index, Rational>>> brows(b.rows());
    for (const auto& [rc, v] : b.entries()) brows[rc.first].emplace_back(rc.second, v);
    SparseMatrix out(a.rows(), b.cols());
    for (const auto& [rc, v] : a.entries())
        for (const auto& [c2, w] : brows[rc.second]) out.add(rc.first, c2, v * w);
    return out;
}

inline std::vector<Rational> mat_vec(const SparseMatrix& m, const std::vector<Rational>& x) {
    if (x.size() != m.cols()) throw Error("SparseMatrix mat_vec: size mismatch");
    std::vector<Rational> y(m.rows(), Rational(0));
    for (const auto& [rc, v] : m.entries()) y[rc.first] += v * x[rc.second];
    return y;
}

struct SubspaceBasis {
    std::size_t ambient_dim = 0;
    std::vector<std::vector<Rational>> vectors;

    std::size_t dim() const { return vectors.size(); }
};

namespace detail {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;  // sorted by column

inline void axpy_row(SparseRow& dst, const Rational& coeff, const SparseRow& src) {
    // dst += coeff * src
    SparseRow out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            Rational v = coeff * src[j].second;
            if (v != 0) out.emplace_back(src[j].first, std::move(v));
            ++j;
        } else {
            Rational v = dst[i].second + coeff * src[j].second;
            if (v != 0) out.emplace_back(dst[i].first, std::move(v));
            ++i, ++j;
        }
    }
    dst = std::move(out);
}

inline std::vector<SparseRow> matrix_rows(const SparseMatrix& m) {
    std::vector<SparseRow> rows(m.rows());
    for (const auto& [rc, v] : m.entries()) rows[rc.first].emplace_back(rc.second, v);
    return rows;  // map iteration order keeps each row sorted by column
}

// Union-find over column indices; rows glue the columns they touch.
class ColumnComponents {
public:
    explicit ColumnComponents(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

// Rank of a list of sparse rows by greedy elimination. Pivot rows are chosen
// shortest-first, pivot columns by smallest column count then smallest
// coefficient size, which keeps fill-in and entry growth mild on the
// monomial-multiplication matrices this library produces.
inline std::size_t eliminate_rank(std::vector<SparseRow> rows) {
    std::size_t rank = 0;
    std::vector<bool> done(rows.size(), false);
    while (true) {
        std::size_t best = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (done[r] || rows[r].empty()) continue;
            if (best == rows.size() || rows[r].size() < rows[best].size()) best = r;
        }
        if (best == rows.size()) break;

        std::map<std::size_t, std::size_t> col_count;
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (!done[r])
                for (const auto& [c, v] : rows[r]) ++col_count[c];

        std::size_t pivot_col = rows[best][0].first;
        Rational pivot_val = rows[best][0].second;
        std::size_t best_score = col_count[pivot_col];
        std::size_t best_size = coefficient_size(pivot_val);
        for (const auto& [c, v] : rows[best]) {
            std::size_t score = col_count[c];
            std::size_t size = coefficient_size(v);
            if (score < best_score || (score == best_score && size < best_size)) {
                pivot_col = c, pivot_val = v, best_score = score, best_size = size;
            }
        }

        done[best] = true;
        ++rank;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (done[r] || rows[r].empty()) continue;
            auto it = std::lower_bound(rows[r].begin(), rows[r].end(), pivot_col,
                                       [](const auto& e, std::size_t c) { return e.first < c; });
            if (it == rows[r].end() || it->first != pivot_col) continue;
            Rational coeff = -it->second / pivot_val;
            axpy_row(rows[r], coeff, rows[best]);
        }
    }
    return rank;
}

// Deterministic reduced echelon with strict left-to-right column pivoting.
// Returns (echelon rows, pivot column per row); used by kernel_basis/solve so
// that particular solutions (free variables zero) are canonical.
struct Echelon {
    std::vector<SparseRow> rows;
    std::vector<std::size_t> pivot_cols;
};

inline Echelon ordered_echelon(std::vector<SparseRow> rows, std::size_t ncols) {
    std::vector<bool> used(rows.size(), false);
    std::vector<std::pair<std::size_t, std::size_t>> picks;  // (row, pivot col)
    for (std::size_t col = 0; col < ncols; ++col) {
        std::size_t pick = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || rows[r].empty() || rows[r][0].first != col) continue;
            if (pick == rows.size() ||
                coefficient_size(rows[r][0].second) < coefficient_size(rows[pick][0].second))
                pick = r;
        }
        if (pick == rows.size()) continue;
        used[pick] = true;
        Rational pv = rows[pick][0].second;
        // Reduce every other row, including earlier pivot rows, so the final
        // echelon is fully reduced and solutions read off directly.
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pick || rows[r].empty()) continue;
            auto it = std::lower_bound(rows[r].begin(), rows[r].end(), col,
                                       [](const auto& e, std::size_t c) { return e.first < c; });
            if (it == rows[r].end() || it->first != col) continue;
            axpy_row(rows[r], -it->second / pv, rows[pick]);
        }
        picks.emplace_back(pick, col);
    }
    Echelon ech;
    for (const auto& [r, col] : picks) {
        ech.rows.push_back(std::move(rows[r]));
        ech.pivot_cols.push_back(col);
    }
    return ech;
}

}  // namespace detail

// Rank over Q. Splits into connected components of the bipartite support
// graph first; monomial-graded complexes decompose into many small blocks.
inline std::size_t rank(const SparseMatrix& m) {
    if (m.is_zero()) return 0;
    detail::ColumnComponents cc(m.cols());
    auto rows = detail::matrix_rows(m);
    for (const auto& row : rows)
        for (std::size_t i = 1; i < row.size(); ++i) cc.unite(row[0].first, row[i].first);
    std::map<std::size_t, std::vector<detail::SparseRow>> buckets;
    for (auto& row : rows)
        if (!row.empty()) buckets[cc.find(row[0].first)].push_back(std::move(row));
    std::size_t total = 0;
    for (auto& [root, block] : buckets) total += detail::eliminate_rank(std::move(block));
    return total;
}

// Basis of ker(m); always satisfies dim = cols - rank (rank-nullity).
inline SubspaceBasis kernel_basis(const SparseMatrix& m) {
    auto ech = detail::ordered_echelon(detail::matrix_rows(m), m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;

    SubspaceBasis basis;
    basis.ambient_dim = m.cols();
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free_col] = 1;
        // Echelon rows are fully reduced, so each pivot reads off directly.
        for (std::size_t r = 0; r < ech.rows.size(); ++r) {
            const auto& row = ech.rows[r];
            Rational val(0), pivot(0);
            for (const auto& [c, x] : row) {
                if (c == free_col) val = x;
                if (c == ech.pivot_cols[r]) pivot = x;
            }
            if (val != 0) v[ech.pivot_cols[r]] = -val / pivot;
        }
        basis.vectors.push_back(std::move(v));
    }
    return basis;
}

// Any exact solution of m x = b, or nullopt when b is not in the image.
// Free variables are set to zero, so the answer is deterministic and prefers
// early basis columns; section bases order s-free monomials first to exploit
// this during chain-map lifting.
inline std::optional<std::vector<Rational>> solve(const SparseMatrix& m,
                                                  const std::vector<Rational>& b) {
    if (b.size() != m.rows()) throw Error("solve: rhs size mismatch");
    auto rows = detail::matrix_rows(m);
    const std::size_t bcol = m.cols();
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (b[r] != 0) rows[r].emplace_back(bcol, b[r]);
    auto ech = detail::ordered_echelon(std::move(rows), m.cols() + 1);
    std::vector<Rational> x(m.cols(), Rational(0));
    for (std::size_t r = 0; r < ech.rows.size(); ++r) {
        if (ech.pivot_cols[r] == bcol) return std::nullopt;  // row (0 ... 0 | c)
        Rational rhs(0), pivot(0);
        for (const auto& [c, v] : ech.rows[r]) {
            if (c == bcol) rhs = v;
            if (c == ech.pivot_cols[r]) pivot = v;
        }
        x[ech.pivot_cols[r]] = rhs / pivot;
    }
    return x;
}

// dim ker(d_out) - rank(d_in) for a two-step complex around a middle space.
inline std::size_t cohomology_dim_at(const SparseMatrix& d_in, const SparseMatrix& d_out) {
    if (d_out.cols() != d_in.rows())
        throw MalformedComplexError("cohomology_dim_at: middle space mismatch");
    if (!(d_out * d_in).is_zero())
        throw CompositionNonzeroError("cohomology_dim_at: d_out * d_in != 0");
    std::size_t k = d_out.cols() - rank(d_out);
    std::size_t r = rank(d_in);
    if (r > k) throw MalformedComplexError("cohomology_dim_at: rank exceeds kernel");
    return k - r;
}

}  // namespace homcalc
