#include "homcalc/sparse.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace homcalc;

namespace {

SparseMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    SparseMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (rows[i][j] != 0) m.set(i, j, rows[i][j]);
    return m;
}

SparseMatrix random_sparse(std::mt19937_64& rng, std::size_t r, std::size_t c, int density_pct) {
    std::uniform_int_distribution<int> pct(0, 99), num(-4, 4), den(1, 3);
    SparseMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (pct(rng) < density_pct) m.set(i, j, make_rational(num(rng), den(rng)));
    return m;
}

// Independent oracle: dense row reduction, no pivot heuristics, no sparsity.
std::size_t dense_rank(const SparseMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols(), Rational(0)));
    for (const auto& [rc, v] : m.entries()) a[rc.first][rc.second] = v;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t sel = m.rows();
        for (std::size_t r = rank; r < m.rows(); ++r)
            if (a[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel == m.rows()) continue;
        std::swap(a[rank], a[sel]);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[rank][col];
            for (std::size_t c2 = 0; c2 < m.cols(); ++c2) a[r][c2] -= f * a[rank][c2];
        }
        ++rank;
    }
    return rank;
}

// Random invertible matrix built from elementary row operations.
SparseMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    SparseMatrix m = SparseMatrix::identity(n);
    for (int step = 0; step < 3 * static_cast<int>(n); ++step) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        int c = coeff(rng);
        if (c == 0) continue;
        SparseMatrix e = SparseMatrix::identity(n);
        e.set(i, j, c);
        m = e * m;
    }
    return m;
}

SparseMatrix inverse_of(const SparseMatrix& m) {
    SparseMatrix inv(m.cols(), m.rows());
    for (std::size_t j = 0; j < m.rows(); ++j) {
        std::vector<Rational> e(m.rows(), Rational(0));
        e[j] = 1;
        auto col = solve(m, e);
        REQUIRE(col.has_value());
        for (std::size_t i = 0; i < m.cols(); ++i)
            if ((*col)[i] != 0) inv.set(i, j, (*col)[i]);
    }
    return inv;
}

}  // namespace

TEST_CASE("rank: base cases") {
    CHECK(rank(SparseMatrix::identity(3)) == 3);
    CHECK(rank(SparseMatrix(2, 2)) == 0);
    CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel_basis: base cases") {
    CHECK(kernel_basis(SparseMatrix::identity(4)).dim() == 0);
    auto z = kernel_basis(SparseMatrix(2, 3));
    CHECK(z.dim() == 3);
    CHECK(z.ambient_dim == 3);

    auto k = kernel_basis(from_rows({{1, 1}}));
    REQUIRE(k.dim() == 1);
    // proportional to (1, -1)
    CHECK(k.vectors[0][0] == -k.vectors[0][1]);
    CHECK(k.vectors[0][0] != 0);
}

TEST_CASE("solve: base cases") {
    std::vector<Rational> b = {Rational(3), Rational(-5)};
    auto x = solve(SparseMatrix::identity(2), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    CHECK_FALSE(solve(SparseMatrix(2, 2), b).has_value());

    SparseMatrix two(1, 1);
    two.set(0, 0, 2);
    auto half = solve(two, {Rational(1)});
    REQUIRE(half.has_value());
    CHECK((*half)[0] == make_rational(1, 2));
}

TEST_CASE("cohomology_dim_at: base cases") {
    // d_in = 0, d_out = 0 on a 5-dimensional middle space
    CHECK(cohomology_dim_at(SparseMatrix(5, 4), SparseMatrix(3, 5)) == 5);
    // d_in surjective identity, d_out = 0
    CHECK(cohomology_dim_at(SparseMatrix::identity(3), SparseMatrix(2, 3)) == 0);

    SparseMatrix bad_in = SparseMatrix::identity(2);
    SparseMatrix bad_out = SparseMatrix::identity(2);
    CHECK_THROWS_AS(cohomology_dim_at(bad_in, bad_out), CompositionNonzeroError);
}

TEST_CASE("cohomology_dim_at: middle dim 3, rank(d_in)=1, dim ker(d_out)=2 -> 1") {
    // d_in: 2 -> 3 with rank 1; d_out: 3 -> 2 with kernel dim 2; d_out*d_in = 0.
    SparseMatrix d_in = from_rows({{1, 2}, {2, 4}, {0, 0}});
    SparseMatrix d_out = from_rows({{2, -1, 0}, {4, -2, 0}});
    REQUIRE((d_out * d_in).is_zero());
    REQUIRE(rank(d_in) == 1);
    REQUIRE(d_out.cols() - rank(d_out) == 2);
    CHECK(cohomology_dim_at(d_in, d_out) == 1);
    // cross-check both ranks against the independent dense reduction
    CHECK(dense_rank(d_in) == 1);
    CHECK(dense_rank(d_out) == 1);
}

TEST_CASE("property: rank-nullity and dense-oracle agreement") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> sz(1, 9);
        auto m = random_sparse(rng, sz(rng), sz(rng), 35);
        std::size_t r = rank(m);
        CHECK(r == dense_rank(m));
        CHECK(r + kernel_basis(m).dim() == m.cols());
        // every kernel vector maps to zero
        for (const auto& v : kernel_basis(m).vectors) {
            auto y = mat_vec(m, v);
            for (const auto& c : y) CHECK(c == 0);
        }
    }
}

TEST_CASE("property: solve returns exact solutions") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> sz(1, 8);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        auto m = random_sparse(rng, sz(rng), sz(rng), 40);
        std::vector<Rational> x0(m.cols());
        for (auto& c : x0) c = num(rng);
        auto b = mat_vec(m, x0);
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        CHECK(mat_vec(m, *x) == b);
    }
}

TEST_CASE("property: cohomology dimension is basis-change invariant") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 15; ++trial) {
        // Build a genuine two-step complex: d_in with small rank, d_out spanning
        // part of its cokernel's annihilator. Start from random d_in and take
        // d_out rows from kernel vectors of d_in^T-style constraints: simplest is
        // d_out rows = random combinations of a basis of ker(d_in applied on the
        // left), i.e. rows v with v * d_in = 0.
        std::uniform_int_distribution<std::size_t> sz(2, 6);
        std::size_t a = sz(rng), mdim = sz(rng), bdim = sz(rng);
        auto d_in = random_sparse(rng, mdim, a, 40);

        // left kernel of d_in = kernel of transpose
        SparseMatrix d_in_t(a, mdim);
        for (const auto& [rc, v] : d_in.entries()) d_in_t.set(rc.second, rc.first, v);
        auto lk = kernel_basis(d_in_t);
        SparseMatrix d_out(bdim, mdim);
        if (!lk.vectors.empty()) {
            std::uniform_int_distribution<int> pick(-2, 2);
            for (std::size_t r = 0; r < bdim; ++r)
                for (std::size_t k = 0; k < lk.vectors.size(); ++k) {
                    int c = pick(rng);
                    if (c == 0) continue;
                    for (std::size_t j = 0; j < mdim; ++j)
                        d_out.add(r, j, Rational(c) * lk.vectors[k][j]);
                }
        }
        REQUIRE((d_out * d_in).is_zero());
        std::size_t h = cohomology_dim_at(d_in, d_out);

        auto s = random_invertible(rng, mdim);
        auto s_inv = inverse_of(s);
        auto d_in2 = s * d_in;
        auto d_out2 = d_out * s_inv;
        REQUIRE((d_out2 * d_in2).is_zero());
        CHECK(cohomology_dim_at(d_in2, d_out2) == h);
    }
}
