#pragma once

// Independent oracle for line bundle cohomology on Sigma_a = P(O + O(a)):
// the honest Cech complex over the four standard affine charts
//   {x != 0 or y != 0} x {s != 0 or t != 0},
// computed blockwise. Sections of O(m, n) are spanned by Laurent monomials
// x^p y^q s^i t^j with p + q = m and i + j = n + q a; the restriction maps fix
// each monomial, so the complex is a direct sum over characters and each
// block's Cech complex depends only on which exponents are negative. Blocks
// whose sign pattern mixes signs within one P^1 factor are exact (verified at
// startup), so only finitely many characters contribute and the enumeration
// below is complete, with no truncation at all.

#include "homcalc/graded.hpp"
#include "homcalc/rational.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace oracle {

namespace detail {

// Chart k inverts one variable of each factor; bit set = variable inverted.
// Variable order: x, y, s, t.
inline constexpr std::array<unsigned, 4> kChartInverts = {
    0b0101,  // (x, s)
    0b1001,  // (x, t)
    0b0110,  // (y, s)
    0b1010,  // (y, t)
};

inline unsigned subset_inverts(unsigned subset) {
    unsigned inv = 0;
    for (int k = 0; k < 4; ++k)
        if (subset & (1u << k)) inv |= kChartInverts[k];
    return inv;
}

inline int popcount(unsigned x) {
    int n = 0;
    while (x) n += x & 1, x >>= 1;
    return n;
}

// Dense rank over exact rationals; deliberately minimal and separate from the
// library's sparse elimination.
inline std::size_t dense_rank(std::vector<std::vector<homcalc::Rational>> a) {
    using homcalc::Rational;
    std::size_t rows = a.size();
    if (rows == 0) return 0;
    std::size_t cols = a[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t sel = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (a[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel == rows) continue;
        std::swap(a[rank], a[sel]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[rank][col];
            for (std::size_t c = 0; c < cols; ++c) a[r][c] -= f * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

// Cohomology of the four-chart Cech complex for one sign pattern
// (bit set = exponent negative, variable order x, y, s, t).
inline std::array<long long, 4> pattern_cohomology(unsigned negvars) {
    // Qualifying subsets per Cech degree r = |T| - 1.
    std::array<std::vector<unsigned>, 4> pieces;
    for (unsigned subset = 1; subset < 16; ++subset)
        if ((negvars & ~subset_inverts(subset)) == 0)
            pieces[popcount(subset) - 1].push_back(subset);

    auto index_of = [&](int r, unsigned subset) -> int {
        for (std::size_t k = 0; k < pieces[r].size(); ++k)
            if (pieces[r][k] == subset) return static_cast<int>(k);
        return -1;
    };

    // d_r : C^r -> C^{r+1}, (df)_T = sum_k (-1)^pos f_{T minus k-th chart}.
    std::array<std::vector<std::vector<homcalc::Rational>>, 3> d;
    for (int r = 0; r < 3; ++r) {
        d[r].assign(pieces[r + 1].size(),
                    std::vector<homcalc::Rational>(pieces[r].size(), homcalc::Rational(0)));
        for (std::size_t row = 0; row < pieces[r + 1].size(); ++row) {
            unsigned big = pieces[r + 1][row];
            int pos = 0;
            for (int k = 0; k < 4; ++k) {
                if (!(big & (1u << k))) continue;
                int col = index_of(r, big & ~(1u << k));
                if (col >= 0) d[r][row][col] += (pos % 2 == 0) ? 1 : -1;
                ++pos;
            }
        }
    }

    std::array<std::size_t, 3> ranks = {dense_rank(d[0]), dense_rank(d[1]), dense_rank(d[2])};
    std::array<long long, 4> h{};
    h[0] = static_cast<long long>(pieces[0].size()) - ranks[0];
    for (int r = 1; r < 4; ++r) {
        long long ker = static_cast<long long>(pieces[r].size()) - (r < 3 ? ranks[r] : 0);
        h[r] = ker - static_cast<long long>(ranks[r - 1]);
    }
    return h;
}

inline const std::array<std::array<long long, 4>, 16>& pattern_table() {
    static const auto table = [] {
        std::array<std::array<long long, 4>, 16> t{};
        for (unsigned pat = 0; pat < 16; ++pat) t[pat] = pattern_cohomology(pat);
        // Mixed signs within one factor must be exact, otherwise infinitely
        // many characters would contribute and the enumeration below would be
        // wrong; refuse to run in that case.
        for (unsigned pat = 0; pat < 16; ++pat) {
            bool fiber_pure = ((pat & 0b0011) == 0b0011) || ((pat & 0b0011) == 0);
            bool base_pure = ((pat & 0b1100) == 0b1100) || ((pat & 0b1100) == 0);
            if (fiber_pure && base_pure) continue;
            for (long long v : t[pat])
                if (v != 0) throw std::logic_error("cech oracle: mixed pattern not exact");
        }
        return t;
    }();
    return table;
}

}  // namespace detail

// H^*(Sigma_a, O(m, n)) by the four-chart Cech complex.
inline homcalc::GradedDims ruled_cohomology(int m, int n, int a) {
    const auto& patterns = detail::pattern_table();
    homcalc::GradedDims out;

    auto pure_range = [](int total) {
        // Exponent pairs (e, total - e) with both >= 0, or both < 0.
        std::pair<int, int> r{0, -1};
        if (total >= 0)
            r = {0, total};
        else if (total <= -2)
            r = {total + 1, -1};
        return r;
    };

    auto [plo, phi] = pure_range(m);
    for (int p = plo; p <= phi; ++p) {
        int q = m - p;
        int d = n + q * a;
        auto [ilo, ihi] = pure_range(d);
        for (int i = ilo; i <= ihi; ++i) {
            int j = d - i;
            unsigned pat = 0;
            if (p < 0) pat |= 0b0001;
            if (q < 0) pat |= 0b0010;
            if (i < 0) pat |= 0b0100;
            if (j < 0) pat |= 0b1000;
            const auto& h = patterns[pat];
            for (int deg = 0; deg < 4; ++deg)
                if (h[deg] != 0) out.add(deg, h[deg]);
        }
    }
    return out;
}

}  // namespace oracle
