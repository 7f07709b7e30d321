#pragma once

// Bounded complexes of line bundles on the curve {s^2 u = 0}, with monomial
// matrix differentials, plus the builders used throughout:
//
//   P(a)  pushforward of O(a) from the reduced branch P^1_{u:v}; its periodic
//         locally free resolution is
//           O(0,-1) <-s- O(-1,-1) <-su- O(-2,-2) <-s- O(-3,-2) <- ...
//         twisted by O(0, a+1)  (P(a) = P(-1) @ O(0, a+1)).
//   L(a)  the line bundle O(a, 0), pulled back from the reduced branch of the
//         contraction, as a one-term complex.
//   Q     structure sheaf of the fat branch {s^2 = 0}, with periodic
//         resolution alternating s^2 and u.
//
// Complexes are cochain-indexed (differential raises degree); a resolution
// truncated at depth N occupies degrees [-N, 0] and records that fact in
// truncation_degree so downstream computations can refuse unstable ranges.

#include "homcalc/curve_ring.hpp"
#include "homcalc/errors.hpp"

#include <map>
#include <optional>
#include <vector>

namespace homcalc {

using RingMatrix = std::vector<std::vector<CurveRingElement>>;  // [row][col]

enum class ObjectKind { Generic, ResolutionP, ResolutionQ, LineBundle };

class LineBundleComplex {
public:
    // terms[k] = ordered list of line bundle bidegrees in cohomological degree k
    std::map<int, std::vector<Bidegree>> terms;
    // differentials[k] : terms[k] -> terms[k+1]; entry bidegree = target - source
    std::map<int, RingMatrix> differentials;
    // degree where an infinite periodic resolution was cut (unset: honest complex)
    std::optional<int> truncation_degree;

    ObjectKind kind = ObjectKind::Generic;
    int twist = 0;  // P(twist) / O(a,b) bookkeeping for labelled bases

    int min_degree() const { return terms.empty() ? 0 : terms.begin()->first; }
    int max_degree() const { return terms.empty() ? 0 : terms.rbegin()->first; }
    int amplitude() const { return terms.empty() ? 0 : max_degree() - min_degree(); }
    // Homological depth of a truncated resolution.
    int depth() const { return truncation_degree ? -*truncation_degree : -min_degree(); }

    const std::vector<Bidegree>& terms_at(int k) const {
        static const std::vector<Bidegree> empty;
        auto it = terms.find(k);
        return it == terms.end() ? empty : it->second;
    }

    const RingMatrix* differential_at(int k) const {
        auto it = differentials.find(k);
        return it == differentials.end() ? nullptr : &it->second;
    }

    friend bool operator==(const LineBundleComplex& a, const LineBundleComplex& b) {
        return a.terms == b.terms && a.differentials == b.differentials &&
               a.truncation_degree == b.truncation_degree;
    }

    // Entry bidegrees match and consecutive differentials compose to zero.
    void validate() const {
        for (const auto& [k, d] : differentials) {
            const auto& src = terms_at(k);
            const auto& dst = terms_at(k + 1);
            if (d.size() != dst.size()) throw MalformedComplexError("differential row count");
            for (std::size_t r = 0; r < d.size(); ++r) {
                if (d[r].size() != src.size()) throw MalformedComplexError("differential col count");
                for (std::size_t c = 0; c < src.size(); ++c)
                    if (!d[r][c].is_zero() && d[r][c].degree() != dst[r] - src[c])
                        throw MalformedComplexError("entry bidegree mismatch");
            }
            if (const RingMatrix* next = differential_at(k + 1)) {
                for (std::size_t r = 0; r < next->size(); ++r)
                    for (std::size_t c = 0; c < src.size(); ++c) {
                        CurveRingElement acc =
                            CurveRingElement::zero(terms_at(k + 2)[r] - src[c]);
                        for (std::size_t m = 0; m < dst.size(); ++m)
                            acc = acc + (*next)[r][m] * d[m][c];
                        if (!acc.is_zero())
                            throw MalformedComplexError("differentials do not square to zero");
                    }
            }
        }
    }
};

// Differential multiplier of the P-resolution from degree -k to -k+1.
inline CurveRingElement resolution_p_map(int k) { return k % 2 == 1 ? mono_s() : mono_su(); }

// Truncated periodic resolution of P(a), degrees [-n_max, 0].
inline LineBundleComplex build_resolution_P(int a, int n_max) {
    if (n_max < 1) throw Error("build_resolution_P: n_max >= 1 required");
    LineBundleComplex c;
    c.kind = ObjectKind::ResolutionP;
    c.twist = a;
    c.truncation_degree = -n_max;
    for (int k = 0; k <= n_max; ++k)
        c.terms[-k] = {Bidegree{-k, -(k / 2 + 1) + (a + 1)}};
    for (int k = 1; k <= n_max; ++k)
        c.differentials[-k] = {{resolution_p_map(k)}};
    return c;
}

// One-term complex O(a, b) in degree zero.
inline LineBundleComplex build_line_bundle(int a, int b) {
    LineBundleComplex c;
    c.kind = ObjectKind::LineBundle;
    c.terms[0] = {Bidegree{a, b}};
    return c;
}

// Truncated periodic resolution of Q = O/(s^2), alternating s^2 and u.
inline LineBundleComplex build_resolution_Q(int n_max) {
    if (n_max < 1) throw Error("build_resolution_Q: n_max >= 1 required");
    LineBundleComplex c;
    c.kind = ObjectKind::ResolutionQ;
    c.truncation_degree = -n_max;
    for (int k = 0; k <= n_max; ++k) {
        if (k % 2 == 0)
            c.terms[-k] = {Bidegree{-k, -k / 2}};
        else
            c.terms[-k] = {Bidegree{-(k + 1), -(k - 1) / 2}};
    }
    for (int k = 1; k <= n_max; ++k)
        c.differentials[-k] = {{k % 2 == 1 ? mono_s2() : mono_u()}};
    return c;
}

// Shift X[n]: (X[n])^k = X^{k+n}; differentials pick up (-1)^n.
inline LineBundleComplex shift_complex(const LineBundleComplex& x, int n) {
    LineBundleComplex out;
    out.kind = ObjectKind::Generic;
    for (const auto& [k, t] : x.terms) out.terms[k - n] = t;
    for (const auto& [k, d] : x.differentials) {
        RingMatrix m = d;
        if (n % 2 != 0)
            for (auto& row : m)
                for (auto& e : row) e = -e;
        out.differentials[k - n] = m;
    }
    if (x.truncation_degree) out.truncation_degree = *x.truncation_degree - n;
    return out;
}

}  // namespace homcalc
