#pragma once

// Cohomology of line bundles on P^1, P^1 x P^1 and the ruled surfaces
// Sigma_a = P(O + O(a)) over P^1, in the convention P(E) = Proj(Sym E) with a
// surjection pi^* E -> O(1). Line bundles O(m, n) = O(1)^m @ pi^* O(n); the
// canonical bundle is O(-2, -2 + a). Everything reduces to P^1 via the
// pushforward
//   pi_* O(d) = Sym^d(O + O(a))               for d >= 0
//             = (O(a) @ Sym^{-2-d}(O + O(a)))^v [-1]   for d < 0
// expanded into explicit split summands.
//
// divisor_ext computes Ext between pushforwards of line bundles from a
// divisor E inside an ambient smooth variety, using the cone on the
// adjunction counit  j^* j_* F -> F -> F @ N^v [2].

#include "homcalc/errors.hpp"
#include "homcalc/graded.hpp"

#include <vector>

namespace homcalc {

struct P1Bundle {
    int degree = 0;
};

// O(a, b) on P^1 x P^1: degree a along the first factor, b along the second.
struct QuadricBundle {
    int deg_st = 0;
    int deg_uv = 0;
};

// O(m, n) on Sigma = P(O + O(a)): m times O(1), n pulled back from the base.
struct RuledBundle {
    int fiber_deg = 0;  // m
    int base_deg = 0;   // n
    int ruling = 0;     // a

    RuledBundle twist(int dm, int dn) const { return {fiber_deg + dm, base_deg + dn, ruling}; }

    friend bool operator==(const RuledBundle&, const RuledBundle&) = default;
};

// Divisor inclusion data: the normal bundle N_{E/X} and the restriction of
// the ambient canonical bundle, as line bundles on the ruled surface E, plus
// the ambient dimension (Serre duality pairs degrees i and ambient_dim - i).
struct DivisorData {
    RuledBundle normal_bundle;
    RuledBundle canonical_restriction;
    int ambient_dim = 3;
};

inline GradedDims cohomology_p1(int a) {
    GradedDims out;
    if (a >= 0)
        out.set(0, a + 1);
    else if (a <= -2)
        out.set(1, -a - 1);
    return out;
}

inline GradedDims cohomology_p1xp1(int a, int b) {
    GradedDims ha = cohomology_p1(a), hb = cohomology_p1(b);
    GradedDims out;
    for (const auto& [i, da] : ha.entries())
        for (const auto& [j, db] : hb.entries()) out.add(i + j, da * db);
    return out;
}

struct PushforwardPiece {
    int shift = 0;                  // 0, or -1 for the R^1 part
    std::vector<int> p1_degrees;    // split summands on the base
};

// pi_* O(d) on Sigma = P(O + O(a)), expanded into line bundle summands.
inline std::vector<PushforwardPiece> pushforward_ruled(int d, int a) {
    std::vector<PushforwardPiece> pieces;
    if (d >= 0) {
        PushforwardPiece p;
        p.shift = 0;
        for (int k = 0; k <= d; ++k) p.p1_degrees.push_back(k * a);
        pieces.push_back(std::move(p));
    } else if (d <= -2) {
        PushforwardPiece p;
        p.shift = -1;
        for (int k = 0; k <= -2 - d; ++k) p.p1_degrees.push_back(-(a + k * a));
        pieces.push_back(std::move(p));
    }
    // d == -1: Sym^{-1} = 0, nothing to push.
    return pieces;
}

inline GradedDims cohomology_ruled(const RuledBundle& lb) {
    GradedDims out;
    for (const auto& piece : pushforward_ruled(lb.fiber_deg, lb.ruling))
        for (int deg : piece.p1_degrees) {
            GradedDims h = cohomology_p1(deg + lb.base_deg);
            for (const auto& [i, v] : h.entries()) out.add(i - piece.shift, v);
        }
    return out;
}

inline RuledBundle canonical_ruled(int a) { return {-2, -2 + a, a}; }

// Ext^*_X(j_* f, j_* g) for line bundles f, g on the divisor E, read off the
// counit triangle as H^*(f^v g) + H^{*-1}(f^v g @ N). The two graded pieces
// are summed at dimension level; this equals the true Ext dimensions whenever
// the connecting maps of the long exact sequence vanish, which holds as soon
// as the pieces never meet in adjacent degrees. strict=true refuses the only
// configuration where the split could fail.
inline GradedDims divisor_ext(const RuledBundle& f, const RuledBundle& g, const DivisorData& div,
                              bool strict = false) {
    if (f.ruling != g.ruling || f.ruling != div.normal_bundle.ruling)
        throw RulingMismatchError("divisor_ext: bundles live on different ruled surfaces");
    RuledBundle hom = g.twist(-f.fiber_deg, -f.base_deg);  // f^v @ g
    GradedDims piece1 = cohomology_ruled(hom);
    GradedDims piece2 = cohomology_ruled(
        hom.twist(div.normal_bundle.fiber_deg, div.normal_bundle.base_deg));
    if (strict) {
        for (const auto& [n, v] : piece1.entries())
            if (piece2.at(n) != 0)
                throw SplitUndeterminedError(
                    "divisor_ext: graded pieces overlap in adjacent degrees");
    }
    return piece1.plus(piece2.shifted(1));
}

// Serre duality on the ambient: Ext^i(j_*f, j_*g) = Ext^{n-i}(j_*g, j_*(f @ w|_E))^v.
inline bool serre_check_ruled(const RuledBundle& f, const RuledBundle& g, const DivisorData& div) {
    GradedDims lhs = divisor_ext(f, g, div);
    RuledBundle f_tw = f.twist(div.canonical_restriction.fiber_deg,
                               div.canonical_restriction.base_deg);
    GradedDims rhs = divisor_ext(g, f_tw, div);
    for (int i = -1; i <= div.ambient_dim + 1; ++i)
        if (lhs.at(i) != rhs.at(div.ambient_dim - i)) return false;
    return true;
}

}  // namespace homcalc
