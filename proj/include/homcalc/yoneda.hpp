#pragma once

// Chain-map ladders between periodic resolutions on the curve, Yoneda
// composition, and the checks built on them.
//
// A degree-n Ext class between P-resolutions is represented by its leading
// cocycle c_{-n} -> d_0 (a global multiple of t^n u^i v^j); lifting extends
// it column by column down the ladder by solving multiplication equations
// over global section bases. Squares are required to commute exactly.
//
// Class extraction goes the other way: the Hom complex into the object P has
// zero differentials (every resolution map is divisible by s, and s restricts
// to zero on the reduced branch), so the class of a ladder is read off its
// leading component modulo s.

#include "homcalc/cech_ext.hpp"
#include "homcalc/curve_complexes.hpp"
#include "homcalc/curve_ring.hpp"
#include "homcalc/errors.hpp"
#include "homcalc/sparse.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace homcalc {

struct ChainMap {
    LineBundleComplex source;
    LineBundleComplex target;
    int shift = 0;
    // components[j] : source_{j - shift} -> target_j (matrices over the ring)
    std::map<int, RingMatrix> components;

    const RingMatrix* component_at(int j) const {
        auto it = components.find(j);
        return it == components.end() ? nullptr : &it->second;
    }
};

namespace detail {

inline CurveRingElement matrix_entry_product(const RingMatrix& a, const RingMatrix& b,
                                             std::size_t r, std::size_t c, Bidegree deg) {
    CurveRingElement acc = CurveRingElement::zero(deg);
    for (std::size_t m = 0; m < b.size(); ++m) acc = acc + a[r][m] * b[m][c];
    return acc;
}

}  // namespace detail

// Every defined square of the ladder commutes exactly:
//   d_target o f_j == f_{j+1} o d_source.
inline bool is_chain_map(const ChainMap& f) {
    for (const auto& [j, fj] : f.components) {
        const RingMatrix* dt = f.target.differential_at(j);
        const RingMatrix* fj1 = f.component_at(j + 1);
        const RingMatrix* ds = f.source.differential_at(j - f.shift);
        if (dt == nullptr || fj1 == nullptr || ds == nullptr) continue;
        const auto& src = f.source.terms_at(j - f.shift);
        const auto& dst = f.target.terms_at(j + 1);
        for (std::size_t r = 0; r < dst.size(); ++r)
            for (std::size_t c = 0; c < src.size(); ++c) {
                Bidegree deg = dst[r] - src[c];
                CurveRingElement lhs = detail::matrix_entry_product(*dt, fj, r, c, deg);
                CurveRingElement rhs = detail::matrix_entry_product(*fj1, *ds, r, c, deg);
                if (!(lhs == rhs)) return false;
            }
    }
    return true;
}

inline ChainMap identity_chain_map(const LineBundleComplex& c) {
    ChainMap f;
    f.source = c, f.target = c, f.shift = 0;
    for (const auto& [j, terms] : c.terms) {
        RingMatrix m(terms.size());
        for (std::size_t r = 0; r < terms.size(); ++r) {
            m[r].assign(terms.size(), CurveRingElement::zero({0, 0}));
            m[r][r] = CurveRingElement::one();
        }
        f.components[j] = std::move(m);
    }
    return f;
}

// Solve  mult * x = rhs  for a global section x of the given bidegree.
inline std::optional<CurveRingElement> solve_multiplication(const CurveRingElement& mult,
                                                            Bidegree unknown_deg,
                                                            const CurveRingElement& rhs) {
    auto unknowns = sections_curve(unknown_deg.st, unknown_deg.uv);
    Bidegree eq_deg = unknown_deg + mult.degree();
    auto eq_basis = sections_curve(eq_deg.st, eq_deg.uv);
    std::map<CurveMonomial, std::size_t> eq_index;
    for (std::size_t i = 0; i < eq_basis.size(); ++i) eq_index.emplace(eq_basis[i], i);

    SparseMatrix m(eq_basis.size(), unknowns.size());
    for (std::size_t j = 0; j < unknowns.size(); ++j)
        for (const auto& [mg, cg] : mult.terms()) {
            CurveMonomial prod = mg * unknowns[j];
            if (prod.dead_mod_relation()) continue;
            m.add(eq_index.at(prod), j, cg);
        }
    std::vector<Rational> b(eq_basis.size(), Rational(0));
    for (const auto& [mono, coeff] : rhs.terms()) b[eq_index.at(mono)] = coeff;

    auto x = solve(m, b);
    if (!x) return std::nullopt;
    CurveRingElement out = CurveRingElement::zero(unknown_deg);
    for (std::size_t j = 0; j < unknowns.size(); ++j)
        if ((*x)[j] != 0) out.add_term(unknowns[j], (*x)[j]);
    return out;
}

// Lift an Ext class between P-resolutions to a commuting ladder, column by
// column. The ladder reaches down to column min(target depth, source depth -
// degree); at least two columns past the leading one must exist, otherwise
// the truncation is too shallow (deepen the resolutions and retry).
inline ChainMap lift_to_chain_map(const ExtClass& x) {
    if (!is_p_resolution_pair(x.source, x.target))
        throw LiftFailedError("lift_to_chain_map: only periodic P-resolutions carry ladders");
    const int n = x.degree;
    const int k_max = std::min(x.target.depth(), x.source.depth() - n);
    if (k_max < 2)
        throw LiftFailedError("lift_to_chain_map: resolution too shallow; deepen it");

    ChainMap f;
    f.source = x.source, f.target = x.target, f.shift = n;
    f.components[0] = {{leading_cocycle(x)}};

    for (int k = 1; k <= k_max; ++k) {
        // square: d_target(-k -> -k+1) o f_{-k} = f_{-k+1} o d_source(-n-k -> -n-k+1)
        const CurveRingElement& dt = (*x.target.differential_at(-k))[0][0];
        const CurveRingElement& ds = (*x.source.differential_at(-n - k))[0][0];
        const CurveRingElement& prev = f.components.at(-k + 1)[0][0];
        CurveRingElement rhs = prev * ds;
        Bidegree unknown = x.target.terms_at(-k)[0] - x.source.terms_at(-n - k)[0];
        auto sol = solve_multiplication(dt, unknown, rhs);
        if (!sol) throw LiftFailedError("lift_to_chain_map: no lift at column " + std::to_string(k));
        f.components[-k] = {{*sol}};
    }
    return f;
}

// f o g (apply g first); shifts add.
inline ChainMap yoneda_compose_maps(const ChainMap& f, const ChainMap& g) {
    if (!(f.source == g.target))
        throw IncompatibleLaddersError("yoneda_compose: inner objects differ");
    ChainMap h;
    h.source = g.source, h.target = f.target, h.shift = f.shift + g.shift;
    for (const auto& [j, fj] : f.components) {
        const RingMatrix* gj = g.component_at(j - f.shift);
        if (gj == nullptr) continue;
        const auto& src = g.source.terms_at(j - h.shift);
        const auto& dst = f.target.terms_at(j);
        if (src.empty() || dst.empty()) continue;
        RingMatrix m(dst.size());
        for (std::size_t r = 0; r < dst.size(); ++r) {
            m[r].reserve(src.size());
            for (std::size_t c = 0; c < src.size(); ++c)
                m[r].push_back(detail::matrix_entry_product(fj, *gj, r, c, dst[r] - src[c]));
        }
        h.components[j] = std::move(m);
    }
    return h;
}

// Class of a ladder between P-resolutions: leading component mod s.
inline ExtClass chain_map_class(const ChainMap& f) {
    if (!is_p_resolution_pair(f.source, f.target))
        throw IncompatibleLaddersError("chain_map_class: not a P-resolution pair");
    const RingMatrix* top = f.component_at(0);
    if (top == nullptr) throw MalformedChainMapError("chain_map_class: no leading component");
    ExtClass x;
    x.source = f.source, x.target = f.target, x.degree = f.shift;
    auto exps = p_pair_basis_exponents(f.source, f.target, f.shift);
    x.coordinates.assign(exps.size(), Rational(0));
    for (auto [i, j] : exps) x.labels.push_back(uv_label(i, j));
    for (const auto& [mono, coeff] : (*top)[0][0].terms()) {
        if (mono.s > 0) continue;  // s vanishes on the reduced branch
        for (std::size_t k = 0; k < exps.size(); ++k)
            if (mono.u == exps[k].first && mono.v == exps[k].second) x.coordinates[k] += coeff;
    }
    return x;
}

// Compose two Ext classes (f after g) and express the result in the
// monomial-labelled basis.
inline ExtClass yoneda_compose(const ChainMap& f, const ChainMap& g) {
    ChainMap h = yoneda_compose_maps(f, g);
    if (!is_chain_map(h)) throw MalformedChainMapError("yoneda_compose: composite not a ladder");
    return chain_map_class(h);
}

// ---------------------------------------------------------------------------
// Mapping cones.

// Cone of a shift-n chain map, i.e. of the degree-0 map source[-n] -> target:
//   cone_j = source_{j+1-n} (+) target_j,  d = [[-d_src, 0], [f, d_tgt]].
// For n = 1 this is the middle of the extension  target -> cone -> source.
inline LineBundleComplex cone(const ChainMap& f) {
    if (!is_chain_map(f)) throw MalformedChainMapError("cone: squares do not commute");
    LineBundleComplex out;
    out.kind = ObjectKind::Generic;
    const int n = f.shift;

    int lo_a = f.source.min_degree() - 1 + n, hi_a = f.source.max_degree() - 1 + n;
    int lo = std::min(lo_a, f.target.min_degree());
    int hi = std::max(hi_a, f.target.max_degree());

    // Degrees where the source block is present but its f-component is
    // missing cannot be represented; cut there and record the truncation.
    int valid_lo = lo;
    if (f.source.truncation_degree) valid_lo = std::max(valid_lo, *f.source.truncation_degree - 1 + n);
    if (f.target.truncation_degree) valid_lo = std::max(valid_lo, *f.target.truncation_degree);
    for (int j = lo; j <= hi; ++j)
        if (!f.source.terms_at(j + 1 - n).empty() && f.component_at(j + 1) == nullptr &&
            !f.target.terms_at(j + 1).empty())
            valid_lo = std::max(valid_lo, j + 1);
    if (valid_lo > lo || f.source.truncation_degree || f.target.truncation_degree)
        out.truncation_degree = valid_lo;

    for (int j = valid_lo; j <= hi; ++j) {
        std::vector<Bidegree> terms = f.source.terms_at(j + 1 - n);
        const auto& tgt = f.target.terms_at(j);
        terms.insert(terms.end(), tgt.begin(), tgt.end());
        if (!terms.empty()) out.terms[j] = std::move(terms);
    }

    for (int j = valid_lo; j < hi; ++j) {
        const auto& src_terms = out.terms_at(j);
        const auto& dst_terms = out.terms_at(j + 1);
        if (src_terms.empty() || dst_terms.empty()) continue;
        std::size_t a_cols = f.source.terms_at(j + 1 - n).size();
        std::size_t a_rows = f.source.terms_at(j + 2 - n).size();
        RingMatrix m(dst_terms.size());
        for (std::size_t r = 0; r < dst_terms.size(); ++r) {
            m[r].reserve(src_terms.size());
            for (std::size_t c = 0; c < src_terms.size(); ++c)
                m[r].push_back(CurveRingElement::zero(dst_terms[r] - src_terms[c]));
        }
        if (const RingMatrix* da = f.source.differential_at(j + 1 - n))
            for (std::size_t r = 0; r < a_rows; ++r)
                for (std::size_t c = 0; c < a_cols; ++c) m[r][c] = -(*da)[r][c];
        if (const RingMatrix* fc = f.component_at(j + 1))
            for (std::size_t r = 0; r < fc->size(); ++r)
                for (std::size_t c = 0; c < a_cols; ++c) m[a_rows + r][c] = (*fc)[r][c];
        if (const RingMatrix* db = f.target.differential_at(j))
            for (std::size_t r = 0; r < db->size(); ++r)
                for (std::size_t c = 0; c < (*db)[r].size(); ++c)
                    m[a_rows + r][a_cols + c] = (*db)[r][c];
        out.differentials[j] = std::move(m);
    }
    out.validate();
    return out;
}

// ---------------------------------------------------------------------------
// The compound-P-infinity verification and the curve semiorthogonality check.

struct CpInfinityGenerators {
    LineBundleComplex resolution;  // deep resolution of P(-1)
    ChainMap eps;                  // degree 1 generator
    ChainMap theta;                // degree 2 generator (the class v)
};

inline CpInfinityGenerators cp_infinity_generators(int depth) {
    CpInfinityGenerators g;
    g.resolution = build_resolution_P(-1, depth);
    auto target = g.resolution;
    auto basis1 = ext_basis(g.resolution, target, 1);
    auto basis2 = ext_basis(g.resolution, target, 2);
    g.eps = lift_to_chain_map(basis1.at(0));
    g.theta = lift_to_chain_map(basis2.at(1));  // labels are (u, v); theta lifts v
    return g;
}

// Check Ext^*(P(-1), P(-1)) = C[eps, theta]: the products eps^a theta^b with
// a + 2b = n realize a basis of Ext^n for every n <= n_max, eps and theta
// commute, and the dimensions match floor(n/2) + 1.
inline bool verify_cp_infinity_with(const CpInfinityGenerators& g, int n_max,
                                    const GradedDims& dims) {
    if (!is_chain_map(g.eps) || !is_chain_map(g.theta)) return false;

    ChainMap et = yoneda_compose_maps(g.eps, g.theta);
    ChainMap te = yoneda_compose_maps(g.theta, g.eps);
    if (!is_chain_map(et) || !is_chain_map(te)) return false;
    if (!(chain_map_class(et).coordinates == chain_map_class(te).coordinates)) return false;

    for (int n = 0; n <= n_max; ++n) {
        if (dims.at(n) != n / 2 + 1) return false;
        // rows: coordinates of eps^a theta^b, a + 2b = n
        std::vector<std::vector<Rational>> rows;
        for (int b = 0; 2 * b <= n; ++b) {
            int a = n - 2 * b;
            ChainMap prod = identity_chain_map(g.resolution);
            for (int i = 0; i < a; ++i) prod = yoneda_compose_maps(g.eps, prod);
            for (int i = 0; i < b; ++i) prod = yoneda_compose_maps(g.theta, prod);
            if (!is_chain_map(prod)) return false;
            rows.push_back(chain_map_class(prod).coordinates);
        }
        if (rows.size() != static_cast<std::size_t>(dims.at(n))) return false;
        SparseMatrix m(rows.size(), rows[0].size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c]);
        if (rank(m) != rows.size()) return false;
    }
    return true;
}

inline bool verify_cp_infinity(int n_max) {
    if (n_max < 2) throw Error("verify_cp_infinity: n_max >= 2 required");
    auto g = cp_infinity_generators(n_max + 6);
    auto source = build_resolution_P(-1, n_max + 4);
    auto target = build_resolution_P(-1, n_max + 4 + 4);
    GradedDims dims = ext_dims(source, target, n_max);
    return verify_cp_infinity_with(g, n_max, dims);
}

// Semiorthogonality of <D^b(reduced branch), P>: no maps from P = P(0) to the
// pullback bundles L(a), and none from L(a) back to P(-1).
inline bool sod_check_curve(int max_degree = 6) {
    for (int a = 0; a <= 2; ++a) {
        auto p0 = build_resolution_P(0, max_degree + 2);
        auto la = build_line_bundle(a, 0);
        if (!ext_dims(p0, la, max_degree).is_zero()) return false;
        auto pm1 = build_resolution_P(-1, -la.min_degree() + 2 + max_degree + 2);
        if (!ext_dims(la, pm1, max_degree).is_zero()) return false;
    }
    return true;
}

}  // namespace homcalc
