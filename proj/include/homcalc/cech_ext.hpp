#pragma once

// Ext groups on the curve {s^2 u = 0} as cohomology of the total complex of
//   Cech(three affine charts) @ Hom(c, d)
// for bounded complexes c, d of line bundles. The Cech direction has length
// one (three charts, two nonzero overlaps), the Hom direction is bounded by
// the truncations, and localized section spaces are capped at a monomial
// exponent cutoff. Multiplication only raises exponents, so the capped
// complex still satisfies D^2 = 0 exactly; correctness of a reported number
// is guarded by recomputing at cutoff + 2 and by the depth preconditions
// below.
//
// Truncation rules. Cutting a resolution at depth N leaves junk cohomology
// at degree -N. For Ext^n(c, d) with n <= max_degree this junk is invisible
// provided
//   - c truncated:  depth(c) >= max_degree + 2 + amplitude of the object d
//   - d truncated:  depth(d) >= (full support depth of c) + 2
// (the second rule keeps the junk of d in negative cochain degrees).

#include "homcalc/curve_complexes.hpp"
#include "homcalc/curve_ring.hpp"
#include "homcalc/errors.hpp"
#include "homcalc/graded.hpp"
#include "homcalc/sparse.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace homcalc {

namespace cech {

struct Element {
    int r = 0;        // Cech degree: 0 = single chart, 1 = overlap
    Chart chart = Chart::SV;
    int p = 0;        // source complex degree; target degree q = p + (n - r)
    int row = 0;      // index into d.terms[q]
    int col = 0;      // index into c.terms[p]
    CurveMonomial mono;

    friend auto operator<=>(const Element&, const Element&) = default;
};

inline const std::vector<Chart>& charts_for(int r) {
    static const std::vector<Chart> singles = {Chart::SV, Chart::TU, Chart::TV};
    static const std::vector<Chart> overlaps = {Chart::STV, Chart::TUV};
    static const std::vector<Chart> none;
    return r == 0 ? singles : (r == 1 ? overlaps : none);
}

// Cech restriction targets with the sign of the alternating difference
// (charts ordered SV < TU < TV; overlap (SV,TV) = STV, (TU,TV) = TUV).
inline std::vector<std::pair<Chart, int>> cech_targets(Chart chart) {
    switch (chart) {
        case Chart::SV: return {{Chart::STV, -1}};
        case Chart::TU: return {{Chart::TUV, -1}};
        case Chart::TV: return {{Chart::STV, +1}, {Chart::TUV, +1}};
        default: return {};
    }
}

class TotalComplex {
public:
    TotalComplex(const LineBundleComplex& c, const LineBundleComplex& d, int cutoff)
        : c_(c), d_(d), cutoff_(cutoff) {}

    const std::vector<Element>& basis(int n) {
        auto it = bases_.find(n);
        if (it != bases_.end()) return it->second;
        std::vector<Element> out;
        for (int r = 0; r <= 1; ++r) {
            int m = n - r;
            for (const auto& [p, src_terms] : c_.terms) {
                const auto& dst_terms = d_.terms_at(p + m);
                if (dst_terms.empty()) continue;
                for (Chart chart : charts_for(r))
                    for (std::size_t i = 0; i < dst_terms.size(); ++i)
                        for (std::size_t j = 0; j < src_terms.size(); ++j) {
                            Bidegree deg = dst_terms[i] - src_terms[j];
                            for (const auto& mono : chart_sections(chart, deg, cutoff_)) {
                                Element e;
                                e.r = r, e.chart = chart, e.p = p;
                                e.row = static_cast<int>(i), e.col = static_cast<int>(j);
                                e.mono = mono;
                                out.push_back(e);
                            }
                        }
            }
        }
        auto [pos, inserted] = bases_.emplace(n, std::move(out));
        auto& idx = index_[n];
        for (std::size_t k = 0; k < pos->second.size(); ++k) idx.emplace(pos->second[k], k);
        return pos->second;
    }

    // D^n : T^n -> T^{n+1}, the double-complex differential
    //   D = delta_cech + (-1)^r (d_target o phi - (-1)^m phi o d_source).
    const SparseMatrix& differential(int n) {
        auto it = diffs_.find(n);
        if (it != diffs_.end()) return it->second;
        const auto& src = basis(n);
        const auto& dst = basis(n + 1);
        const auto& dst_index = index_.at(n + 1);
        SparseMatrix mat(dst.size(), src.size());

        for (std::size_t k = 0; k < src.size(); ++k) {
            const Element& e = src[k];
            int m = n - e.r;          // Hom degree of this element
            int q = e.p + m;          // target complex degree
            int hom_sign = (e.r % 2 == 0) ? 1 : -1;

            auto add_entry = [&](const Element& t, const Rational& coeff) {
                if (coeff == 0) return;
                if (!chart_keeps(t.chart, t.mono, cutoff_)) return;
                auto pos = dst_index.find(t);
                if (pos == dst_index.end()) return;
                mat.add(pos->second, k, coeff);
            };

            // Cech part (single charts to overlaps; restriction fixes monomials).
            if (e.r == 0)
                for (const auto& [target_chart, sign] : cech_targets(e.chart)) {
                    Element t = e;
                    t.r = 1;
                    t.chart = target_chart;
                    add_entry(t, sign);
                }

            // Post-compose with the target differential d_q : d_q -> d_{q+1}.
            if (const RingMatrix* dd = d_.differential_at(q))
                for (std::size_t r2 = 0; r2 < dd->size(); ++r2)
                    for (const auto& [mg, cg] : (*dd)[r2][e.row].terms()) {
                        Element t = e;
                        t.row = static_cast<int>(r2);
                        t.mono = e.mono * mg;
                        add_entry(t, Rational(hom_sign) * cg);
                    }

            // Pre-compose with the source differential d_{p-1} : c_{p-1} -> c_p.
            if (const RingMatrix* dc = c_.differential_at(e.p - 1)) {
                int msign = (m % 2 == 0) ? 1 : -1;
                const auto& row_entries = (*dc)[e.col];
                for (std::size_t j2 = 0; j2 < row_entries.size(); ++j2)
                    for (const auto& [mg, cg] : row_entries[j2].terms()) {
                        Element t = e;
                        t.p = e.p - 1;
                        t.col = static_cast<int>(j2);
                        t.mono = e.mono * mg;
                        add_entry(t, Rational(-hom_sign * msign) * cg);
                    }
            }
        }
        return diffs_.emplace(n, std::move(mat)).first->second;
    }

    int index_of(int n, const Element& e) {
        basis(n);
        const auto& idx = index_.at(n);
        auto it = idx.find(e);
        return it == idx.end() ? -1 : static_cast<int>(it->second);
    }

private:
    const LineBundleComplex& c_;
    const LineBundleComplex& d_;
    int cutoff_;
    std::map<int, std::vector<Element>> bases_;
    std::map<int, std::map<Element, std::size_t>> index_;
    std::map<int, SparseMatrix> diffs_;
};

}  // namespace cech

inline int default_cutoff(int max_degree) { return max_degree + 8; }

namespace detail {

inline void check_ext_preconditions(const LineBundleComplex& c, const LineBundleComplex& d,
                                    int max_degree) {
    c.validate();
    d.validate();
    int amp_obj_d = d.truncation_degree ? 0 : d.amplitude();
    if (c.truncation_degree && c.depth() < max_degree + 2 + amp_obj_d)
        throw MalformedComplexError("ext_dims: source resolution truncated too shallow");
    if (d.truncation_degree && d.depth() < -c.min_degree() + 2)
        throw MalformedComplexError("ext_dims: target resolution truncated too shallow");
}

inline GradedDims ext_dims_single(const LineBundleComplex& c, const LineBundleComplex& d,
                                  int max_degree, int cutoff) {
    cech::TotalComplex tot(c, d, cutoff);
    GradedDims out;
    std::map<int, std::size_t> ranks;
    for (int n = -1; n <= max_degree; ++n) ranks[n] = rank(tot.differential(n));
    for (int n = 0; n <= max_degree; ++n) {
        if (!(tot.differential(n) * tot.differential(n - 1)).is_zero())
            throw MalformedComplexError("ext_dims: total differential does not square to zero");
        std::size_t dim = tot.basis(n).size();
        long long h = static_cast<long long>(dim) - static_cast<long long>(ranks[n]) -
                      static_cast<long long>(ranks[n - 1]);
        if (h < 0) throw Error("ext_dims: negative cohomology dimension");
        out.set(n, h);
    }
    return out;
}

}  // namespace detail

// Dimensions of Ext^n(c, d) for 0 <= n <= max_degree. Computes at the given
// cutoff and again at cutoff + 2; any disagreement raises
// UnstableTruncationError rather than returning an unstable number.
inline GradedDims ext_dims(const LineBundleComplex& c, const LineBundleComplex& d, int max_degree,
                           int cutoff = -1) {
    if (cutoff < 0) cutoff = default_cutoff(max_degree);
    detail::check_ext_preconditions(c, d, max_degree);
    GradedDims a = detail::ext_dims_single(c, d, max_degree, cutoff);
    GradedDims b = detail::ext_dims_single(c, d, max_degree, cutoff + 2);
    if (!(a == b))
        throw UnstableTruncationError("ext_dims: dimensions changed at cutoff + 2; cutoff " +
                                      std::to_string(cutoff) + " too small");
    return a;
}

// ---------------------------------------------------------------------------
// Ext classes.

// A degree-n Ext class between two complexes. For pairs of standard periodic
// resolutions of P(a) the coordinates live in the monomial-labelled basis
// {u^i v^j} (u-power descending); otherwise they refer to a computed basis.
struct ExtClass {
    LineBundleComplex source;
    LineBundleComplex target;
    int degree = 0;
    std::vector<Rational> coordinates;
    std::vector<std::string> labels;
};

inline bool is_p_resolution_pair(const LineBundleComplex& c, const LineBundleComplex& d) {
    return c.kind == ObjectKind::ResolutionP && d.kind == ObjectKind::ResolutionP;
}

// Monomial labels u^i v^j of the labelled Ext basis in degree n: exponent
// pairs with i + j = uv-part of Hom(c_{-n}, d_0).
inline std::vector<std::pair<int, int>> p_pair_basis_exponents(const LineBundleComplex& c,
                                                               const LineBundleComplex& d, int n) {
    if (n < 0 || c.terms_at(-n).empty() || d.terms_at(0).empty()) return {};
    Bidegree deg = d.terms_at(0)[0] - c.terms_at(-n)[0];
    std::vector<std::pair<int, int>> out;
    for (int i = deg.uv; i >= 0; --i) out.emplace_back(i, deg.uv - i);
    return out;
}

inline std::string uv_label(int i, int j) {
    CurveMonomial m{0, 0, i, j};
    return m.str();
}

// Labelled basis of Ext^n between periodic P-resolutions; general pairs get
// an unlabelled basis of the computed cohomology.
inline std::vector<ExtClass> ext_basis(const LineBundleComplex& c, const LineBundleComplex& d,
                                       int n, int cutoff = -1) {
    std::vector<ExtClass> out;
    if (is_p_resolution_pair(c, d)) {
        auto exps = p_pair_basis_exponents(c, d, n);
        std::vector<std::string> labels;
        for (auto [i, j] : exps) labels.push_back(uv_label(i, j));
        for (std::size_t k = 0; k < exps.size(); ++k) {
            ExtClass x;
            x.source = c, x.target = d, x.degree = n;
            x.coordinates.assign(exps.size(), Rational(0));
            x.coordinates[k] = 1;
            x.labels = labels;
            out.push_back(std::move(x));
        }
        return out;
    }
    GradedDims dims = ext_dims(c, d, n, cutoff);
    long long h = dims.at(n);
    for (long long k = 0; k < h; ++k) {
        ExtClass x;
        x.source = c, x.target = d, x.degree = n;
        x.coordinates.assign(h, Rational(0));
        x.coordinates[k] = 1;
        out.push_back(std::move(x));
    }
    return out;
}

// The leading cocycle of a labelled class: the component c_{-n} -> d_0 of any
// chain-map representative, as a global ring element t^n u^i v^j.
inline CurveRingElement leading_cocycle(const ExtClass& x) {
    if (!is_p_resolution_pair(x.source, x.target))
        throw Error("leading_cocycle: labelled representatives exist only for P-pairs");
    auto exps = p_pair_basis_exponents(x.source, x.target, x.degree);
    if (exps.size() != x.coordinates.size())
        throw Error("leading_cocycle: coordinate length does not match the basis");
    Bidegree deg = x.target.terms_at(0)[0] - x.source.terms_at(-x.degree)[0];
    CurveRingElement out = CurveRingElement::zero(deg);
    for (std::size_t k = 0; k < exps.size(); ++k) {
        if (x.coordinates[k] == 0) continue;
        out = out + CurveRingElement::monomial({0, x.degree, exps[k].first, exps[k].second},
                                               x.coordinates[k]);
    }
    return out;
}

}  // namespace homcalc
