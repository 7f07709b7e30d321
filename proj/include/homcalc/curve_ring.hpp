#pragma once

// The bihomogeneous coordinate ring of the singular curve
//   {s^2 u = 0}  in  P^1_{s:t} x P^1_{u:v},
// in normal form modulo s^2 u: a monomial s^i t^j u^k v^l is kept iff i <= 1
// or k = 0. All ring arithmetic reduces eagerly.
//
// The curve is covered by three nonempty affine charts (the chart inverting
// both s and u misses the curve): localizing kills part of the relation, so
//   chart (s,v):  u = 0          chart (t,u):  s^2 = 0       chart (t,v): full
// and the two nonzero double overlaps are (s,t,v) and (t,u,v). Localized
// section spaces are infinite dimensional; enumeration caps every exponent's
// absolute value at a cutoff, and multiplication only ever raises exponents,
// so the capped complexes still square to zero exactly.

#include "homcalc/errors.hpp"
#include "homcalc/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace homcalc {

struct Bidegree {
    int st = 0;  // total degree in s, t
    int uv = 0;  // total degree in u, v

    Bidegree operator+(Bidegree o) const { return {st + o.st, uv + o.uv}; }
    Bidegree operator-(Bidegree o) const { return {st - o.st, uv - o.uv}; }
    friend bool operator==(Bidegree, Bidegree) = default;
    friend auto operator<=>(Bidegree, Bidegree) = default;

    std::string str() const {
        return "(" + std::to_string(st) + "," + std::to_string(uv) + ")";
    }
};

struct CurveMonomial {
    int s = 0, t = 0, u = 0, v = 0;

    Bidegree bidegree() const { return {s + t, u + v}; }
    bool dead_mod_relation() const { return s >= 2 && u >= 1; }

    CurveMonomial operator*(const CurveMonomial& o) const {
        return {s + o.s, t + o.t, u + o.u, v + o.v};
    }
    friend auto operator<=>(const CurveMonomial&, const CurveMonomial&) = default;

    std::string str() const {
        std::ostringstream os;
        auto var = [&](const char* name, int e) {
            if (e == 0) return;
            os << name;
            if (e != 1) os << "^" << e;
            os << " ";
        };
        var("s", s), var("t", t), var("u", u), var("v", v);
        std::string r = os.str();
        if (r.empty()) return "1";
        r.pop_back();
        return r;
    }
};

// A bihomogeneous element of C[s,t,u,v]/(s^2 u). The zero element carries a
// bidegree so matrix entries stay typed.
class CurveRingElement {
public:
    CurveRingElement() = default;
    explicit CurveRingElement(Bidegree deg) : degree_(deg) {}

    static CurveRingElement monomial(const CurveMonomial& m, const Rational& coeff = Rational(1)) {
        CurveRingElement e(m.bidegree());
        e.add_term(m, coeff);
        return e;
    }
    static CurveRingElement zero(Bidegree deg) { return CurveRingElement(deg); }
    static CurveRingElement one() { return monomial({0, 0, 0, 0}); }

    void add_term(const CurveMonomial& m, const Rational& coeff) {
        if (coeff == 0 || m.dead_mod_relation()) return;
        if (m.s < 0 || m.t < 0 || m.u < 0 || m.v < 0)
            throw Error("CurveRingElement: negative exponent outside a chart");
        if (m.bidegree() != degree_) {
            if (terms_.empty() && degree_ == Bidegree{})
                degree_ = m.bidegree();
            else
                throw Error("CurveRingElement: mixed bidegrees");
        }
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Bidegree degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<CurveMonomial, Rational>& terms() const { return terms_; }

    CurveRingElement operator*(const CurveRingElement& o) const {
        CurveRingElement out(degree_ + o.degree_);
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) {
                CurveMonomial m = m1 * m2;
                if (m.dead_mod_relation()) continue;
                out.add_term(m, c1 * c2);
            }
        return out;
    }

    CurveRingElement operator+(const CurveRingElement& o) const {
        if (!terms_.empty() && !o.terms_.empty() && degree_ != o.degree_)
            throw Error("CurveRingElement: sum of different bidegrees");
        CurveRingElement out = *this;
        if (out.terms_.empty()) out.degree_ = o.degree_;
        for (const auto& [m, c] : o.terms_) out.add_term(m, c);
        return out;
    }

    CurveRingElement operator-() const {
        CurveRingElement out(degree_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }
    CurveRingElement operator-(const CurveRingElement& o) const { return *this + (-o); }

    CurveRingElement scaled(const Rational& c) const {
        CurveRingElement out(degree_);
        if (c == 0) return out;
        for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
        return out;
    }

    friend bool operator==(const CurveRingElement& a, const CurveRingElement& b) {
        return a.terms_ == b.terms_;  // zero elements of any bidegree agree
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            if (c != 1) os << to_string(c) << "*";
            os << m.str();
            first = false;
        }
        return os.str();
    }

private:
    Bidegree degree_;
    std::map<CurveMonomial, Rational> terms_;
};

inline CurveRingElement mono_s() { return CurveRingElement::monomial({1, 0, 0, 0}); }
inline CurveRingElement mono_t() { return CurveRingElement::monomial({0, 1, 0, 0}); }
inline CurveRingElement mono_u() { return CurveRingElement::monomial({0, 0, 1, 0}); }
inline CurveRingElement mono_v() { return CurveRingElement::monomial({0, 0, 0, 1}); }
inline CurveRingElement mono_su() { return CurveRingElement::monomial({1, 0, 1, 0}); }
inline CurveRingElement mono_s2() { return CurveRingElement::monomial({2, 0, 0, 0}); }

// Global sections of O(a,b) on the curve: all normal-form monomials of the
// quotient ring in bidegree (a,b). Ordered s-degree first so that linear
// solves (free variables zero) prefer s-free representatives.
inline std::vector<CurveMonomial> sections_curve(int a, int b) {
    std::vector<CurveMonomial> out;
    if (a < 0 || b < 0) return out;
    for (int i = 0; i <= a; ++i)
        for (int k = 0; k <= b; ++k) {
            CurveMonomial m{i, a - i, k, b - k};
            if (!m.dead_mod_relation()) out.push_back(m);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Affine charts of the curve and their localized section spaces.

enum class Chart : std::uint8_t {
    SV,   // s != 0, v != 0           (u = 0 here)
    TU,   // t != 0, u != 0           (s^2 = 0 here)
    TV,   // t != 0, v != 0           (full relation survives)
    STV,  // overlap of SV and TV
    TUV,  // overlap of TU and TV
};

inline const char* chart_name(Chart c) {
    switch (c) {
        case Chart::SV: return "sv";
        case Chart::TU: return "tu";
        case Chart::TV: return "tv";
        case Chart::STV: return "stv";
        case Chart::TUV: return "tuv";
    }
    return "?";
}

// Is the monomial a valid normal-form basis element of the localized ring?
// (Exponents of inverted variables may be negative; the surviving relation
// piece kills the rest; every exponent is capped at |e| <= cutoff.)
inline bool chart_keeps(Chart chart, const CurveMonomial& m, int cutoff) {
    if (std::abs(m.s) > cutoff || std::abs(m.t) > cutoff || std::abs(m.u) > cutoff ||
        std::abs(m.v) > cutoff)
        return false;
    switch (chart) {
        case Chart::SV: return m.u == 0 && m.t >= 0;
        case Chart::TU: return m.s >= 0 && m.s <= 1 && m.v >= 0;
        case Chart::TV: return m.s >= 0 && m.u >= 0 && !(m.s >= 2 && m.u >= 1);
        case Chart::STV: return m.u == 0;
        case Chart::TUV: return m.s >= 0 && m.s <= 1;
    }
    return false;
}

// Basis of the bidegree-(a,b) part of the localized ring, capped.
inline std::vector<CurveMonomial> chart_sections(Chart chart, Bidegree deg, int cutoff) {
    std::vector<CurveMonomial> out;
    auto push = [&](int i, int k) {
        CurveMonomial m{i, deg.st - i, k, deg.uv - k};
        if (chart_keeps(chart, m, cutoff)) out.push_back(m);
    };
    switch (chart) {
        case Chart::SV:
            for (int i = -cutoff; i <= cutoff; ++i) push(i, 0);
            break;
        case Chart::TU:
            for (int i = 0; i <= 1; ++i)
                for (int k = -cutoff; k <= cutoff; ++k) push(i, k);
            break;
        case Chart::TV:
            for (int i = 0; i <= cutoff; ++i)
                for (int k = 0; k <= cutoff; ++k) push(i, k);
            break;
        case Chart::STV:
            for (int i = -cutoff; i <= cutoff; ++i) push(i, 0);
            break;
        case Chart::TUV:
            for (int i = 0; i <= 1; ++i)
                for (int k = -cutoff; k <= cutoff; ++k) push(i, k);
            break;
    }
    return out;
}

}  // namespace homcalc
