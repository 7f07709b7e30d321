#pragma once

// GradedDims: the universal return type for Ext and cohomology computations.
// A map from integer cohomological degree to a non-negative dimension; zero
// dimensions are never stored.

#include "homcalc/errors.hpp"

#include <map>
#include <sstream>
#include <string>

namespace homcalc {

class GradedDims {
public:
    GradedDims() = default;
    GradedDims(std::initializer_list<std::pair<const int, long long>> init) {
        for (const auto& [d, v] : init) set(d, v);
    }

    void set(int degree, long long dim) {
        if (dim < 0) throw Error("GradedDims: negative dimension");
        if (dim == 0)
            dims_.erase(degree);
        else
            dims_[degree] = dim;
    }

    void add(int degree, long long dim) { set(degree, at(degree) + dim); }

    long long at(int degree) const {
        auto it = dims_.find(degree);
        return it == dims_.end() ? 0 : it->second;
    }

    bool is_zero() const { return dims_.empty(); }
    const std::map<int, long long>& entries() const { return dims_; }

    int min_degree() const { return dims_.empty() ? 0 : dims_.begin()->first; }
    int max_degree() const { return dims_.empty() ? 0 : dims_.rbegin()->first; }

    GradedDims shifted(int k) const {
        GradedDims out;
        for (const auto& [d, v] : dims_) out.set(d + k, v);
        return out;
    }

    GradedDims plus(const GradedDims& other) const {
        GradedDims out = *this;
        for (const auto& [d, v] : other.dims_) out.add(d, v);
        return out;
    }

    // Restriction to degrees <= k.
    GradedDims truncated(int k) const {
        GradedDims out;
        for (const auto& [d, v] : dims_)
            if (d <= k) out.set(d, v);
        return out;
    }

    long long total() const {
        long long t = 0;
        for (const auto& [d, v] : dims_) t += v;
        return t;
    }

    friend bool operator==(const GradedDims&, const GradedDims&) = default;

    std::string str() const {
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (const auto& [d, v] : dims_) {
            if (!first) os << ", ";
            os << d << ": " << v;
            first = false;
        }
        os << "}";
        return os.str();
    }

private:
    std::map<int, long long> dims_;
};

// Alternating sum of dimensions.
inline long long euler_from_dims(const GradedDims& d) {
    long long chi = 0;
    for (const auto& [deg, dim] : d.entries()) chi += (deg % 2 == 0) ? dim : -dim;
    return chi;
}

}  // namespace homcalc
