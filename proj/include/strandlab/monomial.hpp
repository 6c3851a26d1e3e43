#ifndef STRANDLAB_MONOMIAL_HPP
#define STRANDLAB_MONOMIAL_HPP

// Monomials (equivalently multidegrees) over a row x col variable grid.
// Single-indexed variable sets (y_j, z_r) live on row 1 of the same carrier.

#include <algorithm>
#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "strandlab/errors.hpp"

namespace strandlab {

struct VarIndex {
    int row = 1;
    int col = 1;
    auto operator<=>(const VarIndex&) const = default;
};

class Monomial {
public:
    Monomial() = default;

    static Monomial unit() { return Monomial(); }

    static Monomial variable(int row, int col, int exp = 1) {
        Monomial m;
        m.set({row, col}, exp);
        return m;
    }

    void set(VarIndex v, int e) {
        if (e < 0) throw OutOfRangeError("Monomial::set: negative exponent");
        if (e == 0)
            exps_.erase(v);
        else
            exps_[v] = e;
    }

    void bump(VarIndex v, int e) {
        if (e == 0) return;
        int ne = exponent(v) + e;
        set(v, ne);
    }

    int exponent(VarIndex v) const {
        auto it = exps_.find(v);
        return it == exps_.end() ? 0 : it->second;
    }

    const std::map<VarIndex, int>& exponents() const { return exps_; }

    bool is_unit() const { return exps_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& [v, e] : exps_) d += e;
        return d;
    }

    bool divides(const Monomial& other) const {
        for (const auto& [v, e] : exps_)
            if (other.exponent(v) < e) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        Monomial out = *this;
        for (const auto& [v, e] : other.exps_) out.bump(v, e);
        return out;
    }

    // componentwise difference; caller guarantees other divides *this
    Monomial quotient_by(const Monomial& other) const {
        Monomial out;
        for (const auto& [v, e] : exps_) {
            int r = e - other.exponent(v);
            if (r < 0) throw OutOfRangeError("Monomial::quotient_by: not divisible");
            if (r > 0) out.set(v, r);
        }
        return out;
    }

    auto operator<=>(const Monomial&) const = default;

    std::string str() const {
        if (exps_.empty()) return "1";
        std::ostringstream os;
        bool first = true;
        for (const auto& [v, e] : exps_) {
            if (!first) os << "*";
            first = false;
            os << "x[" << v.row << "][" << v.col << "]";
            if (e > 1) os << "^" << e;
        }
        return os.str();
    }

private:
    std::map<VarIndex, int> exps_; // nonzero exponents only
};

using Multidegree = Monomial;

inline Monomial monomial_lcm(const Monomial& u, const Monomial& v) {
    Monomial out = u;
    for (const auto& [var, e] : v.exponents()) {
        int cur = out.exponent(var);
        if (e > cur) out.set(var, e);
    }
    return out;
}

inline bool divides(const Monomial& u, const Monomial& v) { return u.divides(v); }

} // namespace strandlab

#endif
