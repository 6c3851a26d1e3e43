#ifndef STRANDLAB_EXACTLA_HPP
#define STRANDLAB_EXACTLA_HPP

// Exact sparse linear algebra over GF(p) or the rationals. No floating
// point anywhere; ranks and kernels are computed by Gaussian elimination
// with a Markowitz least-fill pivot and deterministic (row, col) tie-break.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "strandlab/errors.hpp"

namespace strandlab {

using Rational = boost::multiprecision::cpp_rational;

struct ScalarFieldSpec {
    enum class Kind { Prime, Rational };

    Kind kind = Kind::Prime;
    long long p = 32003;

    static ScalarFieldSpec prime(long long p = 32003) { return {Kind::Prime, p}; }
    static ScalarFieldSpec rational() { return {Kind::Rational, 0}; }

    bool operator==(const ScalarFieldSpec&) const = default;
};

// Entries are kept as machine integers; every matrix this library builds has
// small integer coefficients (signs times small multiplicities). Arithmetic
// is performed exactly in the requested field during elimination.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, long long v) {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw OutOfRangeError("SparseMatrix::set: index out of range");
        if (v == 0)
            entries_.erase({r, c});
        else
            entries_[{r, c}] = v;
    }

    void add(int r, int c, long long v) {
        if (v == 0) return;
        auto key = std::make_pair(r, c);
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            set(r, c, v);
        } else {
            it->second += v;
            if (it->second == 0) entries_.erase(it);
        }
    }

    long long get(int r, int c) const {
        auto it = entries_.find({r, c});
        return it == entries_.end() ? 0 : it->second;
    }

    const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }

    SparseMatrix transposed() const {
        SparseMatrix t(cols_, rows_);
        for (const auto& [rc, v] : entries_) t.set(rc.second, rc.first, v);
        return t;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::map<std::pair<int, int>, long long> entries_;
};

namespace detail {

struct PrimeField {
    long long p;
    using Elem = long long;

    Elem from_int(long long v) const {
        long long r = v % p;
        return r < 0 ? r + p : r;
    }
    bool is_zero(Elem a) const { return a == 0; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return (a - b % p + p) % p; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem inv(Elem a) const {
        // extended Euclid; p is prime so every nonzero a is invertible
        long long t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            long long q = r / nr;
            t -= q * nt;
            std::swap(t, nt);
            r -= q * nr;
            std::swap(r, nr);
        }
        return from_int(t);
    }
};

struct RationalField {
    using Elem = Rational;

    Elem from_int(long long v) const { return Rational(v); }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem neg(const Elem& a) const { return -a; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const { return 1 / a; }
};

// Sparse elimination working on rows stored as ordered column -> value maps.
// Pivot choice: minimal Markowitz count (nnz(row)-1)*(nnz(col)-1) among the
// remaining entries, ties broken by (row, col).
template <class F>
int rank_impl(const SparseMatrix& a, const F& field) {
    using Elem = typename F::Elem;
    std::vector<std::map<int, Elem>> rows(a.rows());
    for (const auto& [rc, v] : a.entries()) {
        Elem e = field.from_int(v);
        if (!field.is_zero(e)) rows[rc.first][rc.second] = e;
    }
    std::vector<bool> row_done(a.rows(), false);
    std::vector<int> col_count(a.cols(), 0);
    for (int r = 0; r < a.rows(); ++r)
        for (const auto& [c, v] : rows[r]) col_count[c]++;

    int rank = 0;
    for (;;) {
        int best_r = -1, best_c = -1;
        long long best_score = -1;
        for (int r = 0; r < a.rows(); ++r) {
            if (row_done[r] || rows[r].empty()) continue;
            long long rn = static_cast<long long>(rows[r].size()) - 1;
            for (const auto& [c, v] : rows[r]) {
                long long score = rn * (col_count[c] - 1);
                if (best_score < 0 || score < best_score ||
                    (score == best_score && std::make_pair(r, c) < std::make_pair(best_r, best_c))) {
                    best_score = score;
                    best_r = r;
                    best_c = c;
                }
                if (best_score == 0) break;
            }
            if (best_score == 0) break;
        }
        if (best_r < 0) break;

        const std::map<int, Elem> pivot_row = rows[best_r];
        Elem pinv = field.inv(pivot_row.at(best_c));
        for (int r = 0; r < a.rows(); ++r) {
            if (r == best_r || row_done[r]) continue;
            auto it = rows[r].find(best_c);
            if (it == rows[r].end()) continue;
            Elem factor = field.mul(it->second, pinv);
            for (const auto& [c, v] : pivot_row) {
                auto jt = rows[r].find(c);
                if (jt == rows[r].end()) {
                    Elem nv = field.neg(field.mul(factor, v));
                    if (!field.is_zero(nv)) {
                        rows[r][c] = nv;
                        col_count[c]++;
                    }
                } else {
                    jt->second = field.sub(jt->second, field.mul(factor, v));
                    if (field.is_zero(jt->second)) {
                        rows[r].erase(jt);
                        col_count[c]--;
                    }
                }
            }
        }
        for (const auto& [c, v] : pivot_row) col_count[c]--;
        row_done[best_r] = true;
        rows[best_r].clear();
        ++rank;
    }
    return rank;
}

// Reduced row echelon with pivots taken in natural column order; used for
// kernel extraction so the reported basis is reproducible.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_impl(const SparseMatrix& a, const F& field) {
    using Elem = typename F::Elem;
    std::vector<std::map<int, Elem>> rows(a.rows());
    for (const auto& [rc, v] : a.entries()) {
        Elem e = field.from_int(v);
        if (!field.is_zero(e)) rows[rc.first][rc.second] = e;
    }
    std::vector<int> pivot_col_of_row;
    std::vector<int> pivot_row_of_col(a.cols(), -1);
    std::vector<bool> used(a.rows(), false);
    for (int c = 0; c < a.cols(); ++c) {
        int pr = -1;
        for (int r = 0; r < a.rows(); ++r) {
            if (used[r]) continue;
            auto it = rows[r].find(c);
            if (it != rows[r].end()) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        used[pr] = true;
        pivot_row_of_col[c] = pr;
        Elem pinv = field.inv(rows[pr].at(c));
        std::map<int, Elem> scaled;
        for (const auto& [cc, v] : rows[pr]) scaled[cc] = field.mul(v, pinv);
        rows[pr] = scaled;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == pr) continue;
            auto it = rows[r].find(c);
            if (it == rows[r].end()) continue;
            Elem factor = it->second;
            for (const auto& [cc, v] : rows[pr]) {
                auto jt = rows[r].find(cc);
                if (jt == rows[r].end()) {
                    Elem nv = field.neg(field.mul(factor, v));
                    if (!field.is_zero(nv)) rows[r][cc] = nv;
                } else {
                    jt->second = field.sub(jt->second, field.mul(factor, v));
                    if (field.is_zero(jt->second)) rows[r].erase(jt);
                }
            }
        }
    }
    std::vector<std::vector<Elem>> basis;
    for (int c = 0; c < a.cols(); ++c) {
        if (pivot_row_of_col[c] >= 0) continue;
        std::vector<Elem> v(a.cols(), field.from_int(0));
        v[c] = field.from_int(1);
        for (int cc = 0; cc < a.cols(); ++cc) {
            int pr = pivot_row_of_col[cc];
            if (pr < 0) continue;
            auto it = rows[pr].find(c);
            if (it != rows[pr].end()) v[cc] = field.neg(it->second);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace detail

inline int rank(const SparseMatrix& a, const ScalarFieldSpec& f) {
    if (f.kind == ScalarFieldSpec::Kind::Prime)
        return detail::rank_impl(a, detail::PrimeField{f.p});
    return detail::rank_impl(a, detail::RationalField{});
}

// Right null space basis. Over GF(p) entries are canonical representatives
// in [0, p); over the rationals they are exact.
inline std::vector<std::vector<long long>> kernel_basis_prime(const SparseMatrix& a, long long p = 32003) {
    return detail::kernel_impl(a, detail::PrimeField{p});
}

inline std::vector<std::vector<Rational>> kernel_basis_rational(const SparseMatrix& a) {
    return detail::kernel_impl(a, detail::RationalField{});
}

inline long long kernel_dim(const SparseMatrix& a, const ScalarFieldSpec& f) {
    return a.cols() - rank(a, f);
}

// dim ker(d_out) - rank(d_in) for a composable pair d_in : A -> B, d_out : B -> C.
inline long long homology_dim(const SparseMatrix& d_in, const SparseMatrix& d_out, const ScalarFieldSpec& f) {
    if (d_out.cols() != d_in.rows())
        throw NotComposableError("homology_dim: d_out.cols() != d_in.rows()");
    // d_out * d_in must vanish over the requested field
    if (f.kind == ScalarFieldSpec::Kind::Prime) {
        detail::PrimeField fp{f.p};
        std::map<std::pair<int, int>, long long> prod;
        for (const auto& [rc1, v1] : d_in.entries())
            for (const auto& [rc2, v2] : d_out.entries())
                if (rc2.second == rc1.first)
                    prod[{rc2.first, rc1.second}] = fp.from_int(prod[{rc2.first, rc1.second}] + fp.from_int(v1 * v2));
        for (const auto& [rc, v] : prod)
            if (v != 0) throw NotAComplexError("homology_dim: d_out * d_in != 0");
    } else {
        std::map<std::pair<int, int>, Rational> prod;
        for (const auto& [rc1, v1] : d_in.entries())
            for (const auto& [rc2, v2] : d_out.entries())
                if (rc2.second == rc1.first)
                    prod[{rc2.first, rc1.second}] += Rational(v1) * Rational(v2);
        for (const auto& [rc, v] : prod)
            if (v != 0) throw NotAComplexError("homology_dim: d_out * d_in != 0");
    }
    return kernel_dim(d_out, f) - rank(d_in, f);
}

} // namespace strandlab

#endif
