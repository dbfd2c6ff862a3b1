#ifndef QALG_LINALG_HPP
#define QALG_LINALG_HPP

#include <optional>
#include <vector>

#include "qalg/fields.hpp"

namespace qalg {

template <class F>
using Vec = std::vector<typename F::Elem>;

template <class F>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<typename F::Elem> a;  // row-major

    Mat() = default;
    Mat(int r, int c, typename F::Elem fill = {}) : rows(r), cols(c), a((size_t)r * c, fill) {}

    typename F::Elem& at(int i, int j) { return a[(size_t)i * cols + j]; }
    const typename F::Elem& at(int i, int j) const { return a[(size_t)i * cols + j]; }

    static Mat identity(const F& f, int n) {
        Mat m(n, n, f.zero());
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }
    Vec<F> col(int j) const {
        Vec<F> v((size_t)rows);
        for (int i = 0; i < rows; ++i) v[i] = at(i, j);
        return v;
    }
    void set_col(int j, const Vec<F>& v) {
        for (int i = 0; i < rows; ++i) at(i, j) = v[i];
    }
};

template <class F>
Mat<F> transpose(const Mat<F>& m) {
    Mat<F> t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

template <class F>
Mat<F> mat_mul(const F& f, const Mat<F>& a, const Mat<F>& b) {
    Mat<F> c(a.rows, b.cols, f.zero());
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const auto& aik = a.at(i, k);
            if (f.is_zero(aik)) continue;
            for (int j = 0; j < b.cols; ++j)
                c.at(i, j) = f.add(c.at(i, j), f.mul(aik, b.at(k, j)));
        }
    return c;
}

template <class F>
Vec<F> mat_vec(const F& f, const Mat<F>& a, const Vec<F>& x) {
    Vec<F> y((size_t)a.rows, f.zero());
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            if (!f.is_zero(a.at(i, j))) y[i] = f.add(y[i], f.mul(a.at(i, j), x[j]));
    return y;
}

template <class F>
Mat<F> hstack(const Mat<F>& a, const Mat<F>& b) {
    Mat<F> c(a.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) c.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols; ++j) c.at(i, a.cols + j) = b.at(i, j);
    }
    return c;
}

// ---------------------------------------------------------------------------
// GF(2) bit-packed elimination

struct BitMat {
    int rows = 0, cols = 0, wpr = 0;
    std::vector<uint64_t> w;

    BitMat() = default;
    BitMat(int r, int c) : rows(r), cols(c), wpr((c + 63) / 64), w((size_t)r * wpr, 0) {}

    bool get(int i, int j) const { return (w[(size_t)i * wpr + j / 64] >> (j % 64)) & 1u; }
    void set(int i, int j, bool v) {
        uint64_t& word = w[(size_t)i * wpr + j / 64];
        uint64_t bit = uint64_t(1) << (j % 64);
        if (v) word |= bit; else word &= ~bit;
    }
    void xor_rows(int dst, int src) {
        uint64_t* d = &w[(size_t)dst * wpr];
        const uint64_t* s = &w[(size_t)src * wpr];
        for (int k = 0; k < wpr; ++k) d[k] ^= s[k];
    }
};

// reduced row echelon form; returns rank, records pivot columns
inline int gf2_rref(BitMat& m, std::vector<int>& pivots) {
    pivots.clear();
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.get(i, c)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int k = 0; k < m.wpr; ++k)
                std::swap(m.w[(size_t)piv * m.wpr + k], m.w[(size_t)r * m.wpr + k]);
        for (int i = 0; i < m.rows; ++i)
            if (i != r && m.get(i, c)) m.xor_rows(i, r);
        pivots.push_back(c);
        ++r;
    }
    return r;
}

namespace detail {

template <class F>
constexpr bool is_gf = std::is_same_v<F, GF>;
template <class F>
constexpr bool is_qq = std::is_same_v<F, QQ>;

template <class F>
bool use_gf2(const F& f) {
    if constexpr (is_gf<F>) return f.characteristic() == 2;
    else return false;
}

template <class F>
BitMat to_bits(const Mat<F>& m) {
    BitMat b(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) & 1u) b.set(i, j, true);
    return b;
}

template <class F>
void from_bits(const BitMat& b, Mat<F>& m) {
    m = Mat<F>(b.rows, b.cols, 0);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j)
            if (b.get(i, j)) m.at(i, j) = 1;
}

// Fraction-free forward elimination (Bareiss) on an integer matrix; returns
// rank and pivot columns, leaves the matrix in row echelon form.
inline int bareiss_echelon(std::vector<std::vector<mpz_class>>& m, int cols, std::vector<int>& pivots) {
    pivots.clear();
    int rows = (int)m.size();
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (sgn(m[i][c]) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) std::swap(m[piv], m[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = t;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivots.push_back(c);
        ++r;
    }
    return r;
}

}  // namespace detail

// Reduced row echelon form over any of the supported fields.  Over the
// rationals the forward pass is fraction-free on a denominator-cleared copy.
template <class F>
int rref(const F& f, Mat<F>& m, std::vector<int>& pivots) {
    pivots.clear();
    if constexpr (detail::is_gf<F>) {
        if (detail::use_gf2(f)) {
            BitMat b = detail::to_bits(m);
            int r = gf2_rref(b, pivots);
            detail::from_bits(b, m);
            return r;
        }
    }
    if constexpr (detail::is_qq<F>) {
        // clear denominators rowwise, Bareiss forward pass, rational backsolve
        std::vector<std::vector<mpz_class>> z((size_t)m.rows, std::vector<mpz_class>((size_t)m.cols));
        for (int i = 0; i < m.rows; ++i) {
            mpz_class l = 1;
            for (int j = 0; j < m.cols; ++j)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
            for (int j = 0; j < m.cols; ++j) {
                mpq_class t = m.at(i, j) * mpq_class(l);
                t.canonicalize();
                z[i][j] = t.get_num();
            }
        }
        int r = detail::bareiss_echelon(z, m.cols, pivots);
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) m.at(i, j) = mpq_class(z[i][j]);
        // normalize pivots and eliminate upward
        for (int i = r - 1; i >= 0; --i) {
            int pc = pivots[i];
            mpq_class inv = 1 / mpq_class(m.at(i, pc));
            for (int j = pc; j < m.cols; ++j) m.at(i, j) *= inv;
            for (int k = 0; k < i; ++k) {
                mpq_class c = m.at(k, pc);
                if (sgn(c) == 0) continue;
                for (int j = pc; j < m.cols; ++j) m.at(k, j) -= c * m.at(i, j);
            }
        }
        return r;
    }
    // generic Gauss-Jordan
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, c))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        auto inv = f.inv(m.at(r, c));
        for (int j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || f.is_zero(m.at(i, c))) continue;
            auto factor = m.at(i, c);
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return r;
}

template <class F>
int rank(const F& f, Mat<F> m) {
    std::vector<int> piv;
    return rref(f, m, piv);
}

// columns form a basis of the null space
template <class F>
Mat<F> kernel_basis(const F& f, Mat<F> m) {
    std::vector<int> piv;
    int r = rref(f, m, piv);
    std::vector<char> is_piv((size_t)m.cols, 0);
    for (int c : piv) is_piv[c] = 1;
    Mat<F> k(m.cols, m.cols - r, f.zero());
    int col = 0;
    for (int c = 0; c < m.cols; ++c) {
        if (is_piv[c]) continue;
        k.at(c, col) = f.one();
        for (int i = 0; i < r; ++i)
            k.at(piv[i], col) = f.neg(m.at(i, c));
        ++col;
    }
    return k;
}

// one solution of A x = b, if any
template <class F>
std::optional<Vec<F>> solve(const F& f, const Mat<F>& a, const Vec<F>& b) {
    Mat<F> aug(a.rows, a.cols + 1);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[i];
    }
    std::vector<int> piv;
    int r = rref(f, aug, piv);
    if (!piv.empty() && piv.back() == a.cols) return std::nullopt;  // inconsistent
    Vec<F> x((size_t)a.cols, f.zero());
    for (int i = 0; i < r; ++i) x[piv[i]] = aug.at(i, a.cols);
    return x;
}

// solve A X = B for all columns of B at once; nullopt if any column fails
template <class F>
std::optional<Mat<F>> solve_mat(const F& f, const Mat<F>& a, const Mat<F>& b) {
    Mat<F> aug = hstack(a, b);
    std::vector<int> piv;
    int r = rref(f, aug, piv);
    for (int c : piv)
        if (c >= a.cols) return std::nullopt;
    Mat<F> x(a.cols, b.cols, f.zero());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < b.cols; ++j) x.at(piv[i], j) = aug.at(i, a.cols + j);
    return x;
}

// canonical basis of the column space: reduced row echelon of the transpose,
// transposed back.  Equal subspaces produce identical matrices.
template <class F>
Mat<F> colspace(const F& f, const Mat<F>& m) {
    Mat<F> t = transpose(m);
    std::vector<int> piv;
    int r = rref(f, t, piv);
    Mat<F> b(m.rows, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < m.rows; ++j) b.at(j, i) = t.at(i, j);
    return b;
}

template <class F>
bool span_contains(const F& f, const Mat<F>& basis, const Vec<F>& v) {
    return solve(f, basis, v).has_value();
}

// true when every column of b lies in the column span of a
template <class F>
bool span_contains_all(const F& f, const Mat<F>& a, const Mat<F>& b) {
    if (b.cols == 0) return true;
    return solve_mat(f, a, b).has_value();
}

}  // namespace qalg

#endif
