#ifndef QALG_IDEAL_SLICE_HPP
#define QALG_IDEAL_SLICE_HPP

#include "qalg/graded_algebra.hpp"

namespace qalg {

/* Degreewise bases of a homogeneous ideal inside R, up to the truncation.
 * Matrices are kept in canonical column-space form so that equal slices
 * compare equal componentwise. */
template <class F>
struct IdealSlice {
    int J = 0;
    std::vector<Mat<F>> b;  // b[d]: h[d] x dim_d

    int dim(int d) const { return b[(size_t)d].cols; }
    std::vector<int> dims() const {
        std::vector<int> v;
        for (auto& m : b) v.push_back(m.cols);
        return v;
    }
};

template <class F>
IdealSlice<F> zero_slice(const GradedAlgebra<F>& R) {
    IdealSlice<F> s{R.J, {}};
    for (int d = 0; d <= R.J; ++d) s.b.emplace_back(R.h[(size_t)d], 0);
    return s;
}

template <class F>
IdealSlice<F> unit_slice(const GradedAlgebra<F>& R) {  // the whole ring
    IdealSlice<F> s{R.J, {}};
    for (int d = 0; d <= R.J; ++d) s.b.push_back(Mat<F>::identity(R.field, R.h[(size_t)d]));
    return s;
}

template <class F>
IdealSlice<F> maximal_ideal(const GradedAlgebra<F>& R) {
    IdealSlice<F> s = unit_slice(R);
    s.b[0] = Mat<F>(1, 0);
    return s;
}

namespace detail {

// propagate closure under multiplication by R_1 and canonicalize
template <class F>
void close_and_canonicalize(const GradedAlgebra<F>& R, IdealSlice<F>& s) {
    const F& f = R.field;
    for (int d = 0; d + 1 <= R.J; ++d) {
        Mat<F> acc = s.b[(size_t)d + 1];
        for (int i = 0; i < R.e(); ++i) {
            if (s.b[(size_t)d].cols == 0) continue;
            acc = hstack(acc, mat_mul(f, R.mult1[(size_t)i][(size_t)d], s.b[(size_t)d]));
        }
        s.b[(size_t)d + 1] = colspace(f, acc);
    }
    for (int d = 0; d <= R.J; ++d) s.b[(size_t)d] = colspace(f, s.b[(size_t)d]);
}

}  // namespace detail

// ideal generated by homogeneous elements given as (degree, coordinates)
template <class F>
IdealSlice<F> ideal_from_elements(const GradedAlgebra<F>& R,
                                  const std::vector<std::pair<int, Vec<F>>>& gens) {
    IdealSlice<F> s = zero_slice(R);
    for (auto& [d, v] : gens) {
        if (d < 0 || d > R.J) throw std::invalid_argument("ideal_from_elements: degree out of range");
        Mat<F> col(R.h[(size_t)d], 1);
        col.set_col(0, v);
        s.b[(size_t)d] = hstack(s.b[(size_t)d], col);
    }
    detail::close_and_canonicalize(R, s);
    return s;
}

// ideal generated by linear forms (variable coordinates)
template <class F>
IdealSlice<F> ideal_from_linear(const GradedAlgebra<F>& R, const std::vector<Vec<F>>& forms) {
    std::vector<std::pair<int, Vec<F>>> gens;
    for (auto& v : forms) gens.emplace_back(1, R.linear_to_basis(v));
    return ideal_from_elements(R, gens);
}

template <class F>
IdealSlice<F> slice_sum(const GradedAlgebra<F>& R, const IdealSlice<F>& a, const IdealSlice<F>& b) {
    IdealSlice<F> s = zero_slice(R);
    for (int d = 0; d <= R.J; ++d) s.b[(size_t)d] = colspace(R.field, hstack(a.b[(size_t)d], b.b[(size_t)d]));
    return s;
}

// multiplication matrix of a homogeneous element u (degree j) on R_d
template <class F>
Mat<F> element_mult_matrix(const GradedAlgebra<F>& R, int j, const Vec<F>& u, int d) {
    const F& f = R.field;
    if (d + j > R.J) throw std::invalid_argument("element_mult_matrix: degree overflow beyond truncation");
    Mat<F> m(R.h[(size_t)(d + j)], R.h[(size_t)d], f.zero());
    for (int c = 0; c < R.h[(size_t)d]; ++c) {
        Vec<F> unit((size_t)R.h[(size_t)d], f.zero());
        unit[(size_t)c] = f.one();
        Vec<F> prod = R.mult_elem(d, unit, j, u);
        for (int r = 0; r < m.rows; ++r) m.at(r, c) = prod[(size_t)r];
    }
    return m;
}

template <class F>
IdealSlice<F> slice_product(const GradedAlgebra<F>& R, const IdealSlice<F>& a, const IdealSlice<F>& b) {
    const F& f = R.field;
    IdealSlice<F> s = zero_slice(R);
    for (int d = 0; d <= R.J; ++d) {
        Mat<F> acc(R.h[(size_t)d], 0);
        for (int d1 = 0; d1 <= d; ++d1) {
            int d2 = d - d1;
            if (a.b[(size_t)d1].cols == 0 || b.b[(size_t)d2].cols == 0) continue;
            for (int cb = 0; cb < b.b[(size_t)d2].cols; ++cb) {
                Mat<F> mu = element_mult_matrix(R, d2, b.b[(size_t)d2].col(cb), d1);
                acc = hstack(acc, mat_mul(f, mu, a.b[(size_t)d1]));
            }
        }
        s.b[(size_t)d] = colspace(f, acc);
    }
    return s;
}

template <class F>
IdealSlice<F> slice_power(const GradedAlgebra<F>& R, const IdealSlice<F>& a, int n) {
    if (n == 0) return unit_slice(R);
    IdealSlice<F> s = a;
    for (int k = 1; k < n; ++k) s = slice_product(R, s, a);
    return s;
}

template <class F>
IdealSlice<F> mpower(const GradedAlgebra<F>& R, int n) {
    return slice_power(R, maximal_ideal(R), n);
}

template <class F>
bool slice_contains(const GradedAlgebra<F>& R, const IdealSlice<F>& a, const IdealSlice<F>& b) {
    for (int d = 0; d <= R.J; ++d)
        if (!span_contains_all(R.field, a.b[(size_t)d], b.b[(size_t)d])) return false;
    return true;
}

template <class F>
bool slice_equals(const GradedAlgebra<F>& R, const IdealSlice<F>& a, const IdealSlice<F>& b) {
    for (int d = 0; d <= R.J; ++d) {
        const Mat<F>&x = a.b[(size_t)d], &y = b.b[(size_t)d];
        if (x.cols != y.cols) return false;
        for (size_t k = 0; k < x.a.size(); ++k)
            if (!R.field.eq(x.a[k], y.a[k])) return false;
    }
    return true;
}

template <class F>
bool elem_in_slice(const GradedAlgebra<F>& R, int d, const Vec<F>& v, const IdealSlice<F>& a) {
    return span_contains(R.field, a.b[(size_t)d], v);
}

/* annihilator of a slice: per degree d, the kernel of multiplication into all
 * reachable degrees (a bound-relative notion; callers carry the truncation) */
template <class F>
IdealSlice<F> slice_annihilator(const GradedAlgebra<F>& R, const IdealSlice<F>& a) {
    const F& f = R.field;
    IdealSlice<F> s = zero_slice(R);
    for (int d = 0; d <= R.J; ++d) {
        int rows = 0;
        std::vector<Mat<F>> blocks;
        for (int j = 0; j + d <= R.J; ++j) {
            for (int c = 0; c < a.b[(size_t)j].cols; ++c) {
                blocks.push_back(element_mult_matrix(R, j, a.b[(size_t)j].col(c), d));
                rows += blocks.back().rows;
            }
        }
        if (blocks.empty()) {
            s.b[(size_t)d] = Mat<F>::identity(f, R.h[(size_t)d]);
            continue;
        }
        Mat<F> stacked(rows, R.h[(size_t)d], f.zero());
        int r0 = 0;
        for (auto& blk : blocks) {
            for (int r = 0; r < blk.rows; ++r)
                for (int c = 0; c < blk.cols; ++c) stacked.at(r0 + r, c) = blk.at(r, c);
            r0 += blk.rows;
        }
        s.b[(size_t)d] = colspace(f, kernel_basis(f, stacked));
    }
    return s;
}

template <class F>
IdealSlice<F> annihilator_of_linear(const GradedAlgebra<F>& R, const Vec<F>& linear) {
    return slice_annihilator(R, ideal_from_linear(R, {linear}));
}

/* colon slice (a : b): per degree, elements whose products with every basis
 * element of b land in a */
template <class F>
IdealSlice<F> slice_colon(const GradedAlgebra<F>& R, const IdealSlice<F>& a, const IdealSlice<F>& b) {
    const F& f = R.field;
    IdealSlice<F> s = zero_slice(R);
    for (int d = 0; d <= R.J; ++d) {
        std::vector<Mat<F>> constraints;
        int rows = 0;
        for (int j = 0; j + d <= R.J; ++j) {
            if (b.b[(size_t)j].cols == 0) continue;
            // left null space of a_{d+j}
            Mat<F> left = kernel_basis(f, transpose(a.b[(size_t)(d + j)]));
            if (left.cols == 0) continue;  // a is everything there, no constraint
            Mat<F> leftT = transpose(left);
            for (int c = 0; c < b.b[(size_t)j].cols; ++c) {
                Mat<F> mu = element_mult_matrix(R, j, b.b[(size_t)j].col(c), d);
                constraints.push_back(mat_mul(f, leftT, mu));
                rows += constraints.back().rows;
            }
        }
        if (constraints.empty()) {
            s.b[(size_t)d] = Mat<F>::identity(f, R.h[(size_t)d]);
            continue;
        }
        Mat<F> stacked(rows, R.h[(size_t)d], f.zero());
        int r0 = 0;
        for (auto& blk : constraints) {
            for (int r = 0; r < blk.rows; ++r)
                for (int c = 0; c < blk.cols; ++c) stacked.at(r0 + r, c) = blk.at(r, c);
            r0 += blk.rows;
        }
        s.b[(size_t)d] = colspace(f, kernel_basis(f, stacked));
    }
    return s;
}

// principal ideal (x) for a linear form, and x * m for an ideal m
template <class F>
IdealSlice<F> linear_times_slice(const GradedAlgebra<F>& R, const Vec<F>& linear,
                                 const IdealSlice<F>& m) {
    const F& f = R.field;
    IdealSlice<F> s = zero_slice(R);
    for (int d = 0; d + 1 <= R.J; ++d) {
        if (m.b[(size_t)d].cols == 0) continue;
        Mat<F> mm = R.mult_matrix(linear, d);
        s.b[(size_t)d + 1] = colspace(f, mat_mul(f, mm, m.b[(size_t)d]));
    }
    return s;
}

}  // namespace qalg

#endif
