#ifndef QALG_COMPLEXES_HPP
#define QALG_COMPLEXES_HPP

#include <bit>
#include <sstream>

#include "qalg/ideal_slice.hpp"

namespace qalg {

/* Basis labels of the Koszul complex with divided-power variables adjoined:
 * an exterior monomial in the X's (bitmask, increasing index order) times a
 * divided-power multi-exponent in the Z's.  X_i sits in bidegree (1,1), each
 * Z in (2,2), so a label's homological degree equals its internal weight. */
struct ComplexLabel {
    uint32_t xmask = 0;
    std::vector<int> zexp;  // one entry per adjoined variable

    int xcount() const { return std::popcount(xmask); }
    int zsum() const {
        int s = 0;
        for (int m : zexp) s += m;
        return s;
    }
    int homdeg() const { return xcount() + 2 * zsum(); }

    bool operator==(const ComplexLabel&) const = default;
    bool operator<(const ComplexLabel& o) const {
        if (xmask != o.xmask) return xmask < o.xmask;
        return zexp < o.zexp;
    }

    std::string str() const {
        std::string s;
        for (int b = 0; b < 32; ++b)
            if (xmask & (1u << b)) s += "X" + std::to_string(b + 1);
        for (size_t i = 0; i < zexp.size(); ++i)
            if (zexp[i] > 0) s += "Z" + std::to_string(i + 1) + "^(" + std::to_string(zexp[i]) + ")";
        return s.empty() ? "1" : s;
    }
};

/* A cycle in K_1 of internal degree 2: z = sum_b a_b X_b with a_b linear.
 * Column b of the matrix holds the variable coordinates of a_b. */
template <class F>
struct KoszulCycle {
    Mat<F> coeffs;  // e x e
};

template <class F>
struct BidegreeComplex {
    const GradedAlgebra<F>* R = nullptr;
    int N = 0, J = 0;   // verdict bounds
    int Nbuild = 0;     // labels and entries exist up to this homological degree
    int dvars = 0;      // number of adjoined divided-power variables

    std::vector<std::vector<ComplexLabel>> labels;  // labels[i], i = 0..Nbuild
    // structural differential entries: (source label, target label, linear form)
    struct Entry {
        int src, dst;
        Vec<F> form;  // variable coordinates, sign folded in
    };
    std::vector<std::vector<Entry>> entries;  // entries[i]: C_i -> C_{i-1}

    int nlabels(int i) const { return i >= 0 && i <= Nbuild ? (int)labels[(size_t)i].size() : 0; }
    int coeff_dim(int i, int j) const {
        int cd = j - i;
        return (cd < 0 || cd > R->J) ? 0 : R->h[(size_t)cd];
    }
    int dim(int i, int j) const {
        if (i < 0 || i > Nbuild || j < 0 || j > J) return 0;
        return nlabels(i) * coeff_dim(i, j);
    }

    // ambient matrix of the differential C_{i,j} -> C_{i-1,j}
    Mat<F> matrix(int i, int j) const {
        const F& f = R->field;
        Mat<F> m(dim(i - 1, j), dim(i, j), f.zero());
        if (i < 1 || i > Nbuild || m.rows == 0 || m.cols == 0) return m;
        int cd = j - i;  // source coefficient degree
        int scd = R->h[(size_t)cd];
        int tcd = R->h[(size_t)(cd + 1)];
        for (auto& en : entries[(size_t)i]) {
            Mat<F> block = R->mult_matrix(en.form, cd);
            for (int r = 0; r < tcd; ++r)
                for (int c = 0; c < scd; ++c)
                    m.at(en.dst * tcd + r, en.src * scd + c) =
                        f.add(m.at(en.dst * tcd + r, en.src * scd + c), block.at(r, c));
        }
        return m;
    }

    void verify_d_squared() const {
        const F& f = R->field;
        for (int i = 2; i <= Nbuild; ++i)
            for (int j = 0; j <= J; ++j) {
                if (dim(i, j) == 0 || dim(i - 2, j) == 0) continue;
                Mat<F> a = matrix(i - 1, j), b = matrix(i, j);
                Mat<F> p = mat_mul(f, a, b);
                for (auto& v : p.a)
                    if (!f.is_zero(v)) throw std::logic_error("complex: d^2 != 0");
            }
    }

    // plain-text tableau for golden-file tests: stable label and entry order
    std::string dump() const {
        std::ostringstream out;
        out << "complex N=" << N << " J=" << J << " d=" << dvars << "\n";
        for (int i = 0; i <= N; ++i) {
            if (nlabels(i) == 0) continue;
            out << "[" << i << "] ";
            for (int l = 0; l < nlabels(i); ++l) {
                if (l) out << " | ";
                out << labels[(size_t)i][(size_t)l].str();
            }
            out << "\n";
            if (i >= 1)
                for (auto& en : entries[(size_t)i])
                    out << "  d(" << labels[(size_t)i][(size_t)en.src].str() << ") += ("
                        << R->linear_str(en.form) << ") * "
                        << labels[(size_t)(i - 1)][(size_t)en.dst].str() << "\n";
        }
        return out.str();
    }
};

namespace detail {

inline void enumerate_zexp(int d, int budget, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
    if ((int)cur.size() == d) {
        out.push_back(cur);
        return;
    }
    for (int m = 0; m <= budget; ++m) {
        cur.push_back(m);
        enumerate_zexp(d, budget - m, cur, out);
        cur.pop_back();
    }
}

// sign of X_S * X_b as (-1)^{#{s in S : s > b}} (X_b passes the larger factors)
inline int append_sign(uint32_t xmask, int b) {
    uint32_t above = xmask >> (b + 1);
    return (std::popcount(above) % 2 == 0) ? 1 : -1;
}

}  // namespace detail

/* The Koszul complex K = R<X_1..X_e> with dX_i = x_i, together with divided
 * power variables Z_i of bidegree (2,2) with dZ_i a degree-2 cycle of K_1;
 * with no cycles this is K itself. */
template <class F>
BidegreeComplex<F> build_complex(const GradedAlgebra<F>& R, int N, int J,
                                 const std::vector<KoszulCycle<F>>& cycles) {
    const F& f = R.field;
    int e = R.e();
    int d = (int)cycles.size();

    for (auto& z : cycles) {
        if (z.coeffs.rows != e || z.coeffs.cols != e)
            throw std::invalid_argument("build_complex: cycle coefficient matrix must be e x e");
        // cycle check: sum_b a_b * x_b = 0 in R_2
        Vec<F> total((size_t)R.h[2], f.zero());
        for (int b = 0; b < e; ++b) {
            Vec<F> unit((size_t)e, f.zero());
            unit[(size_t)b] = f.one();
            Vec<F> ab = z.coeffs.col(b);
            Vec<F> prod = R.mult_elem(1, R.linear_to_basis(ab), 1, R.linear_to_basis(unit));
            for (size_t k = 0; k < total.size(); ++k) total[k] = f.add(total[k], prod[k]);
        }
        for (auto& c : total)
            if (!f.is_zero(c))
                throw std::invalid_argument("build_complex: dZ input is not a cycle of K_1");
    }

    BidegreeComplex<F> C;
    C.R = &R;
    C.N = N;
    C.J = J;
    C.Nbuild = (d > 0 || N < e) ? N + 1 : N;  // boundaries into degree N
    C.dvars = d;
    C.labels.resize((size_t)C.Nbuild + 1);
    C.entries.resize((size_t)C.Nbuild + 1);

    std::vector<std::vector<int>> allz;
    {
        std::vector<int> cur;
        detail::enumerate_zexp(d, (C.Nbuild) / 2, cur, allz);
    }
    std::map<ComplexLabel, int> where;
    for (uint32_t mask = 0; mask < (1u << e); ++mask) {
        for (auto& z : allz) {
            ComplexLabel l{mask, z};
            int i = l.homdeg();
            if (i > C.Nbuild) continue;
            C.labels[(size_t)i].push_back(l);
        }
    }
    for (int i = 0; i <= C.Nbuild; ++i) {
        std::sort(C.labels[(size_t)i].begin(), C.labels[(size_t)i].end());
        for (int l = 0; l < (int)C.labels[(size_t)i].size(); ++l)
            where[C.labels[(size_t)i][(size_t)l]] = l;
    }

    for (int i = 1; i <= C.Nbuild; ++i) {
        for (int src = 0; src < (int)C.labels[(size_t)i].size(); ++src) {
            const ComplexLabel& l = C.labels[(size_t)i][(size_t)src];
            // exterior part: d(X_S) = sum (-1)^{pos+1} x_t X_{S-t}
            int pos = 0;
            for (int t = 0; t < e; ++t) {
                if (!(l.xmask & (1u << t))) continue;
                ++pos;
                ComplexLabel tgt{l.xmask & ~(1u << t), l.zexp};
                Vec<F> form((size_t)e, f.zero());
                form[(size_t)t] = (pos % 2 == 1) ? f.one() : f.neg(f.one());
                C.entries[(size_t)i].push_back({src, where.at(tgt), std::move(form)});
            }
            // divided part: (-1)^{|S|} sum_i z_i X_S Z^{mu - e_i}
            int ssign = (l.xcount() % 2 == 0) ? 1 : -1;
            for (int zi = 0; zi < d; ++zi) {
                if (l.zexp[(size_t)zi] == 0) continue;
                std::vector<int> ze = l.zexp;
                --ze[(size_t)zi];
                for (int b = 0; b < e; ++b) {
                    if (l.xmask & (1u << b)) continue;  // X_b^2 = 0
                    Vec<F> ab = cycles[(size_t)zi].coeffs.col(b);
                    bool nonzero = false;
                    for (auto& c : ab)
                        if (!f.is_zero(c)) nonzero = true;
                    if (!nonzero) continue;
                    int sgn = ssign * detail::append_sign(l.xmask, b);
                    if (sgn < 0)
                        for (auto& c : ab) c = f.neg(c);
                    ComplexLabel tgt{l.xmask | (1u << b), ze};
                    if (tgt.homdeg() != i - 1) throw std::logic_error("complex: degree bookkeeping");
                    C.entries[(size_t)i].push_back({src, where.at(tgt), std::move(ab)});
                }
            }
        }
    }
    C.verify_d_squared();
    return C;
}

template <class F>
BidegreeComplex<F> koszul_complex(const GradedAlgebra<F>& R, int N, int J) {
    return build_complex(R, std::min(N, R.e()), J, {});
}

// a short Tate complex: cycles corresponding to quadrics, plus bookkeeping
template <class F>
struct ShortTateComplex {
    BidegreeComplex<F> D;
    std::vector<Poly<F>> quadrics;          // the f_i in Q
    std::vector<KoszulCycle<F>> cycles;     // the z_i with dZ_i = z_i
};

// deterministic splitting of a quadric f = sum c_m x_a x_b (a <= b) into the
// Koszul cycle z = sum c_m x_a X_b
template <class F>
KoszulCycle<F> cycle_of_quadric(const GradedAlgebra<F>& R, const Poly<F>& fq) {
    const F& f = R.field;
    int e = R.e();
    KoszulCycle<F> z{Mat<F>(e, e, f.zero())};
    for (auto& [m, c] : fq.t) {
        int a = -1, b = -1;
        for (int v = 0; v < e; ++v) {
            for (int k = 0; k < m.e[(size_t)v]; ++k) {
                if (a < 0) a = v;
                else b = v;
            }
        }
        if (b < 0) throw std::invalid_argument("cycle_of_quadric: not a quadric");
        // coefficient of X_b gains c * x_a
        z.coeffs.at(a, b) = f.add(z.coeffs.at(a, b), c);
    }
    return z;
}

template <class F>
ShortTateComplex<F> adjoin_divided(const GradedAlgebra<F>& R, int N, int J,
                                   const std::vector<Poly<F>>& quadrics) {
    ShortTateComplex<F> T;
    T.quadrics = quadrics;
    for (auto& q : quadrics) {
        if (q.is_zero() || q.degree() != 2 || !q.is_homogeneous())
            throw std::invalid_argument("adjoin_divided: generators must be quadrics");
        T.cycles.push_back(cycle_of_quadric(R, q));
    }
    T.D = build_complex(R, N, J, T.cycles);
    return T;
}

// ---------------------------------------------------------------------------
// ideal-scaled subcomplexes and homology

template <class F>
struct ScaledComplex {
    const BidegreeComplex<F>* C = nullptr;
    IdealSlice<F> scale;

    // ambient-coordinate basis of (aC)_{i,j}: per label, the slice basis
    Mat<F> basis(int i, int j) const {
        const GradedAlgebra<F>& R = *C->R;
        const F& f = R.field;
        int cd = j - i;
        if (i < 0 || i > C->Nbuild || cd < 0 || cd > R.J) return Mat<F>(0, 0);
        const Mat<F>& sb = scale.b[(size_t)cd];
        int nl = C->nlabels(i);
        Mat<F> m(nl * R.h[(size_t)cd], nl * sb.cols, f.zero());
        for (int l = 0; l < nl; ++l)
            for (int r = 0; r < sb.rows; ++r)
                for (int c = 0; c < sb.cols; ++c)
                    m.at(l * sb.rows + r, l * sb.cols + c) = sb.at(r, c);
        return m;
    }
    int dim(int i, int j) const {
        int cd = j - i;
        if (i < 0 || i > C->Nbuild || cd < 0 || cd > C->R->J) return 0;
        return C->nlabels(i) * scale.b[(size_t)cd].cols;
    }
};

template <class F>
ScaledComplex<F> scale_by_ideal(const BidegreeComplex<F>& C, IdealSlice<F> a) {
    return {&C, std::move(a)};
}

template <class F>
ScaledComplex<F> whole_complex(const BidegreeComplex<F>& C) {
    return {&C, unit_slice(*C.R)};
}

// cycles (kernel) of the scaled differential at (i, j), ambient coordinates
template <class F>
Mat<F> cycle_basis(const ScaledComplex<F>& S, int i, int j) {
    const F& f = S.C->R->field;
    Mat<F> V = S.basis(i, j);
    if (V.cols == 0) return Mat<F>(V.rows, 0);
    Mat<F> M = S.C->matrix(i, j);
    Mat<F> ker = kernel_basis(f, mat_mul(f, M, V));
    return mat_mul(f, V, ker);
}

// boundaries from (i+1, j), ambient coordinates
template <class F>
Mat<F> boundary_basis(const ScaledComplex<F>& S, int i, int j) {
    const F& f = S.C->R->field;
    Mat<F> V = S.basis(i + 1, j);
    if (V.cols == 0) return Mat<F>(S.C->dim(i, j), 0);
    return colspace(f, mat_mul(f, S.C->matrix(i + 1, j), V));
}

template <class F>
int homology_dim(const ScaledComplex<F>& S, int i, int j) {
    const F& f = S.C->R->field;
    Mat<F> Z = cycle_basis(S, i, j);
    Mat<F> B = boundary_basis(S, i, j);
    return rank(f, Z) - rank(f, B);
}

// dims for the full complex, rows indexed by homological degree
template <class F>
std::vector<std::vector<int>> homology(const BidegreeComplex<F>& C) {
    auto S = whole_complex(C);
    std::vector<std::vector<int>> H((size_t)C.N + 1, std::vector<int>((size_t)C.J + 1, 0));
    for (int i = 0; i <= C.N; ++i)
        for (int j = 0; j <= C.J; ++j) H[(size_t)i][(size_t)j] = homology_dim(S, i, j);
    return H;
}

/* The homology map H(sub) -> H(ambient scaled complex) induced by an
 * inclusion of scales; per bidegree the matrix in chosen homology bases. */
template <class F>
struct HomologyMap {
    std::vector<std::vector<Mat<F>>> mat;  // [i][j]
    std::vector<std::vector<int>> src_dim, dst_dim;
    bool is_zero(const F& f) const {
        for (auto& row : mat)
            for (auto& m : row)
                for (auto& v : m.a)
                    if (!f.is_zero(v)) return false;
        return true;
    }
};

namespace detail {

// representatives of homology classes: columns of Z extending the boundary span
template <class F>
Mat<F> homology_reps(const F& f, const Mat<F>& Z, const Mat<F>& B) {
    Mat<F> acc = B;
    Mat<F> reps(Z.rows, 0);
    for (int c = 0; c < Z.cols; ++c) {
        Vec<F> v = Z.col(c);
        Mat<F> test = hstack(acc, Mat<F>(Z.rows, 1));
        test.set_col(test.cols - 1, v);
        if (rank(f, test) > rank(f, acc)) {
            acc = test;
            Mat<F> ext = hstack(reps, Mat<F>(Z.rows, 1));
            ext.set_col(ext.cols - 1, v);
            reps = ext;
        }
    }
    return reps;
}

}  // namespace detail

template <class F>
HomologyMap<F> induced_homology_map(const ScaledComplex<F>& sub, const ScaledComplex<F>& big) {
    if (sub.C != big.C) throw std::invalid_argument("induced_homology_map: different complexes");
    const F& f = sub.C->R->field;
    const BidegreeComplex<F>& C = *sub.C;
    HomologyMap<F> out;
    out.mat.resize((size_t)C.N + 1, std::vector<Mat<F>>((size_t)C.J + 1));
    out.src_dim.assign((size_t)C.N + 1, std::vector<int>((size_t)C.J + 1, 0));
    out.dst_dim.assign((size_t)C.N + 1, std::vector<int>((size_t)C.J + 1, 0));
    for (int i = 0; i <= C.N; ++i)
        for (int j = 0; j <= C.J; ++j) {
            Mat<F> Zs = cycle_basis(sub, i, j);
            Mat<F> Bs = boundary_basis(sub, i, j);
            Mat<F> reps_s = detail::homology_reps(f, Zs, Bs);
            Mat<F> Zb = cycle_basis(big, i, j);
            Mat<F> Bb = boundary_basis(big, i, j);
            Mat<F> reps_b = detail::homology_reps(f, Zb, Bb);
            out.src_dim[(size_t)i][(size_t)j] = reps_s.cols;
            out.dst_dim[(size_t)i][(size_t)j] = reps_b.cols;
            Mat<F> m(reps_b.cols, reps_s.cols, f.zero());
            if (reps_s.cols > 0) {
                // express each source class in the target homology basis
                Mat<F> sys = hstack(Bb, reps_b);
                auto sol = solve_mat(f, sys, reps_s);
                if (!sol)
                    throw std::logic_error("induced_homology_map: source cycle not a target cycle");
                for (int r = 0; r < reps_b.cols; ++r)
                    for (int c = 0; c < reps_s.cols; ++c) m.at(r, c) = sol->at(Bb.cols + r, c);
            }
            out.mat[(size_t)i][(size_t)j] = std::move(m);
        }
    return out;
}

// the map nu(aC): H(m*a*C) -> H(a*C) induced by inclusion
template <class F>
HomologyMap<F> nu_map(const BidegreeComplex<F>& C, const IdealSlice<F>& a) {
    const GradedAlgebra<F>& R = *C.R;
    IdealSlice<F> ma = slice_product(R, maximal_ideal(R), a);
    return induced_homology_map(scale_by_ideal(C, ma), scale_by_ideal(C, a));
}

struct NuVerdict {
    bool zero = false;
    int N = 0, J = 0;
    int witness_i = -1, witness_j = -1;
    std::string witness;  // description of a nonzero class, when present
    std::string str() const {
        if (zero)
            return "nu = 0 up to (N=" + std::to_string(N) + ", J=" + std::to_string(J) + ")";
        return "nu != 0 at (i=" + std::to_string(witness_i) + ", j=" + std::to_string(witness_j) +
               "): " + witness;
    }
};

/* Vanishing of H(m^2 D) -> H(m D): every cycle of m^2 D must be a boundary
 * of m D.  On failure returns a concrete witness cycle. */
template <class F>
NuVerdict nu_vanishes(const BidegreeComplex<F>& D) {
    const GradedAlgebra<F>& R = *D.R;
    const F& f = R.field;
    IdealSlice<F> m = maximal_ideal(R);
    IdealSlice<F> m2 = mpower(R, 2);
    ScaledComplex<F> Sm = scale_by_ideal(D, m);
    ScaledComplex<F> Sm2 = scale_by_ideal(D, m2);
    NuVerdict v;
    v.N = D.N;
    v.J = D.J;
    for (int i = 0; i <= D.N; ++i)
        for (int j = 0; j <= D.J; ++j) {
            Mat<F> Z = cycle_basis(Sm2, i, j);
            if (Z.cols == 0) continue;
            Mat<F> B = boundary_basis(Sm, i, j);
            int rb = rank(f, B);
            if (rank(f, hstack(B, Z)) == rb) continue;  // all cycles bound
            for (int c = 0; c < Z.cols; ++c) {
                Mat<F> test = hstack(B, Mat<F>(Z.rows, 1));
                test.set_col(test.cols - 1, Z.col(c));
                if (rank(f, test) > rb) {
                    v.zero = false;
                    v.witness_i = i;
                    v.witness_j = j;
                    std::string w = "cycle in m^2*D_{" + std::to_string(i) + "," +
                                    std::to_string(j) + "} outside B(m*D), coordinates (";
                    Vec<F> col = Z.col(c);
                    for (size_t r = 0; r < col.size(); ++r) {
                        if (r) w += ",";
                        w += f.str(col[r]);
                    }
                    v.witness = w + ")";
                    return v;
                }
            }
        }
    v.zero = true;
    return v;
}

}  // namespace qalg

#endif
