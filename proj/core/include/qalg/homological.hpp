#ifndef QALG_HOMOLOGICAL_HPP
#define QALG_HOMOLOGICAL_HPP

#include "qalg/complexes.hpp"
#include "qalg/resolution.hpp"

namespace qalg {

// H_R(-z) truncated at z^N
template <class F>
Series1 hilbert_neg_z(const GradedAlgebra<F>& R, int N) {
    auto h = R.series.coefficients(N);
    Series1 s(N);
    for (int d = 0; d <= N; ++d) s.c[(size_t)d] = (d % 2 == 0 ? h[(size_t)d] : -h[(size_t)d]);
    return s;
}

// bigraded Poincare series of k over a complete intersection of quadrics:
// (1+zt)^e / (1 - z^2 t^2)^d
inline Series2 ci_poincare(int e, int d, int N, int J) {
    Series2 num = Series2::one(N, J) + Series2::zt(N, J);
    Series2 z2t2(N, J);
    if (N >= 2 && J >= 2) z2t2.at(2, 2) = 1;
    Series2 den = Series2::one(N, J) - z2t2;
    Series2 r = num.pow(e);
    Series2 dinv = den.inverse();
    for (int k = 0; k < d; ++k) r = r * dinv;
    return r;
}

// coefficientwise lhs <= rhs
inline bool series_dominates(const Series2& lhs, const Series2& rhs) {
    for (size_t i = 0; i < lhs.c.size(); ++i)
        if (lhs.c[i] > rhs.c[i]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// reconstruction of resolution maps and comparison lifting

namespace resdetail {

// free-module variable action on generic vectors (mirrors the engine)
template <class F>
Vec<F> free_act_vec(const GradedAlgebra<F>& A, const std::vector<int>& degs, int v, int j,
                    const Vec<F>& c) {
    const F& f = A.field;
    Vec<F> out((size_t)free_dim(A, degs, j + 1), f.zero());
    int c0 = 0, r0 = 0;
    for (int d : degs) {
        int sdim = (j >= d && j - d <= A.J) ? A.h[(size_t)(j - d)] : 0;
        int tdim = (j + 1 >= d && j + 1 - d <= A.J) ? A.h[(size_t)(j + 1 - d)] : 0;
        if (sdim > 0 && tdim > 0 && j - d < A.J) {
            const Mat<F>& M = A.mult1[(size_t)v][(size_t)(j - d)];
            for (int r = 0; r < M.rows; ++r) {
                auto acc = f.zero();
                for (int cc = 0; cc < M.cols; ++cc)
                    if (!f.is_zero(M.at(r, cc)))
                        acc = f.add(acc, f.mul(M.at(r, cc), c[(size_t)(c0 + cc)]));
                out[(size_t)(r0 + r)] = f.add(out[(size_t)(r0 + r)], acc);
            }
        }
        c0 += sdim;
        r0 += tdim;
    }
    return out;
}

}  // namespace resdetail

/* Degreewise matrix of the map F_i -> F_{i-1} (or the augmentation F_0 -> M
 * when i = 0) of a resolution whose differentials were kept. */
template <class F>
Mat<F> resolution_map_matrix(const GradedAlgebra<F>& A, const Resolution<F>& res,
                             const ModuleInput<F>& input, int i, int j) {
    const F& f = A.field;
    if (!res.kept_differentials)
        throw std::invalid_argument("resolution_map_matrix: differentials were not kept");
    const std::vector<int>& degs = res.gen_degs[(size_t)i];
    bool into_ambient = (i == 0);
    const std::vector<int>& tdegs = into_ambient ? degs /*unused*/ : res.gen_degs[(size_t)i - 1];
    int rows = into_ambient ? input.dim[(size_t)j] : free_dim(A, tdegs, j);
    Mat<F> m(rows, free_dim(A, degs, j), f.zero());
    int col = 0;
    std::map<int, int> seen;  // degree -> count of generators already placed
    for (int d : degs) {
        int cd = j - d;
        int gidx = seen[d]++;
        if (cd < 0 || cd > A.J) continue;
        const Mat<F>& img = res.images[(size_t)i].at(d);
        Vec<F> base = img.col(gidx);
        for (size_t k = 0; k < A.basis[(size_t)cd].size(); ++k) {
            // multiply the image by the k-th basis monomial of A_{cd}
            Vec<F> cur = base;
            const Monomial& mono = A.basis[(size_t)cd][k];
            int curj = d;
            for (int v = 0; v < A.e(); ++v)
                for (int rep = 0; rep < mono.e[(size_t)v]; ++rep) {
                    cur = into_ambient ? mat_vec(f, input.act[(size_t)v][(size_t)curj], cur)
                                       : resdetail::free_act_vec(A, tdegs, v, curj, cur);
                    ++curj;
                }
            m.set_col(col + (int)k, cur);
        }
        col += A.h[(size_t)cd];
    }
    return m;
}

/* Comparison lifting: a chain map between kept resolutions covering the
 * degreewise identity on a shared ambient module (e.g. the inclusion
 * m^{n+1} inside m^n, both inside R).  A chain map of free modules is a
 * module map, so it is stored through its values on the source generators;
 * phi[i][g] lies in (F_i)_{deg of source generator g}. */
template <class F>
struct ChainMap {
    std::vector<std::vector<Vec<F>>> phi;
};

namespace resdetail {

// extend a map given on generators by the module action: the image of an
// arbitrary vector of (F'_i)_j under sum-of-blocks (g, monomial) -> m * w_g
template <class F>
Vec<F> apply_on_generators(const GradedAlgebra<F>& A, const std::vector<int>& source_degs,
                           const std::vector<Vec<F>>& values, const std::vector<int>& target_degs,
                           int j, const Vec<F>& vec) {
    const F& f = A.field;
    Vec<F> out((size_t)free_dim(A, target_degs, j), f.zero());
    int off = 0;
    for (size_t g = 0; g < source_degs.size(); ++g) {
        int d = source_degs[g];
        int cd = j - d;
        if (cd < 0 || cd > A.J) continue;
        for (int k = 0; k < A.h[(size_t)cd]; ++k) {
            const auto& c = vec[(size_t)(off + k)];
            if (f.is_zero(c)) continue;
            // m * w_g for the k-th basis monomial m of A_{cd}
            Vec<F> cur = values[g];
            const Monomial& mono = A.basis[(size_t)cd][(size_t)k];
            int curj = d;
            for (int v = 0; v < A.e(); ++v)
                for (int rep = 0; rep < mono.e[(size_t)v]; ++rep) {
                    cur = free_act_vec(A, target_degs, v, curj, cur);
                    ++curj;
                }
            for (size_t r = 0; r < out.size(); ++r) out[r] = f.add(out[r], f.mul(c, cur[r]));
        }
        off += A.h[(size_t)cd];
    }
    return out;
}

}  // namespace resdetail

template <class F>
ChainMap<F> lift_chain_map(const GradedAlgebra<F>& A, const Resolution<F>& source,
                           const ModuleInput<F>& source_input, const Resolution<F>& target,
                           const ModuleInput<F>& target_input, int N, int J) {
    const F& f = A.field;
    if (source_input.dim != target_input.dim)
        throw std::invalid_argument("lift_chain_map: ambient modules differ");
    ChainMap<F> out;
    out.phi.resize((size_t)N + 1);
    for (int i = 0; i <= N && (size_t)i < source.gen_degs.size(); ++i) {
        const auto& sdegs = source.gen_degs[(size_t)i];
        std::map<int, int> seen;
        for (size_t g = 0; g < sdegs.size(); ++g) {
            int d = sdegs[g];
            int gidx = seen[d]++;
            if (d > J) {
                out.phi[(size_t)i].push_back(Vec<F>());
                continue;
            }
            Vec<F> img = source.images[(size_t)i].at(d).col(gidx);
            Vec<F> rhs;
            if (i == 0) {
                rhs = img;  // ambient coordinates; lift through the target augmentation
            } else {
                // phi_{i-1} applied to the boundary of the generator
                rhs = resdetail::apply_on_generators(A, source.gen_degs[(size_t)i - 1],
                                                     out.phi[(size_t)i - 1],
                                                     target.gen_degs[(size_t)i - 1], d, img);
            }
            Mat<F> lhsmap = resolution_map_matrix(A, target, target_input, i, d);
            auto sol = solve(f, lhsmap, rhs);
            if (!sol) throw std::logic_error("lift_chain_map: lifting failed (not exact?)");
            out.phi[(size_t)i].push_back(std::move(*sol));
        }
    }
    return out;
}

/* The induced map Tor_i(source module, k) -> Tor_i(target module, k): by
 * minimality this is the generator-position part of the lifted values. */
template <class F>
Mat<F> induced_on_tor(const GradedAlgebra<F>& A, const ChainMap<F>& cm, const Resolution<F>& source,
                      const Resolution<F>& target, int i) {
    const F& f = A.field;
    const auto& sdegs = source.gen_degs[(size_t)i];
    const auto& tdegs = target.gen_degs[(size_t)i];
    Mat<F> m((int)tdegs.size(), (int)sdegs.size(), f.zero());
    for (size_t sc = 0; sc < sdegs.size(); ++sc) {
        int d = sdegs[sc];
        const Vec<F>& w = cm.phi[(size_t)i][sc];
        if (w.empty()) continue;
        int row = 0;
        for (size_t tr = 0; tr < tdegs.size(); ++tr) {
            int cd = d - tdegs[tr];
            if (cd < 0 || cd > A.J) continue;
            if (cd == 0) m.at((int)tr, (int)sc) = w[(size_t)row];
            row += A.h[(size_t)cd];
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// nu-map vanishing on powers of the maximal ideal, via comparison lifting

struct NuPowerVerdict {
    bool zero = false;
    int n = 0;
    int N = 0, J = 0;      // effective bounds of the verdict
    int witness_i = -1;    // first homological degree with a nonzero induced map
    bool complete = true;  // false when a resolution touched the internal ceiling
    std::string str() const {
        std::string s = "nu(m^" + std::to_string(n) + ")";
        s += zero ? " = 0" : " != 0 at i = " + std::to_string(witness_i);
        s += " up to (N=" + std::to_string(N) + ", J=" + std::to_string(J) + ")";
        if (!complete) s += " [ceiling]";
        return s;
    }
};

template <class F>
NuPowerVerdict nu_power_check(const GradedAlgebra<F>& R, int n, int N) {
    if (n < 1) throw std::invalid_argument("nu_power_check: n must be positive");
    NuPowerVerdict v;
    v.n = n;
    v.J = R.J;
    v.N = std::min(N, R.J - n - 1);
    if (v.N < 0) throw std::invalid_argument("nu_power_check: truncation too small for this power");
    auto in_small = module_mpower(R, n + 1);
    auto in_big = module_mpower(R, n);
    auto res_small = minimal_resolution(R, in_small, v.N, R.J, 0, true);
    auto res_big = minimal_resolution(R, in_big, v.N, R.J, 0, true);
    v.complete = !res_small.betti.touched_ceiling && !res_big.betti.touched_ceiling;
    auto cm = lift_chain_map(R, res_small, in_small, res_big, in_big, v.N, R.J);
    v.zero = true;
    for (int i = 0; i <= v.N; ++i) {
        if ((size_t)i >= res_small.gen_degs.size() || (size_t)i >= res_big.gen_degs.size()) break;
        Mat<F> t = induced_on_tor(R, cm, res_small, res_big, i);
        for (auto& c : t.a)
            if (!R.field.is_zero(c)) {
                v.zero = false;
                v.witness_i = i;
                return v;
            }
    }
    return v;
}

// Castelnuovo-Mumford regularity bound from the nu-power family, restricted
// to M = R and powers n <= n_max: the least s with nu(m^n) = 0 for all
// tested n >= s (a bound-relative report, not a certificate)
template <class F>
int regularity_from_nu(const GradedAlgebra<F>& R, int n_max, int N) {
    int s = 0;
    for (int n = n_max; n >= 1; --n) {
        auto v = nu_power_check(R, n, N);
        if (!v.zero) {
            s = n + 1;
            break;
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Koszul test: diagonal Betti table, series identity, optional nu route

struct KoszulVerdict {
    bool koszul = false;  // the diagonal-table route
    int N = 0, J = 0;
    bool diagonal_ok = false;
    bool series_ok = false;
    std::optional<bool> nu_ok;  // route (iii), when run
    bool routes_agree = true;
    std::optional<std::pair<int, int>> off_diagonal;  // the first witness entry
    std::vector<long long> poincare_totals;
    std::string str() const {
        std::string s = koszul ? "koszul-to-bound" : "non-koszul";
        s += " (N=" + std::to_string(N) + ", J=" + std::to_string(J) + ")";
        if (off_diagonal)
            s += "; first off-diagonal Betti entry at (i=" + std::to_string(off_diagonal->first) +
                 ", j=" + std::to_string(off_diagonal->second) + ")";
        if (!routes_agree) s += "; WARNING: routes disagree at the truncation";
        return s;
    }
};

template <class F>
KoszulVerdict koszul_test(const GradedAlgebra<F>& R, int N, int J,
                          const Resolution<F>* cached = nullptr, bool run_nu_route = false) {
    KoszulVerdict v;
    v.N = N;
    v.J = J;
    Resolution<F> local;
    const Resolution<F>* res = cached;
    if (!res) {
        local = minimal_resolution_of_k(R, N, J);
        res = &local;
    }
    v.off_diagonal = res->betti.first_off_diagonal();
    v.diagonal_ok = !v.off_diagonal.has_value();
    v.poincare_totals = res->betti.totals();

    // series identity P(z) * H_R(-z) = 1 up to z^N
    Series1 p(N);
    for (int i = 0; i <= N; ++i) p.c[(size_t)i] = v.poincare_totals[(size_t)i];
    Series1 prod = p * hilbert_neg_z(R, N);
    v.series_ok = (prod == Series1::one(N));

    if (run_nu_route) v.nu_ok = nu_power_check(R, 1, std::min(N, R.J - 2)).zero;

    v.routes_agree = (v.diagonal_ok == v.series_ok) &&
                     (!v.nu_ok.has_value() || *v.nu_ok == v.diagonal_ok);
    v.koszul = v.diagonal_ok;
    return v;
}

// ---------------------------------------------------------------------------
// Golod ring test: nu(mK) = 0 and the Serre equality with P = Q

struct GolodRingVerdict {
    bool golod = false;         // Serre equality (the definition with P = Q)
    bool koszul_golod = false;  // nu(mK) = 0, i.e. Golod and Koszul together
    NuVerdict nu;
    std::string first_mismatch;  // route (b) first deviating coefficient
    bool serre_inequality_ok = true;
    std::string denominator_form = "1 - z*(P^Q_R(z,t) - 1)";
    int N = 0, J = 0;
    std::string str() const {
        std::string s = golod ? "golod" : ("not golod (first mismatch " + first_mismatch + ")");
        s += koszul_golod ? "; nu(mK) = 0" : "; nu(mK) != 0";
        return s + " up to (N=" + std::to_string(N) + ", J=" + std::to_string(J) + ")";
    }
};

// Tor^Q(R, k) as a bigraded table, from a resolution of R over the
// polynomial ring on the same variables
template <class F>
BettiTable tor_over_polynomial_ring(const GradedAlgebra<F>& R, int N, int J) {
    auto Q = build_polynomial_ring(R.field, R.e(), R.J, R.pres.vars);
    auto res = minimal_resolution(Q, module_algebra_over(Q, R), N, J);
    return res.betti;
}

template <class F>
GolodRingVerdict golod_ring_test(const GradedAlgebra<F>& R, int N, int J,
                                 const Resolution<F>* cached = nullptr) {
    GolodRingVerdict v;
    v.N = N;
    v.J = J;
    // route (a): nu(mK) through the complexes machinery
    auto K = koszul_complex(R, std::min(N, R.e()), J);
    v.nu = nu_vanishes(K);
    v.koszul_golod = v.nu.zero;

    // route (b): coefficientwise Serre equality with P = Q
    Resolution<F> local;
    const Resolution<F>* res = cached;
    if (!res) {
        local = minimal_resolution_of_k(R, N, J);
        res = &local;
    }
    Series2 lhs = res->betti.bigraded();
    BettiTable torq = tor_over_polynomial_ring(R, N, J);
    Series2 pqr = torq.bigraded();
    Series2 z(N, J);
    if (N >= 1) z.at(1, 0) = 1;
    Series2 den = Series2::one(N, J) - z * (pqr - Series2::one(N, J));
    Series2 rhs = ci_poincare(R.e(), 0, N, J) * den.inverse();
    v.serre_inequality_ok = series_dominates(lhs, rhs);
    v.first_mismatch = Series2::first_difference(lhs, rhs);
    v.golod = v.first_mismatch.empty();
    return v;
}

}  // namespace qalg

#endif
