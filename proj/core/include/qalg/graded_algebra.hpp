#ifndef QALG_GRADED_ALGEBRA_HPP
#define QALG_GRADED_ALGEBRA_HPP

#include "qalg/presentation.hpp"
#include "qalg/series.hpp"

namespace qalg {

/* R = Q/I as finite-dimensional graded pieces up to a truncation degree J:
 * standard-monomial bases, multiplication matrices, and the exact Hilbert
 * series of the lead-term quotient.  Immutable once built. */
template <class F>
struct GradedAlgebra {
    F field;
    QuadraticPresentation<F> pres;
    GroebnerBasis<F> gb;
    int J = 0;
    std::vector<std::vector<Monomial>> basis;  // basis[d], d = 0..J
    std::vector<std::map<Monomial, int>> index;
    std::vector<int> h;                        // h[d] = dim R_d
    std::vector<std::vector<Mat<F>>> mult1;    // mult1[i][d] : R_d -> R_{d+1}
    HilbertSeries series;

    int e() const { return pres.nvars(); }

    // coordinates in basis[d] of the normal form of a homogeneous polynomial
    Vec<F> nf_coords(const Poly<F>& p, int d) const {
        Poly<F> nf = normal_form(field, p, gb);
        Vec<F> v((size_t)h[(size_t)d], field.zero());
        for (auto& [m, c] : nf.t) {
            auto it = index[(size_t)d].find(m);
            if (it == index[(size_t)d].end())
                throw std::logic_error("nf_coords: normal form outside the standard basis");
            v[(size_t)it->second] = c;
        }
        return v;
    }

    Poly<F> from_coords(const Vec<F>& v, int d) const {
        Poly<F> p;
        for (size_t i = 0; i < v.size(); ++i)
            if (!field.is_zero(v[i])) p.t.emplace_back(basis[(size_t)d][i], v[i]);
        normalize_terms(field, gb.ord, p);
        return p;
    }

    // multiplication matrix of a linear form (variable coordinates) on R_d
    Mat<F> mult_matrix(const Vec<F>& linear, int d) const {
        Mat<F> m(h[(size_t)d + 1], h[(size_t)d], field.zero());
        for (int i = 0; i < e(); ++i) {
            if (field.is_zero(linear[(size_t)i])) continue;
            const Mat<F>& mi = mult1[(size_t)i][(size_t)d];
            for (int r = 0; r < m.rows; ++r)
                for (int c = 0; c < m.cols; ++c)
                    m.at(r, c) = field.add(m.at(r, c), field.mul(linear[(size_t)i], mi.at(r, c)));
        }
        return m;
    }

    // product of homogeneous elements given by coordinates
    Vec<F> mult_elem(int d1, const Vec<F>& a, int d2, const Vec<F>& b) const {
        Poly<F> pa = from_coords(a, d1), pb = from_coords(b, d2);
        Poly<F> prod = poly_mul(field, gb.ord, pa, pb);
        return nf_coords(prod, d1 + d2);
    }

    // degree-1 coordinates of a linear form in variable coordinates
    Vec<F> linear_to_basis(const Vec<F>& linear) const {
        Vec<F> v((size_t)h[1], field.zero());
        for (int i = 0; i < e(); ++i) {
            auto it = index[1].find(Monomial::var(e(), i));
            if (it == index[1].end()) throw std::logic_error("linear_to_basis: missing variable");
            v[(size_t)it->second] = linear[(size_t)i];
        }
        return v;
    }
    Vec<F> basis_to_linear(const Vec<F>& v) const {
        Vec<F> lin((size_t)e(), field.zero());
        for (int i = 0; i < e(); ++i) {
            auto it = index[1].find(Monomial::var(e(), i));
            lin[(size_t)i] = v[(size_t)it->second];
        }
        return lin;
    }

    std::string linear_str(const Vec<F>& linear) const {
        Poly<F> p;
        for (int i = 0; i < e(); ++i)
            if (!field.is_zero(linear[(size_t)i]))
                p.t.emplace_back(Monomial::var(e(), i), linear[(size_t)i]);
        return poly_str(field, p, pres.vars);
    }

    // dim of x * R_1
    int rank_of(const Vec<F>& linear) const {
        if (J < 2) throw std::invalid_argument("rank_of: needs truncation >= 2");
        return qalg::rank(field, mult_matrix(linear, 1));
    }

    // x^2 as an element of R_2, x given in variable coordinates
    Vec<F> square_of(const Vec<F>& linear) const {
        Vec<F> v1 = linear_to_basis(linear);
        return mult_elem(1, v1, 1, v1);
    }
};

template <class F>
GradedAlgebra<F> build_algebra(const QuadraticPresentation<F>& pres, int J,
                               TermOrder ord = TermOrder{}) {
    if (J < 2) throw std::invalid_argument("build_algebra: truncation must be at least 2");
    pres.check_homogeneous_quadratic();
    const F& f = pres.field;
    int e = pres.nvars();
    if (ord.perm.empty()) ord = TermOrder::grevlex(e);

    GradedAlgebra<F> R;
    R.field = f;
    R.pres = pres;
    R.J = J;

    // minimality of the relation list
    std::vector<Monomial> q2;
    monomials_of_degree(e, 2, q2);
    if (!pres.relations.empty()) {
        Mat<F> rel = pres.relation_matrix(q2);
        std::vector<int> piv;
        Mat<F> rcopy = rel;
        int r = rref(f, rcopy, piv);
        if (r < (int)pres.relations.size()) {
            Mat<F> ker = kernel_basis(f, rel);
            std::string dep = "dependent relations; kernel vector (";
            for (int i = 0; i < ker.rows; ++i) {
                if (i) dep += ", ";
                dep += f.str(ker.at(i, 0));
            }
            dep += ")";
            throw std::invalid_argument("build_algebra: " + dep);
        }
    }

    R.gb = buchberger(f, pres.relations, ord);
    R.gb.nvars = e;

    R.basis.resize((size_t)J + 1);
    R.index.resize((size_t)J + 1);
    R.h.resize((size_t)J + 1);
    for (int d = 0; d <= J; ++d) {
        R.basis[(size_t)d] = standard_monomials(f, R.gb, e, d);
        for (size_t i = 0; i < R.basis[(size_t)d].size(); ++i)
            R.index[(size_t)d][R.basis[(size_t)d][i]] = (int)i;
        R.h[(size_t)d] = (int)R.basis[(size_t)d].size();
    }
    if (R.h[0] != 1) throw std::logic_error("build_algebra: h_0 != 1");
    if (R.h[1] != e)
        throw std::invalid_argument("build_algebra: ideal contains linear forms (h_1 != e)");

    R.mult1.resize((size_t)e);
    for (int i = 0; i < e; ++i) {
        R.mult1[(size_t)i].resize((size_t)J);
        for (int d = 0; d < J; ++d) {
            Mat<F> m(R.h[(size_t)d + 1], R.h[(size_t)d], f.zero());
            for (int c = 0; c < R.h[(size_t)d]; ++c) {
                Poly<F> prod = poly_term(f, R.basis[(size_t)d][(size_t)c] * Monomial::var(e, i), f.one());
                Poly<F> nf = normal_form(f, prod, R.gb);
                for (auto& [mono, coef] : nf.t)
                    m.at(R.index[(size_t)d + 1].at(mono), c) = coef;
            }
            R.mult1[(size_t)i][(size_t)d] = std::move(m);
        }
    }

    R.series = HilbertSeries::reduce(
        [&] {
            auto num = hilbert_numerator(R.gb.lead_monomials(), e);
            return num;
        }(),
        e);
    // the two Hilbert routes (basis counts vs rational series) must agree
    auto coeffs = R.series.coefficients(J);
    for (int d = 0; d <= J; ++d)
        if (coeffs[(size_t)d] != R.h[(size_t)d])
            throw std::logic_error("build_algebra: Hilbert series mismatch at degree " +
                                   std::to_string(d));
    return R;
}

template <class F>
GradedAlgebra<F> build_polynomial_ring(const F& f, int e, int J,
                                       std::vector<std::string> names = {}) {
    if (names.empty())
        for (int i = 0; i < e; ++i) names.push_back("x" + std::to_string(i + 1));
    QuadraticPresentation<F> p{f, names, {}, J};
    return build_algebra(p, J);
}

// exact: Krull dimension of the lead-term quotient is zero
template <class F>
bool is_artinian(const GradedAlgebra<F>& R) {
    int dim = monomial_quotient_dimension(R.gb.lead_monomials(), R.e());
    bool poly = R.series.is_polynomial();
    if ((dim == 0) != poly)
        throw std::logic_error("is_artinian: Krull dimension and series disagree");
    return dim == 0;
}

// ---------------------------------------------------------------------------
// degree-1 socle and trivial fiber reduction

// basis of { v in R_1 : v * R_1 = 0 }, columns in variable coordinates
template <class F>
Mat<F> socle_degree1(const GradedAlgebra<F>& R) {
    const F& f = R.field;
    int e = R.e();
    Mat<F> stacked(R.h[2] * e, e, f.zero());
    for (int i = 0; i < e; ++i) {
        // column v -> coordinates of x_i * v
        for (int c = 0; c < e; ++c) {
            Vec<F> unit((size_t)e, f.zero());
            unit[(size_t)c] = f.one();
            Vec<F> prod = mat_vec(f, R.mult1[(size_t)i][1], R.linear_to_basis(unit));
            for (int r = 0; r < R.h[2]; ++r) stacked.at(i * R.h[2] + r, c) = prod[(size_t)r];
        }
    }
    return colspace(f, kernel_basis(f, stacked));
}

template <class F>
struct FiberLayer {
    Mat<F> change;                 // columns: kept variables (units), then socle forms
    std::vector<int> kept;         // indices of the kept original variables
    std::vector<std::string> socle_forms;  // human-readable forms removed
    QuadraticPresentation<F> before;       // presentation this layer started from
    QuadraticPresentation<F> changed;      // the same ring in the split coordinates
};

template <class F>
struct FiberReduction {
    GradedAlgebra<F> reduced;
    int s = 0;
    std::vector<FiberLayer<F>> layers;
};

template <class F>
QuadraticPresentation<F> apply_change(const GradedAlgebra<F>& R, const Mat<F>& M);

/* Iterated removal of degree-1 socle elements.  Each layer moves the socle
 * forms to trailing coordinates and drops them; H_R(t) = H_reduced(t) + s*t. */
template <class F>
FiberReduction<F> trivial_fiber_reduce(const GradedAlgebra<F>& R0) {
    const F& f = R0.field;
    FiberReduction<F> out{R0, 0, {}};
    while (true) {
        const GradedAlgebra<F>& R = out.reduced;
        int e = R.e();
        if (e == 0) return out;
        Mat<F> soc = socle_degree1(R);
        int s = soc.cols;
        if (s == 0) return out;

        // complement: unit vectors at the non-pivot columns of the socle row span
        Mat<F> rows = transpose(soc);
        std::vector<int> piv;
        rref(f, rows, piv);
        std::vector<char> is_piv((size_t)e, 0);
        for (int c : piv) is_piv[(size_t)c] = 1;
        FiberLayer<F> layer;
        layer.before = R.pres;
        Mat<F> M(e, e, f.zero());
        int col = 0;
        for (int j = 0; j < e; ++j) {
            if (is_piv[(size_t)j]) continue;
            M.at(j, col) = f.one();
            layer.kept.push_back(j);
            ++col;
        }
        for (int k = 0; k < s; ++k) {
            for (int j = 0; j < e; ++j) M.at(j, col) = soc.at(j, k);
            layer.socle_forms.push_back(R.linear_str(soc.col(k)));
            ++col;
        }
        layer.change = M;

        QuadraticPresentation<F> changed = apply_change(R, M);
        layer.changed = changed;
        // drop the trailing socle variables and prune to an independent set
        int keep = e - s;
        QuadraticPresentation<F> reduced_pres;
        reduced_pres.field = f;
        for (int j = 0; j < keep; ++j) reduced_pres.vars.push_back(changed.vars[(size_t)j]);
        std::vector<Monomial> q2;
        monomials_of_degree(keep, 2, q2);
        std::map<Monomial, int> q2i;
        for (size_t i = 0; i < q2.size(); ++i) q2i[q2[i]] = (int)i;
        Mat<F> span((int)q2.size(), 0);
        for (auto& r : changed.relations) {
            Poly<F> proj;
            for (auto& [m, c] : r.t) {
                bool drop = false;
                for (int v = keep; v < e; ++v)
                    if (m.e[(size_t)v] > 0) drop = true;
                if (drop) continue;
                Monomial m2(keep);
                for (int v = 0; v < keep; ++v) m2.e[(size_t)v] = m.e[(size_t)v];
                proj.t.emplace_back(m2, c);
            }
            normalize_terms(f, TermOrder::grevlex(keep), proj);
            if (proj.is_zero()) continue;
            Vec<F> vc((size_t)q2.size(), f.zero());
            for (auto& [m, c] : proj.t) vc[(size_t)q2i.at(m)] = c;
            if (span.cols > 0 && span_contains(f, span, vc)) continue;
            span = hstack(span, Mat<F>((int)q2.size(), 1));
            span.set_col(span.cols - 1, vc);
            reduced_pres.relations.push_back(proj);
        }
        out.s += s;
        out.layers.push_back(std::move(layer));
        out.reduced = build_algebra(reduced_pres, R.J);
    }
}

// rewrite the presentation in new coordinates: column i of M holds the old
// variable coordinates of the new variable y_i
template <class F>
QuadraticPresentation<F> apply_change(const GradedAlgebra<F>& R, const Mat<F>& M) {
    const F& f = R.field;
    int e = R.e();
    Mat<F> Minv;
    {
        Mat<F> aug = hstack(M, Mat<F>::identity(f, e));
        std::vector<int> piv;
        rref(f, aug, piv);
        int leading = 0;
        for (int c : piv)
            if (c < e) ++leading;
        if (leading < e) throw std::invalid_argument("apply_change: singular change of variables");
        Minv = Mat<F>(e, e);
        for (int i = 0; i < e; ++i)
            for (int j = 0; j < e; ++j) Minv.at(i, j) = aug.at(i, e + j);
    }
    // old variable v maps to sum_w Minv[w][v] * y_w
    std::vector<std::vector<typename F::Elem>> images((size_t)e,
                                                      std::vector<typename F::Elem>((size_t)e));
    for (int v = 0; v < e; ++v)
        for (int w = 0; w < e; ++w) images[(size_t)v][(size_t)w] = Minv.at(w, v);

    QuadraticPresentation<F> out;
    out.field = f;
    for (int i = 0; i < e; ++i) out.vars.push_back("y" + std::to_string(i + 1));
    TermOrder ord = TermOrder::grevlex(e);
    for (auto& r : R.pres.relations) {
        Poly<F> s = substitute_linear(f, ord, r, images);
        if (s.is_zero()) throw std::logic_error("apply_change: relation collapsed to zero");
        out.relations.push_back(poly_monic(f, s));
    }
    out.truncation = R.pres.truncation;
    return out;
}

// ---------------------------------------------------------------------------
// null-square linear forms (the search device behind the structural matching)

template <class F>
struct NullSquareResult {
    std::optional<Vec<F>> form;  // variable coordinates, verified x^2 = 0
    std::vector<std::string> ladder;
};

template <class F>
bool is_null_square(const GradedAlgebra<F>& R, const Vec<F>& linear) {
    Vec<F> sq = R.square_of(linear);
    for (auto& c : sq)
        if (!R.field.is_zero(c)) return false;
    return true;
}

namespace detail {

template <class F>
bool all_zero(const F& f, const Vec<F>& v) {
    for (auto& c : v)
        if (!f.is_zero(c)) return false;
    return true;
}

// enumerate projective points over a finite field, lead coordinate one
template <class F>
std::optional<Vec<F>> enumerate_null_square(const GradedAlgebra<F>& R) {
    const F& f = R.field;
    int e = R.e();
    uint64_t q = f.size();
    for (int lead = 0; lead < e; ++lead) {
        uint64_t count = 1;
        for (int i = lead + 1; i < e; ++i) count *= q;
        for (uint64_t idx = 0; idx < count; ++idx) {
            Vec<F> v((size_t)e, f.zero());
            v[(size_t)lead] = f.one();
            uint64_t rest = idx;
            for (int i = lead + 1; i < e; ++i) {
                v[(size_t)i] = f.nth(rest % q);
                rest /= q;
            }
            if (is_null_square(R, v)) return v;
        }
    }
    return std::nullopt;
}

// small-height integer vectors for the rationals
template <class F>
std::optional<Vec<F>> small_height_null_square(const GradedAlgebra<F>& R, int height) {
    const F& f = R.field;
    int e = R.e();
    uint64_t radix = (uint64_t)(2 * height + 1);
    uint64_t total = 1;
    for (int i = 0; i < e; ++i) total *= radix;
    for (uint64_t idx = 0; idx < total; ++idx) {
        Vec<F> v((size_t)e, f.zero());
        uint64_t rest = idx;
        long long firstnz = 0;
        bool nz = false;
        for (int i = 0; i < e; ++i) {
            long long digit = (long long)(rest % radix) - height;
            rest /= radix;
            v[(size_t)i] = f.from_int(digit);
            if (!nz && digit != 0) {
                firstnz = digit;
                nz = true;
            }
        }
        if (!nz || firstnz < 0) continue;  // skip zero and projective duplicates
        if (is_null_square(R, v)) return v;
    }
    return std::nullopt;
}

}  // namespace detail

/* Strategy ladder per the design notes: full projective enumeration when
 * q^e is within budget, then seeded random sampling; small-height integer
 * enumeration stands in for enumeration over the rationals.  Absence is a
 * value, and the ladder log records the rungs taken. */
template <class F>
NullSquareResult<F> null_square_search(const GradedAlgebra<F>& R, uint64_t enum_budget = 1000000,
                                       int random_trials = 100000, uint64_t seed = 1) {
    const F& f = R.field;
    NullSquareResult<F> out;
    int e = R.e();
    if constexpr (std::is_same_v<F, QQ>) {
        int height = e <= 6 ? 2 : 1;
        out.ladder.push_back("small-height integer enumeration, height " + std::to_string(height));
        auto v = detail::small_height_null_square(R, height);
        if (v) {
            out.form = v;
            return out;
        }
    } else {
        double qe = 1;
        for (int i = 0; i < e; ++i) qe *= (double)f.size();
        if (qe <= (double)enum_budget) {
            out.ladder.push_back("full projective enumeration over " + f.spec().str());
            auto v = detail::enumerate_null_square(R);
            if (v) {
                out.form = v;
                return out;
            }
            out.ladder.push_back("exhausted: no null-square form over " + f.spec().str());
            return out;  // enumeration is complete, nothing more to try
        }
    }
    std::mt19937_64 rng(seed);
    out.ladder.push_back("random sampling, " + std::to_string(random_trials) + " trials");
    for (int t = 0; t < random_trials; ++t) {
        Vec<F> v((size_t)e);
        for (int i = 0; i < e; ++i) v[(size_t)i] = f.random(rng);
        if (detail::all_zero(f, v)) continue;
        if (is_null_square(R, v)) {
            out.form = v;
            return out;
        }
    }
    out.ladder.push_back("not found over this field (extension-field retry available)");
    return out;
}

}  // namespace qalg

#endif
