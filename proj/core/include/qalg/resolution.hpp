#ifndef QALG_RESOLUTION_HPP
#define QALG_RESOLUTION_HPP

#include <functional>

#include "qalg/ideal_slice.hpp"
#include "qalg/series.hpp"

namespace qalg {

/* Bigraded Betti numbers beta_{i,j} for i <= N, j <= J.  Entries inside the
 * window are exact; `touched_ceiling` flags steps with generators at the
 * internal bound, where totals over j may undercount the tail beyond J. */
struct BettiTable {
    int N = 0, J = 0;
    std::vector<std::vector<long long>> beta;
    bool touched_ceiling = false;

    long long at(int i, int j) const { return beta[(size_t)i][(size_t)j]; }
    std::vector<long long> totals() const {
        std::vector<long long> b((size_t)N + 1, 0);
        for (int i = 0; i <= N; ++i)
            for (int j = 0; j <= J; ++j) b[(size_t)i] += beta[(size_t)i][(size_t)j];
        return b;
    }
    Series2 bigraded() const {
        Series2 s(N, J);
        for (int i = 0; i <= N; ++i)
            for (int j = 0; j <= J; ++j) s.at(i, j) = beta[(size_t)i][(size_t)j];
        return s;
    }
    // first (i, j) with j != i and beta_{i,j} != 0, scanning by i then j
    std::optional<std::pair<int, int>> first_off_diagonal() const {
        for (int i = 0; i <= N; ++i)
            for (int j = 0; j <= J; ++j)
                if (j != i && beta[(size_t)i][(size_t)j] != 0) return std::make_pair(i, j);
        return std::nullopt;
    }
    std::string tsv() const {
        std::string s = "i\\j";
        for (int j = 0; j <= J; ++j) s += "\t" + std::to_string(j);
        s += "\n";
        for (int i = 0; i <= N; ++i) {
            s += std::to_string(i);
            for (int j = 0; j <= J; ++j) s += "\t" + std::to_string(beta[(size_t)i][(size_t)j]);
            s += "\n";
        }
        return s;
    }
};

// ---------------------------------------------------------------------------
// column-vector backends: generic field vectors, and packed bits for GF(2)

namespace resdetail {

struct BitVec {
    int n = 0;
    std::vector<uint64_t> w;
    explicit BitVec(int len = 0) : n(len), w(((size_t)len + 63) / 64, 0) {}
    bool get(int i) const { return (w[(size_t)i / 64] >> (i % 64)) & 1u; }
    void set(int i) { w[(size_t)i / 64] |= uint64_t(1) << (i % 64); }
    void xor_in(const BitVec& o) {
        for (size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
    }
    int first_set() const {
        for (size_t k = 0; k < w.size(); ++k)
            if (w[k]) return (int)(k * 64 + std::countr_zero(w[k]));
        return -1;
    }
};

template <class F>
struct VecBackend {
    const F* f;
    using Col = Vec<F>;

    Col zero(int n) const { return Col((size_t)n, f->zero()); }
    int len(const Col& c) const { return (int)c.size(); }
    bool is_zero_at(const Col& c, int i) const { return f->is_zero(c[(size_t)i]); }

    // out[r0 + r] += sum_c M[r][c] * in[c0 + c]
    void apply_block(const Mat<F>& M, const Col& in, int c0, Col& out, int r0) const {
        for (int r = 0; r < M.rows; ++r) {
            auto acc = f->zero();
            for (int c = 0; c < M.cols; ++c) {
                const auto& m = M.at(r, c);
                if (!f->is_zero(m)) acc = f->add(acc, f->mul(m, in[(size_t)(c0 + c)]));
            }
            out[(size_t)(r0 + r)] = f->add(out[(size_t)(r0 + r)], acc);
        }
    }

    std::vector<Col> kernel_of(int dim, const std::vector<Col>& cols) const {
        Mat<F> m(dim, (int)cols.size(), f->zero());
        for (size_t j = 0; j < cols.size(); ++j) m.set_col((int)j, cols[j]);
        Mat<F> k = kernel_basis(*f, m);
        std::vector<Col> out;
        out.reserve((size_t)k.cols);
        for (int c = 0; c < k.cols; ++c) out.push_back(k.col(c));
        return out;
    }

    struct IncSpan {
        const F* f;
        int n;
        std::vector<Vec<F>> rows;  // reduced, pivot-normalized
        std::vector<int> piv;
        explicit IncSpan(const F* field, int len) : f(field), n(len) {}
        int dim() const { return (int)rows.size(); }
        bool add(Vec<F> v) {
            for (size_t r = 0; r < rows.size(); ++r) {
                const auto& c = v[(size_t)piv[r]];
                if (!f->is_zero(c)) {
                    auto fac = c;
                    for (int i = 0; i < n; ++i)
                        v[(size_t)i] = f->sub(v[(size_t)i], f->mul(fac, rows[r][(size_t)i]));
                }
            }
            int p = -1;
            for (int i = 0; i < n; ++i)
                if (!f->is_zero(v[(size_t)i])) { p = i; break; }
            if (p < 0) return false;
            auto inv = f->inv(v[(size_t)p]);
            for (int i = 0; i < n; ++i) v[(size_t)i] = f->mul(v[(size_t)i], inv);
            rows.push_back(std::move(v));
            piv.push_back(p);
            return true;
        }
    };
    IncSpan make_span(int n) const { return IncSpan(f, n); }

    Vec<F> to_vec(const Col& c) const { return c; }
    Col from_vec(const Vec<F>& v) const { return v; }
};

struct BitBackend {
    using Col = BitVec;

    Col zero(int n) const { return BitVec(n); }
    int len(const Col& c) const { return c.n; }
    bool is_zero_at(const Col& c, int i) const { return !c.get(i); }

    template <class F>
    void apply_block(const Mat<F>& M, const Col& in, int c0, Col& out, int r0) const {
        for (int r = 0; r < M.rows; ++r) {
            unsigned acc = 0;
            for (int c = 0; c < M.cols; ++c)
                if ((M.at(r, c) & 1u) && in.get(c0 + c)) acc ^= 1u;
            if (acc) out.w[(size_t)(r0 + r) / 64] ^= uint64_t(1) << ((r0 + r) % 64);
        }
    }

    std::vector<Col> kernel_of(int dim, const std::vector<Col>& cols) const {
        BitMat m(dim, (int)cols.size());
        for (size_t j = 0; j < cols.size(); ++j)
            for (int i = 0; i < dim; ++i)
                if (cols[j].get(i)) m.set(i, (int)j, true);
        std::vector<int> piv;
        int r = gf2_rref(m, piv);
        std::vector<char> is_piv((size_t)m.cols, 0);
        for (int c : piv) is_piv[(size_t)c] = 1;
        std::vector<Col> out;
        for (int c = 0; c < m.cols; ++c) {
            if (is_piv[(size_t)c]) continue;
            Col v(m.cols);
            v.set(c);
            for (int i = 0; i < r; ++i)
                if (m.get(i, c)) v.set(piv[(size_t)i]);
            out.push_back(std::move(v));
        }
        return out;
    }

    struct IncSpan {
        int n;
        std::vector<BitVec> rows;
        std::vector<int> piv;
        explicit IncSpan(int len) : n(len) {}
        int dim() const { return (int)rows.size(); }
        bool add(BitVec v) {
            for (size_t r = 0; r < rows.size(); ++r)
                if (v.get(piv[r])) v.xor_in(rows[r]);
            int p = v.first_set();
            if (p < 0) return false;
            rows.push_back(std::move(v));
            piv.push_back(p);
            return true;
        }
    };
    IncSpan make_span(int n) const { return IncSpan(n); }

    template <class F>
    Vec<F> to_vec_f(const F& f, const Col& c) const {
        Vec<F> v((size_t)c.n, f.zero());
        for (int i = 0; i < c.n; ++i)
            if (c.get(i)) v[(size_t)i] = f.one();
        return v;
    }
    template <class F>
    Col from_vec_f(const F& f, const Vec<F>& v) const {
        Col c((int)v.size());
        for (size_t i = 0; i < v.size(); ++i)
            if (!f.is_zero(v[i])) c.set((int)i);
        return c;
    }
};

}  // namespace resdetail

// ---------------------------------------------------------------------------
// graded module data: an ambient space with degree-1 actions, plus generators

template <class F>
struct ModuleInput {
    std::vector<int> dim;                    // ambient dimension per degree 0..J
    std::vector<std::vector<Mat<F>>> act;    // act[v][j] : ambient_j -> ambient_{j+1}
    std::vector<std::pair<int, Vec<F>>> gens;  // (degree, ambient coordinates)
};

// the residue field k
template <class F>
ModuleInput<F> module_k(const GradedAlgebra<F>& A) {
    ModuleInput<F> m;
    m.dim.assign((size_t)A.J + 1, 0);
    m.dim[0] = 1;
    m.act.assign((size_t)A.e(), std::vector<Mat<F>>((size_t)A.J));
    for (int v = 0; v < A.e(); ++v)
        for (int j = 0; j < A.J; ++j)
            m.act[(size_t)v][(size_t)j] = Mat<F>(m.dim[(size_t)j + 1], m.dim[(size_t)j], A.field.zero());
    m.gens.emplace_back(0, Vec<F>{A.field.one()});
    return m;
}

// the power m^n inside R, generated by the degree-n standard basis
template <class F>
ModuleInput<F> module_mpower(const GradedAlgebra<F>& R, int n) {
    ModuleInput<F> m;
    m.dim.assign((size_t)R.J + 1, 0);
    for (int j = 0; j <= R.J; ++j) m.dim[(size_t)j] = R.h[(size_t)j];
    m.act.assign((size_t)R.e(), std::vector<Mat<F>>((size_t)R.J));
    for (int v = 0; v < R.e(); ++v)
        for (int j = 0; j < R.J; ++j) m.act[(size_t)v][(size_t)j] = R.mult1[(size_t)v][(size_t)j];
    for (int c = 0; c < R.h[(size_t)n]; ++c) {
        Vec<F> g((size_t)R.h[(size_t)n], R.field.zero());
        g[(size_t)c] = R.field.one();
        m.gens.emplace_back(n, std::move(g));
    }
    return m;
}

/* R as a module over the polynomial ring A (same variables): the ambient is
 * R's graded pieces with A acting through R's multiplication. */
template <class F>
ModuleInput<F> module_algebra_over(const GradedAlgebra<F>& A, const GradedAlgebra<F>& R) {
    if (A.e() != R.e()) throw std::invalid_argument("module_algebra_over: variable mismatch");
    ModuleInput<F> m;
    int J = std::min(A.J, R.J);
    m.dim.assign((size_t)J + 1, 0);
    for (int j = 0; j <= J; ++j) m.dim[(size_t)j] = R.h[(size_t)j];
    m.act.assign((size_t)R.e(), std::vector<Mat<F>>((size_t)J));
    for (int v = 0; v < R.e(); ++v)
        for (int j = 0; j < J; ++j) m.act[(size_t)v][(size_t)j] = R.mult1[(size_t)v][(size_t)j];
    m.gens.emplace_back(0, Vec<F>{R.field.one()});
    return m;
}

template <class F>
struct Resolution {
    const GradedAlgebra<F>* A = nullptr;
    BettiTable betti;
    bool kept_differentials = false;
    // generator degrees per step; step 0 lists the module generators
    std::vector<std::vector<int>> gen_degs;
    // when kept: images of the step-i generators, grouped by degree, as
    // columns in the coordinates of F_{i-1} (step 0: ambient coordinates)
    std::vector<std::map<int, Mat<F>>> images;
};

// dimensions of the free modules in the resolution
template <class F>
int free_dim(const GradedAlgebra<F>& A, const std::vector<int>& degs, int j) {
    int s = 0;
    for (int d : degs)
        if (j >= d && j - d <= A.J) s += A.h[(size_t)(j - d)];
    return s;
}

namespace resdetail {

// mono_parent[d][k] = (variable v, index of m/x_v in basis[d-1])
template <class F>
std::vector<std::vector<std::pair<int, int>>> monomial_parents(const GradedAlgebra<F>& A) {
    std::vector<std::vector<std::pair<int, int>>> par((size_t)A.J + 1);
    for (int d = 1; d <= A.J; ++d) {
        par[(size_t)d].resize(A.basis[(size_t)d].size());
        for (size_t k = 0; k < A.basis[(size_t)d].size(); ++k) {
            const Monomial& m = A.basis[(size_t)d][k];
            int v = -1;
            for (int i = 0; i < A.e(); ++i)
                if (m.e[(size_t)i] > 0) { v = i; break; }
            Monomial q = m;
            --q.e[(size_t)v];
            par[(size_t)d][k] = {v, A.index[(size_t)d - 1].at(q)};
        }
    }
    return par;
}

template <class F, class BK>
class Engine {
  public:
    using Col = typename BK::Col;

    Engine(const GradedAlgebra<F>& A, BK bk) : A_(A), bk_(bk), parents_(monomial_parents(A)) {}

    // free-module variable action on a column at degree j for generator degrees degs
    Col free_act(const std::vector<int>& degs, int v, int j, const Col& c) const {
        Col out = bk_.zero(free_dim(A_, degs, j + 1));
        int c0 = 0, r0 = 0;
        for (int d : degs) {
            int sdim = (j >= d && j - d <= A_.J) ? A_.h[(size_t)(j - d)] : 0;
            int tdim = (j + 1 >= d && j + 1 - d <= A_.J) ? A_.h[(size_t)(j + 1 - d)] : 0;
            if (sdim > 0 && tdim > 0 && j - d < A_.J)
                apply(bk_, A_.mult1[(size_t)v][(size_t)(j - d)], c, c0, out, r0);
            c0 += sdim;
            r0 += tdim;
        }
        return out;
    }

    Col ambient_act(const ModuleInput<F>& m, int v, int j, const Col& c) const {
        Col out = bk_.zero(m.dim[(size_t)j + 1]);
        apply(bk_, m.act[(size_t)v][(size_t)j], c, 0, out, 0);
        return out;
    }

    Resolution<F> run(const ModuleInput<F>& input, int N, int J, uint64_t shuffle_seed,
                      bool keep) {
        Resolution<F> res;
        res.A = &A_;
        res.kept_differentials = keep;
        res.betti.N = N;
        res.betti.J = J;
        res.betti.beta.assign((size_t)N + 1, std::vector<long long>((size_t)J + 1, 0));
        res.gen_degs.resize((size_t)N + 1);
        res.images.resize((size_t)N + 1);

        // step 0: the chosen module generators
        std::vector<int> degs;
        std::vector<std::map<int, std::vector<Col>>> step_images(1);
        for (auto& [d, v] : input.gens) {
            degs.push_back(d);
            step_images[0][d].push_back(from_vec(bk_, v));
        }
        res.gen_degs[0] = degs;
        for (auto& [d, v] : input.gens)
            if (d >= 0 && d <= J) ++res.betti.beta[0][(size_t)d];
        if (keep) res.images[0] = collect(step_images[0], input.dim);

        // target structure of the augmentation: the ambient module
        bool target_is_ambient = true;
        std::vector<int> target_degs;  // when the target is a free module

        for (int i = 1; i <= N; ++i) {
            // assemble the degreewise matrix of the current map degree by
            // degree (columns of degree j derive from columns of degree j-1)
            std::map<int, std::vector<Col>> colmap;  // degree -> columns of F_{i-1}-map
            std::map<int, std::vector<Col>> kernels;
            int lowest = J + 1;
            for (int d : degs) lowest = std::min(lowest, d);
            std::vector<Col> prev_cols;
            for (int j = lowest; j <= J; ++j) {
                std::vector<Col> cols;
                cols.reserve((size_t)free_dim(A_, degs, j));
                // walk generators in order; per generator the basis monomials
                size_t gidx = 0;
                std::vector<int> prev_offsets;  // offset of each generator block in prev_cols
                prev_offsets.reserve(degs.size());
                {
                    int off = 0;
                    for (int d : degs) {
                        prev_offsets.push_back(off);
                        int pd = j - 1 - d;
                        if (pd >= 0 && pd <= A_.J) off += A_.h[(size_t)pd];
                    }
                }
                for (size_t g = 0; g < degs.size(); ++g) {
                    int d = degs[g];
                    int cd = j - d;
                    if (cd < 0 || cd > A_.J) { continue; }
                    if (cd == 0) {
                        cols.push_back(step_images.back().at(d)[gensofs(degs, g)]);
                        continue;
                    }
                    for (size_t k = 0; k < A_.basis[(size_t)cd].size(); ++k) {
                        auto [v, pk] = parents_[(size_t)cd][k];
                        const Col& base = prev_cols[(size_t)(prev_offsets[g] + pk)];
                        Col img = target_is_ambient
                                      ? ambient_act(input, v, j - 1, base)
                                      : free_act(target_degs, v, j - 1, base);
                        cols.push_back(std::move(img));
                    }
                    (void)gidx;
                }
                int tdim = target_is_ambient ? input.dim[(size_t)j] : free_dim(A_, target_degs, j);
                kernels[j] = bk_.kernel_of(tdim, cols);
                prev_cols = std::move(cols);
            }

            // minimal generators of the kernel: extend the span of A_1 * K_{j-1}
            std::vector<int> new_degs;
            std::map<int, std::vector<Col>> new_images;
            std::mt19937_64 rng(shuffle_seed ^ (uint64_t)i * 0x9e3779b97f4a7c15ull);
            for (int j = lowest; j <= J; ++j) {
                auto itK = kernels.find(j);
                if (itK == kernels.end() || itK->second.empty()) continue;
                int n = free_dim(A_, degs, j);
                auto span = bk_.make_span(n);
                int bound = (int)itK->second.size();
                auto itP = kernels.find(j - 1);
                if (itP != kernels.end()) {
                    for (int v = 0; v < A_.e() && span.dim() < bound; ++v)
                        for (auto& kc : itP->second) {
                            if (span.dim() >= bound) break;
                            span.add(free_act(degs, v, j - 1, kc));
                        }
                }
                std::vector<int> order((size_t)itK->second.size());
                std::iota(order.begin(), order.end(), 0);
                if (shuffle_seed) std::shuffle(order.begin(), order.end(), rng);
                for (int idx : order) {
                    Col candidate = itK->second[(size_t)idx];
                    if (span.add(candidate)) {
                        new_degs.push_back(j);
                        new_images[j].push_back(itK->second[(size_t)idx]);
                        ++res.betti.beta[(size_t)i][(size_t)j];
                        if (j == J) res.betti.touched_ceiling = true;
                        check_minimal(degs, j, itK->second[(size_t)idx]);
                    }
                }
            }
            // A_1 * K_{j-1} spans need K's pieces in increasing degree, and the
            // kernel itself is generated by what we picked; proceed downward
            std::sort(new_degs.begin(), new_degs.end());
            res.gen_degs[(size_t)i] = new_degs;
            if (keep) res.images[(size_t)i] = collect(new_images, {}, degs, true);
            target_is_ambient = false;
            target_degs = degs;
            degs = new_degs;
            step_images.push_back(std::move(new_images));
            step_images.erase(step_images.begin());  // only the last step is needed
            if (degs.empty()) break;                 // resolution finished early
        }
        return res;
    }

  private:
    const GradedAlgebra<F>& A_;
    BK bk_;
    std::vector<std::vector<std::pair<int, int>>> parents_;

    static void apply(const resdetail::VecBackend<F>& bk, const Mat<F>& M, const Vec<F>& in,
                      int c0, Vec<F>& out, int r0) {
        bk.apply_block(M, in, c0, out, r0);
    }
    static void apply(const resdetail::BitBackend& bk, const Mat<F>& M, const BitVec& in, int c0,
                      BitVec& out, int r0) {
        bk.apply_block(M, in, c0, out, r0);
    }
    static Col from_vec(const resdetail::VecBackend<F>& bk, const Vec<F>& v) { return bk.from_vec(v); }
    static Col from_vec(const resdetail::BitBackend& bk, const Vec<F>& v) {
        return bk.template from_vec_f<F>(F{}, v);
    }

    // index of generator g among the generators of the same degree
    static int gensofs(const std::vector<int>& degs, size_t g) {
        int k = 0;
        for (size_t t = 0; t < g; ++t)
            if (degs[t] == degs[g]) ++k;
        return k;
    }

    // a minimal-step kernel vector has no unit coordinates at generators of
    // its own degree
    void check_minimal(const std::vector<int>& degs, int j, const Col& c) const {
        int off = 0;
        for (int d : degs) {
            int cd = j - d;
            if (cd < 0 || cd > A_.J) continue;
            if (cd == 0 && !bk_.is_zero_at(c, off))
                throw std::logic_error("resolution: non-minimal kernel generator");
            off += A_.h[(size_t)cd];
        }
    }

    std::map<int, Mat<F>> collect(const std::map<int, std::vector<Col>>& images,
                                  const std::vector<int>& ambient_dim,
                                  const std::vector<int>& target_degs = {},
                                  bool target_free = false) const {
        std::map<int, Mat<F>> out;
        F field{};
        if constexpr (std::is_same_v<BK, resdetail::VecBackend<F>>) field = *bk_.f;
        for (auto& [d, cols] : images) {
            int rows = target_free ? free_dim(A_, target_degs, d)
                                   : (d < (int)ambient_dim.size() ? ambient_dim[(size_t)d] : 0);
            Mat<F> m(rows, (int)cols.size(), field.zero());
            for (size_t c = 0; c < cols.size(); ++c) {
                Vec<F> v = to_vecc(cols[c], field);
                m.set_col((int)c, v);
            }
            out[d] = std::move(m);
        }
        return out;
    }
    Vec<F> to_vecc(const Col& c, const F& field) const {
        if constexpr (std::is_same_v<BK, resdetail::BitBackend>)
            return bk_.template to_vec_f<F>(field, c);
        else
            return bk_.to_vec(c);
    }
};

}  // namespace resdetail

/* Stepwise minimal graded free resolution of the module generated by the
 * given elements, over the algebra A, to homological degree N and internal
 * degree J.  Deterministic; an optional seed shuffles the kernel-generator
 * candidate order (the Betti numbers must not change). */
template <class F>
Resolution<F> minimal_resolution(const GradedAlgebra<F>& A, const ModuleInput<F>& input, int N,
                                 int J, uint64_t shuffle_seed = 0, bool keep_differentials = false) {
    if (J > A.J) throw std::invalid_argument("minimal_resolution: J exceeds the algebra truncation");
    if constexpr (std::is_same_v<F, GF>) {
        if (A.field.characteristic() == 2) {
            resdetail::Engine<F, resdetail::BitBackend> eng(A, resdetail::BitBackend{});
            return eng.run(input, N, J, shuffle_seed, keep_differentials);
        }
    }
    resdetail::Engine<F, resdetail::VecBackend<F>> eng(A, resdetail::VecBackend<F>{&A.field});
    return eng.run(input, N, J, shuffle_seed, keep_differentials);
}

template <class F>
Resolution<F> minimal_resolution_of_k(const GradedAlgebra<F>& R, int N, int J,
                                      uint64_t shuffle_seed = 0, bool keep_differentials = false) {
    return minimal_resolution(R, module_k(R), N, J, shuffle_seed, keep_differentials);
}

}  // namespace qalg

#endif
