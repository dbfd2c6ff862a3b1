#ifndef QALG_GROEBNER_HPP
#define QALG_GROEBNER_HPP

#include <optional>
#include <set>
#include <tuple>

#include "qalg/polynomial.hpp"

namespace qalg {

template <class F>
struct GroebnerBasis {
    std::vector<Poly<F>> g;       // reduced, monic, sorted by descending lead
    TermOrder ord;
    std::vector<Poly<F>> source;  // the input generators
    int nvars = 0;
    std::optional<int> degree_bound;  // set when the run was degree-truncated

    std::vector<Monomial> lead_monomials() const {
        std::vector<Monomial> l;
        l.reserve(g.size());
        for (auto& p : g) l.push_back(p.lm());
        return l;
    }
    bool all_leads_degree(int d) const {
        for (auto& p : g)
            if (p.lm().deg() != d) return false;
        return true;
    }
};

// full reduction: the remainder has no term divisible by any lead monomial
template <class F>
Poly<F> normal_form(const F& f, const TermOrder& ord, Poly<F> p, const std::vector<Poly<F>>& basis) {
    Poly<F> rem;
    while (!p.is_zero()) {
        bool reduced = false;
        for (auto& b : basis) {
            if (b.is_zero()) continue;
            if (b.lm().divides(p.lm())) {
                auto quot = p.lm().divide(b.lm());
                auto c = f.div(p.lc(), b.lc());
                p = poly_sub(f, ord, p, poly_mul_term(f, b, quot, c));
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.t.push_back(p.t.front());
            p.t.erase(p.t.begin());
        }
    }
    return rem;
}

template <class F>
Poly<F> normal_form(const F& f, const Poly<F>& p, const GroebnerBasis<F>& gb) {
    return normal_form(f, gb.ord, reorder(f, gb.ord, p), gb.g);
}

template <class F>
Poly<F> s_polynomial(const F& f, const TermOrder& ord, const Poly<F>& a, const Poly<F>& b) {
    Monomial l = Monomial::lcm(a.lm(), b.lm());
    Poly<F> sa = poly_mul_term(f, a, l.divide(a.lm()), f.inv(a.lc()));
    Poly<F> sb = poly_mul_term(f, b, l.divide(b.lm()), f.inv(b.lc()));
    return poly_sub(f, ord, sa, sb);
}

/* Buchberger with the normal selection strategy (pairs by ascending lcm
 * degree, then term order on the lcm) and the coprimality criterion.  Inputs
 * must be homogeneous; with a degree bound the result determines the ideal
 * exactly up to that degree. */
template <class F>
GroebnerBasis<F> buchberger(const F& f, const std::vector<Poly<F>>& gens, const TermOrder& ord,
                            std::optional<int> degree_bound = std::nullopt) {
    GroebnerBasis<F> out;
    out.ord = ord;
    out.source = gens;
    out.degree_bound = degree_bound;
    for (auto& p : gens) {
        if (!p.is_zero() && !p.is_homogeneous())
            throw std::invalid_argument("buchberger: generators must be homogeneous");
        if (!p.is_zero()) out.nvars = p.lm().nvars();
    }

    std::vector<Poly<F>> basis;
    for (auto& p : gens) {
        Poly<F> q = reorder(f, ord, p);
        if (!q.is_zero()) basis.push_back(poly_monic(f, q));
    }

    struct PairKey {
        int deg;
        Monomial lcm;
        int i, j;
    };
    auto key_less = [&](const PairKey& a, const PairKey& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (!(a.lcm == b.lcm)) return ord.less(a.lcm, b.lcm);
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    };
    auto cmp = [&](const PairKey& a, const PairKey& b) { return key_less(a, b); };
    std::set<PairKey, decltype(cmp)> queue(cmp);
    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(basis[(size_t)i].lm(), basis[(size_t)j].lm());
            queue.insert({l.deg(), l, i, j});
        }
    };
    for (int j = 1; j < (int)basis.size(); ++j) push_pairs(j);

    while (!queue.empty()) {
        PairKey pk = *queue.begin();
        queue.erase(queue.begin());
        if (degree_bound && pk.deg > *degree_bound) continue;
        const Poly<F>&a = basis[(size_t)pk.i], &b = basis[(size_t)pk.j];
        if (Monomial::gcd(a.lm(), b.lm()).is_one()) continue;  // coprime leads
        Poly<F> s = s_polynomial(f, ord, a, b);
        Poly<F> r = normal_form(f, ord, s, basis);
        if (r.is_zero()) continue;
        basis.push_back(poly_monic(f, r));
        push_pairs((int)basis.size() - 1);
    }

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<Poly<F>> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool keep = true;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (basis[j].lm().divides(basis[i].lm())) {
                if (basis[j].lm() == basis[i].lm() && j > i) continue;  // keep the earlier one
                keep = false;
                break;
            }
        }
        if (keep) minimal.push_back(basis[i]);
    }
    // inter-reduce tails
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Poly<F>> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Poly<F> r = normal_form(f, ord, minimal[i], others);
            if (!poly_eq(f, r, minimal[i])) {
                minimal[i] = poly_monic(f, r);
                changed = true;
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const Poly<F>& a, const Poly<F>& b) { return ord.greater(a.lm(), b.lm()); });
    out.g = std::move(minimal);
    return out;
}

// degree-d monomials not divisible by any lead monomial, descending in the order
template <class F>
std::vector<Monomial> standard_monomials(const F&, const GroebnerBasis<F>& gb, int nvars, int d) {
    std::vector<Monomial> all;
    monomials_of_degree(nvars, d, all);
    std::vector<Monomial> leads = gb.lead_monomials();
    std::vector<Monomial> out;
    for (auto& m : all) {
        bool divisible = false;
        for (auto& l : leads)
            if (l.divides(m)) { divisible = true; break; }
        if (!divisible) out.push_back(m);
    }
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return gb.ord.greater(a, b); });
    return out;
}

// ---------------------------------------------------------------------------
// Monomial ideal combinatorics (on lead terms)

inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.deg() < b.deg() || (a.deg() == b.deg() && a < b); });
    std::vector<Monomial> out;
    for (auto& m : gens) {
        bool dominated = false;
        for (auto& g : out)
            if (g.divides(m)) { dominated = true; break; }
        if (!dominated) out.push_back(m);
    }
    return out;
}

/* Numerator of the Hilbert series of S/I over (1-t)^n for a monomial ideal I,
 * by the standard pivot recursion N(I + (m)) = N(I) - t^{deg m} N(I : m). */
inline std::vector<long long> hilbert_numerator(std::vector<Monomial> gens, int nvars) {
    gens = minimalize_monomials(std::move(gens));
    if (gens.empty()) return {1};
    // pick the last generator as pivot (highest degree after minimalization)
    Monomial m = gens.back();
    gens.pop_back();
    std::vector<long long> without = hilbert_numerator(gens, nvars);
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (auto& g : gens) colon.push_back(g.divide(Monomial::gcd(g, m)));
    std::vector<long long> quot = hilbert_numerator(colon, nvars);
    int d = m.deg();
    std::vector<long long> out(std::max(without.size(), quot.size() + (size_t)d), 0);
    for (size_t i = 0; i < without.size(); ++i) out[i] += without[i];
    for (size_t i = 0; i < quot.size(); ++i) out[i + (size_t)d] -= quot[i];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Krull dimension of S/I for a monomial ideal: the largest coordinate
// subspace meeting the ideal trivially
inline int monomial_quotient_dimension(const std::vector<Monomial>& gens, int nvars) {
    auto minimal = minimalize_monomials(gens);
    int best = 0;
    for (uint32_t mask = 0; mask < (1u << nvars); ++mask) {
        bool ok = true;
        for (auto& g : minimal) {
            bool inside = true;
            for (int v = 0; v < nvars; ++v)
                if (g.e[(size_t)v] > 0 && !((mask >> v) & 1u)) { inside = false; break; }
            if (inside) { ok = false; break; }  // generator lives in the subspace
        }
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

}  // namespace qalg

#endif
