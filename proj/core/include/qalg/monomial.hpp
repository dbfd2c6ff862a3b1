#ifndef QALG_MONOMIAL_HPP
#define QALG_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qalg {

struct Monomial {
    std::vector<uint16_t> e;  // exponent per variable

    Monomial() = default;
    explicit Monomial(int nvars) : e((size_t)nvars, 0) {}

    int nvars() const { return (int)e.size(); }
    int deg() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](uint16_t x) { return x == 0; });
    }

    bool operator==(const Monomial&) const = default;
    // plain lexicographic, used only as a tiebreaker-free canonical container order
    bool operator<(const Monomial& o) const { return e < o.e; }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] = uint16_t(r.e[i] + o.e[i]);
        return r;
    }
    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial divide(const Monomial& o) const {  // this / o, assumes o | this
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] = uint16_t(r.e[i] - o.e[i]);
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }
    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
        return r;
    }
    static Monomial var(int nvars, int i, int exp = 1) {
        Monomial m(nvars);
        m.e[i] = (uint16_t)exp;
        return m;
    }

    std::string str(const std::vector<std::string>& names) const {
        std::string s;
        for (size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!s.empty()) s += "*";
            s += names[i];
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s.empty() ? "1" : s;
    }
};

namespace detail {
inline void gen_monomials(int pos, int remaining, Monomial& m, std::vector<Monomial>& out) {
    int n = m.nvars();
    if (pos == n - 1) {
        m.e[(size_t)pos] = (uint16_t)remaining;
        out.push_back(m);
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        m.e[(size_t)pos] = (uint16_t)k;
        gen_monomials(pos + 1, remaining - k, m, out);
    }
}
}  // namespace detail

// all monomials of the given total degree, in a fixed deterministic order
// (exponent of the first variable descending, then recursively)
inline void monomials_of_degree(int nvars, int d, std::vector<Monomial>& out) {
    out.clear();
    if (nvars == 0) {
        if (d == 0) out.push_back(Monomial(0));
        return;
    }
    Monomial m(nvars);
    detail::gen_monomials(0, d, m, out);
}

struct TermOrder {
    enum class Kind { GrevLex, Lex, WeightedLex };
    Kind kind = Kind::GrevLex;
    std::vector<int> perm;      // variable priority, most significant first
    std::vector<int> weights;   // WeightedLex only; weight of each variable

    static TermOrder grevlex(int nvars) {
        TermOrder o;
        o.kind = Kind::GrevLex;
        o.perm.resize((size_t)nvars);
        std::iota(o.perm.begin(), o.perm.end(), 0);
        return o;
    }
    static TermOrder lex(int nvars) {
        TermOrder o = grevlex(nvars);
        o.kind = Kind::Lex;
        return o;
    }
    static TermOrder weighted_lex(std::vector<int> w) {
        TermOrder o = lex((int)w.size());
        o.kind = Kind::WeightedLex;
        o.weights = std::move(w);
        return o;
    }
    TermOrder with_perm(std::vector<int> p) const {
        TermOrder o(*this);
        o.perm = std::move(p);
        return o;
    }

    // strict "a comes before b" in descending listings, i.e. a > b
    bool greater(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case Kind::GrevLex: {
                int da = a.deg(), db = b.deg();
                if (da != db) return da > db;
                // reverse lexicographic: scan least significant variable first;
                // smaller exponent there means the monomial is larger
                for (int i = (int)perm.size() - 1; i >= 0; --i) {
                    int v = perm[(size_t)i];
                    if (a.e[v] != b.e[v]) return a.e[v] < b.e[v];
                }
                return false;
            }
            case Kind::Lex: {
                for (int v : perm)
                    if (a.e[v] != b.e[v]) return a.e[v] > b.e[v];
                return false;
            }
            case Kind::WeightedLex: {
                long wa = 0, wb = 0;
                for (size_t i = 0; i < weights.size(); ++i) {
                    wa += (long)weights[i] * a.e[i];
                    wb += (long)weights[i] * b.e[i];
                }
                if (wa != wb) return wa > wb;
                for (int v : perm)
                    if (a.e[v] != b.e[v]) return a.e[v] > b.e[v];
                return false;
            }
        }
        return false;
    }
    bool less(const Monomial& a, const Monomial& b) const { return greater(b, a); }

    std::string str() const {
        std::string s = kind == Kind::GrevLex ? "grevlex" : kind == Kind::Lex ? "lex" : "weighted-lex";
        bool idperm = true;
        for (size_t i = 0; i < perm.size(); ++i)
            if (perm[i] != (int)i) idperm = false;
        if (!idperm) {
            s += "[";
            for (size_t i = 0; i < perm.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(perm[i]);
            }
            s += "]";
        }
        return s;
    }
};

}  // namespace qalg

#endif
