#ifndef QALG_POLYNOMIAL_HPP
#define QALG_POLYNOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "qalg/fields.hpp"
#include "qalg/monomial.hpp"

namespace qalg {

/* Terms are kept sorted descending under the term order in effect; no zero
 * coefficients are stored.  Every routine that combines polynomials takes the
 * order explicitly. */
template <class F>
struct Poly {
    using Term = std::pair<Monomial, typename F::Elem>;
    std::vector<Term> t;

    bool is_zero() const { return t.empty(); }
    int nterms() const { return (int)t.size(); }
    const Monomial& lm() const { return t.front().first; }          // leading monomial
    const typename F::Elem& lc() const { return t.front().second; } // leading coefficient

    // -infinity is represented as -1 on the zero polynomial
    int degree() const { return t.empty() ? -1 : t.front().first.deg(); }

    bool is_homogeneous() const {
        if (t.empty()) return true;
        int d = t.front().first.deg();
        for (auto& [m, c] : t)
            if (m.deg() != d) return false;
        return true;
    }
};

template <class F>
void normalize_terms(const F& f, const TermOrder& ord, Poly<F>& p) {
    std::sort(p.t.begin(), p.t.end(),
              [&](const auto& a, const auto& b) { return ord.greater(a.first, b.first); });
    std::vector<typename Poly<F>::Term> out;
    for (auto& [m, c] : p.t) {
        if (!out.empty() && out.back().first == m)
            out.back().second = f.add(out.back().second, c);
        else
            out.emplace_back(m, c);
        if (!out.empty() && f.is_zero(out.back().second)) out.pop_back();
    }
    p.t = std::move(out);
}

template <class F>
Poly<F> poly_zero() { return {}; }

template <class F>
Poly<F> poly_term(const F& f, const Monomial& m, typename F::Elem c) {
    Poly<F> p;
    if (!f.is_zero(c)) p.t.emplace_back(m, c);
    return p;
}

template <class F>
Poly<F> poly_add(const F& f, const TermOrder& ord, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r;
    size_t i = 0, j = 0;
    while (i < a.t.size() || j < b.t.size()) {
        if (j == b.t.size() || (i < a.t.size() && ord.greater(a.t[i].first, b.t[j].first))) {
            r.t.push_back(a.t[i++]);
        } else if (i == a.t.size() || ord.greater(b.t[j].first, a.t[i].first)) {
            r.t.push_back(b.t[j++]);
        } else {
            auto c = f.add(a.t[i].second, b.t[j].second);
            if (!f.is_zero(c)) r.t.emplace_back(a.t[i].first, c);
            ++i; ++j;
        }
    }
    return r;
}

template <class F>
Poly<F> poly_scale(const F& f, const Poly<F>& a, const typename F::Elem& c) {
    Poly<F> r;
    if (f.is_zero(c)) return r;
    r.t.reserve(a.t.size());
    for (auto& [m, x] : a.t) r.t.emplace_back(m, f.mul(x, c));
    return r;
}

template <class F>
Poly<F> poly_neg(const F& f, const Poly<F>& a) {
    Poly<F> r;
    r.t.reserve(a.t.size());
    for (auto& [m, x] : a.t) r.t.emplace_back(m, f.neg(x));
    return r;
}

template <class F>
Poly<F> poly_sub(const F& f, const TermOrder& ord, const Poly<F>& a, const Poly<F>& b) {
    return poly_add(f, ord, a, poly_neg(f, b));
}

// multiply by a single term; order of terms is preserved
template <class F>
Poly<F> poly_mul_term(const F& f, const Poly<F>& a, const Monomial& m, const typename F::Elem& c) {
    Poly<F> r;
    if (f.is_zero(c)) return r;
    r.t.reserve(a.t.size());
    for (auto& [ma, x] : a.t) r.t.emplace_back(ma * m, f.mul(x, c));
    return r;
}

template <class F>
Poly<F> poly_mul(const F& f, const TermOrder& ord, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r;
    for (auto& [m, c] : b.t) r = poly_add(f, ord, r, poly_mul_term(f, a, m, c));
    return r;
}

template <class F>
Poly<F> poly_monic(const F& f, const Poly<F>& a) {
    if (a.is_zero()) return a;
    return poly_scale(f, a, f.inv(a.lc()));
}

template <class F>
bool poly_eq(const F& f, const Poly<F>& a, const Poly<F>& b) {
    if (a.t.size() != b.t.size()) return false;
    for (size_t i = 0; i < a.t.size(); ++i)
        if (!(a.t[i].first == b.t[i].first) || !f.eq(a.t[i].second, b.t[i].second)) return false;
    return true;
}

// re-sorts an existing polynomial under another order
template <class F>
Poly<F> reorder(const F& f, const TermOrder& ord, Poly<F> p) {
    normalize_terms(f, ord, p);
    return p;
}

template <class F>
std::string poly_str(const F& f, const Poly<F>& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::string s;
    for (auto& [m, c] : p.t) {
        std::string cs = f.str(c);
        if (!s.empty()) s += " + ";
        if (m.is_one()) s += cs;
        else if (cs == "1") s += m.str(names);
        else s += cs + "*" + m.str(names);
    }
    return s;
}

// substitute each variable by a linear form: columns of `sub` are the images
// of the variables expressed in the new variables (nvars_new rows)
template <class F>
Poly<F> substitute_linear(const F& f, const TermOrder& ord, const Poly<F>& p,
                          const std::vector<std::vector<typename F::Elem>>& images) {
    int n_new = images.empty() ? 0 : (int)images[0].size();
    Poly<F> acc;
    for (auto& [m, c] : p.t) {
        Poly<F> termval = poly_term(f, Monomial(n_new), c);
        for (int v = 0; v < m.nvars(); ++v) {
            for (int rep = 0; rep < m.e[(size_t)v]; ++rep) {
                Poly<F> lin;
                for (int w = 0; w < n_new; ++w)
                    if (!f.is_zero(images[(size_t)v][(size_t)w]))
                        lin.t.emplace_back(Monomial::var(n_new, w), images[(size_t)v][(size_t)w]);
                normalize_terms(f, ord, lin);
                termval = poly_mul(f, ord, termval, lin);
            }
        }
        acc = poly_add(f, ord, acc, termval);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Parser for the presentation text grammar:
//   poly  := [-] term { (+|-) term }
//   term  := coeff [* factors] | factors
//   factors := var [^ exp] { * var [^ exp] }
//   coeff := int | int/int
// Variables must be declared; signs fold into coefficients.

template <class F>
Poly<F> parse_polynomial(const F& f, const std::string& text, const std::vector<std::string>& vars) {
    int n = (int)vars.size();
    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i) index[vars[(size_t)i]] = i;

    size_t pos = 0;
    auto skip = [&] { while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos; };
    auto peek = [&]() -> char { return pos < text.size() ? text[pos] : '\0'; };

    Poly<F> result;
    TermOrder canon = TermOrder::grevlex(n);

    skip();
    if (pos == text.size()) throw std::invalid_argument("parse_polynomial: empty input");
    bool first = true;
    while (true) {
        skip();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
        } else if (!first) {
            if (pos >= text.size()) break;
            throw std::invalid_argument("parse_polynomial: expected '+' or '-' at position " +
                                        std::to_string(pos));
        }
        first = false;
        skip();
        // coefficient
        typename F::Elem coeff = f.one();
        bool saw_any = false;
        if (std::isdigit((unsigned char)peek())) {
            size_t start = pos;
            while (std::isdigit((unsigned char)peek())) ++pos;
            long long num = std::stoll(text.substr(start, pos - start));
            long long den = 1;
            skip();
            if (peek() == '/') {
                ++pos;
                skip();
                size_t dstart = pos;
                while (std::isdigit((unsigned char)peek())) ++pos;
                if (dstart == pos) throw std::invalid_argument("parse_polynomial: malformed fraction");
                den = std::stoll(text.substr(dstart, pos - dstart));
            }
            coeff = f.from_fraction(num, den);
            saw_any = true;
            skip();
            if (peek() == '*') { ++pos; skip(); }
        }
        // variable factors
        Monomial mono(n);
        while (std::isalpha((unsigned char)peek()) || peek() == '_') {
            size_t start = pos;
            while (std::isalnum((unsigned char)peek()) || peek() == '_') ++pos;
            std::string name = text.substr(start, pos - start);
            auto it = index.find(name);
            if (it == index.end())
                throw std::invalid_argument("parse_polynomial: unknown variable '" + name + "'");
            int exp = 1;
            skip();
            if (peek() == '^') {
                ++pos;
                skip();
                size_t estart = pos;
                while (std::isdigit((unsigned char)peek())) ++pos;
                if (estart == pos) throw std::invalid_argument("parse_polynomial: malformed exponent");
                exp = std::stoi(text.substr(estart, pos - estart));
            }
            mono.e[(size_t)it->second] = uint16_t(mono.e[(size_t)it->second] + exp);
            saw_any = true;
            skip();
            if (peek() == '*') { ++pos; skip(); continue; }
            break;
        }
        if (!saw_any) throw std::invalid_argument("parse_polynomial: expected a term at position " +
                                                  std::to_string(pos));
        if (sign < 0) coeff = f.neg(coeff);
        result = poly_add(f, canon, result, poly_term(f, mono, coeff));
        skip();
        if (pos >= text.size()) break;
        if (peek() != '+' && peek() != '-')
            throw std::invalid_argument("parse_polynomial: unexpected character '" +
                                        std::string(1, peek()) + "'");
    }
    return result;
}

}  // namespace qalg

#endif
