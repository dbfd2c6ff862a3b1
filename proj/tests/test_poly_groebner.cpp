#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qalg/groebner.hpp"
#include "qalg/linalg.hpp"

using namespace qalg;

namespace {

/* Independent oracle for quotient dimensions: dim (Q/I)_d = dim Q_d minus the
 * rank of the span of all m*f with f a generator and m a monomial of degree
 * d - deg f.  Uses only polynomial multiplication and rank, no Groebner
 * machinery. */
template <class F>
int quotient_dim_oracle(const F& f, const std::vector<Poly<F>>& gens, int nvars, int d) {
    std::vector<Monomial> qd;
    monomials_of_degree(nvars, d, qd);
    std::map<Monomial, int> idx;
    for (size_t i = 0; i < qd.size(); ++i) idx[qd[i]] = (int)i;
    std::vector<Vec<F>> cols;
    for (auto& g : gens) {
        if (g.is_zero() || g.degree() > d) continue;
        std::vector<Monomial> ms;
        monomials_of_degree(nvars, d - g.degree(), ms);
        for (auto& m : ms) {
            Poly<F> prod = poly_mul_term(f, g, m, f.one());
            Vec<F> v(qd.size(), f.zero());
            for (auto& [mono, c] : prod.t) v[(size_t)idx.at(mono)] = c;
            cols.push_back(std::move(v));
        }
    }
    Mat<F> span((int)qd.size(), (int)cols.size(), f.zero());
    for (size_t j = 0; j < cols.size(); ++j) span.set_col((int)j, cols[j]);
    return (int)qd.size() - rank(f, span);
}

template <class F>
Poly<F> P(const F& f, const std::string& text, const std::vector<std::string>& vars) {
    return parse_polynomial(f, text, vars);
}

const std::vector<std::string> XYZ = {"x", "y", "z"};

}  // namespace

TEST_CASE("parser: char-2 sign collapse and basic forms") {
    GF f2(2);
    auto a = P(f2, "x^2 - y*z", XYZ);
    auto b = P(f2, "x^2 + y*z", XYZ);
    CHECK(poly_eq(f2, a, b));
    CHECK(a.nterms() == 2);
    CHECK(a.degree() == 2);

    auto z = P(f2, "0", XYZ);
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);  // the -infinity sentinel

    QQ q;
    auto c = P(q, "y^2 + x*y", XYZ);
    CHECK(c.nterms() == 2);
    CHECK(c.degree() == 2);
    CHECK(c.is_homogeneous());

    auto frac = P(q, "1/2*x^2 - 3*y*z", XYZ);
    CHECK(frac.nterms() == 2);
}

TEST_CASE("parser: error paths") {
    GF f2(2);
    QQ q;
    CHECK_THROWS(P(q, "x + w", XYZ));        // unknown variable
    CHECK_THROWS(P(q, "x ++ y", XYZ));       // malformed
    CHECK_THROWS(P(q, "", XYZ));             // empty
    CHECK_THROWS(P(f2, "1/2*x^2", XYZ));     // division by p in F_p
    CHECK_NOTHROW(P(f2, "1/3*x^2", XYZ));    // 3 invertible mod 2
}

TEST_CASE("monomial enumeration counts") {
    std::vector<Monomial> out;
    monomials_of_degree(3, 2, out);
    CHECK(out.size() == 6);
    monomials_of_degree(2, 5, out);
    CHECK(out.size() == 6);
    monomials_of_degree(4, 0, out);
    CHECK(out.size() == 1);
    // deterministic order, no duplicates
    monomials_of_degree(3, 4, out);
    std::set<Monomial> s(out.begin(), out.end());
    CHECK(s.size() == out.size());
}

TEST_CASE("buchberger: a monomial ideal is its own reduced basis") {
    GF f2(2);
    std::vector<std::string> xy = {"x", "y"};
    auto gb = buchberger(f2, {P(f2, "x^2", xy), P(f2, "x*y", xy)}, TermOrder::grevlex(2));
    CHECK(gb.g.size() == 2);
    CHECK(gb.all_leads_degree(2));
    for (auto& g : gb.g) CHECK(g.nterms() == 1);
}

TEST_CASE("buchberger: every S-polynomial reduces to zero") {
    QQ q;
    auto run = [&](std::vector<Poly<QQ>> gens, TermOrder ord) {
        auto gb = buchberger(q, gens, ord);
        for (size_t i = 0; i < gb.g.size(); ++i)
            for (size_t j = i + 1; j < gb.g.size(); ++j) {
                auto s = s_polynomial(q, ord, gb.g[i], gb.g[j]);
                CHECK(normal_form(q, ord, s, gb.g).is_zero());
            }
        return gb;
    };
    // the D'Ali-style ideal (y^2, x*y + z^2, x*z)
    auto gb = run({P(q, "y^2", XYZ), P(q, "x*y + z^2", XYZ), P(q, "x*z", XYZ)},
                  TermOrder::grevlex(3));
    // derived check: under grevlex this ideal is not generated by quadric leads
    bool all_deg2 = gb.all_leads_degree(2);
    CHECK_FALSE(all_deg2);  // z^4 enters the basis (computed, then frozen here)

    run({P(q, "x^2 - y*z", XYZ), P(q, "x*y", XYZ)},
        TermOrder::lex(3).with_perm({1, 0, 2}));  // lex with y > x > z
}

TEST_CASE("buchberger against the span oracle, several ideals and orders") {
    QQ q;
    GF f2(2), f5(5);
    auto check_ring = [&](auto field, std::vector<std::string> vars,
                          std::vector<std::string> rels) {
        using FF = decltype(field);
        std::vector<Poly<FF>> gens;
        for (auto& r : rels) gens.push_back(parse_polynomial(field, r, vars));
        std::vector<TermOrder> orders = {TermOrder::grevlex((int)vars.size()),
                                         TermOrder::lex((int)vars.size())};
        if (vars.size() == 3) {
            orders.push_back(TermOrder::grevlex(3).with_perm({2, 1, 0}));
            orders.push_back(TermOrder::lex(3).with_perm({1, 2, 0}));
            orders.push_back(TermOrder::weighted_lex({3, 1, 2}));
        }
        std::vector<int> dims;
        for (size_t oi = 0; oi < orders.size(); ++oi) {
            auto gb = buchberger(field, gens, orders[oi]);
            for (int d = 0; d <= 6; ++d) {
                int nsm = (int)standard_monomials(field, gb, (int)vars.size(), d).size();
                int oracle = quotient_dim_oracle(field, gens, (int)vars.size(), d);
                CHECK(nsm == oracle);
                if (oi == 0) dims.push_back(nsm);
            }
        }
    };
    check_ring(q, XYZ, {"y^2", "x*y + z^2", "x*z"});
    check_ring(q, XYZ, {"y^2 + x*y", "x*y + z^2", "x*z"});
    check_ring(f2, XYZ, {"x*y", "x^2 + y*z", "z^2"});
    check_ring(f5, {"x", "y", "z", "w"}, {"x^2", "x*y", "y^2 - x*z", "y*z"});
    check_ring(q, {"x", "y"}, {"x^2", "x*y", "y^2"});
}

TEST_CASE("normal form: examples and properties") {
    QQ q;
    auto gbx2 = buchberger(q, {P(q, "x^2", XYZ)}, TermOrder::grevlex(3));
    CHECK(normal_form(q, P(q, "x^2", XYZ), gbx2).is_zero());

    auto gbxy = buchberger(q, {P(q, "x*y", XYZ)}, TermOrder::grevlex(3));
    auto nf = normal_form(q, P(q, "x^2 + x*y", XYZ), gbxy);
    CHECK(poly_eq(q, nf, P(q, "x^2", XYZ)));

    // representative of y*z^2 modulo (y^2, x*y + z^2, x*z); cross-checked by
    // linear algebra: the residue must differ from the input by an element of
    // the degree-3 span of the ideal
    std::vector<Poly<QQ>> gens = {P(q, "y^2", XYZ), P(q, "x*y + z^2", XYZ), P(q, "x*z", XYZ)};
    auto gb = buchberger(q, gens, TermOrder::grevlex(3));
    auto p = P(q, "y*z^2", XYZ);
    auto r = normal_form(q, p, gb);
    // difference lies in I_3
    auto diff = poly_sub(q, gb.ord, p, r);
    std::vector<Monomial> q3;
    monomials_of_degree(3, 3, q3);
    std::map<Monomial, int> idx;
    for (size_t i = 0; i < q3.size(); ++i) idx[q3[i]] = (int)i;
    std::vector<Vec<QQ>> cols;
    for (auto& g : gens) {
        std::vector<Monomial> ms;
        monomials_of_degree(3, 1, ms);
        for (auto& m : ms) {
            auto prod = poly_mul_term(q, g, m, q.one());
            Vec<QQ> v(q3.size(), q.zero());
            for (auto& [mono, c] : prod.t) v[(size_t)idx.at(mono)] = c;
            cols.push_back(v);
        }
    }
    Mat<QQ> span((int)q3.size(), (int)cols.size());
    for (size_t j = 0; j < cols.size(); ++j) span.set_col((int)j, cols[j]);
    Vec<QQ> dv(q3.size(), q.zero());
    for (auto& [mono, c] : diff.t) dv[(size_t)idx.at(mono)] = c;
    CHECK(span_contains(q, span, dv));

    // idempotence and multiplicativity up to normal form
    std::mt19937_64 rng(5);
    auto random_poly = [&](int deg) {
        Poly<QQ> acc;
        std::vector<Monomial> ms;
        monomials_of_degree(3, deg, ms);
        for (auto& m : ms)
            if (rng() % 2) acc = poly_add(q, gb.ord, acc, poly_term(q, m, q.random(rng)));
        return acc;
    };
    for (int trial = 0; trial < 25; ++trial) {
        auto a = random_poly(2), b = random_poly(1 + int(rng() % 2));
        auto nf1 = normal_form(q, poly_mul(q, gb.ord, a, b), gb);
        auto nf2 = normal_form(
            q, poly_mul(q, gb.ord, normal_form(q, a, gb), normal_form(q, b, gb)), gb);
        CHECK(poly_eq(q, nf1, nf2));
        auto once = normal_form(q, a, gb);
        CHECK(poly_eq(q, once, normal_form(q, once, gb)));
    }
}

TEST_CASE("standard monomials: counts and order independence") {
    GF f3(3);
    std::vector<std::string> xy = {"x", "y"};
    auto sq = buchberger(f3, {P(f3, "x^2", xy), P(f3, "x*y", xy), P(f3, "y^2", xy)},
                         TermOrder::grevlex(2));
    CHECK(standard_monomials(f3, sq, 2, 2).empty());

    QQ q;
    auto empty = buchberger(q, std::vector<Poly<QQ>>{}, TermOrder::grevlex(3));
    CHECK(standard_monomials(q, empty, 3, 2).size() == 6);

    GF f2(2);
    auto nk2 = buchberger(f2, {P(f2, "x*y", XYZ), P(f2, "x^2 - y*z", XYZ), P(f2, "z^2", XYZ)},
                          TermOrder::grevlex(3));
    CHECK(standard_monomials(f2, nk2, 3, 2).size() == 3);
}

TEST_CASE("degree-bounded buchberger is exact below the bound") {
    QQ q;
    std::vector<Poly<QQ>> gens = {P(q, "y^2", XYZ), P(q, "x*y + z^2", XYZ), P(q, "x*z", XYZ)};
    auto full = buchberger(q, gens, TermOrder::grevlex(3));
    auto bounded = buchberger(q, gens, TermOrder::grevlex(3), 3);
    for (int d = 0; d <= 3; ++d)
        CHECK(standard_monomials(q, bounded, 3, d).size() ==
              standard_monomials(q, full, 3, d).size());
}

TEST_CASE("monomial ideal hilbert numerator and Krull dimension") {
    // polynomial ring
    CHECK(hilbert_numerator({}, 3) == std::vector<long long>{1});
    CHECK(monomial_quotient_dimension({}, 3) == 3);
    // one quadric: numerator 1 - t^2
    Monomial x2(3);
    x2.e[0] = 2;
    CHECK(hilbert_numerator({x2}, 3) == std::vector<long long>{1, 0, -1});
    CHECK(monomial_quotient_dimension({x2}, 3) == 2);
    // full square of the maximal ideal in 2 variables: dim 0
    std::vector<Monomial> m2;
    monomials_of_degree(2, 2, m2);
    CHECK(monomial_quotient_dimension(m2, 2) == 0);
}
