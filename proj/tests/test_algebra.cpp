#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qalg/graded_algebra.hpp"
#include "qalg/ideal_slice.hpp"

using namespace qalg;

namespace {

template <class F>
GradedAlgebra<F> ring(const F& f, std::vector<std::string> vars, std::vector<std::string> rels,
                      int J) {
    QuadraticPresentation<F> p{f, vars, {}, J};
    for (auto& r : rels) p.relations.push_back(parse_polynomial(f, r, vars));
    return build_algebra(p, J);
}

const std::vector<std::string> XYZ = {"x", "y", "z"};

template <class F>
Vec<F> lin(const GradedAlgebra<F>& R, const std::string& text) {
    auto p = parse_polynomial(R.field, text, R.pres.vars);
    Vec<F> v((size_t)R.e(), R.field.zero());
    for (auto& [m, c] : p.t) {
        REQUIRE(m.deg() == 1);
        for (int i = 0; i < R.e(); ++i)
            if (m.e[(size_t)i] == 1) v[(size_t)i] = c;
    }
    return v;
}

}  // namespace

TEST_CASE("build_algebra: Hilbert functions from the paper and trivial cases") {
    GF f2(2), f3(3);
    QQ q;

    // the exceptional ring: h = (1,3,3,1,1,1,1)
    auto nk2 = ring(f2, XYZ, {"x*y", "x^2 + y*z", "z^2"}, 6);
    CHECK(nk2.h == std::vector<int>{1, 3, 3, 1, 1, 1, 1});
    CHECK(nk2.series.numerator == std::vector<long long>{1, 2, 0, -2});
    CHECK(nk2.series.denom_pow == 1);

    // polynomial ring in two variables
    auto poly2 = ring(q, {"x", "y"}, {}, 4);
    CHECK(poly2.h == std::vector<int>{1, 2, 3, 4, 5});

    // the square of the maximal ideal kills degree 2
    auto m2 = ring(f3, {"x", "y"}, {"x^2", "x*y", "y^2"}, 3);
    CHECK(m2.h == std::vector<int>{1, 2, 0, 0});
}

TEST_CASE("build_algebra rejects dependent relation lists") {
    QQ q;
    QuadraticPresentation<QQ> p{q, XYZ, {}, 4};
    p.relations.push_back(parse_polynomial(q, "x^2", XYZ));
    p.relations.push_back(parse_polynomial(q, "x*y", XYZ));
    p.relations.push_back(parse_polynomial(q, "x^2 + x*y", XYZ));
    CHECK_THROWS_WITH_AS(build_algebra(p, 4), doctest::Contains("dependent"),
                         std::invalid_argument);
    CHECK_THROWS(ring(q, XYZ, {"x^2 + y"}, 4));  // inhomogeneous
    CHECK_THROWS(ring(q, XYZ, {"x"}, 4));        // wrong degree
}

TEST_CASE("hilbert series: exact rational forms") {
    QQ q;
    auto hyper = ring(q, {"x"}, {"x^2"}, 4);
    CHECK(hyper.series.numerator == std::vector<long long>{1, 1});
    CHECK(hyper.series.denom_pow == 0);
    CHECK(hyper.series.str() == "(1 + t)");

    // the ring of Proposition 4.2(c): series (1,3,2,1,1,...)
    auto c42 = ring(q, XYZ, {"x^2", "x*y", "y^2 - x*z", "y*z"}, 8);
    CHECK(c42.series.coefficients(8) ==
          std::vector<long long>{1, 3, 2, 1, 1, 1, 1, 1, 1});
    // the closed Hilbert formula for dim R_2 <= 2: 1 + e t + h2 t^2 + h3 t^3/(1-t)
    auto coeffs = c42.series.coefficients(8);
    CHECK(coeffs[1] == 3);
    CHECK(coeffs[2] == 2);
    for (int d = 3; d <= 8; ++d) CHECK(coeffs[(size_t)d] == 1);

    auto exc = ring(q, XYZ, {"y^2 + x*y", "x*y + z^2", "x*z"}, 10);
    CHECK(exc.series.numerator == std::vector<long long>{1, 2, 0, -2});
    CHECK(exc.series.denom_pow == 1);
    CHECK(exc.series.str() == "(1 + 2*t - 2*t^3)/(1-t)");
}

TEST_CASE("is_artinian") {
    GF f3(3), f2(2);
    QQ q;
    CHECK(is_artinian(ring(f3, {"x", "y"}, {"x^2", "x*y", "y^2"}, 3)));
    CHECK_FALSE(is_artinian(ring(q, {"x"}, {}, 3)));
    CHECK_FALSE(is_artinian(ring(f2, XYZ, {"x*y", "x^2 - y*z", "z^2"}, 6)));  // NK2, gamma = 0
}

TEST_CASE("ideal slices: annihilators, products, and the case (8) ring") {
    QQ q;
    // x^2 = xy = 0, xz != 0
    auto R = ring(q, XYZ, {"x^2", "x*y"}, 6);
    auto annx = annihilator_of_linear(R, lin(R, "x"));
    CHECK(annx.dim(1) == 2);

    // m*m = m^2 has dimension h_d in every degree d >= 2
    auto m = maximal_ideal(R);
    auto mm = slice_product(R, m, m);
    auto m2 = mpower(R, 2);
    CHECK(slice_equals(R, mm, m2));
    for (int d = 2; d <= R.J; ++d) CHECK(mm.dim(d) == R.h[(size_t)d]);
    CHECK(mm.dim(0) == 0);
    CHECK(mm.dim(1) == 0);

    // case (8): m^2 = x*m = y*m and x*y = 0 in k[x,y]/(xy, x^2-y^2)
    GF f3(3);
    auto R8 = ring(f3, {"x", "y"}, {"x*y", "x^2 - y^2"}, 6);
    auto m8 = maximal_ideal(R8);
    auto xm = linear_times_slice(R8, lin(R8, "x"), m8);
    auto ym = linear_times_slice(R8, lin(R8, "y"), m8);
    auto msq = slice_power(R8, m8, 2);
    CHECK(slice_equals(R8, xm, msq));
    CHECK(slice_equals(R8, ym, msq));
    auto xy = R8.mult_elem(1, R8.linear_to_basis(lin(R8, "x")), 1, R8.linear_to_basis(lin(R8, "y")));
    for (auto& c : xy) CHECK(f3.is_zero(c));
}

TEST_CASE("ideal slices: colon, contains, closure invariant") {
    QQ q;
    auto R = ring(q, XYZ, {"x^2", "x*y"}, 6);
    auto m = maximal_ideal(R);
    auto msq = mpower(R, 2);
    CHECK(slice_contains(R, m, msq));
    CHECK_FALSE(slice_contains(R, msq, m));
    // (m^2 : m) contains m
    auto colon = slice_colon(R, msq, m);
    CHECK(slice_contains(R, colon, m));
    // closure under R_1: R_1 * slice_d inside slice_{d+1}
    for (int d = 0; d + 1 <= R.J; ++d) {
        for (int i = 0; i < R.e(); ++i) {
            Mat<QQ> moved = mat_mul(q, R.mult1[(size_t)i][(size_t)d], msq.b[(size_t)d]);
            CHECK(span_contains_all(q, msq.b[(size_t)d + 1], moved));
        }
    }
    // truncation overflow is an explicit error
    CHECK_THROWS(element_mult_matrix(R, 2, msq.b[2].col(0), R.J - 1));
}

TEST_CASE("rank_of and null_square_search") {
    QQ q;
    auto R = ring(q, XYZ, {"x^2", "x*y"}, 4);  // x has rank 1 (only xz survives)
    CHECK(R.rank_of(lin(R, "x")) == 1);
    CHECK(R.rank_of(lin(R, "z")) == 3);

    // polynomial rings have no null-square forms
    auto P2 = ring(q, {"x", "y"}, {}, 4);
    auto rp = null_square_search(P2);
    CHECK_FALSE(rp.form.has_value());

    // over F_2, (x^2, x*y, y*z) has the null-square form x, found by enumeration
    GF f2(2);
    auto R2 = ring(f2, XYZ, {"x^2", "x*y", "y*z"}, 4);
    auto r2 = null_square_search(R2);
    REQUIRE(r2.form.has_value());
    CHECK(is_null_square(R2, *r2.form));
    REQUIRE(!r2.ladder.empty());
    CHECK(r2.ladder[0].find("enumeration") != std::string::npos);

    // rational search finds small-height solutions
    auto RQ = ring(q, XYZ, {"x^2", "x*y"}, 4);
    auto rq = null_square_search(RQ);
    REQUIRE(rq.form.has_value());
    CHECK(is_null_square(RQ, *rq.form));
}

TEST_CASE("socle and trivial fiber reduction") {
    QQ q;
    // free socle variable u over the polynomial ring k[x]
    auto R = ring(q, {"x", "u"}, {"x*u", "u^2"}, 5);
    auto soc = socle_degree1(R);
    CHECK(soc.cols == 1);
    auto red = trivial_fiber_reduce(R);
    CHECK(red.s == 1);
    CHECK(red.reduced.e() == 1);
    CHECK_FALSE(is_artinian(red.reduced));
    // H_R(t) = H_R'(t) + s*t
    auto hr = R.series.coefficients(5);
    auto hr2 = red.reduced.series.coefficients(5);
    for (int d = 0; d <= 5; ++d)
        CHECK(hr[(size_t)d] == hr2[(size_t)d] + (d == 1 ? red.s : 0));

    // the square-zero ring collapses to the base field
    GF f5(5);
    auto Rm2 = ring(f5, {"x", "y"}, {"x^2", "x*y", "y^2"}, 4);
    auto redm2 = trivial_fiber_reduce(Rm2);
    CHECK(redm2.s == 2);
    CHECK(redm2.reduced.e() == 0);

    // exceptional rings have no degree-1 socle
    GF f2(2);
    auto nk2 = ring(f2, XYZ, {"x*y", "x^2 + y*z", "z^2"}, 6);
    CHECK(socle_degree1(nk2).cols == 0);
    CHECK(trivial_fiber_reduce(nk2).s == 0);

    // reduction iterates: a socle variable over k[x]/(x^2) cascades to k
    auto cascade = ring(q, {"x", "u"}, {"x^2", "x*u", "u^2"}, 4);
    auto redc = trivial_fiber_reduce(cascade);
    CHECK(redc.s == 2);
    CHECK(redc.reduced.e() == 0);
}

TEST_CASE("apply_change: examples and Hilbert invariance") {
    QQ q;
    auto R = ring(q, {"x", "y"}, {"x^2"}, 5);
    // swap x and y
    Mat<QQ> swap(2, 2, q.zero());
    swap.at(1, 0) = q.one();
    swap.at(0, 1) = q.one();
    auto p = apply_change(R, swap);
    REQUIRE(p.relations.size() == 1);
    // the relation becomes y^2 in the new coordinates (new var 1 is old x)
    auto expect = parse_polynomial(q, "y2^2", p.vars);
    CHECK(poly_eq(q, poly_monic(q, p.relations[0]), poly_monic(q, expect)));

    // identity change keeps the presentation up to normalization
    auto pid = apply_change(R, Mat<QQ>::identity(q, 2));
    CHECK(poly_eq(q, poly_monic(q, pid.relations[0]),
                  parse_polynomial(q, "y1^2", pid.vars)));

    CHECK_THROWS(apply_change(R, Mat<QQ>(2, 2, q.zero())));  // singular

    // random invertible changes preserve the Hilbert function
    GF f5(5);
    auto R5 = ring(f5, XYZ, {"x*y", "x^2 - y*z", "z^2"}, 6);
    std::mt19937_64 rng(23);
    int done = 0;
    while (done < 5) {
        Mat<GF> M(3, 3, 0);
        for (auto& v : M.a) v = f5.random(rng);
        Mat<GF> Mc = M;
        if (rank(f5, Mc) < 3) continue;
        auto changed = apply_change(R5, M);
        auto R5c = build_algebra(changed, 6);
        CHECK(R5c.h == R5.h);
        ++done;
    }

    // the substitution z <- z + a*u pattern: unipotent change on a sample ring
    GF f2(2);
    auto R4 = ring(f2, {"x", "y", "z", "u"}, {"x^2", "x*y", "y^2 - x*z", "y*z"}, 6);
    Mat<GF> U = Mat<GF>::identity(f2, 4);
    U.at(3, 2) = 1;  // new z includes u
    auto R4c = build_algebra(apply_change(R4, U), 6);
    CHECK(R4c.h == R4.h);
}

TEST_CASE("associativity of multiplication on random homogeneous triples") {
    GF f2(2);
    auto R = ring(f2, XYZ, {"x*y", "x^2 + y*z", "z^2"}, 8);
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        int d1 = 1 + int(rng() % 2), d2 = 1 + int(rng() % 2), d3 = 1 + int(rng() % 2);
        if (d1 + d2 + d3 > R.J) continue;
        auto rnd = [&](int d) {
            Vec<GF> v((size_t)R.h[(size_t)d]);
            for (auto& c : v) c = f2.random(rng);
            return v;
        };
        auto a = rnd(d1), b = rnd(d2), c = rnd(d3);
        auto ab_c = R.mult_elem(d1 + d2, R.mult_elem(d1, a, d2, b), d3, c);
        auto a_bc = R.mult_elem(d1, a, d2 + d3, R.mult_elem(d2, b, d3, c));
        CHECK(ab_c == a_bc);
    }
}

TEST_CASE("rank equal to h2 forces x*m = m^2") {
    GF f3(3);
    auto R8 = ring(f3, {"x", "y"}, {"x*y", "x^2 - y^2"}, 6);
    auto x = lin(R8, "x");
    REQUIRE(R8.rank_of(x) == R8.h[2]);
    auto xm = linear_times_slice(R8, x, maximal_ideal(R8));
    CHECK(slice_equals(R8, xm, mpower(R8, 2)));
}
