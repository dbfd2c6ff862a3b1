// Acceptance suite: checks the eight shipped criteria at the stated bounds
// (N = 8, J = 10) and prints one pass/fail line per criterion.
#include <iostream>

#include "qalg/pipeline.hpp"

using namespace qalg;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << name;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!pass) ++failures;
}

template <class F>
GradedAlgebra<F> ring(const F& f, std::vector<std::string> vars, std::vector<std::string> rels,
                      int J) {
    QuadraticPresentation<F> p{f, vars, {}, J};
    for (auto& r : rels) p.relations.push_back(parse_polynomial(f, r, vars));
    return build_algebra(p, J);
}

bool is_tfe_name(const std::string& n) { return n.size() > 4 && n.substr(n.size() - 4) == "-tfe"; }

}  // namespace

int main() {
    ClassifyConfig cfg;  // the stated bounds: N = 8, J = 10
    std::cout << "acceptance suite, bounds N=" << cfg.N << " J=" << cfg.J << std::endl;

    auto entries = shipped_corpus();
    std::map<std::string, CorpusEntry> by_name;
    for (auto& e : entries) by_name[e.name] = e;
    std::cout << "classifying the shipped corpus (" << entries.size() << " entries)..."
              << std::endl;
    auto rows = run_corpus(cfg);
    std::map<std::string, const CorpusRow*> row_by_name;
    int corpus_passed = 0;
    for (auto& r : rows) {
        row_by_name[r.name] = &r;
        if (r.pass) ++corpus_passed;
    }
    std::cout << "corpus: " << corpus_passed << "/" << rows.size() << " entries match expectations"
              << std::endl;

    // ----- criterion 1: exceptional Hilbert series, exact ------------------
    {
        int checked = 0;
        bool ok = corpus_passed == (int)rows.size();
        std::string detail;
        std::vector<long long> expect_h = {1, 3, 3, 1, 1, 1, 1, 1, 1, 1, 1};
        for (auto& r : rows) {
            auto& exp = by_name[r.name].expected;
            if (!exp.exceptional || !*exp.exceptional || is_tfe_name(r.name)) continue;
            ++checked;
            if (r.report.hilbert_coeffs != expect_h || !r.report.exceptional) {
                ok = false;
                detail = "mismatch at " + r.name;
            }
            if (r.report.hilbert_series != "(1 + 2*t - 2*t^3)/(1-t)") {
                ok = false;
                detail = "series form mismatch at " + r.name;
            }
        }
        if (checked < 6) {
            ok = false;
            detail = "fewer than 6 exceptional rings in the corpus";
        }
        report(1, "exceptional Hilbert series (1,3,3,1,1,...) and (1+2t-2t^3)/(1-t)", ok,
               std::to_string(checked) + " exceptional rings checked exactly");
    }

    // ----- criterion 2: non-Koszulness witnessed by degree 7 ---------------
    {
        int checked = 0;
        bool ok = true;
        std::string detail;
        for (auto& r : rows) {
            auto& exp = by_name[r.name].expected;
            if (!exp.exceptional || !*exp.exceptional) continue;
            ++checked;
            if (!r.report.koszul_known || r.report.koszul || r.report.off_diag_i < 0 ||
                r.report.off_diag_i > 7) {
                ok = false;
                detail = "no off-diagonal Betti entry by degree 7 at " + r.name;
            }
        }
        report(2, "non-Koszulness of exceptional rings by homological degree 7", ok,
               std::to_string(checked) + " rings, first off-diagonal entries within i <= 7");
    }

    // ----- criterion 3: Artinian bounds h4 = 0, h3 <= 1 --------------------
    {
        bool ok = true;
        int checked = 0;
        std::string detail;
        for (auto& r : rows) {
            if (!r.report.artinian) continue;
            ++checked;
            long long h3 = r.report.hilbert_coeffs[3], h4 = r.report.hilbert_coeffs[4];
            bool ci3 = r.report.matched_case == "CI(e=3)";
            if (h4 != 0 || h3 > 1 || (h3 == 1) != ci3) {
                ok = false;
                detail = "bound violated at " + r.name;
            }
        }
        report(3, "Artinian corpus rings have h4 = 0 and h3 <= 1, h3 = 1 exactly for e=3 CIs", ok,
               std::to_string(checked) + " Artinian entries checked");
    }

    // ----- criterion 4: witness codimensions per branch --------------------
    {
        bool ok = true;
        std::string detail;
        int nart = 0, ndim2 = 0, ns5 = 0;
        for (auto& r : rows) {
            const auto& c = r.report.certificate;
            if (r.report.branch == "artinian") {
                ++nart;
                if (!c.found || !c.all_positive || c.codim > 3) {
                    ok = false;
                    detail = "artinian bound failed at " + r.name;
                }
            } else if (r.report.branch == "dim2" || r.report.branch == "polynomial") {
                ++ndim2;
                if (!c.found || !c.all_positive || c.codim > 1) {
                    ok = false;
                    detail = "dim2 bound failed at " + r.name;
                }
            } else if (r.report.branch == "dim3-nonartinian-e>=4") {
                ++ns5;
                if (!c.found || !c.all_positive || c.codim > 2) {
                    ok = false;
                    detail = "section-5 bound failed at " + r.name;
                }
            }
        }
        report(4, "witness codimensions: d <= 3 Artinian, d <= 1 dim2, d <= 2 section-5 branch",
               ok,
               std::to_string(nart) + " Artinian, " + std::to_string(ndim2) + " dim2, " +
                   std::to_string(ns5) + " section-5 entries" +
                   (detail.empty() ? "" : "; " + detail));
    }

    // ----- criterion 5: route equivalence on verified certificates ---------
    {
        bool ok = true;
        int positive = 0, golod_only = 0;
        std::string detail;
        for (auto& r : rows) {
            const auto& c = r.report.certificate;
            if (!c.found) continue;
            // (a) and (b) are equivalent by the main criterion; both imply (c)
            if (c.nu_zero != c.two_linear || (c.nu_zero && !c.serre_equal)) {
                ok = false;
                detail = "route disagreement at " + r.name;
            }
            if (r.report.koszul_known && r.report.koszul &&
                !(c.nu_zero && c.two_linear && c.serre_equal)) {
                ok = false;
                detail = "Koszul entry without all three routes at " + r.name;
            }
            if (c.all_positive) ++positive;
            else if (c.golod) ++golod_only;
        }
        report(5, "route equivalence: nu, two-linearity and Serre equality agree", ok,
               std::to_string(positive) + " fully positive certificates, " +
                   std::to_string(golod_only) + " Golod-only (non-Koszul targets)" +
                   (detail.empty() ? "" : "; " + detail));
    }

    // ----- criterion 6: the Golod oracle over F_2 and QQ --------------------
    {
        bool ok = true;
        std::string detail;
        auto oracle = [&](auto field, const char* label) {
            using FF = decltype(field);
            auto R = ring(field, {"x", "y"}, {"x^2", "x*y", "y^2"}, 10);
            auto res = minimal_resolution_of_k(R, 8, 10);
            Series2 lhs = res.betti.bigraded();
            Series2 expect(8, 10);
            long long p2 = 1;
            for (int i = 0; i <= 8; ++i) {
                expect.at(i, i) = p2;
                p2 *= 2;
            }
            Series2 num = ci_poincare(2, 0, 8, 10);
            Series2 den = Series2::one(8, 10);
            den.at(2, 2) = -3;
            den.at(3, 3) = -2;  // 1 - z*(3z t^2 + 2z^2 t^3)
            auto gv = golod_ring_test(R, 8, 10, &res);
            if (!(lhs == expect) || !(num * den.inverse() == expect) || !gv.golod ||
                !gv.koszul_golod) {
                ok = false;
                detail = std::string("oracle failed over ") + label;
            }
        };
        oracle(GF(2), "GF(2)");
        oracle(QQ{}, "QQ");
        report(6, "Golod oracle: P^R_k = (1+zt)^2/(1 - 3z^2t^2 - 2z^3t^3) = sum 2^i z^i t^i", ok,
               detail.empty() ? "denominator fixed as 1 - z*(P^Q_R(z,t) - 1); both fields exact"
                              : detail);
    }

    // ----- criterion 7: negative controls -----------------------------------
    {
        bool ok = true;
        std::string detail;
        GF f2(2);
        auto CI = ring(f2, {"x", "y"}, {"x^2", "y^2"}, 10);
        auto gv = golod_ring_test(CI, 8, 10);
        if (gv.golod || gv.koszul_golod || gv.nu.zero || gv.nu.witness.empty()) {
            ok = false;
            detail = "F_2[x,y]/(x^2,y^2) did not fail with a concrete witness";
        }
        if (!gv.serre_inequality_ok) {
            ok = false;
            detail = "Serre inequality violated";
        }
        auto it = row_by_name.find("poly1-QQ");
        if (it == row_by_name.end() || !it->second->pass ||
            it->second->report.certificate.codim != 0 ||
            !it->second->report.certificate.all_positive) {
            ok = false;
            detail = "polynomial ring does not pass with d = 0";
        }
        report(7, "negative controls: codim-2 CI fails with a nu witness; polynomial ring d = 0",
               ok, detail.empty() ? "witness: " + gv.nu.str() : detail);
    }

    // ----- criterion 8: property suites -------------------------------------
    {
        bool ok = true;
        std::string detail;
        // d^2 = 0 and the Euler identity on freshly constructed complexes
        try {
            GF f2(2);
            QQ q;
            auto R1 = ring(f2, {"x", "y", "z"}, {"x*y", "x^2 - y*z", "z^2"}, 8);
            auto T1 = adjoin_divided(R1, 8, 8, {parse_polynomial(f2, "z^2", R1.pres.vars)});
            T1.D.verify_d_squared();
            auto R2 = ring(q, {"x", "y"}, {"x*y", "x^2 - y^2"}, 8);
            auto T2 = adjoin_divided(R2, 8, 8, {parse_polynomial(q, "x*y", R2.pres.vars)});
            T2.D.verify_d_squared();
            for (auto* D : {&T1.D}) {
                auto H = homology(*D);
                for (int j = 0; j <= D->N; ++j) {
                    long long lhs = 0, rhs = 0;
                    for (int i = 0; i <= D->N; ++i) {
                        long long sgn = i % 2 == 0 ? 1 : -1;
                        lhs += sgn * D->dim(i, j);
                        rhs += sgn * H[(size_t)i][(size_t)j];
                    }
                    if (lhs != rhs) {
                        ok = false;
                        detail = "Euler identity failed";
                    }
                }
            }
        } catch (const std::exception& ex) {
            ok = false;
            detail = std::string("complex construction: ") + ex.what();
        }
        // Hilbert agreement is asserted inside build_algebra; re-run a corpus sample
        try {
            QQ q;
            ring(q, {"x", "y", "z"}, {"y^2 + x*y", "x*y + z^2", "x*z"}, 10);
            GF f5(5);
            ring(f5, {"x", "y", "z"}, {"y^2", "x*y + z^2", "x*z"}, 10);
        } catch (const std::exception&) {
            ok = false;
            detail = "Hilbert basis-count vs series mismatch";
        }
        // trivial-fiber transfer of Koszul and Golod verdicts on paired entries
        int pairs = 0;
        for (auto& r : rows) {
            if (is_tfe_name(r.name)) continue;
            auto it = row_by_name.find(r.name + "-tfe");
            if (it == row_by_name.end()) continue;
            const auto& a = r.report;
            const auto& b = it->second->report;
            ++pairs;
            if (a.koszul != b.koszul || a.certificate.golod != b.certificate.golod ||
                a.certificate.all_positive != b.certificate.all_positive) {
                ok = false;
                detail = "transfer mismatch at " + r.name;
            }
        }
        if (pairs < 10) {
            ok = false;
            detail = "fewer than 10 trivial-fiber pairs";
        }
        // Betti independence from basis shuffling under 5 seeds
        {
            GF f2(2);
            auto R = ring(f2, {"x", "y", "z"}, {"x*y", "x^2 - y*z", "z^2"}, 8);
            auto base = minimal_resolution_of_k(R, 6, 8);
            GF f3(3);
            auto R3 = ring(f3, {"x", "y"}, {"x*y", "x^2 - y^2"}, 8);
            auto base3 = minimal_resolution_of_k(R3, 6, 8);
            for (uint64_t seed = 1; seed <= 5; ++seed) {
                if (minimal_resolution_of_k(R, 6, 8, seed).betti.beta != base.betti.beta ||
                    minimal_resolution_of_k(R3, 6, 8, seed).betti.beta != base3.betti.beta) {
                    ok = false;
                    detail = "Betti numbers changed under a shuffle seed";
                }
            }
        }
        report(8, "property suites: d^2 = 0, Euler identity, Hilbert agreement, transfer, shuffles",
               ok, detail.empty() ? std::to_string(pairs) + " trivial-fiber pairs checked" : detail);
    }

    std::cout << (failures == 0 ? "RESULT: all 8 criteria passed"
                                : "RESULT: " + std::to_string(failures) + " criteria FAILED")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
