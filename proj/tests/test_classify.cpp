#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qalg/pipeline.hpp"

using namespace qalg;

namespace {

template <class F>
GradedAlgebra<F> ring(const F& f, std::vector<std::string> vars, std::vector<std::string> rels,
                      int J) {
    QuadraticPresentation<F> p{f, vars, {}, J};
    for (auto& r : rels) p.relations.push_back(parse_polynomial(f, r, vars));
    return build_algebra(p, J);
}

ClassifyConfig fast_cfg() {
    ClassifyConfig cfg;
    cfg.N = 6;
    cfg.J = 8;
    return cfg;
}

}  // namespace

TEST_CASE("detect_exceptional: positives and negatives") {
    GF f2(2);
    auto nk3 = ring(f2, {"x", "y", "z"}, {"x*y", "z^2", "x*z + y*z + x^2"}, 8);
    auto v = detect_exceptional(nk3, 8);
    CHECK(v.exceptional);

    QQ q;
    auto dali = ring(q, {"x", "y", "z"}, {"y^2 + x*y", "x*y + z^2", "x*z"}, 8);
    auto vd = detect_exceptional(dali, 8);
    CHECK(vd.exceptional);
    CHECK(vd.normal_form == "D'Ali (i)");

    auto art = ring(q, {"x", "y"}, {"x^2", "y^2"}, 6);
    CHECK_FALSE(detect_exceptional(art, 6).exceptional);
}

TEST_CASE("match_structure: case (8) with the expected forms") {
    GF f3(3);
    auto R = ring(f3, {"x", "y"}, {"x*y", "x^2 - y^2"}, 8);
    auto m = match_structure(R);
    REQUIRE(m.case_id == "3.2(8)");
    // the matched pair generates m^2 both ways; x and y themselves qualify
    REQUIRE(m.forms.count("x1"));
    REQUIRE(m.forms.count("x2"));
    auto res = condition_check(R, "3.2(8)", m.forms);
    CHECK(res.ok);
}

TEST_CASE("match_structure: Prop 4.2 cases") {
    QQ q;
    auto Rc = ring(q, {"x", "y", "z"}, {"x^2", "x*y", "y^2 - x*z", "y*z"}, 8);
    CHECK(match_structure(Rc).case_id == "4.2(c)");
    auto Ra = ring(q, {"x", "y", "z"}, {"x^2", "x*y", "y*z", "z^2"}, 8);
    CHECK(match_structure(Ra).case_id == "4.2(a)");
    auto Rb = ring(q, {"x", "y"}, {"x^2"}, 8);
    CHECK(match_structure(Rb).case_id == "4.2(b)");
}

TEST_CASE("classify: Artinian complete intersection of embedding dimension 3") {
    auto rep = classify_text("field: QQ\nvars: x,y,z\nrel: x^2\nrel: y^2\nrel: z^2\n", fast_cfg());
    REQUIRE(rep.ok);
    CHECK(rep.branch == "artinian");
    CHECK(rep.matched_case == "CI(e=3)");
    CHECK(rep.certificate.found);
    CHECK(rep.certificate.codim == 3);
    CHECK(rep.certificate.all_positive);
    CHECK(rep.koszul);
    CHECK(rep.absolutely_koszul);
    CHECK(rep.hilbert_coeffs[3] == 1);
    CHECK(rep.hilbert_coeffs[4] == 0);
}

TEST_CASE("classify: the exceptional NK2 ring") {
    auto rep = classify_text("field: GF(2)\nvars: x,y,z\nrel: x*y\nrel: x^2 - y*z\nrel: z^2\n",
                             fast_cfg());
    REQUIRE(rep.ok);
    CHECK(rep.branch == "e=3");
    CHECK(rep.exceptional);
    CHECK(rep.koszul_known);
    CHECK_FALSE(rep.koszul);
    CHECK(rep.certificate.found);
    CHECK(rep.certificate.codim <= 3);
    CHECK(rep.certificate.golod);
    CHECK_FALSE(rep.certificate.all_positive);
    CHECK_FALSE(rep.absolutely_koszul);
    CHECK(rep.consistent);
}

TEST_CASE("classify: Koszul ring gets the absolutely-Koszul flag") {
    auto rep = classify_text(
        "field: GF(2)\nvars: x,y,z\nrel: x^2\nrel: x*y\nrel: y^2 - x*z\nrel: z^2\n", fast_cfg());
    REQUIRE(rep.ok);
    CHECK(rep.koszul);
    CHECK(rep.certificate.found);
    CHECK(rep.certificate.codim <= 2);
    CHECK(rep.certificate.all_positive);
    CHECK(rep.absolutely_koszul);
}

TEST_CASE("classify: out-of-scope input yields a structured report") {
    auto rep = classify_text("field: QQ\nvars: x,y,z\n", fast_cfg());
    REQUIRE(rep.ok);
    CHECK(rep.branch == "out-of-scope");
    CHECK_FALSE(rep.certificate.found);
    CHECK(rep.koszul_known);
    CHECK(rep.koszul);  // still a useful general-purpose calculator
}

TEST_CASE("classify: parse errors surface as non-ok reports") {
    auto rep = classify_text("field: GF(6)\nvars: x\n", fast_cfg());
    CHECK_FALSE(rep.ok);
    CHECK(!rep.error.empty());
    auto rep2 = classify_text("field: QQ\nvars: x,y\nrel: x^2 + w\n", fast_cfg());
    CHECK_FALSE(rep2.ok);
}

TEST_CASE("classify: field override") {
    ClassifyConfig cfg = fast_cfg();
    cfg.field_override = FieldSpec{3, 1};
    auto rep = classify_text("field: QQ\nvars: x,y\nrel: x*y\nrel: x^2 - y^2\n", cfg);
    REQUIRE(rep.ok);
    CHECK(rep.field == "GF(3)");
    CHECK(rep.matched_case == "3.2(8)");
}

TEST_CASE("classify: trivial fiber extension transfers the verdicts") {
    auto base = classify_text("field: GF(3)\nvars: x,y\nrel: x*y\nrel: x^2 - y^2\n", fast_cfg());
    auto ext = classify_text(
        "field: GF(3)\nvars: x,y,u\nrel: x*y\nrel: x^2 - y^2\nrel: x*u\nrel: y*u\nrel: u^2\n",
        fast_cfg());
    REQUIRE(base.ok);
    REQUIRE(ext.ok);
    CHECK(ext.socle_removed == 1);
    CHECK(base.koszul == ext.koszul);
    CHECK(base.certificate.all_positive == ext.certificate.all_positive);
    CHECK(base.certificate.codim == ext.certificate.codim);
    // Hilbert series differ exactly by s*t
    CHECK(ext.hilbert_coeffs[1] == base.hilbert_coeffs[1] + 1);
    for (size_t d = 2; d < base.hilbert_coeffs.size(); ++d)
        CHECK(ext.hilbert_coeffs[d] == base.hilbert_coeffs[d]);
    // the lifted witness was re-verified directly on the extension
    CHECK(ext.certificate.lifted_note.find("re-verified") != std::string::npos);
}

TEST_CASE("report JSON round-trips through the parser") {
    auto rep = classify_text("field: GF(3)\nvars: x,y\nrel: x*y\nrel: x^2 - y^2\n", fast_cfg());
    auto j = rep.to_json();
    auto parsed = nlohmann::json::parse(j.dump());
    CHECK(parsed["schema_version"] == 1);
    CHECK(parsed["certificate"]["found"] == true);
    CHECK(parsed["koszul"]["flag"] == true);
}

TEST_CASE("run_corpus: single entry by name") {
    ClassifyConfig cfg = fast_cfg();
    auto rows = run_corpus(cfg, "case8-F3");
    REQUIRE(rows.size() == 2);  // the entry and its fiber-extension variant
    CHECK(rows[0].pass);
    CHECK(rows[1].pass);
}

TEST_CASE("run_corpus: a deliberately wrong expectation fails with the field named") {
    std::string corpus = R"([{
        "name": "wrong",
        "presentation": "field: GF(3)\nvars: x,y\nrel: x*y\nrel: x^2 - y^2\n",
        "expected": {"hilbert_prefix": [1, 2, 2], "koszul": false}
    }])";
    auto entries = parse_corpus(corpus);
    auto rows = run_corpus(fast_cfg(), "", &entries);
    REQUIRE(rows.size() == 1);
    CHECK_FALSE(rows[0].pass);
    CHECK(std::find(rows[0].mismatches.begin(), rows[0].mismatches.end(), "hilbert_prefix") !=
          rows[0].mismatches.end());
    CHECK(std::find(rows[0].mismatches.begin(), rows[0].mismatches.end(), "koszul") !=
          rows[0].mismatches.end());
}

TEST_CASE("witness subassembly: case prescriptions verify on their cases") {
    GF f2(2);
    auto R = ring(f2, {"x", "y", "z"}, {"x^2", "x*y", "y^2 - x*z", "z^2"}, 8);
    auto m = match_structure(R);
    REQUIRE(!m.case_id.empty());
    auto pres = case_prescriptions(R, m.case_id, m.forms);
    REQUIRE(!pres.empty());
    auto cert = verify_witness(R, pres[0], 6, 8);
    CHECK(cert.all_positive);
}
