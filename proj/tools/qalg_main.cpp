#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qalg/pipeline.hpp"

using namespace qalg;

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit_json(const std::string& target, const nlohmann::json& j) {
    if (target.empty()) return;
    if (target == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(target);
    if (!out) throw std::runtime_error("cannot write '" + target + "'");
    out << j.dump(2) << "\n";
}

// Betti table and Koszul verdict for `analyze`, dispatched over the field
template <class F>
nlohmann::json analyze_impl(const F& field, const PresentationText& pt, int N, int J) {
    auto pres = instantiate(field, pt);
    auto R = build_algebra(pres, J);
    auto res = minimal_resolution_of_k(R, N, J);
    auto kv = koszul_test(R, N, J, &res);

    nlohmann::json j;
    j["field"] = field.spec().str();
    j["bounds"] = {{"N", N}, {"J", J}};
    j["hilbert"] = {{"series", R.series.str()}, {"coefficients", R.series.coefficients(J)}};
    j["artinian"] = is_artinian(R);
    j["betti"] = nlohmann::json::array();
    for (int i = 0; i <= N; ++i) j["betti"].push_back(res.betti.beta[(size_t)i]);
    j["betti_tsv"] = res.betti.tsv();
    j["poincare_totals"] = kv.poincare_totals;
    j["koszul"] = {{"verdict", kv.koszul}, {"detail", kv.str()}};

    std::cout << "field:    " << field.spec().str() << "\n";
    std::cout << "hilbert:  " << R.series.str() << "\n";
    std::cout << "artinian: " << (is_artinian(R) ? "yes" : "no") << "\n";
    std::cout << "betti table of k (rows i, columns j):\n" << res.betti.tsv();
    std::cout << "koszul:   " << kv.str() << "\n";
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Koszul/Golod calculator for quadratic algebras with dim R_2 <= 3"};
    app.require_subcommand(1);

    std::string field_flag, json_out;
    int trunc_hom = 8, trunc_int = 10;
    app.add_option("--field", field_flag, "override the coefficient field (QQ, GF(p), GF(p)^k)");
    app.add_option("--trunc-hom", trunc_hom, "homological truncation N")->capture_default_str();
    app.add_option("--trunc-int", trunc_int, "internal truncation J")->capture_default_str();
    app.add_option("--json", json_out, "write the result as JSON to this file ('-' = stdout)");

    std::string file;
    auto* analyze = app.add_subcommand("analyze", "Hilbert series, Betti table and Koszul test");
    analyze->add_option("file", file, "presentation file ('-' = stdin)")->required();

    auto* witness = app.add_subcommand("witness", "search for a Backelin-Roos witness");
    witness->add_option("file", file, "presentation file ('-' = stdin)")->required();
    int max_codim = 3, budget = 512;
    uint64_t seed = 1;
    witness->add_option("--max-codim", max_codim, "largest codimension tried")->capture_default_str();
    witness->add_option("--seed", seed, "seed for the random candidate rung")->capture_default_str();
    witness->add_option("--budget", budget, "verified-candidate budget")->capture_default_str();

    auto* classifycmd = app.add_subcommand("classify", "run the full classification pipeline");
    classifycmd->add_option("file", file, "presentation file ('-' = stdin)")->required();

    auto* corpus = app.add_subcommand("corpus", "classify the shipped example corpus");
    std::string corpus_name, corpus_file;
    corpus->add_option("--name", corpus_name, "only entries whose name contains this string");
    corpus->add_option("--file", corpus_file, "use a corpus JSON file instead of the shipped one");

    CLI11_PARSE(app, argc, argv);

    try {
        ClassifyConfig cfg;
        cfg.N = trunc_hom;
        cfg.J = trunc_int;
        cfg.seed = seed;
        cfg.budget = budget;
        cfg.max_codim = max_codim;
        if (!field_flag.empty()) cfg.field_override = FieldSpec::parse(field_flag);

        if (*analyze) {
            auto pt = PresentationText::parse(slurp(file));
            FieldSpec spec = cfg.field_override ? *cfg.field_override : pt.field;
            spec.validate();
            int J = std::max(cfg.J, pt.truncation > 0 ? pt.truncation : cfg.J);
            nlohmann::json j;
            if (spec.characteristic == 0) j = analyze_impl(QQ{}, pt, cfg.N, J);
            else if (spec.extension_degree == 1) j = analyze_impl(GF(spec.characteristic), pt, cfg.N, J);
            else j = analyze_impl(GFExt(spec.characteristic, (int)spec.extension_degree), pt, cfg.N, J);
            emit_json(json_out, j);
        } else if (*witness || *classifycmd) {
            auto rep = classify_text(slurp(file), cfg);
            if (!rep.ok) {
                std::cerr << "error: " << rep.error << "\n";
                return 1;
            }
            if (*classifycmd) {
                std::cout << rep.text();
            } else {
                const auto& c = rep.certificate;
                if (!c.found) {
                    std::cout << "no witness within the budget\n";
                } else {
                    std::cout << "witness: codim " << c.codim << " {";
                    for (size_t i = 0; i < c.quadrics.size(); ++i)
                        std::cout << (i ? "; " : "") << c.quadrics[i];
                    std::cout << "}\n  provenance: " << c.provenance << "\n  verdicts: nu="
                              << (c.nu_zero ? "0" : "nonzero")
                              << " two-linear=" << (c.two_linear ? "yes" : "no")
                              << " serre-equality=" << (c.serre_equal ? "yes" : "no") << "\n  "
                              << (c.all_positive
                                      ? "golod homomorphism, R Koszul"
                                      : c.golod ? "golod homomorphism (R not Koszul)" : "unverified")
                              << " up to (N=" << c.N << ", J=" << c.J << ")\n";
                }
            }
            emit_json(json_out, rep.to_json());
        } else if (*corpus) {
            std::vector<CorpusEntry> entries;
            const std::vector<CorpusEntry>* ep = nullptr;
            if (!corpus_file.empty()) {
                entries = parse_corpus(slurp(corpus_file));
                ep = &entries;
            }
            auto rows = run_corpus(cfg, corpus_name, ep);
            std::cout << corpus_table(rows);
            nlohmann::json j = nlohmann::json::array();
            for (auto& r : rows) {
                nlohmann::json row;
                row["name"] = r.name;
                row["pass"] = r.pass;
                row["mismatches"] = r.mismatches;
                row["report"] = r.report.to_json();
                j.push_back(row);
            }
            emit_json(json_out, j);
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
