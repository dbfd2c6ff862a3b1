#ifndef QALG_PRESENTATION_HPP
#define QALG_PRESENTATION_HPP

#include <sstream>

#include "qalg/groebner.hpp"
#include "qalg/linalg.hpp"

namespace qalg {

/* A quadratic presentation R = Q/I: the field, the variable names, and a
 * list of homogeneous degree-2 relations.  Minimality (linear independence
 * of the relations) is enforced when an algebra is built from it. */
template <class F>
struct QuadraticPresentation {
    F field;
    std::vector<std::string> vars;
    std::vector<Poly<F>> relations;
    int truncation = 0;  // 0 = use the caller's default

    int nvars() const { return (int)vars.size(); }

    void check_homogeneous_quadratic() const {
        for (auto& r : relations) {
            if (r.is_zero() || r.degree() != 2 || !r.is_homogeneous())
                throw std::invalid_argument(
                    "presentation: every relation must be homogeneous of degree exactly 2");
        }
    }

    // coordinates of the relations in the fixed monomial basis of Q_2
    Mat<F> relation_matrix(const std::vector<Monomial>& q2basis) const {
        std::map<Monomial, int> idx;
        for (size_t i = 0; i < q2basis.size(); ++i) idx[q2basis[i]] = (int)i;
        Mat<F> m((int)q2basis.size(), (int)relations.size(), field.zero());
        for (size_t j = 0; j < relations.size(); ++j)
            for (auto& [mono, c] : relations[j].t) m.at(idx.at(mono), (int)j) = c;
        return m;
    }
};

struct PresentationText {
    FieldSpec field;
    std::vector<std::string> vars;
    std::vector<std::string> relation_texts;
    int truncation = 0;

    // Presentation file format, one directive per line:
    //   field: GF(p) | GF(p)^k | QQ
    //   vars: x,y,z
    //   rel: <polynomial>          (one line per relation)
    //   truncation: J              (optional)
    // '#' starts a comment.
    static PresentationText parse(const std::string& text) {
        PresentationText out;
        bool saw_field = false, saw_vars = false;
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            auto notspace = line.find_first_not_of(" \t\r\n");
            if (notspace == std::string::npos) continue;
            auto colon = line.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("presentation line " + std::to_string(lineno) +
                                            ": expected 'key: value'");
            std::string key = line.substr(0, colon);
            std::string value = line.substr(colon + 1);
            auto trim = [](std::string s) {
                auto b = s.find_first_not_of(" \t\r\n");
                auto e = s.find_last_not_of(" \t\r\n");
                return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
            };
            key = trim(key);
            value = trim(value);
            if (key == "field") {
                out.field = FieldSpec::parse(value);
                saw_field = true;
            } else if (key == "vars") {
                std::string cur;
                for (char c : value + ",") {
                    if (c == ',' || c == ' ') {
                        if (!cur.empty()) out.vars.push_back(cur);
                        cur.clear();
                    } else cur += c;
                }
                saw_vars = true;
            } else if (key == "rel") {
                out.relation_texts.push_back(value);
            } else if (key == "truncation") {
                out.truncation = std::stoi(value);
            } else {
                throw std::invalid_argument("presentation line " + std::to_string(lineno) +
                                            ": unknown key '" + key + "'");
            }
        }
        if (!saw_field) throw std::invalid_argument("presentation: missing 'field:' line");
        if (!saw_vars) throw std::invalid_argument("presentation: missing 'vars:' line");
        return out;
    }

    std::string str() const {
        std::string s = "field: " + field.str() + "\nvars: ";
        for (size_t i = 0; i < vars.size(); ++i) {
            if (i) s += ",";
            s += vars[i];
        }
        s += "\n";
        for (auto& r : relation_texts) s += "rel: " + r + "\n";
        if (truncation) s += "truncation: " + std::to_string(truncation) + "\n";
        return s;
    }
};

template <class F>
QuadraticPresentation<F> instantiate(const F& field, const PresentationText& text) {
    QuadraticPresentation<F> p{field, text.vars, {}, text.truncation};
    for (auto& rt : text.relation_texts)
        p.relations.push_back(parse_polynomial(field, rt, text.vars));
    p.check_homogeneous_quadratic();
    return p;
}

}  // namespace qalg

#endif
