#include "qalg/fields.hpp"

#include <cctype>

namespace qalg {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::string FieldSpec::str() const {
    if (characteristic == 0) return "QQ";
    std::string s = "GF(" + std::to_string(characteristic) + ")";
    if (extension_degree > 1) s += "^" + std::to_string(extension_degree);
    return s;
}

void FieldSpec::validate() const {
    if (characteristic == 0) {
        if (extension_degree != 1)
            throw std::invalid_argument("FieldSpec: extension_degree must be 1 in characteristic 0");
        return;
    }
    if (!is_prime_u32(characteristic))
        throw std::invalid_argument("FieldSpec: characteristic must be 0 or prime");
    if (extension_degree < 1 || extension_degree > GFExt::kMaxDeg)
        throw std::invalid_argument("FieldSpec: extension_degree out of range (1.." +
                                    std::to_string(GFExt::kMaxDeg) + ")");
}

FieldSpec FieldSpec::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) s += c;
    if (s == "QQ" || s == "Q") return {0, 1};
    if (s.rfind("GF(", 0) == 0) {
        auto close = s.find(')');
        if (close == std::string::npos) throw std::invalid_argument("FieldSpec: missing ')' in " + text);
        uint32_t p = (uint32_t)std::stoul(s.substr(3, close - 3));
        uint32_t k = 1;
        if (close + 1 < s.size()) {
            if (s[close + 1] != '^') throw std::invalid_argument("FieldSpec: malformed " + text);
            k = (uint32_t)std::stoul(s.substr(close + 2));
        }
        FieldSpec spec{p, k};
        spec.validate();
        return spec;
    }
    throw std::invalid_argument("FieldSpec: cannot parse '" + text + "' (expected QQ, GF(p) or GF(p)^k)");
}

namespace {

// dense polynomials over F_p, lowest degree first, used only to pick the modulus
using PolyFp = std::vector<uint32_t>;

void trim(PolyFp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyFp mul_mod(const GF& f, const PolyFp& a, const PolyFp& b, const PolyFp& m) {
    PolyFp r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    trim(r);
    // reduce modulo monic m; the top coefficient cancels each round
    size_t dm = m.size() - 1;
    while (r.size() > dm) {
        uint32_t c = r.back();
        size_t shift = r.size() - 1 - dm;
        for (size_t i = 0; i <= dm; ++i)
            r[shift + i] = f.sub(r[shift + i], f.mul(c, m[i]));
        trim(r);
    }
    return r;
}

PolyFp pow_x_mod(const GF& f, mpz_class e, const PolyFp& m) {
    PolyFp base{0, 1};  // x
    trim(base);
    PolyFp acc{1};
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = mul_mod(f, acc, base, m);
        base = mul_mod(f, base, base, m);
        e >>= 1;
    }
    return acc;
}

PolyFp poly_gcd(const GF& f, PolyFp a, PolyFp b) {
    trim(a); trim(b);
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            uint32_t c = f.div(a.back(), b.back());
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i)
                a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
            trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(const GF& f, const PolyFp& m, int k) {
    // x^{p^k} == x mod m, and gcd(x^{p^{k/l}} - x, m) = 1 for prime l | k
    mpz_class p = f.characteristic();
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
    PolyFp xq = pow_x_mod(f, pk, m);
    PolyFp x{0, 1};
    PolyFp diff = xq;
    diff.resize(std::max(diff.size(), x.size()), 0);
    for (size_t i = 0; i < x.size(); ++i) diff[i] = f.sub(i < xq.size() ? xq[i] : 0, x[i]);
    trim(diff);
    if (!diff.empty()) return false;
    for (int l = 2; l <= k; ++l) {
        if (!is_prime_u32((uint32_t)l) || k % l != 0) continue;
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), k / l);
        PolyFp xe = pow_x_mod(f, pe, m);
        PolyFp d = xe;
        d.resize(std::max(d.size(), x.size()), 0);
        for (size_t i = 0; i < x.size(); ++i) d[i] = f.sub(i < xe.size() ? xe[i] : 0, x[i]);
        trim(d);
        PolyFp g = poly_gcd(f, d, m);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

GFExt::GFExt(uint32_t p, int k) : base_(p), k_(k), mod_{} {
    if (k < 1 || k > kMaxDeg) throw std::invalid_argument("GFExt: extension degree out of range");
    if (k == 1) {  // degenerate, modulus x - 0 never used
        mod_ = {0, 1, 0, 0, 0};
        return;
    }
    // lexicographically least monic irreducible of degree k, ordered by
    // (c_{k-1}, ..., c_1, c_0) counting upward
    uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= p;
    for (uint64_t idx = 0; idx < total; ++idx) {
        PolyFp m(k + 1, 0);
        m[k] = 1;
        uint64_t v = idx;
        for (int i = k - 1; i >= 0; --i) { m[i] = uint32_t(v % p); v /= p; }
        if (is_irreducible(base_, m, k)) {
            for (int i = 0; i <= k; ++i) mod_[i] = m[i];
            return;
        }
    }
    throw std::logic_error("GFExt: no irreducible polynomial found");  // unreachable
}

GFExt::Elem GFExt::mul(Elem a, Elem b) const {
    if (k_ == 1) return {base_.mul(a[0], b[0]), 0, 0, 0};
    std::array<uint32_t, 2 * kMaxDeg> prod{};
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j)
            prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
    for (int d = 2 * k_ - 2; d >= k_; --d) {
        uint32_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < k_; ++i)
            prod[d - k_ + i] = base_.sub(prod[d - k_ + i], base_.mul(c, mod_[i]));
    }
    Elem r{};
    for (int i = 0; i < k_; ++i) r[i] = prod[i];
    return r;
}

GFExt::Elem GFExt::inv(Elem a) const {
    if (is_zero(a)) throw std::domain_error("GFExt: inverse of zero");
    if (k_ == 1) return {base_.inv(a[0]), 0, 0, 0};
    // extended Euclid in F_p[x] against the modulus
    PolyFp r0(mod_.begin(), mod_.begin() + k_ + 1);
    PolyFp r1(a.begin(), a.begin() + k_);
    trim(r1);
    PolyFp t0{}, t1{base_.one()};
    while (!r1.empty() && r1.size() > 1) {
        PolyFp q(r0.size() - r1.size() + 1, 0);
        PolyFp rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            uint32_t c = base_.div(rem.back(), r1.back());
            size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = base_.sub(rem[shift + i], base_.mul(c, r1[i]));
            trim(rem);
        }
        // t0 - q*t1
        PolyFp qt(q.size() + t1.size(), 0);
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < t1.size(); ++j)
                qt[i + j] = base_.add(qt[i + j], base_.mul(q[i], t1[j]));
        PolyFp nt(std::max(t0.size(), qt.size()), 0);
        for (size_t i = 0; i < nt.size(); ++i)
            nt[i] = base_.sub(i < t0.size() ? t0[i] : 0, i < qt.size() ? qt[i] : 0);
        trim(nt);
        r0 = std::move(r1); r1 = std::move(rem);
        t0 = std::move(t1); t1 = std::move(nt);
    }
    if (r1.empty()) throw std::logic_error("GFExt: modulus not irreducible?");
    uint32_t scale = base_.inv(r1[0]);
    Elem out{};
    for (size_t i = 0; i < t1.size() && i < (size_t)k_; ++i) out[i] = base_.mul(t1[i], scale);
    return out;
}

std::string GFExt::str(Elem a) const {
    if (k_ == 1) return std::to_string(a[0]);
    std::string s = "[";
    for (int i = 0; i < k_; ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + "]";
}

}  // namespace qalg
