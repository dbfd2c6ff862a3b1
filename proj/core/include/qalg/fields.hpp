#ifndef QALG_FIELDS_HPP
#define QALG_FIELDS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qalg {

/* Runtime description of a coefficient field: characteristic 0 is the
 * rationals, a prime p with extension_degree k selects F_{p^k}. */
struct FieldSpec {
    uint32_t characteristic = 0;
    uint32_t extension_degree = 1;

    bool operator==(const FieldSpec&) const = default;

    std::string str() const;
    static FieldSpec parse(const std::string& text);  // "QQ" | "GF(p)" | "GF(p)^k"
    void validate() const;  // characteristic 0 or prime; k = 1 when char = 0
};

bool is_prime_u32(uint32_t n);

// ---------------------------------------------------------------------------
// F_p, p an odd-or-even prime below 2^31

class GF {
  public:
    using Elem = uint32_t;

    GF() : p_(2) {}
    explicit GF(uint32_t p) : p_(p) {
        if (p < 2 || p > 0x7fffffffu || !is_prime_u32(p))
            throw std::invalid_argument("GF: characteristic must be a prime < 2^31");
    }

    uint32_t characteristic() const { return p_; }
    FieldSpec spec() const { return {p_, 1}; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem add(Elem a, Elem b) const {
        uint64_t s = uint64_t(a) + b;
        return s >= p_ ? Elem(s - p_) : Elem(s);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const { return Elem((uint64_t(a) * b) % p_); }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("GF: inverse of zero");
        // extended Euclid
        int64_t t = 0, nt = 1, r = p_, nr = a;
        while (nr != 0) {
            int64_t q = r / nr;
            t -= q * nt; std::swap(t, nt);
            r -= q * nr; std::swap(r, nr);
        }
        if (t < 0) t += p_;
        return Elem(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem from_int(long long n) const {
        long long r = n % (long long)p_;
        if (r < 0) r += p_;
        return Elem(r);
    }
    // a/b with integer a, b; rejects b divisible by p
    Elem from_fraction(long long a, long long b) const {
        Elem denom = from_int(b);
        if (denom == 0) throw std::domain_error("GF: denominator divisible by the characteristic");
        return mul(from_int(a), inv(denom));
    }

    Elem random(std::mt19937_64& rng) const { return Elem(rng() % p_); }
    uint64_t size() const { return p_; }
    Elem nth(uint64_t i) const { return Elem(i % p_); }  // i-th element in the fixed enumeration

    std::string str(Elem a) const { return std::to_string(a); }

  private:
    uint32_t p_;
};

// ---------------------------------------------------------------------------
// F_{p^k}, k <= 4.  Elements are coefficient vectors modulo a fixed monic
// irreducible; the modulus is the lexicographically least monic irreducible
// of degree k (a fixed deterministic convention).

class GFExt {
  public:
    static constexpr int kMaxDeg = 4;
    using Elem = std::array<uint32_t, kMaxDeg>;  // coefficients of 1, x, x^2, x^3

    GFExt() : base_(2), k_(1), mod_{0, 1, 0, 0, 0} {}
    GFExt(uint32_t p, int k);

    uint32_t characteristic() const { return base_.characteristic(); }
    int degree() const { return k_; }
    FieldSpec spec() const { return {characteristic(), (uint32_t)k_}; }
    const std::array<uint32_t, kMaxDeg + 1>& modulus() const { return mod_; }

    Elem zero() const { return {0, 0, 0, 0}; }
    Elem one() const { return {base_.one(), 0, 0, 0}; }
    bool is_zero(Elem a) const { return a == zero(); }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem add(Elem a, Elem b) const {
        Elem r{};
        for (int i = 0; i < k_; ++i) r[i] = base_.add(a[i], b[i]);
        return r;
    }
    Elem neg(Elem a) const {
        Elem r{};
        for (int i = 0; i < k_; ++i) r[i] = base_.neg(a[i]);
        return r;
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem from_int(long long n) const { return {base_.from_int(n), 0, 0, 0}; }
    Elem from_fraction(long long a, long long b) const { return {base_.from_fraction(a, b), 0, 0, 0}; }

    Elem random(std::mt19937_64& rng) const {
        Elem r{};
        for (int i = 0; i < k_; ++i) r[i] = base_.random(rng);
        return r;
    }
    uint64_t size() const {
        uint64_t s = 1;
        for (int i = 0; i < k_; ++i) s *= characteristic();
        return s;
    }
    Elem nth(uint64_t i) const {
        Elem r{};
        for (int j = 0; j < k_; ++j) { r[j] = uint32_t(i % characteristic()); i /= characteristic(); }
        return r;
    }

    std::string str(Elem a) const;

    // generator of the polynomial variable, i.e. the class of x
    Elem gen() const {
        Elem r{};
        if (k_ > 1) r[1] = base_.one();
        return r;
    }

  private:
    GF base_;
    int k_;
    std::array<uint32_t, kMaxDeg + 1> mod_;  // monic modulus coefficients, degree k_
};

// ---------------------------------------------------------------------------
// Exact rationals via GMP

class QQ {
  public:
    using Elem = mpq_class;

    uint32_t characteristic() const { return 0; }
    FieldSpec spec() const { return {0, 1}; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (sgn(a) == 0) throw std::domain_error("QQ: inverse of zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    Elem from_int(long long n) const { return Elem((long)n); }
    Elem from_fraction(long long a, long long b) const {
        if (b == 0) throw std::domain_error("QQ: zero denominator");
        Elem r(Elem((long)a) / Elem((long)b));
        r.canonicalize();
        return r;
    }

    Elem random(std::mt19937_64& rng) const {  // small integers, for property tests
        return Elem((long)(int64_t(rng() % 21) - 10));
    }

    std::string str(const Elem& a) const { return a.get_str(); }

  private:
};

}  // namespace qalg

#endif
