#ifndef QALG_SERIES_HPP
#define QALG_SERIES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qalg {

// truncated integer power series in one variable
struct Series1 {
    std::vector<long long> c;  // c[i] for i = 0..bound

    explicit Series1(int bound = 0) : c((size_t)bound + 1, 0) {}
    int bound() const { return (int)c.size() - 1; }

    static Series1 one(int bound) {
        Series1 s(bound);
        s.c[0] = 1;
        return s;
    }
    static Series1 from_coeffs(std::vector<long long> v, int bound) {
        Series1 s(bound);
        for (size_t i = 0; i < v.size() && i < s.c.size(); ++i) s.c[i] = v[i];
        return s;
    }

    Series1 operator+(const Series1& o) const {
        Series1 r(bound());
        for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }
    Series1 operator-(const Series1& o) const {
        Series1 r(bound());
        for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }
    Series1 operator*(const Series1& o) const {
        Series1 r(bound());
        for (size_t i = 0; i < c.size(); ++i) {
            if (!c[i]) continue;
            for (size_t j = 0; i + j < c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
        }
        return r;
    }
    Series1 inverse() const {
        if (c[0] != 1 && c[0] != -1)
            throw std::domain_error("Series1: inverse needs unit constant term");
        Series1 r(bound());
        r.c[0] = c[0];
        for (size_t n = 1; n < c.size(); ++n) {
            long long s = 0;
            for (size_t k = 1; k <= n; ++k) s += c[k] * r.c[n - k];
            r.c[n] = -s * c[0];
        }
        return r;
    }
    bool operator==(const Series1&) const = default;
};

// truncated integer power series in (z, t); z tracks homological degree
struct Series2 {
    int N = 0, J = 0;
    std::vector<long long> c;  // (N+1) x (J+1), row-major in z

    Series2() = default;
    Series2(int n, int j) : N(n), J(j), c((size_t)(n + 1) * (j + 1), 0) {}

    long long& at(int i, int j) { return c[(size_t)i * (J + 1) + j]; }
    long long at(int i, int j) const { return c[(size_t)i * (J + 1) + j]; }

    static Series2 one(int n, int j) {
        Series2 s(n, j);
        s.at(0, 0) = 1;
        return s;
    }
    static Series2 zt(int n, int j) {  // the monomial z*t
        Series2 s(n, j);
        if (n >= 1 && j >= 1) s.at(1, 1) = 1;
        return s;
    }

    Series2 operator+(const Series2& o) const {
        Series2 r(N, J);
        for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }
    Series2 operator-(const Series2& o) const {
        Series2 r(N, J);
        for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }
    Series2 operator*(const Series2& o) const {
        Series2 r(N, J);
        for (int i = 0; i <= N; ++i)
            for (int j = 0; j <= J; ++j) {
                long long v = at(i, j);
                if (!v) continue;
                for (int k = 0; i + k <= N; ++k)
                    for (int l = 0; j + l <= J; ++l) {
                        long long w = o.at(k, l);
                        if (w) r.at(i + k, j + l) += v * w;
                    }
            }
        return r;
    }
    Series2 inverse() const {
        if (at(0, 0) != 1 && at(0, 0) != -1)
            throw std::domain_error("Series2: inverse needs unit constant term");
        Series2 r(N, J);
        long long u = at(0, 0);
        // fill in order of (i, j); the recurrence only looks strictly downward
        for (int i = 0; i <= N; ++i)
            for (int j = 0; j <= J; ++j) {
                if (i == 0 && j == 0) {
                    r.at(0, 0) = u;
                    continue;
                }
                long long s = 0;
                for (int k = 0; k <= i; ++k)
                    for (int l = 0; l <= j; ++l) {
                        if (k == 0 && l == 0) continue;
                        long long a = at(k, l);
                        if (a) s += a * r.at(i - k, j - l);
                    }
                r.at(i, j) = -s * u;
            }
        return r;
    }
    Series2 pow(int e) const {
        Series2 r = one(N, J);
        for (int k = 0; k < e; ++k) r = r * *this;
        return r;
    }
    bool operator==(const Series2&) const = default;

    // position of the first coefficient where the two series differ, scanning
    // by total degree; nullopt when equal on the whole grid
    static std::string first_difference(const Series2& a, const Series2& b) {
        for (int s = 0; s <= a.N + a.J; ++s)
            for (int i = 0; i <= a.N; ++i) {
                int j = s - i;
                if (j < 0 || j > a.J) continue;
                if (a.at(i, j) != b.at(i, j))
                    return "z^" + std::to_string(i) + " t^" + std::to_string(j) + ": " +
                           std::to_string(a.at(i, j)) + " vs " + std::to_string(b.at(i, j));
            }
        return "";
    }
};

// exact rational Hilbert series  numerator(t) / (1-t)^denom_pow, fully reduced
struct HilbertSeries {
    std::vector<long long> numerator;  // ascending coefficients
    int denom_pow = 0;

    static HilbertSeries reduce(std::vector<long long> num, int pow) {
        while (!num.empty() && num.back() == 0) num.pop_back();
        while (pow > 0 && !num.empty()) {
            long long total = 0;
            for (long long v : num) total += v;
            if (total != 0) break;
            // divide by (1 - t): prefix sums
            std::vector<long long> q(num.size() - 1, 0);
            long long acc = 0;
            for (size_t i = 0; i + 1 < num.size(); ++i) {
                acc += num[i];
                q[i] = acc;
            }
            num = std::move(q);
            --pow;
        }
        if (num.empty()) pow = 0;
        return {std::move(num), pow};
    }

    bool is_polynomial() const { return denom_pow == 0; }

    std::vector<long long> coefficients(int J) const {
        std::vector<long long> h((size_t)J + 1, 0);
        for (size_t i = 0; i < numerator.size() && i <= (size_t)J; ++i) h[i] = numerator[i];
        for (int k = 0; k < denom_pow; ++k) {
            long long acc = 0;
            for (int i = 0; i <= J; ++i) {
                acc += h[(size_t)i];
                h[(size_t)i] = acc;
            }
        }
        return h;
    }

    bool operator==(const HilbertSeries&) const = default;

    std::string str() const {
        auto poly_str = [](const std::vector<long long>& p) {
            if (p.empty()) return std::string("0");
            std::string s;
            for (size_t i = 0; i < p.size(); ++i) {
                if (!p[i]) continue;
                long long v = p[i];
                if (s.empty()) {
                    if (v < 0) s += "-";
                } else {
                    s += v < 0 ? " - " : " + ";
                }
                long long a = v < 0 ? -v : v;
                if (i == 0) s += std::to_string(a);
                else {
                    if (a != 1) s += std::to_string(a) + "*";
                    s += "t";
                    if (i > 1) s += "^" + std::to_string(i);
                }
            }
            return s.empty() ? std::string("0") : s;
        };
        std::string s = "(" + poly_str(numerator) + ")";
        if (denom_pow == 1) s += "/(1-t)";
        else if (denom_pow > 1) s += "/(1-t)^" + std::to_string(denom_pow);
        return s;
    }
};

}  // namespace qalg

#endif
