#pragma once

// Independent reference computations for tests. Nothing here calls into the
// library: plain long long arithmetic and brute-force enumeration only.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

using Poly = std::vector<long long>;

inline Poly truncate(Poly p, std::size_t n) {
    p.resize(n + 1, 0);
    return p;
}

inline Poly mul(const Poly& a, const Poly& b, std::size_t n) {
    Poly out(n + 1, 0);
    for (std::size_t i = 0; i < a.size() && i <= n; ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= n; ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

/// 1 + t^d.
inline Poly one_plus(std::size_t d, std::size_t n) {
    Poly p(n + 1, 0);
    p[0] = 1;
    if (d <= n)
        p[d] += 1;
    return p;
}

/// 1 + t^k + t^2k + ... through degree n.
inline Poly geometric(std::size_t k, std::size_t n) {
    Poly p(n + 1, 0);
    for (std::size_t m = 0; m <= n; m += k)
        p[m] = 1;
    return p;
}

inline Poly product(std::size_t n, std::size_t ones, std::size_t threes, std::size_t geometric_step = 0) {
    Poly p = truncate({1}, n);
    for (std::size_t i = 0; i < ones; ++i)
        p = mul(p, one_plus(1, n), n);
    for (std::size_t i = 0; i < threes; ++i)
        p = mul(p, one_plus(3, n), n);
    if (geometric_step)
        p = mul(p, geometric(geometric_step, n), n);
    return p;
}

inline Poly generic(int g, std::size_t n) { return product(n, g, g - 1); }
inline Poly all_moebius(int g, std::size_t n) { return product(n, g, g, 2); }
inline Poly all_orientable(int g, std::size_t n) { return product(n, g, g, 4); }

/// Generator for basis counting: degree and whether its exponent is capped at 1.
struct Gen {
    int degree;
    bool exterior;
};

/// Number of monomials of each total degree 0..n, counted by recursive
/// enumeration of exponent vectors.
inline Poly count_monomials(const std::vector<Gen>& gens, std::size_t n) {
    Poly counts(n + 1, 0);
    auto rec = [&](auto&& self, std::size_t i, std::size_t deg) -> void {
        if (i == gens.size()) {
            ++counts[deg];
            return;
        }
        for (std::size_t e = 0; deg + e * gens[i].degree <= n; ++e) {
            self(self, i + 1, deg + e * gens[i].degree);
            if (gens[i].exterior && e == 1)
                break;
        }
    };
    rec(rec, 0, 0);
    return counts;
}

/// All bit strings of length a with weight parity equal to d mod 2.
inline std::vector<std::string> bundles_by_parity(int a, long d) {
    std::vector<std::string> out;
    for (std::uint32_t mask = 0; mask < (1U << a); ++mask) {
        std::string s;
        int weight = 0;
        for (int i = a - 1; i >= 0; --i) {
            const bool bit = (mask >> i) & 1U;
            s += bit ? '1' : '0';
            weight += bit;
        }
        if ((weight - d) % 2 == 0)
            out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace oracle
