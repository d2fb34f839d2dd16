#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace rb {

using Integer = mpz_class;

/// Formal power series in t with integer coefficients, known exactly up to
/// and including degree `truncation()`. Coefficients past the truncation are
/// unknown, never implicitly zero.
class TruncatedSeries {
public:
    /// Zero series known through degree `truncation`.
    explicit TruncatedSeries(std::size_t truncation);

    /// Series with the given coefficients; truncation is `coeffs.size() - 1`.
    /// An empty vector is rejected.
    explicit TruncatedSeries(std::vector<Integer> coeffs);

    static TruncatedSeries from_ints(std::initializer_list<long> coeffs);
    static TruncatedSeries one(std::size_t truncation);
    /// c * t^k, known through `truncation` (zero if k > truncation).
    static TruncatedSeries monomial(std::size_t k, const Integer& c, std::size_t truncation);

    std::size_t truncation() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    const Integer& operator[](std::size_t k) const { return coeffs_.at(k); }

    /// Drop coefficients above `n`; `n` must not exceed the current truncation.
    TruncatedSeries truncated(std::size_t n) const;

    bool is_zero() const;
    /// c_m == c_{N-m} for every m, N the truncation.
    bool is_palindromic() const;
    Integer value_at_minus_one() const;
    Integer coefficient_sum() const;

    /// Human-readable form, e.g. "1 + 2t + t^2 + O(t^6)".
    std::string to_string() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Integer> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);

/// Product truncated at min(trunc(a), trunc(b)).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// a / (1 - t^k), i.e. c_m = sum_{j >= 0, jk <= m} a_{m - jk}. k = 0 is rejected.
TruncatedSeries series_div_cyclotomic(const TruncatedSeries& a, std::size_t k);

/// Multiplicative inverse of a series whose constant term is +1 or -1.
TruncatedSeries series_inverse(const TruncatedSeries& a);

TruncatedSeries series_pow(const TruncatedSeries& a, std::size_t e);

/// (1 + t^d)^e known through `truncation`.
TruncatedSeries one_plus_t_power(std::size_t d, std::size_t e, std::size_t truncation);

/// 1 - t^k known through `truncation`.
TruncatedSeries one_minus_t_power(std::size_t k, std::size_t truncation);

inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_mul(a, b);
}

} // namespace rb
