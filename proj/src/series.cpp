#include "realbundles/series.hpp"

#include <algorithm>
#include <sstream>

#include "realbundles/error.hpp"

namespace rb {

TruncatedSeries::TruncatedSeries(std::size_t truncation) : coeffs_(truncation + 1, Integer(0)) {}

TruncatedSeries::TruncatedSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw ValidationError("series", "a truncated series needs at least the constant coefficient");
}

TruncatedSeries TruncatedSeries::from_ints(std::initializer_list<long> coeffs) {
    std::vector<Integer> v;
    v.reserve(coeffs.size());
    for (long c : coeffs)
        v.emplace_back(c);
    return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::one(std::size_t truncation) {
    return monomial(0, Integer(1), truncation);
}

TruncatedSeries TruncatedSeries::monomial(std::size_t k, const Integer& c, std::size_t truncation) {
    TruncatedSeries s(truncation);
    if (k <= truncation)
        s.coeffs_[k] = c;
    return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t n) const {
    if (n > truncation())
        throw ValidationError("truncation", "cannot extend a series past its known truncation degree");
    return TruncatedSeries(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(n) + 1));
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

bool TruncatedSeries::is_palindromic() const {
    const std::size_t n = truncation();
    for (std::size_t m = 0; m <= n / 2; ++m)
        if (coeffs_[m] != coeffs_[n - m])
            return false;
    return true;
}

Integer TruncatedSeries::value_at_minus_one() const {
    Integer v = 0;
    for (std::size_t m = 0; m < coeffs_.size(); ++m) {
        if (m % 2 == 0)
            v += coeffs_[m];
        else
            v -= coeffs_[m];
    }
    return v;
}

Integer TruncatedSeries::coefficient_sum() const {
    Integer v = 0;
    for (const auto& c : coeffs_)
        v += c;
    return v;
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t m = 0; m < coeffs_.size(); ++m) {
        const Integer& c = coeffs_[m];
        if (c == 0)
            continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0)
                out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (m == 0 || mag != 1)
            out << mag.get_str();
        if (m >= 1)
            out << "t";
        if (m >= 2)
            out << "^" << m;
    }
    if (first)
        out << "0";
    out << " + O(t^" << truncation() + 1 << ")";
    return out.str();
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.truncation(), b.truncation());
    std::vector<Integer> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        c[k] = a[k] + b[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.truncation(), b.truncation());
    std::vector<Integer> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        c[k] = a[k] - b[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.truncation(), b.truncation());
    std::vector<Integer> c(n + 1, Integer(0));
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; i + j <= n; ++j)
            c[i + j] += a[i] * b[j];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_div_cyclotomic(const TruncatedSeries& a, std::size_t k) {
    if (k == 0)
        throw ValidationError("cyclotomic", "division by 1 - t^0 is undefined (k must be >= 1)");
    std::vector<Integer> c(a.coeffs());
    // c_m = a_m + c_{m-k}
    for (std::size_t m = k; m < c.size(); ++m)
        c[m] += c[m - k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_inverse(const TruncatedSeries& a) {
    const Integer& a0 = a[0];
    if (a0 != 1 && a0 != -1)
        throw ValidationError("series", "series is not invertible over the integers (constant term must be +-1)");
    const std::size_t n = a.truncation();
    std::vector<Integer> inv(n + 1, Integer(0));
    inv[0] = a0;  // 1/a0 == a0 for a0 = +-1
    for (std::size_t m = 1; m <= n; ++m) {
        Integer s = 0;
        for (std::size_t i = 1; i <= m; ++i)
            s += a[i] * inv[m - i];
        inv[m] = -s * a0;
    }
    return TruncatedSeries(std::move(inv));
}

TruncatedSeries series_pow(const TruncatedSeries& a, std::size_t e) {
    TruncatedSeries result = TruncatedSeries::one(a.truncation());
    TruncatedSeries base = a;
    while (e > 0) {
        if (e & 1U)
            result = series_mul(result, base);
        e >>= 1U;
        if (e > 0)
            base = series_mul(base, base);
    }
    return result;
}

TruncatedSeries one_plus_t_power(std::size_t d, std::size_t e, std::size_t truncation) {
    // binomial expansion sum_j C(e, j) t^{dj}
    std::vector<Integer> c(truncation + 1, Integer(0));
    Integer binom = 1;
    for (std::size_t j = 0; j <= e; ++j) {
        if (d * j > truncation)
            break;
        c[d * j] += binom;
        binom = binom * static_cast<unsigned long>(e - j) / static_cast<unsigned long>(j + 1);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries one_minus_t_power(std::size_t k, std::size_t truncation) {
    TruncatedSeries s = TruncatedSeries::one(truncation);
    return series_sub(s, TruncatedSeries::monomial(k, Integer(1), truncation));
}

} // namespace rb
