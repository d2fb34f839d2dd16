#include "realbundles/dga_oracle.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>

#include "realbundles/error.hpp"

namespace rb {

namespace {

using IntVec = std::vector<std::pair<std::size_t, Integer>>;
using ModVec = std::vector<std::pair<std::size_t, std::uint64_t>>;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    base %= p;
    while (e) {
        if (e & 1U)
            r = r * base % p;
        base = base * base % p;
        e >>= 1U;
    }
    return r;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

std::uint64_t to_residue(const Rational& q, unsigned p) {
    const auto num = static_cast<std::uint64_t>(mpz_fdiv_ui(q.get_num_mpz_t(), p));
    const auto den = static_cast<std::uint64_t>(mpz_fdiv_ui(q.get_den_mpz_t(), p));
    if (den == 0)
        throw ValidationError("cdga", "coefficient denominator vanishes in the coefficient field");
    return num * inverse_mod(den, p) % p;
}

// Divide by the content and make the leading entry positive.
void normalize(IntVec& v) {
    if (v.empty())
        return;
    Integer g = 0;
    for (const auto& [_, x] : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1)
            break;
    }
    if (v.front().second < 0)
        g = -g;
    if (g != 1)
        for (auto& [_, x] : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Returns sa * v - sp * p, dropping zeros; both vectors sorted by row.
IntVec combine(const IntVec& v, const Integer& sa, const IntVec& p, const Integer& sp) {
    IntVec out;
    out.reserve(v.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < p.size()) {
        if (j == p.size() || (i < v.size() && v[i].first < p[j].first)) {
            out.emplace_back(v[i].first, sa * v[i].second);
            ++i;
        } else if (i == v.size() || p[j].first < v[i].first) {
            out.emplace_back(p[j].first, -sp * p[j].second);
            ++j;
        } else {
            Integer x = sa * v[i].second - sp * p[j].second;
            if (x != 0)
                out.emplace_back(v[i].first, std::move(x));
            ++i;
            ++j;
        }
    }
    return out;
}

std::size_t rank_rational(const ExactMatrix& m) {
    std::vector<IntVec> pivots(m.rows);
    std::size_t rank = 0;
    for (const auto& column : m.columns) {
        if (column.empty())
            continue;
        // Clear denominators so the column lives over Z.
        Integer lcm = 1;
        for (const auto& [_, q] : column)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
        IntVec v;
        v.reserve(column.size());
        for (const auto& [row, q] : column)
            v.emplace_back(row, Integer(q.get_num() * (lcm / q.get_den())));
        normalize(v);
        while (!v.empty()) {
            IntVec& p = pivots[v.front().first];
            if (p.empty()) {
                p = std::move(v);
                ++rank;
                break;
            }
            Integer g;
            mpz_gcd(g.get_mpz_t(), p.front().second.get_mpz_t(), v.front().second.get_mpz_t());
            const Integer sa = p.front().second / g;
            const Integer sp = v.front().second / g;
            v = combine(v, sa, p, sp);
            normalize(v);
        }
    }
    return rank;
}

std::size_t rank_modular(const ExactMatrix& m) {
    const std::uint64_t p = m.characteristic;
    std::vector<ModVec> pivots(m.rows);
    std::size_t rank = 0;
    for (const auto& column : m.columns) {
        ModVec v;
        v.reserve(column.size());
        for (const auto& [row, q] : column) {
            const std::uint64_t r = to_residue(q, m.characteristic);
            if (r)
                v.emplace_back(row, r);
        }
        while (!v.empty()) {
            ModVec& piv = pivots[v.front().first];
            if (piv.empty()) {
                const std::uint64_t inv = inverse_mod(v.front().second, p);
                for (auto& [_, x] : v)
                    x = x * inv % p;
                piv = std::move(v);
                ++rank;
                break;
            }
            // v -= v.lead * piv (piv has leading entry 1)
            const std::uint64_t s = v.front().second;
            ModVec out;
            out.reserve(v.size() + piv.size());
            std::size_t i = 0, j = 0;
            while (i < v.size() || j < piv.size()) {
                if (j == piv.size() || (i < v.size() && v[i].first < piv[j].first)) {
                    out.push_back(v[i++]);
                } else if (i == v.size() || piv[j].first < v[i].first) {
                    out.emplace_back(piv[j].first, (p - s * piv[j].second % p) % p);
                    ++j;
                } else {
                    const std::uint64_t x = (v[i].second + p - s * piv[j].second % p) % p;
                    if (x)
                        out.emplace_back(v[i].first, x);
                    ++i;
                    ++j;
                }
            }
            v = std::move(out);
        }
    }
    return rank;
}

} // namespace

Rational ExactMatrix::at(std::size_t row, std::size_t col) const {
    for (const auto& [r, x] : columns.at(col))
        if (r == row)
            return x;
    return Rational(0);
}

bool ExactMatrix::is_zero() const {
    return std::all_of(columns.begin(), columns.end(), [](const auto& col) { return col.empty(); });
}

ExactMatrix differential_matrix(const CDGA& c, int degree) {
    const auto source = monomial_basis(c, degree);
    const auto target = monomial_basis(c, degree + 1);
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < target.size(); ++i)
        index.emplace(target[i], i);

    ExactMatrix m;
    m.rows = target.size();
    m.cols = source.size();
    m.characteristic = c.field.characteristic;
    m.columns.resize(source.size());
    for (std::size_t j = 0; j < source.size(); ++j) {
        auto& column = m.columns[j];
        for (const auto& [mono, coeff] : apply_differential(c, source[j])) {
            auto it = index.find(mono);
            if (it == index.end())
                throw ValidationError("homogeneity", "non-homogeneous differential");
            if (m.characteristic == 0) {
                column.emplace_back(it->second, coeff);
            } else {
                const std::uint64_t r = to_residue(coeff, m.characteristic);
                if (r)
                    column.emplace_back(it->second, Rational(static_cast<unsigned long>(r)));
            }
        }
        std::sort(column.begin(), column.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    }
    return m;
}

ExactMatrix matrix_product(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols != b.rows)
        throw std::invalid_argument("matrix_product: dimension mismatch");
    ExactMatrix out;
    out.rows = a.rows;
    out.cols = b.cols;
    out.characteristic = a.characteristic;
    out.columns.resize(b.cols);
    for (std::size_t j = 0; j < b.cols; ++j) {
        std::map<std::size_t, Rational> acc;
        for (const auto& [k, bv] : b.columns[j])
            for (const auto& [i, av] : a.columns[k])
                acc[i] += av * bv;
        for (auto& [i, v] : acc) {
            if (out.characteristic != 0) {
                const std::uint64_t r = to_residue(v, out.characteristic);
                if (r)
                    out.columns[j].emplace_back(i, Rational(static_cast<unsigned long>(r)));
            } else if (v != 0) {
                out.columns[j].emplace_back(i, v);
            }
        }
    }
    return out;
}

std::size_t matrix_rank(const ExactMatrix& m) {
    return m.characteristic == 0 ? rank_rational(m) : rank_modular(m);
}

GradedDims cohomology_dimensions(const CDGA& c, std::size_t n, unsigned threads) {
    validate_cdga(c);
    struct Slice {
        std::size_t basis_size = 0;
        std::size_t rank_out = 0;  // rank of D_m
    };
    auto compute = [&c](std::size_t m) {
        const ExactMatrix d = differential_matrix(c, static_cast<int>(m));
        return Slice{d.cols, matrix_rank(d)};
    };

    std::vector<Slice> slices(n + 1);
    if (threads <= 1) {
        for (std::size_t m = 0; m <= n; ++m)
            slices[m] = compute(m);
    } else {
        // Degree m goes to worker m % threads; each slot is written exactly once.
        std::vector<std::future<void>> workers;
        for (unsigned t = 0; t < threads; ++t)
            workers.push_back(std::async(std::launch::async, [&, t] {
                for (std::size_t m = t; m <= n; m += threads)
                    slices[m] = compute(m);
            }));
        for (auto& w : workers)
            w.get();
    }

    GradedDims out;
    out.dims.resize(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        const std::size_t rank_in = m == 0 ? 0 : slices[m - 1].rank_out;
        if (slices[m].basis_size < slices[m].rank_out + rank_in)
            throw ValidationError("differential", "δ∘δ != 0: negative cohomology dimension in degree " +
                                                      std::to_string(m));
        out.dims[m] = slices[m].basis_size - slices[m].rank_out - rank_in;
    }
    return out;
}

bool differential_squares_to_zero(const CDGA& c, int degree) {
    return matrix_product(differential_matrix(c, degree + 1), differential_matrix(c, degree)).is_zero();
}

std::optional<std::size_t> first_mismatch(const std::vector<std::size_t>& dims, const TruncatedSeries& s) {
    const std::size_t n = std::min(dims.size(), s.truncation() + 1);
    for (std::size_t m = 0; m < n; ++m)
        if (s[m] != static_cast<unsigned long>(dims[m]))
            return m;
    if (dims.size() != s.truncation() + 1)
        return n;
    return std::nullopt;
}

VerificationResult verify_bg(const CurveTopology& c, const RealBundleType& b, const FieldSpec& k, std::size_t n,
                             unsigned threads) {
    const CohomologyReport closed = bg_cohomology(c, b, k, n);
    const TruncatedSeries& series = *closed.series;

    VerificationResult result;
    result.case_label = *closed.case_label;
    result.closed_form_dims = series.coeffs();

    auto decompositions = all_decompositions(c);
    if (decompositions.size() > 2)
        decompositions.resize(2);
    result.pass = true;
    for (const auto& dec : decompositions) {
        const CDGA model = build_koszul_tate(dec, circle_types(dec, b), k);
        DecompositionCheck check;
        check.decomposition = dec;
        check.oracle_dims = cohomology_dimensions(model, n, threads).dims;
        check.first_mismatch_degree = first_mismatch(check.oracle_dims, series);
        check.pass = !check.first_mismatch_degree;
        if (!check.pass && result.pass) {
            result.pass = false;
            const std::size_t m = *check.first_mismatch_degree;
            result.first_mismatch_degree = m;
            result.mismatch_values = {m < check.oracle_dims.size() ? check.oracle_dims[m] : 0,
                                      m <= series.truncation() ? series[m] : Integer(0)};
        }
        result.decompositions.push_back(std::move(check));
    }
    result.oracle_dims = result.decompositions.front().oracle_dims;
    return result;
}

} // namespace rb
