#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "realbundles/cdga.hpp"
#include "realbundles/gauge_cohomology.hpp"

namespace rb {

/// Sparse matrix over Q (characteristic 0) or F_p. Entries are stored column
/// by column, sorted by row, zeros omitted; in characteristic p they are the
/// canonical residues 0 < e < p.
struct ExactMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    unsigned characteristic = 0;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> columns;

    Rational at(std::size_t row, std::size_t col) const;
    bool is_zero() const;
};

/// Matrix of δ: basis(degree) -> basis(degree + 1). Column j is the image of
/// the j-th basis monomial of `degree`.
ExactMatrix differential_matrix(const CDGA& c, int degree);

/// a * b, reduced in the field of `a`. Requires a.cols == b.rows.
ExactMatrix matrix_product(const ExactMatrix& a, const ExactMatrix& b);

/// Rank by fraction-free elimination (char 0) or modular elimination (char p),
/// pivoting on the lowest row index of each column in column order.
std::size_t matrix_rank(const ExactMatrix& m);

struct GradedDims {
    std::vector<std::size_t> dims;
    friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

/// dim H^m = |basis(m)| - rank(D_m) - rank(D_{m-1}) for m = 0..n. Degree
/// slices are independent; `threads` > 1 evaluates them concurrently with
/// identical results.
GradedDims cohomology_dimensions(const CDGA& c, std::size_t n, unsigned threads = 1);

/// True iff D_{m+1} * D_m is exactly zero.
bool differential_squares_to_zero(const CDGA& c, int degree);

struct DecompositionCheck {
    SurfaceDecomposition decomposition;
    std::vector<std::size_t> oracle_dims;
    bool pass = false;
    std::optional<std::size_t> first_mismatch_degree;
};

struct VerificationResult {
    bool pass = false;
    GaugeCase case_label = GaugeCase::Generic;
    std::optional<std::size_t> first_mismatch_degree;
    /// Values at the first mismatch (oracle, closed form).
    std::optional<std::pair<std::size_t, Integer>> mismatch_values;
    std::vector<std::size_t> oracle_dims;
    std::vector<Integer> closed_form_dims;
    std::vector<DecompositionCheck> decompositions;
};

/// First degree where dims and the series coefficients differ, if any.
std::optional<std::size_t> first_mismatch(const std::vector<std::size_t>& dims, const TruncatedSeries& s);

/// Runs the oracle on the Koszul-Tate model for the canonical decomposition
/// (and a second decomposition when one exists) and compares against the
/// closed-form classifying-space series through degree n.
VerificationResult verify_bg(const CurveTopology& c, const RealBundleType& b, const FieldSpec& k, std::size_t n,
                             unsigned threads = 1);

} // namespace rb
