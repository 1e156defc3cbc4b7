#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mss/core.hpp"
#include "mss/scoring.hpp"

namespace mss {

enum class polynomial_side { text, pattern };

// Polynomial with score_vector coefficients, ascending degree. Text-side
// coefficients have dimension |Sigma|, pattern-side |Omega|.
struct vector_polynomial {
    std::vector<score_vector> coeffs;
    polynomial_side side = polynomial_side::text;

    std::size_t length() const noexcept { return coeffs.size(); }
    std::size_t dim() const noexcept { return coeffs.empty() ? 0 : coeffs.front().dim(); }
};

// Operation counters. leaf_products counts leaf evaluations of the bilinear
// map, vector_additions counts Phase-1 score_vector additions (both operand
// sides), scalar_additions counts the integer additions and subtractions of
// the Phase-3 recombination inside each product, segments counts text chunks.
struct engine_stats {
    std::uint64_t leaf_products = 0;
    std::uint64_t vector_additions = 0;
    std::uint64_t scalar_additions = 0;
    std::uint64_t segments = 0;

    void merge(const engine_stats& other) noexcept {
        leaf_products += other.leaf_products;
        vector_additions += other.vector_additions;
        scalar_additions += other.scalar_additions;
        segments += other.segments;
    }

    // {"leaf_products":..,"vector_additions":..,"scalar_additions":..,"segments":..}
    std::string to_json() const;

    bool operator==(const engine_stats&) const = default;
};

struct engine_options {
    // Worker threads for the independent segment products. Output is
    // byte-identical for any value.
    int threads = 1;

    // Operand length at or below which a product is finished by schoolbook
    // cross products. 1 recurses all the way down and yields the textbook
    // operation counts.
    std::size_t karatsuba_cutoff = 2;

    // search(): report every alignment, not just the fitting ones.
    bool report_all = false;
};

// Bilinear leaf map: sum over (r, s) of u[r] * w[s] * t[r][s], iterating the
// non-zero entries of u.
std::int64_t leaf_product(const score_vector& u, const score_vector& w, const score_table& t);

// Appends zero vectors up to the next power of two; zero coefficients fall
// through the bilinear map, so read-off coefficients are unchanged.
vector_polynomial pad_to_power_of_two(const vector_polynomial& p);

// Karatsuba product of equal power-of-two-length polynomials with the score
// map applied at the leaves. Output coefficient d equals the schoolbook sum
// of leaf products over all index pairs (i, i') with i + i' = d.
std::vector<std::int64_t> kam_multiply(const vector_polynomial& a, const vector_polynomial& b,
                                       const score_table& t, engine_stats& stats,
                                       const engine_options& opts = {});

// All alignment scores v[j] = sum_i psi(T[j+i-1], P[i]), 0-based j in
// [0, n-m]. Splits the text into ceil(n/m) chunks of length m, multiplies
// each against the pattern polynomial, and overlap-adds the windows.
// Returns an empty array when m > n.
std::vector<std::int64_t> convolve_scores(const text& t, const pattern& p,
                                          const score_table& table, engine_stats& stats,
                                          const engine_options& opts = {});

struct search_result {
    std::vector<std::int64_t> scores;   // v, 0-based; empty when m > n
    std::vector<match_report> reports;  // fitting alignments, or all with report_all
    engine_stats stats;
};

// End-to-end search: builds the alphabet, resolves the omega symbols against
// the model, precomputes the score table, convolves, applies the verdict.
search_result search(std::span<const symbol> text_values,
                     std::span<const pattern_position> positions, const score_model& model,
                     const engine_options& opts = {});

// Same entry point for callers that already built the domain objects. The
// pattern is re-resolved when its build-time tau differs from the model's.
search_result search(const text& t, const pattern& p, const score_model& model,
                     const engine_options& opts = {});

}  // namespace mss
