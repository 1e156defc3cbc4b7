#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mss/core.hpp"
#include "mss/engine.hpp"
#include "mss/scoring.hpp"

namespace mss {

// Brute-force search: evaluates psi directly per (text char, position), no
// score table in the path, so table-construction bugs cannot mask engine
// bugs. Verdict rules match engine search; stats stay zero.
search_result naive_search(const text& t, const pattern& p, const score_model& model,
                           bool report_all = false);

search_result naive_search(std::span<const symbol> text_values,
                           std::span<const pattern_position> positions, const score_model& model,
                           bool report_all = false);

// Quadratic reference for kam_multiply: c_d = sum of leaf products over all
// index pairs (i, i') with i + i' = d. Accepts any operand lengths.
std::vector<std::int64_t> schoolbook_multiply(const vector_polynomial& a,
                                              const vector_polynomial& b, const score_table& t);

}  // namespace mss
