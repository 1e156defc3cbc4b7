#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mss/engine.hpp"
#include "mss/generate.hpp"
#include "mss/scoring.hpp"

namespace mss {

struct verify_config {
    std::uint64_t seed = 1;
    std::size_t cases_per_kind = 200;
    std::size_t max_n = 512;
    std::vector<std::size_t> m_choices = {1, 2, 3, 4, 7, 8, 16, 33, 64};
    std::int64_t sigma_max = 16;
    std::size_t max_class_size = 5;
    std::int64_t max_tau = 4;
    std::int64_t max_b = 32;
    std::int64_t max_table_score = 8;
    engine_options engine;

    // Test hook: corrupt the engine scores of this global case index (0-based
    // across all kinds) so mismatch reporting can be exercised end to end.
    std::size_t inject_fault_at = static_cast<std::size_t>(-1);
};

struct verify_mismatch {
    model_kind kind = model_kind::exact;
    std::size_t case_index = 0;  // within the kind
    std::uint64_t seed = 0;
    instance inst;
    std::string detail;
};

struct verify_summary {
    std::size_t cases_run = 0;
    std::optional<verify_mismatch> mismatch;
};

// Runs cases_per_kind random instances for each model kind and compares the
// engine against the naive oracle: score arrays and report lists must match
// exactly. Stops at the first mismatch.
verify_summary run_equivalence_check(const verify_config& cfg);

}  // namespace mss
