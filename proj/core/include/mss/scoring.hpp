#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mss/core.hpp"

namespace mss {

enum class model_kind { exact, truncated_l1, bounded_l1, table };
enum class verdict_mode { equals_m, at_most_b };

// Integer scores keyed by (character value, omega index). Pairs that were
// never inserted score 0; inserting a pair twice is an error.
class assignment_table {
public:
    void insert(symbol c, std::size_t omega_index, std::int64_t value);
    std::int64_t lookup(symbol c, std::size_t omega_index) const noexcept;
    std::size_t size() const noexcept { return entries_.size(); }
    const std::map<std::pair<symbol, std::size_t>, std::int64_t>& entries() const noexcept {
        return entries_;
    }

private:
    std::map<std::pair<symbol, std::size_t>, std::int64_t> entries_;
};

// The pluggable pairwise scoring convention plus the aggregate threshold.
//
//   exact         score 1 on class membership, 0 otherwise; fits when v = m
//   truncated_l1  min(nearest class distance, tau) per position; fits when v <= b
//   bounded_l1    nearest class distance, or the sentinel b+1 past tau; fits when v <= b
//   table         arbitrary integer scores per (character, omega index); fits when v <= b
class score_model {
public:
    static score_model exact();
    static score_model truncated_l1(std::optional<std::int64_t> tau, std::int64_t b);
    static score_model bounded_l1(std::optional<std::int64_t> tau, std::int64_t b);
    static score_model table(assignment_table scores, std::int64_t b);

    model_kind kind() const noexcept { return kind_; }
    verdict_mode verdict() const noexcept {
        return kind_ == model_kind::exact ? verdict_mode::equals_m : verdict_mode::at_most_b;
    }
    std::optional<std::int64_t> global_tau() const noexcept { return tau_; }
    std::optional<std::int64_t> aggregate_bound() const noexcept { return b_; }
    const assignment_table& table_scores() const;

    // The global tau that participates in omega resolution: the L1 kinds
    // resolve against it, exact and table patterns split on private bounds only.
    std::optional<std::int64_t> omega_resolution_tau() const noexcept;

    // Aggregate verdict for one alignment of a length-m pattern.
    bool fits(std::int64_t v, std::size_t m) const noexcept;

private:
    score_model() = default;

    model_kind kind_ = model_kind::exact;
    std::optional<std::int64_t> tau_;
    std::optional<std::int64_t> b_;
    assignment_table table_;
};

// The private local bound when present, otherwise the model's global tau.
// Throws input_format_error when an L1 kind ends up with neither.
std::optional<std::int64_t> effective_bound(const pattern_position& pos, const score_model& model);

// --- local score functions (shared by the table builder and the naive oracle) ---

// 1 if c is a member of the class, 0 otherwise.
std::int64_t psi_exact(symbol c, const character_class& cls) noexcept;
inline std::int64_t psi_exact(symbol c, const pattern_position& pos) noexcept {
    return psi_exact(c, pos.cls);
}

// min over members p of min(|c - p|, tau); nearest-neighbor route.
std::int64_t psi_truncated(symbol c, const character_class& cls, std::int64_t tau);
inline std::int64_t psi_truncated(symbol c, const pattern_position& pos, std::int64_t tau) {
    return psi_truncated(c, pos.cls, tau);
}

// Same value, computed by walking the closed tau-ball around c outward and
// testing membership. Kept as the independent route; must agree with
// psi_truncated everywhere.
std::int64_t psi_truncated_ball_scan(symbol c, const character_class& cls, std::int64_t tau);

// Nearest distance d when d <= tau, otherwise the sentinel b+1. Every other
// score is >= 0, so one sentinel drives the alignment sum past b.
std::int64_t psi_bounded(symbol c, const character_class& cls, std::int64_t tau, std::int64_t b);
inline std::int64_t psi_bounded(symbol c, const pattern_position& pos, std::int64_t tau,
                                std::int64_t b) {
    return psi_bounded(c, pos.cls, tau, b);
}

// Table lookup; missing pairs score 0. Requires kind() == table.
std::int64_t psi_table(symbol c, std::size_t omega_index, const score_model& model);

// |Sigma| x |Omega| matrix of precomputed local scores, row-major by
// character rank.
class score_table {
public:
    score_table() = default;
    score_table(std::size_t sigma_dim, std::size_t omega_dim);

    std::size_t sigma_dim() const noexcept { return sigma_dim_; }
    std::size_t omega_dim() const noexcept { return omega_dim_; }

    std::int64_t at(std::size_t sigma_rank, std::size_t omega_index) const {
        return cells_[sigma_rank * omega_dim_ + omega_index];
    }
    std::int64_t& at(std::size_t sigma_rank, std::size_t omega_index) {
        return cells_[sigma_rank * omega_dim_ + omega_index];
    }
    std::span<const std::int64_t> row(std::size_t sigma_rank) const {
        return {cells_.data() + sigma_rank * omega_dim_, omega_dim_};
    }
    std::int64_t max_abs_entry() const noexcept;

private:
    std::size_t sigma_dim_ = 0;
    std::size_t omega_dim_ = 0;
    std::vector<std::int64_t> cells_;
};

// Materializes the model's local score for every (character, omega symbol)
// pair. Throws overflow_error when m * max|score| leaves the 63-bit budget.
score_table build_score_table(const score_model& model, const alphabet& a, const pattern& p);

// Sorted distinct values with multiplicities and cumulative-sum arrays on
// both sides; answers total L1 distance queries in O(log r).
class class_distance_index {
public:
    // Throws empty_class_error on an empty multiset.
    static class_distance_index build(std::span<const std::int64_t> values);

    std::size_t distinct_count() const noexcept { return values_.size(); }  // r
    std::span<const std::int64_t> values() const noexcept { return values_; }
    std::span<const std::int64_t> freqs() const noexcept { return freqs_; }

    // F_j = f_j + ... + f_r and S_j = sum_{i >= j} (l_i - l_j) f_i, with S_r = 0.
    std::span<const std::int64_t> suffix_counts() const noexcept { return suffix_counts_; }
    std::span<const std::int64_t> suffix_sums() const noexcept { return suffix_sums_; }

    // Mirrored arrays for the values at or below a query point.
    std::span<const std::int64_t> prefix_counts() const noexcept { return prefix_counts_; }
    std::span<const std::int64_t> prefix_sums() const noexcept { return prefix_sums_; }

    // sum over j of |l - l_j| * f_j.
    std::int64_t cumulative_distance(std::int64_t l) const;

private:
    std::vector<std::int64_t> values_;
    std::vector<std::int64_t> freqs_;
    std::vector<std::int64_t> suffix_counts_;
    std::vector<std::int64_t> suffix_sums_;
    std::vector<std::int64_t> prefix_counts_;
    std::vector<std::int64_t> prefix_sums_;
};

inline class_distance_index build_class_distance_index(std::span<const std::int64_t> values) {
    return class_distance_index::build(values);
}

inline std::int64_t cumulative_distance(const class_distance_index& idx, std::int64_t l) {
    return idx.cumulative_distance(l);
}

}  // namespace mss
