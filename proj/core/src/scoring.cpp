#include "mss/scoring.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "checked_arith.hpp"

namespace mss {

void assignment_table::insert(symbol c, std::size_t omega_index, std::int64_t value) {
    auto [it, inserted] = entries_.emplace(std::make_pair(c, omega_index), value);
    if (!inserted) {
        throw input_format_error("duplicate assignment-table entry for (" + std::to_string(c) +
                                 ", " + std::to_string(omega_index) + ")");
    }
}

std::int64_t assignment_table::lookup(symbol c, std::size_t omega_index) const noexcept {
    auto it = entries_.find(std::make_pair(c, omega_index));
    return it == entries_.end() ? 0 : it->second;
}

namespace {

void require_non_negative(const char* what, std::int64_t v) {
    if (v < 0) {
        throw std::invalid_argument(std::string(what) + " must be non-negative, got " +
                                    std::to_string(v));
    }
}

}  // namespace

score_model score_model::exact() {
    return score_model{};
}

score_model score_model::truncated_l1(std::optional<std::int64_t> tau, std::int64_t b) {
    if (tau) require_non_negative("tau", *tau);
    require_non_negative("b", b);
    score_model m;
    m.kind_ = model_kind::truncated_l1;
    m.tau_ = tau;
    m.b_ = b;
    return m;
}

score_model score_model::bounded_l1(std::optional<std::int64_t> tau, std::int64_t b) {
    if (tau) require_non_negative("tau", *tau);
    require_non_negative("b", b);
    score_model m;
    m.kind_ = model_kind::bounded_l1;
    m.tau_ = tau;
    m.b_ = b;
    return m;
}

score_model score_model::table(assignment_table scores, std::int64_t b) {
    require_non_negative("b", b);
    score_model m;
    m.kind_ = model_kind::table;
    m.b_ = b;
    m.table_ = std::move(scores);
    return m;
}

const assignment_table& score_model::table_scores() const {
    if (kind_ != model_kind::table) {
        throw std::logic_error("table_scores() on a non-table model");
    }
    return table_;
}

std::optional<std::int64_t> score_model::omega_resolution_tau() const noexcept {
    if (kind_ == model_kind::truncated_l1 || kind_ == model_kind::bounded_l1) {
        return tau_;
    }
    return std::nullopt;
}

bool score_model::fits(std::int64_t v, std::size_t m) const noexcept {
    if (verdict() == verdict_mode::equals_m) {
        return v == static_cast<std::int64_t>(m);
    }
    return v <= *b_;
}

std::optional<std::int64_t> effective_bound(const pattern_position& pos,
                                            const score_model& model) {
    if (pos.local_bound) return pos.local_bound;
    if (model.kind() == model_kind::truncated_l1 || model.kind() == model_kind::bounded_l1) {
        if (!model.global_tau()) {
            throw input_format_error(
                "a pattern position has no private bound and the model has no global tau");
        }
        return model.global_tau();
    }
    return std::nullopt;
}

std::int64_t psi_exact(symbol c, const character_class& cls) noexcept {
    return cls.contains(c) ? 1 : 0;
}

std::int64_t psi_truncated(symbol c, const character_class& cls, std::int64_t tau) {
    require_non_negative("tau", tau);
    return std::min(cls.nearest_distance(c), tau);
}

std::int64_t psi_truncated_ball_scan(symbol c, const character_class& cls, std::int64_t tau) {
    require_non_negative("tau", tau);
    // Walk outward from c; the first hit is the nearest distance.
    for (std::int64_t d = 0; d < tau; ++d) {
        if (cls.contains(c - d) || cls.contains(c + d)) return d;
    }
    return tau;
}

std::int64_t psi_bounded(symbol c, const character_class& cls, std::int64_t tau, std::int64_t b) {
    require_non_negative("tau", tau);
    require_non_negative("b", b);
    std::int64_t d = cls.nearest_distance(c);
    return d <= tau ? d : detail::checked_add(b, 1);
}

std::int64_t psi_table(symbol c, std::size_t omega_index, const score_model& model) {
    return model.table_scores().lookup(c, omega_index);
}

score_table::score_table(std::size_t sigma_dim, std::size_t omega_dim)
    : sigma_dim_(sigma_dim), omega_dim_(omega_dim), cells_(sigma_dim * omega_dim, 0) {}

std::int64_t score_table::max_abs_entry() const noexcept {
    std::int64_t best = 0;
    for (std::int64_t v : cells_) {
        best = std::max(best, v < 0 ? -v : v);
    }
    return best;
}

namespace {

std::int64_t local_score(const score_model& model, symbol c, const omega_symbol& w,
                         std::size_t omega_index) {
    switch (model.kind()) {
        case model_kind::exact:
            return psi_exact(c, w.cls);
        case model_kind::truncated_l1:
            if (!w.bound) {
                throw input_format_error(
                    "truncated-l1 needs a tau for every omega symbol; give --tau or per-position "
                    "bounds");
            }
            return psi_truncated(c, w.cls, *w.bound);
        case model_kind::bounded_l1:
            if (!w.bound) {
                throw input_format_error(
                    "bounded-l1 needs a tau for every omega symbol; give --tau or per-position "
                    "bounds");
            }
            return psi_bounded(c, w.cls, *w.bound, *model.aggregate_bound());
        case model_kind::table:
            return psi_table(c, omega_index, model);
    }
    throw std::logic_error("unreachable model kind");
}

}  // namespace

score_table build_score_table(const score_model& model, const alphabet& a, const pattern& p) {
    score_table t(a.size(), p.omega().size());
    std::int64_t max_abs = 0;
    for (std::size_t r = 0; r < a.size(); ++r) {
        symbol c = a.at_rank(r);
        for (std::size_t s = 0; s < p.omega().size(); ++s) {
            std::int64_t v = local_score(model, c, p.omega()[s], s);
            t.at(r, s) = v;
            max_abs = std::max(max_abs, v < 0 ? -v : v);
        }
    }
    // m * max|score| must fit the 63-bit budget before any summation starts.
    const __int128 budget = static_cast<__int128>(1) << 63;
    if (static_cast<__int128>(p.length()) * max_abs >= budget) {
        throw overflow_error("m * max|score| exceeds the 63-bit budget");
    }
    return t;
}

class_distance_index class_distance_index::build(std::span<const std::int64_t> values) {
    if (values.empty()) {
        throw empty_class_error("class distance index needs a nonempty multiset");
    }
    class_distance_index idx;
    std::vector<std::int64_t> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::int64_t v : sorted) {
        if (!idx.values_.empty() && idx.values_.back() == v) {
            ++idx.freqs_.back();
        } else {
            idx.values_.push_back(v);
            idx.freqs_.push_back(1);
        }
    }

    const std::size_t r = idx.values_.size();
    idx.suffix_counts_.assign(r, 0);
    idx.suffix_sums_.assign(r, 0);
    idx.prefix_counts_.assign(r, 0);
    idx.prefix_sums_.assign(r, 0);

    // S_{j-1} = S_j + (l_j - l_{j-1}) * F_j, filled right to left; S_r = 0.
    idx.suffix_counts_[r - 1] = idx.freqs_[r - 1];
    for (std::size_t j = r - 1; j-- > 0;) {
        idx.suffix_counts_[j] = detail::checked_add(idx.suffix_counts_[j + 1], idx.freqs_[j]);
        std::int64_t gap = detail::checked_sub(idx.values_[j + 1], idx.values_[j]);
        idx.suffix_sums_[j] = detail::checked_add(
            idx.suffix_sums_[j + 1], detail::checked_mul(gap, idx.suffix_counts_[j + 1]));
    }

    // Mirrored pass for the values at or below the query point.
    idx.prefix_counts_[0] = idx.freqs_[0];
    for (std::size_t j = 1; j < r; ++j) {
        idx.prefix_counts_[j] = detail::checked_add(idx.prefix_counts_[j - 1], idx.freqs_[j]);
        std::int64_t gap = detail::checked_sub(idx.values_[j], idx.values_[j - 1]);
        idx.prefix_sums_[j] = detail::checked_add(
            idx.prefix_sums_[j - 1], detail::checked_mul(gap, idx.prefix_counts_[j - 1]));
    }
    return idx;
}

std::int64_t class_distance_index::cumulative_distance(std::int64_t l) const {
    const std::size_t r = values_.size();
    // First value strictly above l; everything below it is on the prefix side.
    auto it = std::upper_bound(values_.begin(), values_.end(), l);
    std::size_t hi = static_cast<std::size_t>(it - values_.begin());

    std::int64_t total = 0;
    if (hi < r) {  // values above l: S_j + (l_j - l) * F_j
        std::int64_t gap = detail::checked_sub(values_[hi], l);
        total = detail::checked_add(suffix_sums_[hi],
                                    detail::checked_mul(gap, suffix_counts_[hi]));
    }
    if (hi > 0) {  // values at or below l, mirrored
        std::int64_t gap = detail::checked_sub(l, values_[hi - 1]);
        total = detail::checked_add(
            total, detail::checked_add(prefix_sums_[hi - 1],
                                       detail::checked_mul(gap, prefix_counts_[hi - 1])));
    }
    return total;
}

}  // namespace mss
