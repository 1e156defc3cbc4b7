#include "mss/core.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace mss {

alphabet::alphabet(std::vector<symbol> values) : symbols_(std::move(values)) {
    for (symbol c : symbols_) {
        if (c < 0) {
            throw input_format_error("alphabet symbol must be non-negative, got " +
                                     std::to_string(c));
        }
    }
    std::sort(symbols_.begin(), symbols_.end());
    symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
}

symbol alphabet::at_rank(std::size_t r) const {
    if (r >= symbols_.size()) {
        throw std::out_of_range("alphabet rank " + std::to_string(r) + " out of range");
    }
    return symbols_[r];
}

bool alphabet::contains(symbol c) const noexcept {
    return std::binary_search(symbols_.begin(), symbols_.end(), c);
}

std::size_t alphabet::rank(symbol c) const {
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), c);
    if (it == symbols_.end() || *it != c) {
        throw not_in_alphabet("character " + std::to_string(c) + " is not in the alphabet");
    }
    return static_cast<std::size_t>(it - symbols_.begin());
}

character_class::character_class(std::vector<symbol> members) : members_(std::move(members)) {
    if (members_.empty()) {
        throw empty_class_error("character class must be nonempty");
    }
    for (symbol c : members_) {
        if (c < 0) {
            throw input_format_error("class member must be non-negative, got " +
                                     std::to_string(c));
        }
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool character_class::contains(symbol c) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), c);
}

std::int64_t character_class::nearest_distance(symbol c) const noexcept {
    auto it = std::lower_bound(members_.begin(), members_.end(), c);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    if (it != members_.end()) best = *it - c;
    if (it != members_.begin()) best = std::min(best, c - *(it - 1));
    return best;
}

pattern pattern::build(std::vector<pattern_position> positions,
                       std::optional<std::int64_t> global_tau) {
    if (positions.empty()) {
        throw input_format_error("pattern must have at least one position");
    }
    pattern p;
    p.positions_ = std::move(positions);
    p.global_tau_ = global_tau;
    p.omega_of_.resize(p.positions_.size());

    using key_type = std::pair<std::vector<symbol>, std::optional<std::int64_t>>;
    std::map<key_type, std::size_t> seen;
    for (std::size_t i = 0; i < p.positions_.size(); ++i) {
        const pattern_position& pos = p.positions_[i];
        std::optional<std::int64_t> bound =
            pos.local_bound.has_value() ? pos.local_bound : global_tau;
        key_type key{pos.cls.members(), bound};
        auto [it, inserted] = seen.emplace(std::move(key), p.omega_.size());
        if (inserted) {
            p.omega_.push_back(omega_symbol{pos.cls, bound});
        }
        p.omega_of_[i] = it->second;
    }
    return p;
}

std::size_t pattern::omega_of(std::size_t i) const {
    if (i >= omega_of_.size()) {
        throw std::out_of_range("pattern position " + std::to_string(i) + " out of range");
    }
    return omega_of_[i];
}

text::text(std::vector<symbol> chars, alphabet a)
    : chars_(std::move(chars)), alpha_(std::move(a)) {
    ranks_.reserve(chars_.size());
    for (symbol c : chars_) {
        ranks_.push_back(static_cast<std::uint32_t>(alpha_.rank(c)));
    }
}

score_vector score_vector::unit(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw std::out_of_range("unit index " + std::to_string(index) + " out of range");
    }
    score_vector v(dim);
    v.entries_[index] = 1;
    return v;
}

void score_vector::add(const score_vector& other) {
    if (other.dim() != dim()) {
        throw std::invalid_argument("score_vector dims differ: " + std::to_string(dim()) +
                                    " vs " + std::to_string(other.dim()));
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += other.entries_[i];
    }
}

alphabet build_alphabet(std::span<const symbol> text_values,
                        std::span<const pattern_position> positions) {
    std::vector<symbol> values(text_values.begin(), text_values.end());
    for (const pattern_position& pos : positions) {
        values.insert(values.end(), pos.cls.members().begin(), pos.cls.members().end());
    }
    return alphabet(std::move(values));
}

score_vector char_vector(symbol c, const alphabet& a) {
    return score_vector::unit(a.size(), a.rank(c));
}

score_vector omega_vector(std::size_t i, const pattern& p) {
    if (i < 1 || i > p.length()) {
        throw std::out_of_range("position index " + std::to_string(i) +
                                " out of range 1.." + std::to_string(p.length()));
    }
    return score_vector::unit(p.omega().size(), p.omega_of(i - 1));
}

std::int64_t mismatches_from_score(std::int64_t v, std::int64_t m) {
    if (v < 0 || v > m) {
        throw score_out_of_range("score " + std::to_string(v) + " outside [0, " +
                                 std::to_string(m) + "]");
    }
    return m - v;
}

}  // namespace mss
