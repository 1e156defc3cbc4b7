#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mss/errors.hpp"

namespace mss {

// Characters are non-negative integers; classes and texts share this type.
using symbol = std::int64_t;

// Sorted set of the distinct characters in play. Ranks, not raw values,
// index every characteristic vector and score table.
class alphabet {
public:
    alphabet() = default;

    // Sorts and deduplicates; rejects negative values.
    explicit alphabet(std::vector<symbol> values);

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::vector<symbol>& symbols() const noexcept { return symbols_; }

    symbol at_rank(std::size_t r) const;
    bool contains(symbol c) const noexcept;

    // 0-based rank of c; throws not_in_alphabet.
    std::size_t rank(symbol c) const;

    bool operator==(const alphabet&) const = default;

private:
    std::vector<symbol> symbols_;  // strictly increasing
};

// Nonempty sorted set of characters occupying one pattern position.
class character_class {
public:
    // Sorts and deduplicates; rejects empty input and negative members.
    explicit character_class(std::vector<symbol> members);

    const std::vector<symbol>& members() const noexcept { return members_; }
    bool contains(symbol c) const noexcept;

    // L1 distance from c to the nearest member (binary search).
    std::int64_t nearest_distance(symbol c) const noexcept;

    bool operator==(const character_class&) const = default;
    bool operator<(const character_class& other) const { return members_ < other.members_; }

private:
    std::vector<symbol> members_;  // strictly increasing, nonempty
};

// One pattern position: a class plus an optional private local bound that
// overrides the model's global tau.
struct pattern_position {
    character_class cls;
    std::optional<std::int64_t> local_bound;

    bool operator==(const pattern_position&) const = default;
};

// One representative per distinct (class, effective bound) pair.
struct omega_symbol {
    character_class cls;
    std::optional<std::int64_t> bound;  // resolved effective bound

    bool operator==(const omega_symbol&) const = default;
};

// The pattern with its omega symbols enumerated. Positions with the same
// class but different effective bounds get distinct symbols.
class pattern {
public:
    // Enumerates omega symbols in first-occurrence order. global_tau fills
    // positions that carry no private bound; resolution happens here, before
    // the enumeration, so an explicit bound equal to global_tau merges with
    // an absent one.
    static pattern build(std::vector<pattern_position> positions,
                         std::optional<std::int64_t> global_tau = std::nullopt);

    std::size_t length() const noexcept { return positions_.size(); }  // m
    const std::vector<pattern_position>& positions() const noexcept { return positions_; }
    const std::vector<omega_symbol>& omega() const noexcept { return omega_; }

    // 0-based position index -> omega index.
    std::size_t omega_of(std::size_t i) const;

    // The global tau the enumeration was resolved with.
    std::optional<std::int64_t> resolved_global_tau() const noexcept { return global_tau_; }

private:
    pattern() = default;

    std::vector<pattern_position> positions_;
    std::vector<omega_symbol> omega_;
    std::vector<std::size_t> omega_of_;
    std::optional<std::int64_t> global_tau_;
};

// Text over an alphabet; characters are kept both as values and as ranks.
// The alphabet is stored so downstream stages index score tables consistently.
class text {
public:
    text() = default;

    // Validates membership of every character; throws not_in_alphabet.
    text(std::vector<symbol> chars, alphabet a);

    std::size_t length() const noexcept { return chars_.size(); }  // n
    const std::vector<symbol>& chars() const noexcept { return chars_; }
    const std::vector<std::uint32_t>& ranks() const noexcept { return ranks_; }
    const alphabet& alpha() const noexcept { return alpha_; }

private:
    std::vector<symbol> chars_;
    std::vector<std::uint32_t> ranks_;
    alphabet alpha_;
};

// Integer coefficient vector over Sigma (text side) or Omega (pattern side).
// Starts out as a binary indicator; Phase-1 additions turn it into a general
// integer vector.
class score_vector {
public:
    score_vector() = default;
    explicit score_vector(std::size_t dim) : entries_(dim, 0) {}
    explicit score_vector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}

    static score_vector unit(std::size_t dim, std::size_t index);

    std::size_t dim() const noexcept { return entries_.size(); }
    std::int64_t operator[](std::size_t i) const { return entries_[i]; }
    std::int64_t& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<std::int64_t>& entries() const noexcept { return entries_; }

    // Component-wise +=; dims must match.
    void add(const score_vector& other);

    bool operator==(const score_vector&) const = default;

private:
    std::vector<std::int64_t> entries_;
};

// One alignment: 1-based start position, aggregate score v_j, verdict.
struct match_report {
    std::size_t position = 0;
    std::int64_t score = 0;
    bool verdict = false;

    bool operator==(const match_report&) const = default;
};

// Union of all text characters and all class members.
alphabet build_alphabet(std::span<const symbol> text_values,
                        std::span<const pattern_position> positions);

// Binary vector of dimension |Sigma| with a single 1 at rank(c).
score_vector char_vector(symbol c, const alphabet& a);

// Binary vector of dimension |Omega| with a single 1 at omega_of(i); i is
// 1-based to match report indexing.
score_vector omega_vector(std::size_t i, const pattern& p);

// Mismatch count m - v under the exact-membership model; requires 0 <= v <= m.
std::int64_t mismatches_from_score(std::int64_t v, std::int64_t m);

}  // namespace mss
