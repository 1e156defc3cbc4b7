#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mss/core.hpp"
#include "mss/scoring.hpp"

namespace mss {

// Seeded generator with a fixed sampling scheme, so identical seeds produce
// identical instances across platforms and standard libraries.
class rng {
public:
    explicit rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Inclusive bounds.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool coin() { return (next() & 1u) != 0; }

private:
    std::mt19937_64 gen_;
};

struct instance_spec {
    std::size_t n = 0;
    std::size_t m = 1;
    std::int64_t sigma = 2;          // characters drawn from [0, sigma)
    std::size_t max_class_size = 3;  // clamped to sigma
    bool with_bounds = false;        // give ~half the positions a private bound
    std::int64_t max_bound = 4;
};

struct instance {
    std::vector<symbol> text_values;
    std::vector<pattern_position> positions;
};

// Throws std::invalid_argument on degenerate sizes (m = 0, sigma < 1, ...).
instance generate_instance(const instance_spec& spec, rng& r);

struct model_spec {
    std::int64_t max_tau = 4;
    std::int64_t max_b = 32;
    std::int64_t max_table_score = 8;
    std::int64_t sigma = 2;  // table rows cover characters in [0, sigma)
};

// Random model of the given kind. L1 kinds always receive a global tau, so
// patterns without private bounds stay well-formed.
score_model generate_model(model_kind kind, const std::vector<pattern_position>& positions,
                           const model_spec& spec, rng& r);

}  // namespace mss
