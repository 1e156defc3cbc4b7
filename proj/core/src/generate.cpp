#include "mss/generate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mss {

std::int64_t rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) {
        throw std::invalid_argument("rng::uniform: empty range");
    }
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Modulo bias is irrelevant for test-instance sampling.
    return lo + static_cast<std::int64_t>(span == 0 ? next() : next() % span);
}

instance generate_instance(const instance_spec& spec, rng& r) {
    if (spec.m == 0) {
        throw std::invalid_argument("generate_instance: pattern length must be >= 1");
    }
    if (spec.sigma < 1) {
        throw std::invalid_argument("generate_instance: alphabet size must be >= 1");
    }
    if (spec.max_class_size == 0) {
        throw std::invalid_argument("generate_instance: max class size must be >= 1");
    }
    if (spec.max_bound < 0) {
        throw std::invalid_argument("generate_instance: max bound must be >= 0");
    }

    instance out;
    out.text_values.reserve(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        out.text_values.push_back(r.uniform(0, spec.sigma - 1));
    }

    const std::size_t cap =
        std::min<std::size_t>(spec.max_class_size, static_cast<std::size_t>(spec.sigma));
    out.positions.reserve(spec.m);
    for (std::size_t i = 0; i < spec.m; ++i) {
        const std::size_t size = static_cast<std::size_t>(r.uniform(1, static_cast<std::int64_t>(cap)));
        std::set<symbol> members;
        while (members.size() < size) {
            members.insert(r.uniform(0, spec.sigma - 1));
        }
        std::optional<std::int64_t> bound;
        if (spec.with_bounds && r.coin()) {
            bound = r.uniform(0, spec.max_bound);
        }
        out.positions.push_back(
            {character_class({members.begin(), members.end()}), bound});
    }
    return out;
}

score_model generate_model(model_kind kind, const std::vector<pattern_position>& positions,
                           const model_spec& spec, rng& r) {
    switch (kind) {
        case model_kind::exact:
            return score_model::exact();
        case model_kind::truncated_l1:
            return score_model::truncated_l1(r.uniform(0, spec.max_tau),
                                             r.uniform(0, spec.max_b));
        case model_kind::bounded_l1:
            return score_model::bounded_l1(r.uniform(0, spec.max_tau), r.uniform(0, spec.max_b));
        case model_kind::table: {
            // Table keys follow the omega enumeration without a global tau,
            // matching how a table model resolves the pattern.
            const pattern p = pattern::build(positions, std::nullopt);
            assignment_table table;
            for (symbol c = 0; c < spec.sigma; ++c) {
                for (std::size_t s = 0; s < p.omega().size(); ++s) {
                    if (r.coin()) {
                        table.insert(c, s, r.uniform(-spec.max_table_score, spec.max_table_score));
                    }
                }
            }
            return score_model::table(std::move(table), r.uniform(0, spec.max_b));
        }
    }
    throw std::logic_error("generate_model: unknown model kind");
}

}  // namespace mss
