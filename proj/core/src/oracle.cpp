#include "mss/oracle.hpp"

#include <optional>
#include <stdexcept>

#include "checked_arith.hpp"

namespace mss {

namespace {

std::int64_t psi_for(const score_model& model, symbol c, const pattern& p, std::size_t i) {
    const pattern_position& pos = p.positions()[i];
    switch (model.kind()) {
        case model_kind::exact:
            return psi_exact(c, pos);
        case model_kind::truncated_l1:
            return psi_truncated(c, pos, effective_bound(pos, model).value());
        case model_kind::bounded_l1:
            return psi_bounded(c, pos, effective_bound(pos, model).value(),
                               model.aggregate_bound().value());
        case model_kind::table:
            return psi_table(c, p.omega_of(i), model);
    }
    throw std::logic_error("psi_for: unknown model kind");
}

}  // namespace

search_result naive_search(const text& t, const pattern& p, const score_model& model,
                           bool report_all) {
    const auto wanted_tau = model.omega_resolution_tau();
    const pattern* active = &p;
    std::optional<pattern> rebuilt;
    if (p.resolved_global_tau() != wanted_tau) {
        rebuilt = pattern::build(p.positions(), wanted_tau);
        active = &*rebuilt;
    }

    const std::size_t n = t.length();
    const std::size_t m = active->length();
    search_result out;
    if (m > n) {
        return out;
    }
    out.scores.reserve(n - m + 1);
    const auto& chars = t.chars();
    for (std::size_t j = 0; j + m <= n; ++j) {
        std::int64_t v = 0;
        for (std::size_t i = 0; i < m; ++i) {
            v = detail::checked_add(v, psi_for(model, chars[j + i], *active, i));
        }
        out.scores.push_back(v);
        const bool verdict = model.fits(v, m);
        if (verdict || report_all) {
            out.reports.push_back({j + 1, v, verdict});
        }
    }
    return out;
}

search_result naive_search(std::span<const symbol> text_values,
                           std::span<const pattern_position> positions, const score_model& model,
                           bool report_all) {
    const alphabet a = build_alphabet(text_values, positions);
    const pattern p = pattern::build({positions.begin(), positions.end()},
                                     model.omega_resolution_tau());
    const text t({text_values.begin(), text_values.end()}, a);
    return naive_search(t, p, model, report_all);
}

std::vector<std::int64_t> schoolbook_multiply(const vector_polynomial& a,
                                              const vector_polynomial& b, const score_table& t) {
    if (a.coeffs.empty() || b.coeffs.empty()) {
        return {};
    }
    std::vector<std::int64_t> out(a.length() + b.length() - 1, 0);
    for (std::size_t i = 0; i < a.length(); ++i) {
        for (std::size_t j = 0; j < b.length(); ++j) {
            out[i + j] = detail::checked_add(out[i + j], leaf_product(a.coeffs[i], b.coeffs[j], t));
        }
    }
    return out;
}

}  // namespace mss
