#include "mss/selftest.hpp"

#include <array>

#include "mss/oracle.hpp"

namespace mss {

namespace {

std::string describe_divergence(const search_result& engine_out, const search_result& oracle_out) {
    if (engine_out.scores.size() != oracle_out.scores.size()) {
        return "score array lengths differ: engine " + std::to_string(engine_out.scores.size()) +
               ", oracle " + std::to_string(oracle_out.scores.size());
    }
    for (std::size_t j = 0; j < engine_out.scores.size(); ++j) {
        if (engine_out.scores[j] != oracle_out.scores[j]) {
            return "score at alignment " + std::to_string(j + 1) + ": engine " +
                   std::to_string(engine_out.scores[j]) + ", oracle " +
                   std::to_string(oracle_out.scores[j]);
        }
    }
    if (engine_out.reports != oracle_out.reports) {
        return "verdict report lists differ";
    }
    return "";
}

}  // namespace

verify_summary run_equivalence_check(const verify_config& cfg) {
    static constexpr std::array kinds = {model_kind::exact, model_kind::truncated_l1,
                                         model_kind::bounded_l1, model_kind::table};
    verify_summary summary;
    rng r(cfg.seed);
    std::size_t global_case = 0;

    for (const model_kind kind : kinds) {
        for (std::size_t i = 0; i < cfg.cases_per_kind; ++i, ++global_case) {
            instance_spec spec;
            spec.m = cfg.m_choices[static_cast<std::size_t>(
                r.uniform(0, static_cast<std::int64_t>(cfg.m_choices.size()) - 1))];
            spec.n = static_cast<std::size_t>(
                r.uniform(static_cast<std::int64_t>(spec.m), static_cast<std::int64_t>(cfg.max_n)));
            spec.sigma = r.uniform(1, cfg.sigma_max);
            spec.max_class_size = cfg.max_class_size;
            spec.with_bounds = kind != model_kind::exact && r.coin();
            spec.max_bound = cfg.max_tau;
            const instance inst = generate_instance(spec, r);

            model_spec mspec;
            mspec.max_tau = cfg.max_tau;
            mspec.max_b = cfg.max_b;
            mspec.max_table_score = cfg.max_table_score;
            mspec.sigma = spec.sigma;
            const score_model model = generate_model(kind, inst.positions, mspec, r);

            search_result engine_out =
                search(inst.text_values, inst.positions, model, cfg.engine);
            if (global_case == cfg.inject_fault_at && !engine_out.scores.empty()) {
                engine_out.scores[0] += 1;
            }
            const search_result oracle_out =
                naive_search(inst.text_values, inst.positions, model, cfg.engine.report_all);

            ++summary.cases_run;
            const std::string detail = describe_divergence(engine_out, oracle_out);
            if (!detail.empty()) {
                verify_mismatch mm;
                mm.kind = kind;
                mm.case_index = i;
                mm.seed = cfg.seed;
                mm.inst = inst;
                mm.detail = detail;
                summary.mismatch = std::move(mm);
                return summary;
            }
        }
    }
    return summary;
}

}  // namespace mss
