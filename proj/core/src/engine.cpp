#include "mss/engine.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <exception>
#include <memory>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>

#include "checked_arith.hpp"

namespace mss {

std::string engine_stats::to_json() const {
    std::string out = "{";
    out += "\"leaf_products\":" + std::to_string(leaf_products);
    out += ",\"vector_additions\":" + std::to_string(vector_additions);
    out += ",\"scalar_additions\":" + std::to_string(scalar_additions);
    out += ",\"segments\":" + std::to_string(segments);
    out += "}";
    return out;
}

std::int64_t leaf_product(const score_vector& u, const score_vector& w, const score_table& t) {
    if (u.dim() != t.sigma_dim() || w.dim() != t.omega_dim()) {
        throw std::invalid_argument("leaf_product: vector dims do not match the score table");
    }
    std::int64_t acc = 0;
    for (std::size_t r = 0; r < u.dim(); ++r) {
        if (u[r] == 0) {
            continue;
        }
        const auto row = t.row(r);
        for (std::size_t s = 0; s < w.dim(); ++s) {
            if (w[s] == 0) {
                continue;
            }
            acc = detail::checked_add(acc, detail::checked_mul(detail::checked_mul(u[r], w[s]), row[s]));
        }
    }
    return acc;
}

vector_polynomial pad_to_power_of_two(const vector_polynomial& p) {
    if (p.coeffs.empty()) {
        throw std::invalid_argument("pad_to_power_of_two: empty polynomial");
    }
    vector_polynomial out = p;
    const std::size_t target = std::bit_ceil(out.coeffs.size());
    out.coeffs.resize(target, score_vector(out.coeffs.front().dim()));
    return out;
}

namespace {

// Karatsuba's subtractive recombination can grow intermediates to
// k^2 * max|u| * max|w| * max|table|; demand two spare bits under 2^63.
void check_capacity(std::size_t k, std::int64_t max_u_l1, std::int64_t max_w_l1,
                    std::int64_t max_entry) {
    const auto clamp1 = [](std::int64_t v) { return v < 1 ? std::int64_t{1} : v; };
    const __int128 worst = static_cast<__int128>(k) * static_cast<__int128>(k) *
                           clamp1(max_u_l1) * clamp1(max_w_l1) * clamp1(max_entry);
    if (worst >= (static_cast<__int128>(1) << 62)) {
        throw overflow_error(
            "instance exceeds the 64-bit score budget (k^2 * max coefficient * max table entry "
            ">= 2^62); reduce the pattern length or the score magnitudes");
    }
}

std::int64_t max_coeff_l1(const vector_polynomial& p) {
    std::int64_t best = 0;
    for (const auto& c : p.coeffs) {
        std::int64_t sum = 0;
        for (std::int64_t e : c.entries()) {
            sum = detail::checked_add(sum, e < 0 ? detail::checked_sub(std::int64_t{0}, e) : e);
        }
        best = std::max(best, sum);
    }
    return best;
}

// Pattern-side recursion tree, built once per product and shared by every
// text segment (and by all threads; immutable after build). Base nodes fold
// the score table through their coefficients: phi_j[r] = sum_s w_j[s]*t[r][s],
// so a leaf product against a text vector is a dot over |Sigma| instead of a
// bilinear sum over |Sigma| x |Omega|.
struct pattern_node {
    std::size_t len = 0;
    std::vector<std::int64_t> phi;      // base nodes: len * sigma, j-major
    std::vector<std::int64_t> sum_buf;  // internal nodes: (len/2) * omega dim
    std::unique_ptr<pattern_node> low, high, sum;

    bool is_base() const noexcept { return !low; }
};

std::unique_ptr<pattern_node> build_pattern_tree(std::span<const std::int64_t> w,
                                                 std::size_t omega_dim, const score_table& t,
                                                 std::size_t cutoff, engine_stats& stats) {
    auto node = std::make_unique<pattern_node>();
    node->len = omega_dim == 0 ? 0 : w.size() / omega_dim;
    if (node->len <= cutoff) {
        const std::size_t sigma = t.sigma_dim();
        node->phi.assign(node->len * sigma, 0);
        for (std::size_t j = 0; j < node->len; ++j) {
            const std::int64_t* wj = w.data() + j * omega_dim;
            for (std::size_t r = 0; r < sigma; ++r) {
                const auto row = t.row(r);
                std::int64_t acc = 0;
                for (std::size_t s = 0; s < omega_dim; ++s) {
                    if (wj[s] != 0) {
                        acc = detail::checked_add(acc, detail::checked_mul(wj[s], row[s]));
                    }
                }
                node->phi[j * sigma + r] = acc;
            }
        }
        return node;
    }
    const std::size_t half = node->len / 2;
    const auto low_half = w.subspan(0, half * omega_dim);
    const auto high_half = w.subspan(half * omega_dim);
    node->sum_buf.resize(half * omega_dim);
    for (std::size_t i = 0; i < node->sum_buf.size(); ++i) {
        node->sum_buf[i] = detail::checked_add(low_half[i], high_half[i]);
    }
    stats.vector_additions += half;
    node->low = build_pattern_tree(low_half, omega_dim, t, cutoff, stats);
    node->high = build_pattern_tree(high_half, omega_dim, t, cutoff, stats);
    node->sum = build_pattern_tree(node->sum_buf, omega_dim, t, cutoff, stats);
    return node;
}

// Scratch for one text-side run. Both arenas are sized for the whole
// recursion up front, so spans into them stay valid; allocation is a bump
// pointer popped on the way back up.
struct text_ctx {
    std::size_t sigma = 0;
    std::vector<std::int64_t> vec_arena;
    std::vector<std::int64_t> coeff_arena;
    std::size_t vec_top = 0;
    std::size_t coeff_top = 0;
    engine_stats stats;

    text_ctx(std::size_t sigma_dim, std::size_t k) : sigma(sigma_dim) {
        vec_arena.resize(k * sigma_dim + 1);
        coeff_arena.resize(6 * k + 16);
    }

    std::span<std::int64_t> alloc_vec(std::size_t n) {
        std::span<std::int64_t> s{vec_arena.data() + vec_top, n};
        vec_top += n;
        return s;
    }
    std::span<std::int64_t> alloc_coeff(std::size_t n) {
        std::span<std::int64_t> s{coeff_arena.data() + coeff_top, n};
        coeff_top += n;
        return s;
    }
};

// Phase 1 downward (operand sums), Phase 2 at the base (schoolbook cross
// products over folded columns), Phase 3 upward (t1 x^{2h} + (t3-t1-t2) x^h
// + t2). Every slot of `out` (length 2*len-1) is written. The capacity
// pre-check makes the unchecked arithmetic here exact.
void run_text_side(const pattern_node& node, std::span<const std::int64_t> u,
                   std::span<std::int64_t> out, text_ctx& ctx) {
    const std::size_t len = node.len;
    if (node.is_base()) {
        const std::size_t sigma = ctx.sigma;
        for (std::size_t d = 0; d < 2 * len - 1; ++d) {
            const std::size_t i_lo = d >= len ? d - len + 1 : 0;
            const std::size_t i_hi = std::min(d, len - 1);
            std::int64_t total = 0;
            for (std::size_t i = i_lo; i <= i_hi; ++i) {
                const std::int64_t* ui = u.data() + i * sigma;
                const std::int64_t* ph = node.phi.data() + (d - i) * sigma;
                std::int64_t dot = 0;
                for (std::size_t r = 0; r < sigma; ++r) {
                    dot += ui[r] * ph[r];
                }
                ++ctx.stats.leaf_products;
                if (i == i_lo) {
                    total = dot;
                } else {
                    total += dot;
                    ++ctx.stats.scalar_additions;
                }
            }
            out[d] = total;
        }
        return;
    }

    const std::size_t half = len / 2;
    const std::size_t plen = 2 * half - 1;  // child product length
    const auto low_half = u.subspan(0, half * ctx.sigma);
    const auto high_half = u.subspan(half * ctx.sigma);

    const std::size_t vec_mark = ctx.vec_top;
    const std::size_t coeff_mark = ctx.coeff_top;
    auto usum = ctx.alloc_vec(half * ctx.sigma);
    for (std::size_t i = 0; i < usum.size(); ++i) {
        usum[i] = low_half[i] + high_half[i];
    }
    ctx.stats.vector_additions += half;

    auto t1 = ctx.alloc_coeff(plen);
    auto t2 = ctx.alloc_coeff(plen);
    auto t3 = ctx.alloc_coeff(plen);
    run_text_side(*node.high, high_half, t1, ctx);
    run_text_side(*node.low, low_half, t2, ctx);
    run_text_side(*node.sum, usum, t3, ctx);

    for (std::size_t j = 0; j < plen; ++j) {
        t3[j] -= t1[j];
        t3[j] -= t2[j];
    }
    std::copy(t2.begin(), t2.end(), out.begin());
    out[plen] = 0;
    std::copy(t1.begin(), t1.end(), out.begin() + 2 * half);
    for (std::size_t j = 0; j < plen; ++j) {
        out[half + j] += t3[j];
    }
    ctx.stats.scalar_additions += 3 * plen;

    ctx.vec_top = vec_mark;
    ctx.coeff_top = coeff_mark;
}

std::size_t effective_cutoff(const engine_options& opts) noexcept {
    return opts.karatsuba_cutoff == 0 ? 1 : opts.karatsuba_cutoff;
}

void flatten(const vector_polynomial& p, std::vector<std::int64_t>& buf) {
    const std::size_t dim = p.dim();
    buf.assign(p.length() * dim, 0);
    for (std::size_t i = 0; i < p.length(); ++i) {
        const auto& e = p.coeffs[i].entries();
        std::copy(e.begin(), e.end(), buf.begin() + static_cast<std::ptrdiff_t>(i * dim));
    }
}

}  // namespace

std::vector<std::int64_t> kam_multiply(const vector_polynomial& a, const vector_polynomial& b,
                                       const score_table& t, engine_stats& stats,
                                       const engine_options& opts) {
    const std::size_t k = a.length();
    if (k == 0 || k != b.length() || !std::has_single_bit(k)) {
        throw not_power_of_two("kam_multiply: operands must share a power-of-two length");
    }
    if (a.dim() != t.sigma_dim() || b.dim() != t.omega_dim()) {
        throw std::invalid_argument("kam_multiply: coefficient dims do not match the score table");
    }
    check_capacity(k, max_coeff_l1(a), max_coeff_l1(b), t.max_abs_entry());

    std::vector<std::int64_t> w_flat;
    flatten(b, w_flat);
    engine_stats local;
    const std::size_t cutoff = effective_cutoff(opts);
    const auto tree = build_pattern_tree(w_flat, b.dim(), t, cutoff, local);

    std::vector<std::int64_t> u_flat;
    flatten(a, u_flat);
    text_ctx ctx(t.sigma_dim(), k);
    std::vector<std::int64_t> out(2 * k - 1, 0);
    run_text_side(*tree, u_flat, out, ctx);

    local.merge(ctx.stats);
    stats.merge(local);
    return out;
}

std::vector<std::int64_t> convolve_scores(const text& t, const pattern& p,
                                          const score_table& table, engine_stats& stats,
                                          const engine_options& opts) {
    const std::size_t n = t.length();
    const std::size_t m = p.length();
    if (table.sigma_dim() != t.alpha().size() || table.omega_dim() != p.omega().size()) {
        throw std::invalid_argument("convolve_scores: score table dims do not match the inputs");
    }
    if (m > n) {
        return {};
    }

    const std::size_t k = std::bit_ceil(m);
    check_capacity(k, 1, 1, table.max_abs_entry());
    const std::size_t sigma = table.sigma_dim();
    const std::size_t omega_dim = table.omega_dim();
    const std::size_t q = (n + m - 1) / m;
    const std::size_t cutoff = effective_cutoff(opts);

    // Reversed pattern operand: degree i' carries position m-1-i', so the
    // product degree d collects psi(T[o+i], P[j]) with j = i + d - m + 1 and
    // the window starting at o + d - (m-1) accumulates across the chunk edge.
    std::vector<std::int64_t> w_flat(k * omega_dim, 0);
    for (std::size_t i = 0; i < m; ++i) {
        w_flat[i * omega_dim + p.omega_of(m - 1 - i)] = 1;
    }
    engine_stats shared;
    const auto tree = build_pattern_tree(w_flat, omega_dim, table, cutoff, shared);
    shared.segments = q;

    const std::size_t positions = n - m + 1;
    std::vector<std::int64_t> result(positions, 0);

    const std::size_t workers =
        std::clamp<std::size_t>(opts.threads < 1 ? 1 : static_cast<std::size_t>(opts.threads), 1, q);

    const auto& ranks = t.ranks();
    const auto run_block = [&](std::size_t g_begin, std::size_t g_end,
                               std::vector<std::int64_t>& w_out, engine_stats& w_stats) {
        text_ctx ctx(sigma, k);
        std::vector<std::int64_t> u_flat(k * sigma);
        std::vector<std::int64_t> prod(2 * k - 1);
        for (std::size_t g = g_begin; g < g_end; ++g) {
            std::fill(u_flat.begin(), u_flat.end(), 0);
            const std::size_t base = g * m;
            const std::size_t limit = std::min(m, n - base);
            for (std::size_t i = 0; i < limit; ++i) {
                u_flat[i * sigma + ranks[base + i]] = 1;
            }
            run_text_side(*tree, u_flat, prod, ctx);
            for (std::size_t d = 0; d < prod.size(); ++d) {
                const std::int64_t pos =
                    static_cast<std::int64_t>(base) + static_cast<std::int64_t>(d) -
                    static_cast<std::int64_t>(m) + 1;
                if (pos >= 0 && pos < static_cast<std::int64_t>(positions) && prod[d] != 0) {
                    w_out[static_cast<std::size_t>(pos)] =
                        detail::checked_add(w_out[static_cast<std::size_t>(pos)], prod[d]);
                }
            }
        }
        w_stats.merge(ctx.stats);
    };

    if (workers == 1) {
        run_block(0, q, result, shared);
    } else {
        std::vector<std::vector<std::int64_t>> partials(workers);
        std::vector<engine_stats> partial_stats(workers);
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    partials[w].assign(positions, 0);
                    const std::size_t g_begin = q * w / workers;
                    const std::size_t g_end = q * (w + 1) / workers;
                    run_block(g_begin, g_end, partials[w], partial_stats[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) {
            th.join();
        }
        for (const auto& err : errors) {
            if (err) {
                std::rethrow_exception(err);
            }
        }
        for (std::size_t w = 0; w < workers; ++w) {
            for (std::size_t i = 0; i < positions; ++i) {
                result[i] = detail::checked_add(result[i], partials[w][i]);
            }
            shared.merge(partial_stats[w]);
        }
    }

    stats.merge(shared);
    return result;
}

search_result search(const text& t, const pattern& p, const score_model& model,
                     const engine_options& opts) {
    const auto wanted_tau = model.omega_resolution_tau();
    const pattern* active = &p;
    std::optional<pattern> rebuilt;
    if (p.resolved_global_tau() != wanted_tau) {
        rebuilt = pattern::build(p.positions(), wanted_tau);
        active = &*rebuilt;
    }

    const score_table table = build_score_table(model, t.alpha(), *active);
    search_result out;
    out.scores = convolve_scores(t, *active, table, out.stats, opts);
    const std::size_t m = active->length();
    for (std::size_t j = 0; j < out.scores.size(); ++j) {
        const bool verdict = model.fits(out.scores[j], m);
        if (verdict || opts.report_all) {
            out.reports.push_back({j + 1, out.scores[j], verdict});
        }
    }
    return out;
}

search_result search(std::span<const symbol> text_values,
                     std::span<const pattern_position> positions, const score_model& model,
                     const engine_options& opts) {
    const alphabet a = build_alphabet(text_values, positions);
    const pattern p = pattern::build({positions.begin(), positions.end()},
                                     model.omega_resolution_tau());
    const text t({text_values.begin(), text_values.end()}, a);
    return search(t, p, model, opts);
}

}  // namespace mss
