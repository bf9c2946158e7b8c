#include "surjcount/approx.hpp"

#include <algorithm>
#include <thread>

#include "surjcount/errors.hpp"
#include "surjcount/polyalgo.hpp"
#include "surjcount/structure.hpp"

namespace surjcount {

namespace {

// ln(m) for m in [1,2] via the atanh series in y = (m-1)/(m+1); the partial
// sum is a lower bound, the geometric tail bound tops it off.
std::pair<Rational, Rational> ln_core_bounds(const Rational& m) {
    constexpr int kTerms = 24;
    Rational y = (m - 1) / (m + 1);
    Rational y2 = y * y;
    Rational power = y;
    Rational partial = 0;
    for (int k = 0; k < kTerms; ++k) {
        partial += power / (2 * k + 1);
        power *= y2;
    }
    Rational lower = 2 * partial;
    Rational tail = power / ((2 * kTerms + 1) * (1 - y2));
    return {lower, lower + 2 * tail};
}

const std::pair<Rational, Rational>& ln2_bounds() {
    static const std::pair<Rational, Rational> bounds = ln_core_bounds(Rational(2));
    return bounds;
}

std::pair<Rational, Rational> ln_bounds(const Rational& x) {
    if (x <= 0) throw PreconditionError("ln: argument must be positive");
    if (x == 1) return {Rational(0), Rational(0)};
    if (x < 1) {
        auto [lo, hi] = ln_bounds(Rational(1) / x);
        return {-hi, -lo};
    }
    Rational m = x;
    long k = 0;
    while (m >= 2) {
        m /= 2;
        ++k;
    }
    auto [core_lo, core_hi] = ln_core_bounds(m);
    const auto& [two_lo, two_hi] = ln2_bounds();
    return {k * two_lo + core_lo, k * two_hi + core_hi};
}

void check_eps_delta(const Rational& epsilon, const Rational& delta) {
    if (epsilon <= 0 || epsilon >= 1) throw PreconditionError("epsilon must lie in (0,1)");
    if (delta <= 0 || delta >= 1) throw PreconditionError("delta must lie in (0,1)");
}

// m = ceil(c * 3 * ln(2/delta) / eps^2), rounded with the upper ln bound so
// the sample count never undershoots.
Bigint sample_count(const Bigint& c, const Rational& epsilon, const Rational& delta) {
    Rational bound = Rational(c) * 3 * ln_upper(Rational(2) / delta) / (epsilon * epsilon);
    return ceil_rational(bound);
}

// Flattened sampling plan. Slot i draws uniformly from a pool range; a
// weighted component first picks which of its two range variants applies.
struct Plan {
    struct Slot {
        std::pair<int, int> range[2];  // (pool offset, size)
    };
    struct Component {
        int first_slot = 0;
        int num_slots = 0;
        bool weighted = false;
        bool fits64 = false;
        std::uint64_t w1_64 = 0, sum_64 = 0;
        Bigint w1, sum;
    };
    std::vector<int> pool;
    std::vector<Slot> slots;
    std::vector<Component> comps;
    std::vector<std::pair<int, int>> edges;  // slot index pairs
    std::vector<std::int16_t> edge_index;    // q*q, -1 where no non-loop edge
    int q = 0;
    std::uint64_t full_v = 0, full_e = 0;

    bool is_hit(SampleRng& rng, int* h) const {
        for (const auto& comp : comps) {
            int ori = 0;
            if (comp.weighted) {
                if (comp.fits64) {
                    std::uint64_t draw = rng.next_below(static_cast<std::uint32_t>(comp.sum_64));
                    ori = draw >= comp.w1_64;
                } else {
                    ori = rng.next_below_big(comp.sum) >= comp.w1;
                }
            }
            for (int s = comp.first_slot; s < comp.first_slot + comp.num_slots; ++s) {
                const auto& [off, size] = slots[s].range[ori];
                h[s] = pool[off + rng.next_below(static_cast<std::uint32_t>(size))];
            }
        }
        std::uint64_t used_v = 0, used_e = 0;
        for (const auto& [u, v] : edges) {
            int a = h[u], b = h[v];
            used_v |= (std::uint64_t(1) << a) | (std::uint64_t(1) << b);
            if (a != b) used_e |= std::uint64_t(1) << edge_index[std::size_t(a) * q + b];
        }
        return used_v == full_v && used_e == full_e;
    }
};

std::uint64_t run_samples(const Plan& plan, std::uint64_t m, std::uint64_t seed,
                          std::uint64_t experiment, int threads) {
    if (threads <= 0) {
        unsigned hc = std::thread::hardware_concurrency();
        threads = hc == 0 ? 1 : static_cast<int>(std::min(hc, 16u));
    }
    if (m < 100000) threads = 1;
    std::vector<std::uint64_t> partial(static_cast<std::size_t>(threads), 0);
    const std::uint64_t base = SampleRng::stream_base(seed, experiment);
    auto work = [&](int tid) {
        std::uint64_t lo = m * tid / threads;
        std::uint64_t hi = m * (tid + 1) / threads;
        std::vector<int> h(plan.slots.size());
        std::uint64_t hits = 0;
        for (std::uint64_t i = lo; i < hi; ++i) {
            SampleRng rng(SampleRng::FromBase{}, base, i);
            hits += plan.is_hit(rng, h.data());
        }
        partial[static_cast<std::size_t>(tid)] = hits;
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    std::uint64_t total = 0;
    for (auto p : partial) total += p;
    return total;
}

}  // namespace

Rational ln_lower(const Rational& x) { return ln_bounds(x).first; }
Rational ln_upper(const Rational& x) { return ln_bounds(x).second; }

std::vector<int> sample_uniform_hom(const Graph& g, const Graph& h,
                                    const std::optional<SideAssignment>& restriction,
                                    SampleRng& rng) {
    StructureReport hr = classify_structure(h);
    std::vector<int> result(g.n, -1);
    if (hr.is_reflexive_clique) {
        for (int v = 0; v < g.n; ++v)
            result[v] = static_cast<int>(rng.next_below(static_cast<std::uint32_t>(h.n)));
        return result;
    }
    if (!hr.is_irreflexive_biclique || !hr.connected)
        throw PreconditionError("sample_uniform_hom: target must be a connected reflexive clique "
                                "or irreflexive biclique");
    const auto& [hu, hv] = *hr.bipartition_sides;
    std::vector<int> side;
    if (!bipartition(g, &side))
        throw PreconditionError("sample_uniform_hom: G must be bipartite for a biclique target");
    auto comps = connected_components(g);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        if (comps[c].graph.n == 1)
            throw PreconditionError("sample_uniform_hom: G must have no isolated vertices");
        int left_to;  // 0: component side-0 maps into hu, 1: into hv
        if (restriction) {
            left_to = restriction->side_of_component.at(c);
            if (left_to != 0 && left_to != 1)
                throw PreconditionError("sample_uniform_hom: side assignment must be 0 or 1");
        } else {
            int l0 = 0, l1 = 0;
            for (int v : comps[c].original_vertex) (side[v] == 0 ? l0 : l1)++;
            Bigint w1 = bigint_pow(hu.size(), l0) * bigint_pow(hv.size(), l1);
            Bigint w2 = bigint_pow(hv.size(), l0) * bigint_pow(hu.size(), l1);
            left_to = rng.next_below_big(w1 + w2) >= w1 ? 1 : 0;
        }
        for (int v : comps[c].original_vertex) {
            const std::vector<int>& pool = (side[v] == 0) == (left_to == 0) ? hu : hv;
            result[v] = pool[rng.next_below(static_cast<std::uint32_t>(pool.size()))];
        }
    }
    return result;
}

EstimateResult mc_estimate_comp(const Graph& g, const Graph& h, const Rational& epsilon,
                                const Rational& delta, std::uint64_t seed,
                                const ApproxOptions& opts) {
    check_eps_delta(epsilon, delta);
    if (!g.is_irreflexive()) throw PreconditionError("mc_estimate_comp: G must be irreflexive");
    if (h.empty() || !is_connected(h))
        throw PreconditionError("mc_estimate_comp: disconnected or empty targets are not supported "
                                "(the approximation dichotomy covers connected targets only)");
    StructureReport hr = classify_structure(h);
    if (!hr.is_reflexive_clique && !hr.is_irreflexive_biclique)
        throw PreconditionError("mc_estimate_comp: no sampler for this target (approximate "
                                "counting for it is as hard as bipartite independent sets)");

    EstimateResult res;
    res.epsilon = epsilon;
    res.delta = delta;
    res.seed = seed;
    auto exact_value = [&](Bigint v) {
        res.value = Rational(std::move(v));
        res.exact = true;
        res.sample_count = 0;
        res.bound_constant = 0;
        return res;
    };

    const int q = h.n;
    if (g.empty()) return exact_value(0);
    if (q == 1) {
        // the unique map compacts unless a loopless target meets an edge
        if (h.has_loop(0) || g.edges.empty()) return exact_value(1);
        return exact_value(0);
    }

    // isolated vertices factor out against a connected target of size >= 2
    std::vector<int> keep;
    int isolated = 0;
    {
        auto adj = g.adjacency();
        for (int v = 0; v < g.n; ++v) {
            if (adj[v].empty())
                ++isolated;
            else
                keep.push_back(v);
        }
    }
    Graph core = induced_subgraph(g, keep);
    const Bigint iso_factor = bigint_pow(q, isolated);
    const int p = h.non_loop_edge_count();

    if (core.n < q || static_cast<int>(core.edges.size()) < p) return exact_value(0);

    Plan plan;
    plan.q = q;
    plan.full_v = ListAssignment::full_mask(q);
    plan.edge_index.assign(std::size_t(q) * q, -1);
    {
        int idx = 0;
        for (const auto& [u, v] : h.edges) {
            if (u == v) continue;
            plan.edge_index[std::size_t(u) * q + v] = plan.edge_index[std::size_t(v) * q + u] =
                static_cast<std::int16_t>(idx++);
        }
        if (idx > 60) throw PreconditionError("mc_estimate_comp: too many target edges to track");
        plan.full_e = idx == 0 ? 0 : (std::uint64_t(1) << idx) - 1;
    }

    if (hr.is_reflexive_clique) {
        // Case 1: every vertex draws uniformly over V(H)
        plan.pool.resize(static_cast<std::size_t>(q));
        for (int i = 0; i < q; ++i) plan.pool[static_cast<std::size_t>(i)] = i;
        plan.slots.resize(static_cast<std::size_t>(core.n));
        for (int v = 0; v < core.n; ++v) plan.slots[v].range[0] = plan.slots[v].range[1] = {0, q};
        Plan::Component all;
        all.num_slots = core.n;
        plan.comps.push_back(all);
        plan.edges = core.edges;

        Bigint c_const = bigint_pow(q, 2 * p);
        Bigint m_big = sample_count(c_const, epsilon, delta);
        if (m_big > opts.max_samples) throw BudgetError("mc_estimate_comp: sample budget exceeded");
        std::uint64_t m = m_big.convert_to<std::uint64_t>();
        std::uint64_t hits = run_samples(plan, m, seed, 0, opts.threads);
        res.value = Rational(iso_factor * bigint_pow(q, core.n) * hits, Bigint(m));
        res.sample_count = m_big;
        res.bound_constant = c_const;
        res.sub_experiments = 1;
        return res;
    }

    // Case 2: irreflexive biclique
    const auto& [hu, hv] = *hr.bipartition_sides;
    std::vector<int> side;
    if (!bipartition(core, &side)) return exact_value(0);
    auto comps = connected_components(core);
    const int kappa = static_cast<int>(comps.size());
    const std::size_t r_h = std::max(hu.size(), hv.size());

    // pool: H's left side then right side
    plan.pool = hu;
    plan.pool.insert(plan.pool.end(), hv.begin(), hv.end());
    const std::pair<int, int> in_u{0, static_cast<int>(hu.size())};
    const std::pair<int, int> in_v{static_cast<int>(hu.size()), static_cast<int>(hv.size())};

    plan.slots.resize(static_cast<std::size_t>(core.n));
    std::vector<int> slot_of(static_cast<std::size_t>(core.n));
    std::vector<int> part_sizes0(kappa, 0), part_sizes1(kappa, 0);
    {
        int next = 0;
        for (int c = 0; c < kappa; ++c) {
            Plan::Component pc;
            pc.first_slot = next;
            for (int v : comps[c].original_vertex) {
                slot_of[v] = next++;
                (side[v] == 0 ? part_sizes0[c] : part_sizes1[c])++;
            }
            pc.num_slots = next - pc.first_slot;
            plan.comps.push_back(pc);
        }
        for (const auto& [u, v] : core.edges) plan.edges.emplace_back(slot_of[u], slot_of[v]);
    }
    auto set_component_sides = [&](int c, int left_to) {
        // variant 0 fixed: component side-0 part maps into hu (left_to==0) or hv
        for (int v : comps[c].original_vertex)
            plan.slots[slot_of[v]].range[0] = (side[v] == 0) == (left_to == 0) ? in_u : in_v;
    };
    auto set_component_weighted = [&](int c) {
        for (int v : comps[c].original_vertex) {
            plan.slots[slot_of[v]].range[0] = side[v] == 0 ? in_u : in_v;
            plan.slots[slot_of[v]].range[1] = side[v] == 0 ? in_v : in_u;
        }
        auto& pc = plan.comps[c];
        pc.weighted = true;
        pc.w1 = bigint_pow(hu.size(), part_sizes0[c]) * bigint_pow(hv.size(), part_sizes1[c]);
        Bigint w2 = bigint_pow(hv.size(), part_sizes0[c]) * bigint_pow(hu.size(), part_sizes1[c]);
        pc.sum = pc.w1 + w2;
        pc.fits64 = pc.sum <= Bigint(0xffffffffu);  // next_below takes 32-bit bounds
        if (pc.fits64) {
            pc.w1_64 = pc.w1.convert_to<std::uint64_t>();
            pc.sum_64 = pc.sum.convert_to<std::uint64_t>();
        }
    };

    if (kappa >= p) {
        // Case 2a: sample from all homomorphisms, orientation weighted
        for (int c = 0; c < kappa; ++c) set_component_weighted(c);
        Bigint h_size = 1;
        for (const auto& pc : plan.comps) h_size *= pc.sum;
        Bigint c_const = 2 * bigint_pow(r_h, 2 * p);
        Bigint m_big = sample_count(c_const, epsilon, delta);
        if (m_big > opts.max_samples) throw BudgetError("mc_estimate_comp: sample budget exceeded");
        std::uint64_t m = m_big.convert_to<std::uint64_t>();
        std::uint64_t hits = run_samples(plan, m, seed, 0, opts.threads);
        res.value = Rational(iso_factor * h_size * hits, Bigint(m));
        res.sample_count = m_big;
        res.bound_constant = c_const;
        res.sub_experiments = 1;
        return res;
    }

    // Case 2b: one sub-experiment per side assignment, each at delta / 2^kappa
    Bigint c_const = bigint_pow(r_h, 2 * p);
    Rational delta_sub = delta / bigint_pow(2, kappa);
    Bigint m_big = sample_count(c_const, epsilon, delta_sub);
    if (m_big > opts.max_samples) throw BudgetError("mc_estimate_comp: sample budget exceeded");
    std::uint64_t m = m_big.convert_to<std::uint64_t>();
    Rational total = 0;
    int ran = 0;
    for (std::uint32_t omega = 0; omega < (1u << kappa); ++omega) {
        // capacity feasibility: both sides of H must be coverable under omega
        long long to_u = 0, to_v = 0;
        for (int c = 0; c < kappa; ++c) {
            int left_to = (omega >> c) & 1;  // 0: side-0 part -> hu
            to_u += left_to == 0 ? part_sizes0[c] : part_sizes1[c];
            to_v += left_to == 0 ? part_sizes1[c] : part_sizes0[c];
        }
        if (to_u < static_cast<long long>(hu.size()) || to_v < static_cast<long long>(hv.size()))
            continue;  // no side-obeying compaction exists
        Bigint h_omega = 1;
        for (int c = 0; c < kappa; ++c) {
            int left_to = (omega >> c) & 1;
            set_component_sides(c, left_to);
            std::size_t first = left_to == 0 ? hu.size() : hv.size();
            std::size_t second = left_to == 0 ? hv.size() : hu.size();
            h_omega *= bigint_pow(first, part_sizes0[c]) * bigint_pow(second, part_sizes1[c]);
        }
        std::uint64_t hits = run_samples(plan, m, seed, omega, opts.threads);
        total += Rational(h_omega * hits, Bigint(m));
        ++ran;
    }
    res.value = Rational(iso_factor) * total;
    res.sample_count = m_big;
    res.bound_constant = c_const;
    res.sub_experiments = ran;
    res.exact = ran == 0;
    return res;
}

namespace {

// hom(G -> H) for a single-vertex target.
Bigint hom_to_single_vertex(const Graph& g, const Graph& h) {
    if (h.has_loop(0)) return 1;
    return g.edges.empty() ? 1 : 0;
}

int padding_length(const Rational& numerator_arg, int denom_num, int denom_den) {
    Rational t = ln_upper(numerator_arg) / ln_lower(Rational(denom_num, denom_den));
    Bigint t_big = ceil_rational(t);
    if (t_big > 2'000'000) throw BudgetError("padding length exceeds the supported range");
    int v = t_big.convert_to<int>();
    return std::max(v, 0);
}

}  // namespace

Bigint ap_hom_via_sur(const Graph& g, const Graph& h, const ApproxOracle& sur_estimator,
                      const Rational& epsilon) {
    if (!g.is_irreflexive()) throw PreconditionError("ap_hom_via_sur: G must be irreflexive");
    if (epsilon <= 0 || epsilon >= 1) throw PreconditionError("epsilon must lie in (0,1)");
    const int q = h.n;
    if (q == 0) return g.empty() ? 1 : 0;
    if (q == 1) return hom_to_single_vertex(g, h);
    Rational arg = Rational(5) * bigint_pow(q, g.n) * bigint_pow(2, q);
    int t = padding_length(arg, q, q - 1);
    Rational estimate = sur_estimator(add_isolated_vertices(g, t));
    Bigint s = surjections_count(t, q);
    if (s == 0) throw SolveError("ap_hom_via_sur: zero surjection count");
    return floor_rational(estimate / Rational(s));
}

Bigint ap_hom_via_comp(const Graph& g, const Graph& h, const ApproxOracle& comp_estimator,
                       const Rational& epsilon) {
    if (!g.is_irreflexive()) throw PreconditionError("ap_hom_via_comp: G must be irreflexive");
    if (epsilon <= 0 || epsilon >= 1) throw PreconditionError("epsilon must lie in (0,1)");
    if (h.empty() || !is_connected(h))
        throw PreconditionError("ap_hom_via_comp: H must be connected and non-empty");
    const int q = h.n;
    if (q == 1) return hom_to_single_vertex(g, h);
    const int p = h.non_loop_edge_count();
    if (p <= 1) {
        // degenerate padding formula; targets this small are counted directly
        return count_hom(g, h, ListAssignment::full(g.n, h.n));
    }
    // a padding edge has 2 images per non-loop edge plus 1 per loop; the
    // scaling constant counts the padding maps that cover every non-loop
    // edge, which for an irreflexive target is exactly 2^t s_{t,p}
    Bigint single_edge_maps = Bigint(2) * p + h.loop_count();
    Rational arg = Rational(5) * bigint_pow(q, g.n) * bigint_pow(2, p);
    Rational ratio_num(single_edge_maps);
    Rational ratio_den(single_edge_maps - 2);
    Rational t_bound = ln_upper(arg) / ln_lower(ratio_num / ratio_den);
    Bigint t_big = ceil_rational(t_bound);
    if (t_big > 2'000'000) throw BudgetError("padding length exceeds the supported range");
    int t = std::max(t_big.convert_to<int>(), 0);
    Rational estimate = comp_estimator(add_disjoint_edges(g, t));
    Bigint scaling = edge_cover_maps(t, p, single_edge_maps);
    if (scaling == 0) throw SolveError("ap_hom_via_comp: zero scaling constant");
    return floor_rational(estimate / Rational(scaling));
}

Bigint hom_via_ret(const Graph& g, const Graph& h,
                   const std::function<Bigint(const RetractionInstance&)>& ret_oracle) {
    if (!g.is_irreflexive()) throw PreconditionError("hom_via_ret: G must be irreflexive");
    RetractionInstance inst;
    inst.g = disjoint_union(g, strip_loops(h));
    inst.h = h;
    for (int i = 0; i < h.n; ++i) inst.anchors.push_back(g.n + i);
    return ret_oracle(inst);
}

}  // namespace surjcount
