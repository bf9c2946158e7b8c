#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "surjcount/bigint.hpp"
#include "surjcount/brute.hpp"
#include "surjcount/graph.hpp"
#include "surjcount/rng.hpp"

namespace surjcount {

/// Rational natural-logarithm bounds: ln_lower(x) <= ln(x) <= ln_upper(x),
/// exact rational arithmetic throughout.
Rational ln_upper(const Rational& x);
Rational ln_lower(const Rational& x);

struct ApproxOptions {
    std::uint64_t max_samples = 2'000'000'000ULL;  // per sub-experiment
    int threads = 0;                               // 0 = hardware concurrency
};

/// Per-connected-component choice of which biclique side receives the
/// component's left part: 0 selects the target's left side.
struct SideAssignment {
    std::vector<int> side_of_component;
};

/// One uniform sample: from all homomorphisms when no restriction is given
/// (reflexive clique target, or biclique with orientation weighting), or from
/// the side-obeying homomorphisms under the given assignment.
std::vector<int> sample_uniform_hom(const Graph& g, const Graph& h,
                                    const std::optional<SideAssignment>& restriction,
                                    SampleRng& rng);

struct EstimateResult {
    Rational value;
    Bigint sample_count;     // per sub-experiment, as ceil(c * 3 ln(2/delta') / eps^2)
    Bigint bound_constant;   // the c fed to the sampler
    Rational epsilon;
    Rational delta;
    std::uint64_t seed = 0;
    int sub_experiments = 1;
    bool exact = false;      // value produced by a short-circuit, not sampling
};

/// Monte Carlo (epsilon,delta)-approximation of the compaction count to a
/// connected reflexive clique or irreflexive biclique.
EstimateResult mc_estimate_comp(const Graph& g, const Graph& h, const Rational& epsilon,
                                const Rational& delta, std::uint64_t seed,
                                const ApproxOptions& opts = {});

/// An approximate counting oracle for a fixed-target problem.
using ApproxOracle = std::function<Rational(const Graph&)>;

/// hom(G -> H) recovered from a surjective-count estimator accurate to
/// epsilon/21, via padding with t isolated vertices and flooring by the
/// surjection number s_{t,q}.
Bigint ap_hom_via_sur(const Graph& g, const Graph& h, const ApproxOracle& sur_estimator,
                      const Rational& epsilon);

/// hom(G -> H) recovered from a compaction estimator via padding with t
/// disjoint edges and flooring by 2^t s_{t,p}. H must be connected.
Bigint ap_hom_via_comp(const Graph& g, const Graph& h, const ApproxOracle& comp_estimator,
                       const Rational& epsilon);

/// hom(G -> H) through one retraction query on G + H with loops removed.
Bigint hom_via_ret(const Graph& g, const Graph& h,
                   const std::function<Bigint(const RetractionInstance&)>& ret_oracle);

}  // namespace surjcount
