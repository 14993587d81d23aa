#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conwaylink/laurent.hpp"
#include "conwaylink/rational_series.hpp"
#include "conwaylink/series.hpp"

namespace cwl {

// Degree bounds for a rational fit P/Q: deg P <= M, deg Q <= N.
struct RationalFitBound {
    int M = 0;
    int N = 0;
};

// Exact rational reconstruction from a truncated series: finds P/Q with
// Q(0) = +-1 matching s through its order, by exact nullspace computation on
// the Toeplitz recurrence system; among all fits the minimal denominator
// degree with integer coefficients is returned. Requires order >= M + N.
std::optional<RationalSeries> fit_rational(const TruncatedSeries& s, RationalFitBound bound);

enum class GrowthVariant { growth1, growth2 };

std::string variant_name(GrowthVariant v);

// growth1: f(i) = i^2 (i+3)^2;  growth2: f(i) = (i^2 - i + 1)^2 + 1.
Int growth_f(GrowthVariant variant, const Int& i);

// One stage of the infinite product/sum: growth1 has P = (-1)^{r+1} z^{r+1}
// L_{r+1}(z), growth2 has P = z^r F_r(z); both have Q = nabla_{J_r}(z).
struct StageData {
    std::int64_t r = 1;
    LaurentPoly P, Q;
};
StageData make_stage(GrowthVariant variant, std::int64_t r);

struct Schedule {
    GrowthVariant variant = GrowthVariant::growth1;
    std::vector<Int> r;
};

struct ScheduleReport {
    bool ok = true;
    int first_violation = -1;  // index i of the violated pair (r_i, r_{i+1})
    std::string reason;
};
// Checks r_{i+1} >= f(r_i) for every consecutive pair; construction_mode adds
// the requirement that each r_{i+1}/(3 r_i) is an integer greater than 1.
ScheduleReport schedule_validate(const Schedule& s, bool construction_mode = false);

// Truncations of (1 + P_1/Q_1)(1 + P_2/Q_2)... and of P_1/Q_1 + P_2/Q_2 + ...
TruncatedSeries accumulate_product(const std::vector<StageData>& stages, int order);
TruncatedSeries accumulate_sum(const std::vector<StageData>& stages, int order);

// Degree accumulators n_i, m_i of the non-rationality proof, computed from the
// actual stage polynomial degrees.
struct DegreeAccumulators {
    std::vector<std::int64_t> n, m;
};
DegreeAccumulators stage_degree_accumulators(GrowthVariant variant,
                                             const std::vector<StageData>& stages);

// Certificate for the (non-)existence of a rational fit at the given bound.
// Requires order >= max(2M, N^2) + 1.
struct FitCertificate {
    RationalFitBound bound;
    int order = 0;
    bool fit_found = false;
    std::optional<RationalSeries> fit;
    int rank = 0;            // Toeplitz system at denominator degree N
    int rank_augmented = 0;  // augmented rank; > rank witnesses inconsistency
};
FitCertificate certify_no_fit(const TruncatedSeries& s, RationalFitBound bound);

// The two cautionary rational examples. Both return the truncated series and
// its successful fit (2/(1-x) and 2x/(1-2x) respectively).
struct CounterexampleResult {
    TruncatedSeries series;
    RationalSeries fit;
};
CounterexampleResult counterexample_product(int order);

struct MobiusCounterexample {
    TruncatedSeries series;
    RationalSeries fit;
    std::vector<Int> c;  // c_1..c_order, c_n = sum_{d|n} mu(d) 2^{n/d}
};
MobiusCounterexample counterexample_mobius_sum(int order);

int mobius(std::int64_t n);

}  // namespace cwl
