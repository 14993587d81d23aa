#include "conwaylink/rationality.hpp"

#include <algorithm>

#include "conwaylink/conway.hpp"
#include "conwaylink/linalg.hpp"

namespace cwl {

namespace {

// Toeplitz system of the recurrence r_k = q_1 r_{k-1} + ... + q_n r_{k-n} for
// M < k <= order, with r_{<0} = 0.
struct ToeplitzSystem {
    RatMat A;
    RatVec b;
};

ToeplitzSystem recurrence_system(const TruncatedSeries& s, int M, int n) {
    ToeplitzSystem sys;
    for (int k = M + 1; k <= s.order(); ++k) {
        RatVec row(static_cast<std::size_t>(n), Rat(0));
        for (int i = 1; i <= n; ++i)
            if (k - i >= 0) row[i - 1] = Rat(s.coeff(k - i));
        sys.A.push_back(std::move(row));
        sys.b.push_back(Rat(s.coeff(k)));
    }
    return sys;
}

std::optional<RationalSeries> try_fit(const TruncatedSeries& s, int M, int n) {
    ToeplitzSystem sys = recurrence_system(s, M, n);
    LinearSolve sol = solve_linear(std::move(sys.A), std::move(sys.b));
    if (!sol.consistent) return std::nullopt;
    // Build Q = lambda (1 - q_1 x - ... - q_n x^n) with lambda clearing the
    // denominators of the rational solution; gcd reduction then restores the
    // unit constant term whenever the series is genuinely rational (Fatou).
    Int lambda = 1;
    for (int i = 1; i <= n; ++i) {
        const Int den = sol.solution[i - 1].get_den();
        mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(), den.get_mpz_t());
    }
    LaurentPoly q = LaurentPoly::constant1(s.var(), lambda);
    for (int i = 1; i <= n; ++i) {
        Rat scaled = -sol.solution[i - 1] * Rat(lambda);
        q.insert({i, 0}, scaled.get_num());
    }
    // P = Q * s truncated at degree M, then verify the product through the
    // full order (the system only covered k > M).
    TruncatedSeries qs = TruncatedSeries::from_poly(q, s.order()) * s;
    LaurentPoly p(std::vector<std::string>{s.var()});
    for (int k = 0; k <= std::min(M, s.order()); ++k) p.insert({k, 0}, qs.coeff(k));
    try {
        RationalSeries fit(p, q);
        if (fit.num().is_zero() ? !s.is_zero() : fit.num().degree() > M) return std::nullopt;
        if (fit.expand(s.order()) != s) return std::nullopt;
        return fit;
    } catch (const domain_error&) {
        return std::nullopt;  // reduced denominator constant is not a unit
    }
}

}  // namespace

std::optional<RationalSeries> fit_rational(const TruncatedSeries& s, RationalFitBound bound) {
    if (bound.M < 0 || bound.N < 0) throw usage_error("fit_rational: negative bound");
    if (s.order() < bound.M + bound.N)
        throw usage_error("fit_rational: order must be at least M + N");
    for (int n = 0; n <= bound.N; ++n)
        if (auto fit = try_fit(s, bound.M, n)) return fit;
    return std::nullopt;
}

std::string variant_name(GrowthVariant v) {
    return v == GrowthVariant::growth1 ? "growth1" : "growth2";
}

Int growth_f(GrowthVariant variant, const Int& i) {
    if (i < 1) throw usage_error("growth_f: i >= 1 required");
    if (variant == GrowthVariant::growth1) return i * i * (i + 3) * (i + 3);
    const Int core = i * i - i + 1;
    return core * core + 1;
}

StageData make_stage(GrowthVariant variant, std::int64_t r) {
    if (r < 1) throw usage_error("make_stage: r >= 1 required");
    StageData st;
    st.r = r;
    st.Q = nabla_J(r);
    if (variant == GrowthVariant::growth1) {
        st.P = LaurentPoly::monomial1("z", r + 1, r % 2 == 1 ? 1 : -1) * lucas(r + 1);
    } else {
        st.P = LaurentPoly::monomial1("z", r, 1) * fibonacci(r);
    }
    return st;
}

ScheduleReport schedule_validate(const Schedule& s, bool construction_mode) {
    ScheduleReport rep;
    for (std::size_t i = 0; i < s.r.size(); ++i)
        if (s.r[i] < 1) {
            rep.ok = false;
            rep.first_violation = static_cast<int>(i);
            rep.reason = "r must be positive";
            return rep;
        }
    for (std::size_t i = 0; i + 1 < s.r.size(); ++i) {
        const Int bound = growth_f(s.variant, s.r[i]);
        if (s.r[i + 1] <= s.r[i]) {
            rep.ok = false;
            rep.first_violation = static_cast<int>(i);
            rep.reason = "sequence not strictly increasing";
            return rep;
        }
        if (s.r[i + 1] < bound) {
            rep.ok = false;
            rep.first_violation = static_cast<int>(i);
            rep.reason = s.r[i + 1].get_str() + " < f(" + s.r[i].get_str() + ") = " +
                         bound.get_str() + " (" + variant_name(s.variant) + ")";
            return rep;
        }
        if (construction_mode) {
            const Int den = 3 * s.r[i];
            if (!divisible(s.r[i + 1], den) || s.r[i + 1] / den <= 1) {
                rep.ok = false;
                rep.first_violation = static_cast<int>(i);
                rep.reason = "construction mode: r_{i+1}/(3 r_i) must be an integer > 1";
                return rep;
            }
        }
    }
    return rep;
}

TruncatedSeries accumulate_product(const std::vector<StageData>& stages, int order) {
    TruncatedSeries acc("z", order);
    acc.set_coeff(0, 1);
    for (const auto& st : stages) {
        TruncatedSeries one("z", order);
        one.set_coeff(0, 1);
        acc = acc * (one + expand_fraction(st.P, st.Q, order));
    }
    return acc;
}

TruncatedSeries accumulate_sum(const std::vector<StageData>& stages, int order) {
    TruncatedSeries acc("z", order);
    for (const auto& st : stages) acc = acc + expand_fraction(st.P, st.Q, order);
    return acc;
}

DegreeAccumulators stage_degree_accumulators(GrowthVariant variant,
                                             const std::vector<StageData>& stages) {
    DegreeAccumulators acc;
    std::int64_t n = 0;
    std::vector<std::int64_t> degP, degQ, degPQ;
    for (const auto& st : stages) {
        degP.push_back(st.P.degree());
        degQ.push_back(st.Q.degree());
        degPQ.push_back((st.P + st.Q).degree());
        n += st.Q.degree();
        acc.n.push_back(n);
        if (variant == GrowthVariant::growth1) {
            std::int64_t m = 0;
            for (std::size_t j = 0; j < degPQ.size(); ++j) m += degPQ[j];
            acc.m.push_back(m);
        } else {
            std::int64_t m = 0;
            for (std::size_t j = 0; j < degP.size(); ++j) {
                std::int64_t term = degP[j];
                for (std::size_t k = 0; k < degQ.size(); ++k)
                    if (k != j) term += degQ[k];
                m = std::max(m, term);
            }
            acc.m.push_back(m);
        }
    }
    return acc;
}

FitCertificate certify_no_fit(const TruncatedSeries& s, RationalFitBound bound) {
    const int needed = std::max(2 * bound.M, bound.N * bound.N) + 1;
    if (s.order() < needed)
        throw usage_error("certify_no_fit: order " + std::to_string(s.order()) +
                          " below max(2M, N^2) + 1 = " + std::to_string(needed));
    FitCertificate cert;
    cert.bound = bound;
    cert.order = s.order();
    cert.fit = fit_rational(s, bound);
    cert.fit_found = cert.fit.has_value();
    ToeplitzSystem sys = recurrence_system(s, bound.M, bound.N);
    RatMat augmented = sys.A;
    for (std::size_t i = 0; i < augmented.size(); ++i) augmented[i].push_back(sys.b[i]);
    cert.rank = rank_rational(std::move(sys.A));
    cert.rank_augmented = rank_rational(std::move(augmented));
    return cert;
}

CounterexampleResult counterexample_product(int order) {
    if (order < 4) throw usage_error("counterexample_product: order >= 4 required");
    TruncatedSeries acc("x", order);
    acc.set_coeff(0, 1);
    for (int n = 1; n <= order + 1; ++n) {
        // 1 + (x^{n-1} - x^{n+1}) / (1 - x^{2n})
        LaurentPoly num({"x"});
        if (n - 1 <= order) num.insert({n - 1, 0}, 1);
        if (n + 1 <= order) num.insert({n + 1, 0}, -1);
        LaurentPoly den = LaurentPoly::constant1("x", 1);
        if (2 * n <= order) den.insert({2 * n, 0}, -1);
        TruncatedSeries factor = expand_fraction(num, den, order);
        factor.set_coeff(0, factor.coeff(0) + 1);
        acc = acc * factor;
    }
    LaurentPoly two = LaurentPoly::constant1("x", 2);
    LaurentPoly q = LaurentPoly::constant1("x", 1) - LaurentPoly::monomial1("x", 1, 1);
    return CounterexampleResult{acc, RationalSeries(two, q)};
}

int mobius(std::int64_t n) {
    if (n < 1) throw usage_error("mobius: n >= 1 required");
    int r = 1;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            r = -r;
        }
    if (n > 1) r = -r;
    return r;
}

MobiusCounterexample counterexample_mobius_sum(int order) {
    if (order < 4) throw usage_error("counterexample_mobius_sum: order >= 4 required");
    MobiusCounterexample out{TruncatedSeries("x", order), RationalSeries(
        LaurentPoly::monomial1("x", 1, 2),
        LaurentPoly::constant1("x", 1) - LaurentPoly::monomial1("x", 1, 2)), {}};
    for (int n = 1; n <= order; ++n) {
        Int cn = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) cn += Int(mobius(d)) * int_pow(Int(2), static_cast<unsigned long>(n / d));
        out.c.push_back(cn);
        // c_n x^n / (1 - x^n) = c_n (x^n + x^{2n} + ...)
        for (int k = n; k <= order; k += n)
            out.series.set_coeff(k, out.series.coeff(k) + cn);
    }
    return out;
}

}  // namespace cwl
