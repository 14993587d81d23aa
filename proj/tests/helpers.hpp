#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "conwaylink/laurent.hpp"
#include "conwaylink/series.hpp"

namespace cwl::testing {

// Deterministic generator for property-style tests.
inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed1234abcdef01ULL);
    return gen;
}

inline std::int64_t rand_int(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

// Univariate polynomial from coefficients c0 + c1 z + c2 z^2 + ...
inline LaurentPoly upoly(const std::string& var, std::vector<long> coeffs) {
    LaurentPoly p({var});
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        p.insert({static_cast<std::int64_t>(k), 0}, Int(coeffs[k]));
    return p;
}

inline LaurentPoly random_laurent(const std::vector<std::string>& vars, int max_terms,
                                  std::int64_t max_abs_exp, std::int64_t max_abs_coeff) {
    LaurentPoly p(vars);
    const int terms = static_cast<int>(rand_int(0, max_terms));
    for (int i = 0; i < terms; ++i) {
        LaurentPoly::Exp e{rand_int(-max_abs_exp, max_abs_exp),
                           vars.size() == 2 ? rand_int(-max_abs_exp, max_abs_exp) : 0};
        p.insert(e, Int(rand_int(-max_abs_coeff, max_abs_coeff)));
    }
    return p;
}

inline TruncatedSeries random_unit_series(const std::string& var, int order,
                                          std::int64_t max_abs_coeff) {
    TruncatedSeries s(var, order);
    s.set_coeff(0, rand_int(0, 1) ? 1 : -1);
    for (int k = 1; k <= order; ++k) s.set_coeff(k, Int(rand_int(-max_abs_coeff, max_abs_coeff)));
    return s;
}

// Schoolbook long division of truncated series, used as the independent
// oracle for series_inverse.
inline TruncatedSeries long_division(const TruncatedSeries& num, const TruncatedSeries& den) {
    if (den.coeff(0) == 0) throw domain_error("long_division: zero constant term");
    const int order = std::min(num.order(), den.order());
    TruncatedSeries q(num.var(), order);
    std::vector<Int> rem(num.coeffs().begin(), num.coeffs().begin() + order + 1);
    for (int k = 0; k <= order; ++k) {
        if (!cwl::divisible(rem[k], den.coeff(0)))
            throw domain_error("long_division: non-integer quotient");
        Int qk = div_exact(rem[k], den.coeff(0));
        q.set_coeff(k, qk);
        for (int j = 0; k + j <= order; ++j) rem[k + j] -= qk * den.coeff(j);
    }
    return q;
}

}  // namespace cwl::testing
