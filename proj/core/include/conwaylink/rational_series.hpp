#pragma once

#include <string>

#include "conwaylink/laurent.hpp"
#include "conwaylink/series.hpp"

namespace cwl {

// Content (gcd of coefficients, non-negative) of a univariate polynomial.
Int content(const LaurentPoly& p);

// Gcd of univariate integer polynomials with non-negative exponents, computed
// by the primitive PRS; the result is primitive with positive leading
// coefficient times the gcd of the contents.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// P/Q in the series ring: univariate integer polynomials with non-negative
// exponents, Q(0) = +-1, stored gcd-reduced with Q(0) = +1.
class RationalSeries {
public:
    RationalSeries(LaurentPoly p, LaurentPoly q);

    const LaurentPoly& num() const { return p_; }
    const LaurentPoly& den() const { return q_; }

    TruncatedSeries expand(int order) const;
    bool operator==(const RationalSeries& o) const { return p_ == o.p_ && q_ == o.q_; }
    bool operator!=(const RationalSeries& o) const { return !(*this == o); }

    std::string str() const;

private:
    LaurentPoly p_, q_;
};

}  // namespace cwl
