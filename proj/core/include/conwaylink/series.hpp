#pragma once

#include <string>
#include <vector>

#include "conwaylink/laurent.hpp"

namespace cwl {

// Integer power series known exactly up to a stated order: coefficients of
// x^0..x^N. Arithmetic never claims coefficients beyond the order; mixing
// orders truncates to the smaller one.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(std::string var, int order);
    TruncatedSeries(std::string var, int order, std::vector<Int> coeffs);

    static TruncatedSeries from_poly(const LaurentPoly& p, int order);

    const std::string& var() const { return var_; }
    int order() const { return order_; }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& coeff(int k) const;
    void set_coeff(int k, Int v);
    bool is_zero() const;

    TruncatedSeries truncate(int order) const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const Int& k) const;
    TruncatedSeries operator-() const;
    bool operator==(const TruncatedSeries& o) const;
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

    // Multiply by x^k. k < 0 requires the low-order coefficients to vanish
    // (exact shift); the order drops accordingly for k > 0.
    TruncatedSeries shift(int k) const;

    // Multiplicative inverse through the order; the constant term must be +-1.
    TruncatedSeries inverse() const;

    // True if coefficients k..order are all zero.
    bool divisible_by_power(int k) const;

    std::string str() const;

private:
    void check_compatible(const TruncatedSeries& o) const;

    std::string var_ = "x";
    int order_ = 0;
    std::vector<Int> c_{Int(0)};
};

TruncatedSeries series_inverse(const TruncatedSeries& s);

// Truncated expansion of p/q with q(0) = +-1; p, q univariate with
// non-negative exponents.
TruncatedSeries expand_fraction(const LaurentPoly& p, const LaurentPoly& q, int order);

}  // namespace cwl
