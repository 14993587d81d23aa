#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "conwaylink/laurent.hpp"
#include "conwaylink/series.hpp"

namespace cwl {

// Element of Z[u,v,w]/(w^2 + uvw - u^2 - v^2 - 4) in canonical w-linear form,
// with the parity convention of the two-variable Conway polynomial: for
// linking-number parity lambda, a monomial u^i v^j appears only when
// i = j != lambda (mod 2) and u^i v^j w only when i = j = lambda (mod 2).
//
// order < 0 means an exact polynomial; order >= 0 means coefficients are
// known for total (u,v)-degree i + j <= order only.
class WElement {
public:
    using Key = std::pair<int, int>;
    using Table = std::map<Key, Int>;

    explicit WElement(int lambda, int order = -1);

    int lambda() const { return lambda_; }
    int order() const { return order_; }
    bool is_exact() const { return order_ < 0; }
    const Table& plain() const { return plain_; }
    const Table& wpart() const { return wpart_; }
    bool is_zero() const { return plain_.empty() && wpart_.empty(); }

    // Adds c at u^i v^j (w = false) or u^i v^j w (w = true); enforces parity.
    void insert(int i, int j, bool w, const Int& c);
    Int coeff(int i, int j, bool w) const;

    WElement truncate(int order) const;

    WElement operator+(const WElement& o) const;  // same lambda required
    WElement operator-(const WElement& o) const;
    WElement operator-() const;
    bool operator==(const WElement& o) const;
    bool operator!=(const WElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    int lambda_;
    int order_;
    Table plain_, wpart_;
};

// Product in the quotient ring, reduced to w-degree <= 1 canonical form via
// w^2 = u^2 + v^2 + 4 - uvw. The product of a lambda1-legal and lambda2-legal
// element is (lambda1 + lambda2 + 1)-legal.
WElement w_mul(const WElement& a, const WElement& b);

// Rewrites Omega(x, y) in the (u, v, w) form, u = x - x^{-1}, v = y - y^{-1},
// w = x y^{-1} + x^{-1} y, by exact linear solving over the support window.
// Throws domain_error if no parity-legal representative exists.
WElement omega_to_w(const LaurentPoly& omega, std::int64_t lk);

// Inverse substitution; requires an exact (untruncated) element.
LaurentPoly w_to_omega(const WElement& e);

// Reduced invariant: sigma / (nabla1(u) nabla2(v)) as a w-series through the
// given total order. nabla1, nabla2 must have unit constant terms.
WElement reduced_w(const WElement& sigma, const LaurentPoly& nabla1,
                   const LaurentPoly& nabla2, int order);

// Specialization x = y, i.e. u = v = z, w = 2.
LaurentPoly specialize_diagonal(const WElement& e);                 // exact input
TruncatedSeries specialize_diagonal_series(const WElement& e);      // truncated input

// Coefficient series of u^i in the w-part (series in v, through v-order n).
TruncatedSeries u_row_w(const WElement& e, int i, int order);
// Same for the plain part.
TruncatedSeries u_row_plain(const WElement& e, int i, int order);

// The P_k expansion: for odd lambda, sigma = sum u^{2i} P_{2i}(v^2)
// + w sum u^{2i+1} v P_{2i+1}(v^2); for even lambda the two branches swap.
// Each P_k is a series in one variable standing for v^2. C_L := P_1.
struct PkExpansion {
    int lambda = 1;
    std::vector<TruncatedSeries> p;  // p[k] known through its own order
};
PkExpansion pk_expand(const WElement& e, int k_max);

// Additivity of the Cochran series under splice: C_splice = C_L + C_L2,
// applied to the raw u^1-w component series (both inputs from lk = 1 links).
TruncatedSeries cochran_splice_add(const TruncatedSeries& c1, const TruncatedSeries& c2);

// Unique factorization s = (1 + b_1 z)(1 + b_2 z^2)(1 + b_3 z^3)... for a
// series with s(0) = 1; returns (n, b_n) for n = 1..order.
std::vector<std::pair<int, Int>> factor_series(const TruncatedSeries& s);

// R' + w R'' split with an attempted bounded-degree bivariate rational fit of
// each part (numerator total degree <= M, denominator total degree <= N,
// Q(0,0) = 1). Parts that admit no such fit are reported undecided.
struct BivariateRational {
    LaurentPoly num, den;  // over {"u","v"}, non-negative exponents
};
struct WSeriesRationalForm {
    std::optional<BivariateRational> part_plain;  // R'
    std::optional<BivariateRational> part_w;      // R''
    bool decided() const { return part_plain && part_w; }
};
WSeriesRationalForm w_series_rational_split(const WElement& e, int M, int N);
// Raw-table variant for series that do not satisfy the parity convention
// (e.g. w-multiples of arbitrary geometric series).
WSeriesRationalForm w_series_rational_split(const WElement::Table& plain,
                                            const WElement::Table& wpart, int order, int M,
                                            int N);

}  // namespace cwl
