#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conwaylink/cyclotomic.hpp"
#include "conwaylink/laurent.hpp"

namespace cwl {

// Stored closed form of a link invariant: the two-variable potential for
// 2-component links (first component on x, second on y), or the one-variable
// Conway polynomial for knots.
struct LinkData {
    std::string name;
    int components = 1;
    std::int64_t lk = 0;
    LaurentPoly potential;  // Omega(x, y) for components == 2, nabla(z) for knots

    // Validating constructors. two_component checks Omega(1,1) == lk and the
    // symmetry Omega(1/x, 1/y) == Omega(x, y); knot checks nabla(0) == 1.
    static LinkData two_component(std::string name, std::int64_t lk, LaurentPoly omega);
    static LinkData knot(std::string name, LaurentPoly nabla);

    static LinkData hopf();
    static LinkData unknot();
    // The fake Mazur link M = (J, B): J on x, B on y.
    static LinkData mazur();
};

// Explicit component swap (B, J_r) <-> (J_r, B): exchanges x and y.
LinkData swap_components(const LinkData& link);

// Fibonacci / Lucas polynomials, any integer index.
LaurentPoly fibonacci(std::int64_t n);
LaurentPoly lucas(std::int64_t n);

// State of the A_n/B_n/C_n recursion: b_n from its closed form
// 1 - z^2 + z^4 - ... + (-z^2)^{n-1}, c_n from the displayed recurrence.
struct RecursionState {
    std::int64_t n;
    LaurentPoly a, b, c;
};
RecursionState recursion_state(std::int64_t n);

// nabla of J_r via the recursion; degree 2r-2, constant term 1.
LaurentPoly nabla_J(std::int64_t r);
// Same value via the exact cyclotomic product prod_k (1 - (zeta^{2k} - zeta^k) z^2).
LaurentPoly nabla_J_oracle(std::int64_t r);
// nabla of M_r = z nabla_{J_r} + (-1)^{r+1} z^{r+2} L_{r+1}; degree 2r+3.
LaurentPoly nabla_M(std::int64_t r);

// Two-variable potential of M_r from the closed form.
LaurentPoly omega_Mr(std::int64_t r);
// Same value via the root-of-unity product in a formal variable eta = y^{1/r},
// substituted back through eta^r -> y. Throws std::logic_error if the product
// fails to collapse to integer powers of eta^r (must not happen).
LaurentPoly omega_Mr(std::int64_t r, const std::vector<std::string>& vars);
LaurentPoly omega_Mr_oracle(std::int64_t r);

// Splice of two 2-component links along their second/first components:
// Omega_L(x, y^nu) * Omega_L2(x^mu, y).
LaurentPoly splice_omega(const LinkData& L, const LinkData& L2, std::int64_t mu, std::int64_t nu);

// Connected sum with a knot Q along the second component:
// Omega_L(x, y) * nabla_Q(y - y^{-1}).
LaurentPoly connected_sum_omega(const LinkData& L, const LinkData& Q);

// n parallel pushoffs of the second component, colors collapsed to one:
// (x^l - x^{-l})^{n-1} * Omega_L(x, y^n).
LaurentPoly pushoff_omega(const LinkData& L, std::int64_t n);

// Reversal of the first component: -Omega_L(x^{-1}, y).
LaurentPoly orientation_reverse_omega(const LinkData& L);

// L' = (K1, K, -K+): Omega_{L'}(x, y, y) = -(x^l - x^{-l})^2 Omega_{K1}(x),
// with Omega of the sublink knot K1 given by nabla_{K1}(u)/u. The input
// carries the sublink knot polynomial and the linking number l = lk(K, K1).
LaurentPoly annulus_omega(const LinkData& sublink_knot, std::int64_t l);

// F_n(v) L_{1-n}(v) / v for even n, with an even-powers-of-v flag. A link
// homotopy difference of Cochran series should be a polynomial in v^2; the
// flag records whether the literal formula delivers that (n = 2 does not,
// kept as a regression pin).
struct LinkHomotopyDelta {
    LaurentPoly poly;  // in v
    bool even_in_v = false;
};
LinkHomotopyDelta link_homotopy_delta(std::int64_t n);

// Checks L_{2n}(x - x^{-1}) == x^{2n} + x^{-2n} exactly.
bool lucas_even_identity(std::int64_t n);

// Mod-p congruence for products over roots of unity: with r = p^n * m,
// (m, p) = 1, checks prod_{j<r} P(zeta_r^j) == (prod_{k<m} P(zeta_m^k))^{p^n}
// coefficientwise mod p. The factorization is supplied by the caller and
// validated.
bool congruence_check(const TPoly& P, std::int64_t r, std::int64_t p, std::int64_t n,
                      std::int64_t m);

// Coefficients of x^1..x^N of the generating function
// x/(1 + z^2 (x - x^2)) * (1/(1-x) + 1/(1 + z^2 x) - 1); entry k-1 holds the
// z-polynomial at x^k. Matches nabla_J(k) for every k.
std::vector<LaurentPoly> nabla_J_generating_rhs(int N);

}  // namespace cwl
