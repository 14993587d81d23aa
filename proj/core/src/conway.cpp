#include "conwaylink/conway.hpp"

#include <stdexcept>

namespace cwl {

namespace {

const std::vector<std::string> kXY{"x", "y"};

LaurentPoly var_pow(const std::string& v, std::int64_t e) {
    return LaurentPoly::monomial1(v, e, 1);
}

LaurentPoly xy_mono(std::int64_t ex, std::int64_t ey, Int c,
                    const std::vector<std::string>& vars = kXY) {
    return LaurentPoly::monomial(vars, {ex, ey}, std::move(c));
}

}  // namespace

LinkData LinkData::two_component(std::string name, std::int64_t lk, LaurentPoly omega) {
    if (omega.nvars() != 2) throw usage_error("LinkData: two-component potential must be bivariate");
    if (omega.eval_ones() != lk)
        throw domain_error("LinkData: Omega(1,1) != lk for " + name);
    LaurentPoly inverted = omega.scale_exponent(0, -1).scale_exponent(1, -1);
    if (inverted != omega)
        throw domain_error("LinkData: symmetry Omega(1/x,1/y) == Omega(x,y) fails for " + name);
    return LinkData{std::move(name), 2, lk, std::move(omega)};
}

LinkData LinkData::knot(std::string name, LaurentPoly nabla) {
    if (nabla.nvars() != 1) throw usage_error("LinkData: knot polynomial must be univariate");
    if (nabla.constant_term() != 1)
        throw domain_error("LinkData: nabla(0) != 1 for " + name);
    return LinkData{std::move(name), 1, 0, std::move(nabla)};
}

LinkData LinkData::hopf() {
    return two_component("hopf", 1, LaurentPoly::constant(kXY, 1));
}

LinkData LinkData::unknot() {
    return knot("unknot", LaurentPoly::constant1("z", 1));
}

LinkData LinkData::mazur() {
    // Omega_M(x,y) = 1 + (xy + x^{-1}y^{-1})(x - x^{-1})(y - y^{-1})
    LaurentPoly m = xy_mono(1, 1, 1) + xy_mono(-1, -1, 1);
    LaurentPoly u = xy_mono(1, 0, 1) + xy_mono(-1, 0, -1);
    LaurentPoly v = xy_mono(0, 1, 1) + xy_mono(0, -1, -1);
    return two_component("mazur", 1, LaurentPoly::constant(kXY, 1) + m * u * v);
}

LinkData swap_components(const LinkData& link) {
    if (link.components != 2) throw usage_error("swap_components: two-component link required");
    return LinkData{link.name + ".swapped", link.components, link.lk, link.potential.swap_vars()};
}

LaurentPoly fibonacci(std::int64_t n) {
    if (n < 0) {
        LaurentPoly f = fibonacci(-n);
        return (-n) % 2 == 1 ? f : -f;  // F_{-n} = (-1)^{n+1} F_n
    }
    LaurentPoly a = LaurentPoly::zero({"z"});
    LaurentPoly b = LaurentPoly::constant1("z", 1);
    LaurentPoly z = var_pow("z", 1);
    for (std::int64_t i = 0; i < n; ++i) {
        LaurentPoly next = z * b + a;
        a = b;
        b = next;
    }
    return a;
}

LaurentPoly lucas(std::int64_t n) {
    if (n < 0) {
        LaurentPoly l = lucas(-n);
        return (-n) % 2 == 0 ? l : -l;  // L_{-n} = (-1)^n L_n
    }
    LaurentPoly a = LaurentPoly::constant1("z", 2);
    LaurentPoly b = var_pow("z", 1);
    LaurentPoly z = var_pow("z", 1);
    if (n == 0) return a;
    for (std::int64_t i = 1; i < n; ++i) {
        LaurentPoly next = z * b + a;
        a = b;
        b = next;
    }
    return b;
}

RecursionState recursion_state(std::int64_t n) {
    if (n < 1) throw usage_error("recursion_state: n >= 1 required");
    LaurentPoly z = var_pow("z", 1);
    LaurentPoly z2 = z * z;
    // b_k = 1 - z^2 + z^4 - ... + (-z^2)^{k-1}
    auto closed_b = [&](std::int64_t k) {
        LaurentPoly b = LaurentPoly::zero({"z"});
        LaurentPoly pw = LaurentPoly::constant1("z", 1);
        for (std::int64_t i = 0; i < k; ++i) {
            b += pw;
            pw = pw * -z2;
        }
        return b;
    };
    LaurentPoly c_prev2 = LaurentPoly::zero({"z"});  // c_1
    LaurentPoly c_prev = z;                          // c_2
    LaurentPoly c = n == 1 ? c_prev2 : c_prev;
    for (std::int64_t k = 3; k <= n; ++k) {
        LaurentPoly bk1 = closed_b(k - 1), bk2 = closed_b(k - 2);
        c = z * (bk1 - bk2 * Int(2)) - z2 * (c_prev - c_prev2);
        c_prev2 = c_prev;
        c_prev = c;
    }
    LaurentPoly b = closed_b(n);
    return RecursionState{n, b - z * c, b, c};
}

LaurentPoly nabla_J(std::int64_t r) {
    if (r < 1) throw usage_error("nabla_J: r >= 1 required");
    return recursion_state(r).a;
}

LaurentPoly nabla_J_oracle(std::int64_t r) {
    if (r < 1) throw usage_error("nabla_J_oracle: r >= 1 required");
    // factor at zeta^k: 1 - (T^2 - T) z^2
    LaurentPoly z2 = var_pow("z", 2);
    TPoly g({"z"});
    g.insert(0, LaurentPoly::constant1("z", 1));
    g.insert(2, -z2);
    g.insert(1, z2);
    return roots_of_unity_product(g, r);
}

LaurentPoly nabla_M(std::int64_t r) {
    if (r < 1) throw usage_error("nabla_M: r >= 1 required");
    LaurentPoly tail = LaurentPoly::monomial1("z", r + 2, 1) * lucas(r + 1);
    if (r % 2 == 0) tail = -tail;
    return var_pow("z", 1) * nabla_J(r) + tail;
}

LaurentPoly omega_Mr(std::int64_t r) { return omega_Mr(r, kXY); }

LaurentPoly omega_Mr(std::int64_t r, const std::vector<std::string>& vars) {
    if (r < 1) throw usage_error("omega_Mr: r >= 1 required");
    if (vars.size() != 2) throw usage_error("omega_Mr: two variables required");
    LaurentPoly u = xy_mono(1, 0, 1, vars) + xy_mono(-1, 0, -1, vars);
    LaurentPoly v = xy_mono(0, 1, 1, vars) + xy_mono(0, -1, -1, vars);
    LaurentPoly head = compose(nabla_J(r), u);
    LaurentPoly bracket =
        xy_mono(r, 1, r % 2 == 1 ? 1 : -1, vars) + xy_mono(-r, -1, 1, vars);
    return head + u.pow(static_cast<std::uint64_t>(r)) * v * bracket;
}

LaurentPoly omega_Mr_oracle(std::int64_t r) {
    if (r < 1) throw usage_error("omega_Mr_oracle: r >= 1 required");
    const std::vector<std::string> xeta{"x", "eta"};
    // factor at zeta^j: 1 + (x eta^2 T - x^{-1} eta^{-2} T^{-1}) u - u^2
    LaurentPoly u = xy_mono(1, 0, 1, xeta) + xy_mono(-1, 0, -1, xeta);
    TPoly g(xeta);
    g.insert(0, LaurentPoly::constant(xeta, 1) - u * u);
    g.insert(1, xy_mono(1, 2, 1, xeta) * u);
    g.insert(-1, -(xy_mono(-1, -2, 1, xeta) * u));
    LaurentPoly prod = roots_of_unity_product(g, r);
    // substitute eta^r -> y
    LaurentPoly out(kXY);
    for (const auto& [e, c] : prod.terms()) {
        if (e[1] % r != 0)
            throw std::logic_error("omega_Mr_oracle: eta exponent not a multiple of r");
        out.insert({e[0], e[1] / r}, c);
    }
    return out;
}

LaurentPoly splice_omega(const LinkData& L, const LinkData& L2, std::int64_t mu,
                         std::int64_t nu) {
    if (L.components != 2 || L2.components != 2)
        throw usage_error("splice_omega: two-component inputs required");
    return L.potential.scale_exponent(1, nu) * L2.potential.scale_exponent(0, mu);
}

LaurentPoly connected_sum_omega(const LinkData& L, const LinkData& Q) {
    if (L.components != 2 || Q.components != 1)
        throw usage_error("connected_sum_omega: link and knot required");
    LaurentPoly v = xy_mono(0, 1, 1) + xy_mono(0, -1, -1);
    return L.potential * compose(Q.potential, v);
}

LaurentPoly pushoff_omega(const LinkData& L, std::int64_t n) {
    if (L.components != 2) throw usage_error("pushoff_omega: two-component input required");
    if (n < 1) throw usage_error("pushoff_omega: n >= 1 required");
    LaurentPoly pre = (xy_mono(L.lk, 0, 1) + xy_mono(-L.lk, 0, -1))
                          .pow(static_cast<std::uint64_t>(n - 1));
    return pre * L.potential.scale_exponent(1, n);
}

LaurentPoly orientation_reverse_omega(const LinkData& L) {
    if (L.components != 2)
        throw usage_error("orientation_reverse_omega: two-component input required");
    return -L.potential.scale_exponent(0, -1);
}

LaurentPoly annulus_omega(const LinkData& sublink_knot, std::int64_t l) {
    if (sublink_knot.components != 1)
        throw usage_error("annulus_omega: sublink knot data required");
    // -(x^l - x^{-l})^2 * nabla_{K1}(u) / u, assembled without any division
    LaurentPoly a = x_power_diff(l);
    LaurentPoly q = x_power_diff_over_u(l);
    return -(a * q * substitute_u(sublink_knot.potential));
}

LinkHomotopyDelta link_homotopy_delta(std::int64_t n) {
    if (n % 2 != 0) throw usage_error("link_homotopy_delta: n must be even");
    LaurentPoly prod = (fibonacci(n) * lucas(1 - n)).with_vars({"v"});
    LaurentPoly poly({"v"});
    if (!prod.is_zero()) {
        if (prod.low_degree() < 1)
            throw std::logic_error("link_homotopy_delta: product not divisible by v");
        for (const auto& [e, c] : prod.terms()) poly.insert({e[0] - 1, 0}, c);
    }
    bool even = true;
    for (const auto& [e, c] : poly.terms())
        if (e[0] % 2 != 0) even = false;
    return LinkHomotopyDelta{poly, even};
}

bool lucas_even_identity(std::int64_t n) {
    if (n < 0) throw usage_error("lucas_even_identity: n >= 0 required");
    LaurentPoly lhs = substitute_u(lucas(2 * n));
    LaurentPoly rhs = n == 0 ? LaurentPoly::constant1("x", 2)
                             : var_pow("x", 2 * n) + var_pow("x", -2 * n);
    return lhs == rhs;
}

bool congruence_check(const TPoly& P, std::int64_t r, std::int64_t p, std::int64_t n,
                      std::int64_t m) {
    if (p < 2 || n < 1 || m < 1) throw usage_error("congruence_check: need p >= 2, n >= 1, m >= 1");
    if (mpz_probab_prime_p(Int(p).get_mpz_t(), 32) == 0)
        throw usage_error("congruence_check: p is not prime");
    if (m % p == 0) throw usage_error("congruence_check: (m, p) != 1");
    std::int64_t pn = 1;
    for (std::int64_t i = 0; i < n; ++i) pn *= p;
    if (pn * m != r) throw usage_error("congruence_check: r != p^n * m");
    LaurentPoly lhs = roots_of_unity_product(P, r);
    LaurentPoly rhs = roots_of_unity_product(P, m).pow(static_cast<std::uint64_t>(pn));
    return (lhs - rhs).mod(p).is_zero();
}

std::vector<LaurentPoly> nabla_J_generating_rhs(int N) {
    if (N < 1) throw usage_error("nabla_J_generating_rhs: N >= 1 required");
    // Truncated x-series with z-polynomial coefficients; index = power of x.
    using XSeries = std::vector<LaurentPoly>;
    const LaurentPoly zero = LaurentPoly::zero({"z"});
    const LaurentPoly one = LaurentPoly::constant1("z", 1);
    const LaurentPoly z2 = var_pow("z", 2);
    auto mul = [&](const XSeries& a, const XSeries& b) {
        XSeries r(static_cast<std::size_t>(N) + 1, zero);
        for (int i = 0; i <= N; ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; i + j <= N; ++j)
                if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
        }
        return r;
    };
    // 1/(1 + z^2(x - x^2)): invert 1 + t with t = z^2 x - z^2 x^2
    XSeries inv(static_cast<std::size_t>(N) + 1, zero);
    inv[0] = one;
    for (int k = 1; k <= N; ++k) {
        // inv[k] = -(z^2 * inv[k-1] - z^2 * inv[k-2])
        LaurentPoly acc = z2 * inv[k - 1];
        if (k >= 2) acc -= z2 * inv[k - 2];
        inv[k] = -acc;
    }
    XSeries tail(static_cast<std::size_t>(N) + 1, zero);
    // 1/(1-x) + 1/(1+z^2 x) - 1
    LaurentPoly alt = one;
    for (int k = 0; k <= N; ++k) {
        tail[k] = one + alt;
        alt = alt * -z2;
    }
    tail[0] = one;  // 1 + 1 - 1
    XSeries prod = mul(inv, tail);
    std::vector<LaurentPoly> out(static_cast<std::size_t>(N), zero);
    for (int k = 1; k <= N; ++k) out[k - 1] = prod[k - 1];  // times leading x
    return out;
}

}  // namespace cwl
