#include "conwaylink/rational_series.hpp"

namespace cwl {

Int content(const LaurentPoly& p) {
    Int g = 0;
    for (const auto& [e, c] : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

namespace {

LaurentPoly primitive_part(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    if (p.coeff1(p.degree()) < 0) g = -g;
    LaurentPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) r.insert(e, div_exact(c, g));
    return r;
}

// Pseudo-remainder prem(a, b) for univariate a, b with deg a >= deg b.
LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b) {
    const std::int64_t db = b.degree();
    const Int lb = b.coeff1(db);
    while (!a.is_zero() && a.degree() >= db) {
        const std::int64_t da = a.degree();
        const Int la = a.coeff1(da);
        a = a * lb - b * LaurentPoly::monomial1(a.vars()[0], da - db, la);
    }
    return a;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars() != 1 || b.nvars() != 1 || a.vars() != b.vars())
        throw usage_error("poly_gcd: univariate polynomials over one variable required");
    if (a.is_zero()) return primitive_part(b) * content(b);
    if (b.is_zero()) return primitive_part(a) * content(a);
    if (a.low_degree() < 0 || b.low_degree() < 0)
        throw usage_error("poly_gcd: negative exponents");
    Int cg;
    mpz_gcd(cg.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
    LaurentPoly f = primitive_part(a), g = primitive_part(b);
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        LaurentPoly r = primitive_part(pseudo_rem(f, g));
        f = g;
        g = r;
    }
    return f * cg;
}

RationalSeries::RationalSeries(LaurentPoly p, LaurentPoly q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_.nvars() != 1 || q_.nvars() != 1 || p_.vars() != q_.vars())
        throw usage_error("RationalSeries: univariate P, Q over one variable required");
    if (!p_.is_zero() && p_.low_degree() < 0)
        throw usage_error("RationalSeries: negative exponent in numerator");
    if (q_.is_zero() || q_.low_degree() < 0)
        throw usage_error("RationalSeries: bad denominator");
    if (!p_.is_zero()) {
        LaurentPoly g = poly_gcd(p_, q_);
        if (!g.is_constant() || g.constant_term() != 1) {
            p_ = divide_exact(p_, g);
            q_ = divide_exact(q_, g);
        }
    }
    Int q0 = q_.constant_term();
    if (q0 != 1 && q0 != -1)
        throw domain_error("RationalSeries: Q(0) must be a unit");
    if (q0 == -1) {
        p_ = -p_;
        q_ = -q_;
    }
    if (p_.is_zero()) q_ = LaurentPoly::constant(q_.vars(), 1);
}

TruncatedSeries RationalSeries::expand(int order) const {
    return expand_fraction(p_, q_, order);
}

std::string RationalSeries::str() const {
    return "(" + p_.str() + ") / (" + q_.str() + ")";
}

}  // namespace cwl
