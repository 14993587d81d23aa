#include "conwaylink/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace cwl {

LaurentPoly::LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
    if (vars_.empty() || vars_.size() > 2)
        throw usage_error("LaurentPoly: variable list must have 1 or 2 entries");
}

LaurentPoly LaurentPoly::zero(std::vector<std::string> vars) {
    return LaurentPoly(std::move(vars));
}

LaurentPoly LaurentPoly::constant(std::vector<std::string> vars, Int c) {
    LaurentPoly p(std::move(vars));
    p.insert({0, 0}, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> vars, Exp e, Int c) {
    LaurentPoly p(std::move(vars));
    if (p.nvars() == 1 && e[1] != 0)
        throw usage_error("LaurentPoly: univariate monomial with second exponent");
    p.insert(e, c);
    return p;
}

LaurentPoly LaurentPoly::constant1(const std::string& var, Int c) {
    return constant({var}, std::move(c));
}

LaurentPoly LaurentPoly::monomial1(const std::string& var, std::int64_t e, Int c) {
    return monomial({var}, {e, 0}, std::move(c));
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Exp{0, 0};
}

Int LaurentPoly::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

Int LaurentPoly::eval_ones() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::int64_t LaurentPoly::degree(std::size_t axis) const {
    if (terms_.empty()) throw domain_error("degree of zero polynomial");
    std::int64_t d = terms_.begin()->first[axis];
    for (const auto& [e, c] : terms_) d = std::max(d, e[axis]);
    return d;
}

std::int64_t LaurentPoly::low_degree(std::size_t axis) const {
    if (terms_.empty()) throw domain_error("low_degree of zero polynomial");
    std::int64_t d = terms_.begin()->first[axis];
    for (const auto& [e, c] : terms_) d = std::min(d, e[axis]);
    return d;
}

void LaurentPoly::insert(const Exp& e, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
    if (vars_ != o.vars_)
        throw usage_error("LaurentPoly: variable mismatch (" + str() + " vs " + o.str() + ")");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_compatible(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.insert(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    check_compatible(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.insert(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) insert(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) insert(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_compatible(o);
    LaurentPoly r(vars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.insert({e1[0] + e2[0], e1[1] + e2[1]}, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::operator*(const Int& c) const {
    LaurentPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
}

LaurentPoly LaurentPoly::pow(std::uint64_t n) const {
    LaurentPoly r = constant(vars_, 1);
    LaurentPoly b = *this;
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

LaurentPoly LaurentPoly::scale_exponent(std::size_t axis, std::int64_t k) const {
    if (axis >= nvars()) throw usage_error("scale_exponent: bad axis");
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exp f = e;
        f[axis] *= k;
        r.insert(f, c);
    }
    return r;
}

LaurentPoly LaurentPoly::swap_vars() const {
    if (nvars() != 2) throw usage_error("swap_vars: needs a bivariate polynomial");
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(Exp{e[1], e[0]}, c);
    return r;
}

LaurentPoly LaurentPoly::with_vars(std::vector<std::string> vars) const {
    if (vars.size() != vars_.size()) throw usage_error("with_vars: arity change");
    LaurentPoly r(std::move(vars));
    r.terms_ = terms_;
    return r;
}

LaurentPoly LaurentPoly::collapse_vars(const std::string& var) const {
    if (nvars() != 2) throw usage_error("collapse_vars: needs a bivariate polynomial");
    LaurentPoly r({var});
    for (const auto& [e, c] : terms_) r.insert({e[0] + e[1], 0}, c);
    return r;
}

LaurentPoly LaurentPoly::promote(std::vector<std::string> vars, std::size_t axis) const {
    if (nvars() != 1) throw usage_error("promote: needs a univariate polynomial");
    LaurentPoly r(std::move(vars));
    if (axis >= r.nvars()) throw usage_error("promote: bad axis");
    for (const auto& [e, c] : terms_) {
        Exp f{0, 0};
        f[axis] = e[0];
        r.terms_.emplace(f, c);
    }
    return r;
}

LaurentPoly LaurentPoly::mod(const Int& p) const {
    if (p <= 0) throw usage_error("mod: modulus must be positive");
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Int m = c % p;
        if (m < 0) m += p;
        if (m != 0) r.terms_.emplace(e, m);
    }
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < nvars(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << mono;
        }
    }
    return out.str();
}

LaurentPoly compose(const LaurentPoly& p, const LaurentPoly& base) {
    if (p.nvars() != 1) throw usage_error("compose: p must be univariate");
    LaurentPoly r = LaurentPoly::zero(base.vars());
    if (p.is_zero()) return r;
    if (p.low_degree() < 0)
        throw usage_error("compose: negative exponents in p");
    // Horner over the sparse support.
    std::int64_t last = -1;
    std::vector<std::pair<std::int64_t, Int>> asc(p.terms().size());
    std::size_t n = 0;
    for (const auto& [e, c] : p.terms()) asc[n++] = {e[0], c};
    LaurentPoly power = LaurentPoly::constant(base.vars(), 1);
    for (const auto& [e, c] : asc) {
        for (std::int64_t k = last + 1; k <= e; ++k)
            if (k > 0) power = power * base;
        last = e;
        r += power * c;
    }
    return r;
}

LaurentPoly substitute_u(const LaurentPoly& p, const std::string& var) {
    LaurentPoly u = LaurentPoly::monomial1(var, 1, 1) + LaurentPoly::monomial1(var, -1, -1);
    return compose(p, u);
}

LaurentPoly to_z_polynomial(const LaurentPoly& p, const std::string& var) {
    if (p.nvars() != 1) throw usage_error("to_z_polynomial: p must be univariate");
    LaurentPoly rem = p;
    LaurentPoly q({var});
    LaurentPoly u = LaurentPoly::monomial1(p.vars()[0], 1, 1) +
                    LaurentPoly::monomial1(p.vars()[0], -1, -1);
    LaurentPoly upow = LaurentPoly::constant1(p.vars()[0], 1);
    std::int64_t upow_deg = 0;
    while (!rem.is_zero()) {
        std::int64_t d = rem.degree();
        if (d < 0) throw domain_error("to_z_polynomial: not a polynomial in x - 1/x");
        Int c = rem.coeff1(d);
        while (upow_deg < d) { upow = upow * u; ++upow_deg; }
        if (upow_deg != d) {  // d decreased past a cached power; recompute
            upow = u.pow(static_cast<std::uint64_t>(d));
            upow_deg = d;
        }
        q.insert({d, 0}, c);
        rem -= upow * c;
        if (!rem.is_zero() && rem.degree() >= d)
            throw domain_error("to_z_polynomial: reduction failed");
    }
    return q;
}

LaurentPoly x_power_diff(std::int64_t l, const std::string& var) {
    LaurentPoly r({var});
    if (l == 0) return r;
    r.insert({l, 0}, 1);
    r.insert({-l, 0}, -1);
    return r;
}

LaurentPoly x_power_diff_over_u(std::int64_t l, const std::string& var) {
    // (x^l - x^-l)/(x - x^-1) = sign(l) * (x^{|l|-1} + x^{|l|-3} + ... + x^{1-|l|})
    LaurentPoly r({var});
    if (l == 0) return r;
    Int sign = l > 0 ? 1 : -1;
    std::int64_t a = l > 0 ? l : -l;
    for (std::int64_t e = 1 - a; e <= a - 1; e += 2) r.insert({e, 0}, sign);
    return r;
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw domain_error("divide_exact: division by zero");
    if (a.is_zero()) return LaurentPoly::zero(a.vars());
    if (a.vars() != b.vars()) throw usage_error("divide_exact: variable mismatch");
    LaurentPoly rem = a;
    LaurentPoly q(a.vars());
    const auto bl = b.terms().rbegin();  // lex-leading term of the divisor
    // Exponent floor for any exact quotient; hitting it means b does not divide a.
    const std::int64_t lo0 = a.low_degree(0) - b.low_degree(0);
    const std::int64_t lo1 = a.nvars() == 2 ? a.low_degree(1) - b.low_degree(1) : 0;
    while (!rem.is_zero()) {
        const auto al = rem.terms().rbegin();
        if (!divisible(al->second, bl->second))
            throw domain_error("divide_exact: not divisible");
        LaurentPoly::Exp e{al->first[0] - bl->first[0], al->first[1] - bl->first[1]};
        if (e[0] < lo0 || (a.nvars() == 2 && e[1] < lo1))
            throw domain_error("divide_exact: not divisible");
        Int c = div_exact(al->second, bl->second);
        LaurentPoly t = LaurentPoly::monomial(a.vars(), e, c);
        q += t;
        rem -= t * b;
    }
    return q;
}

}  // namespace cwl
