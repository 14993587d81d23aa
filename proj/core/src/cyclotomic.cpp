#include "conwaylink/cyclotomic.hpp"

#include "conwaylink/linalg.hpp"

namespace cwl {

TPoly::TPoly(std::vector<std::string> coeff_vars) : vars_(std::move(coeff_vars)) {
    if (vars_.empty() || vars_.size() > 2)
        throw usage_error("TPoly: coefficient ring must have 1 or 2 variables");
}

TPoly TPoly::from_terms(std::vector<std::string> coeff_vars,
                        std::map<std::int64_t, LaurentPoly> terms) {
    TPoly p(std::move(coeff_vars));
    for (auto& [e, c] : terms) p.insert(e, c);
    return p;
}

std::int64_t TPoly::degree() const {
    if (terms_.empty()) throw domain_error("TPoly: degree of zero");
    return terms_.rbegin()->first;
}

std::int64_t TPoly::low_degree() const {
    if (terms_.empty()) throw domain_error("TPoly: low_degree of zero");
    return terms_.begin()->first;
}

LaurentPoly TPoly::coeff(std::int64_t e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? LaurentPoly::zero(vars_) : it->second;
}

void TPoly::insert(std::int64_t e, const LaurentPoly& c) {
    if (c.vars() != vars_) throw usage_error("TPoly: coefficient variable mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TPoly TPoly::shift(std::int64_t k) const {
    TPoly p(vars_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e + k, c);
    return p;
}

LaurentPoly resultant(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero())
        throw domain_error("resultant: zero input");
    if (a.coeff_vars() != b.coeff_vars())
        throw usage_error("resultant: coefficient ring mismatch");
    if (a.low_degree() < 0 || b.low_degree() < 0)
        throw usage_error("resultant: clear T-denominators first");
    const auto& vars = a.coeff_vars();
    const std::int64_t m = a.degree(), n = b.degree();
    const LaurentPoly zero = LaurentPoly::zero(vars);
    if (m == 0) return a.coeff(0).pow(static_cast<std::uint64_t>(n));
    if (n == 0) return b.coeff(0).pow(static_cast<std::uint64_t>(m));
    const std::size_t dim = static_cast<std::size_t>(m + n);
    std::vector<std::vector<LaurentPoly>> syl(dim, std::vector<LaurentPoly>(dim, zero));
    for (std::int64_t row = 0; row < n; ++row)
        for (std::int64_t k = 0; k <= m; ++k)
            syl[row][row + k] = a.coeff(m - k);
    for (std::int64_t row = 0; row < m; ++row)
        for (std::int64_t k = 0; k <= n; ++k)
            syl[n + row][row + k] = b.coeff(n - k);
    return bareiss_determinant(std::move(syl));
}

LaurentPoly roots_of_unity_product(const TPoly& g, std::int64_t r) {
    if (r < 1) throw usage_error("roots_of_unity_product: r must be positive");
    const auto& vars = g.coeff_vars();
    if (g.is_zero()) return LaurentPoly::zero(vars);
    const std::int64_t k = g.low_degree() < 0 ? -g.low_degree() : 0;
    const TPoly h = g.shift(k);
    LaurentPoly res;
    if (h.degree() == 0) {
        res = h.coeff(0).pow(static_cast<std::uint64_t>(r));
    } else {
        TPoly tr(vars);
        tr.insert(r, LaurentPoly::constant(vars, 1));
        tr.insert(0, LaurentPoly::constant(vars, -1));
        res = resultant(tr, h);
    }
    // prod_j zeta^{-jk} = ((-1)^{r+1})^k
    if ((r + 1) % 2 == 1 && k % 2 == 1) res = -res;
    return res;
}

LaurentPoly roots_of_unity_product_norm(const TPoly& g, std::int64_t r) {
    if (r < 1) throw usage_error("roots_of_unity_product_norm: r must be positive");
    const auto& vars = g.coeff_vars();
    if (g.is_zero()) return LaurentPoly::zero(vars);
    const LaurentPoly zero = LaurentPoly::zero(vars);
    std::vector<std::vector<LaurentPoly>> mul(static_cast<std::size_t>(r),
                                              std::vector<LaurentPoly>(static_cast<std::size_t>(r), zero));
    for (std::int64_t j = 0; j < r; ++j)
        for (const auto& [e, c] : g.terms()) {
            std::int64_t row = ((e + j) % r + r) % r;
            mul[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] += c;
        }
    return bareiss_determinant(std::move(mul));
}

CyclotomicContext::CyclotomicContext(std::int64_t r) : order(r) {
    if (r < 1) throw usage_error("CyclotomicContext: order must be >= 1");
}

std::string CyclotomicContext::ring_description() const {
    std::string s = "Z[coeffs][T]/(1";
    for (std::int64_t i = 1; i < order; ++i) s += "+T^" + std::to_string(i);
    return s + ")";
}

}  // namespace cwl
