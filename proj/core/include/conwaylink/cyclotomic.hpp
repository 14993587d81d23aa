#pragma once

#include <cstdint>
#include <map>

#include "conwaylink/laurent.hpp"

namespace cwl {

// Polynomial in an auxiliary variable T whose coefficients live in a Laurent
// polynomial ring. T never mixes with the coefficient variables; it exists
// only to be eliminated by resultants or quotient-ring determinants.
class TPoly {
public:
    explicit TPoly(std::vector<std::string> coeff_vars);

    static TPoly from_terms(std::vector<std::string> coeff_vars,
                            std::map<std::int64_t, LaurentPoly> terms);

    const std::vector<std::string>& coeff_vars() const { return vars_; }
    const std::map<std::int64_t, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::int64_t degree() const;
    std::int64_t low_degree() const;
    LaurentPoly coeff(std::int64_t e) const;

    void insert(std::int64_t e, const LaurentPoly& c);

    // Multiply by T^k.
    TPoly shift(std::int64_t k) const;

private:
    std::vector<std::string> vars_;
    std::map<std::int64_t, LaurentPoly> terms_;
};

// Sylvester-determinant resultant Res_T(a, b), evaluated fraction-free over
// the coefficient ring. Requires non-negative T-exponents and nonzero inputs.
// Convention: Res(a, b) = lc(a)^{deg b} * prod b(alpha) over the roots of a.
LaurentPoly resultant(const TPoly& a, const TPoly& b);

// Exact product of g over all r-th roots of unity, computed as a resultant
// against T^r - 1 after clearing negative T-exponents; the cleared power of T
// contributes the sign ((-1)^{r+1})^k since prod_j zeta^j = (-1)^{r+1}.
LaurentPoly roots_of_unity_product(const TPoly& g, std::int64_t r);

// Independent route for the same product: the determinant of the
// multiplication-by-g matrix on Z[T]/(T^r - 1) (the norm). Negative exponents
// fold as T^{-1} = T^{r-1}.
LaurentPoly roots_of_unity_product_norm(const TPoly& g, std::int64_t r);

// Working quotient ring Z[coeff ring][T]/(1 + T + ... + T^{r-1}); all
// root-of-unity arithmetic is exact, never via complex floats.
struct CyclotomicContext {
    std::int64_t order;

    explicit CyclotomicContext(std::int64_t r);
    std::string ring_description() const;
    LaurentPoly product(const TPoly& g) const { return roots_of_unity_product(g, order); }
};

}  // namespace cwl
