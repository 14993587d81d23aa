#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "conwaylink/bigint.hpp"

namespace cwl {

// Thrown on violated preconditions (mismatched variables, bad arguments).
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a value is outside an operation's mathematical domain
// (non-unit series constant, zero resultant input, ...).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Sparse integer Laurent polynomial in one or two named variables.
//
// Invariants: no zero coefficients are stored; the exponent map is ordered, so
// equal polynomials have identical representations. For a univariate
// polynomial the second exponent slot is always 0.
class LaurentPoly {
public:
    using Exp = std::array<std::int64_t, 2>;

    LaurentPoly() = default;  // zero polynomial over the default variable "z"
    explicit LaurentPoly(std::vector<std::string> vars);

    static LaurentPoly zero(std::vector<std::string> vars);
    static LaurentPoly constant(std::vector<std::string> vars, Int c);
    static LaurentPoly monomial(std::vector<std::string> vars, Exp e, Int c);
    // Univariate conveniences.
    static LaurentPoly constant1(const std::string& var, Int c);
    static LaurentPoly monomial1(const std::string& var, std::int64_t e, Int c);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::map<Exp, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    Int coeff(const Exp& e) const;
    Int coeff1(std::int64_t e) const { return coeff({e, 0}); }
    // Constant term (all exponents zero).
    Int constant_term() const { return coeff({0, 0}); }
    // Sum of all coefficients = evaluation at (1,...,1).
    Int eval_ones() const;

    // Max/min exponent of the given variable; requires a nonzero polynomial.
    std::int64_t degree(std::size_t axis = 0) const;
    std::int64_t low_degree(std::size_t axis = 0) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator*(const Int& c) const;
    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly pow(std::uint64_t n) const;

    // Monomial substitution var_axis -> var_axis^k. k may be zero (sets the
    // variable to 1) or negative (inversion).
    LaurentPoly scale_exponent(std::size_t axis, std::int64_t k) const;
    // Swap the two variables of a bivariate polynomial.
    LaurentPoly swap_vars() const;
    // Rename variables without touching exponents.
    LaurentPoly with_vars(std::vector<std::string> vars) const;
    // Bivariate -> univariate by identifying the two variables.
    LaurentPoly collapse_vars(const std::string& var) const;
    // Univariate -> bivariate, placing the variable on the given axis.
    LaurentPoly promote(std::vector<std::string> vars, std::size_t axis) const;

    // Reduce all coefficients mod p (p > 0), in symmetric-free canonical form
    // with representatives in [0, p).
    LaurentPoly mod(const Int& p) const;

    void insert(const Exp& e, const Int& c);  // adds c to the coefficient at e

    std::string str() const;

private:
    void check_compatible(const LaurentPoly& o) const;

    std::vector<std::string> vars_{"z"};
    std::map<Exp, Int> terms_;
};

// p(base) for univariate p with non-negative exponents; the result lives in
// base's variables. Realizes substitutions like z -> x - x^{-1}.
LaurentPoly compose(const LaurentPoly& p, const LaurentPoly& base);

// p(x - x^{-1}) for univariate p(z), expanded exactly in the variable `var`.
LaurentPoly substitute_u(const LaurentPoly& p, const std::string& var = "x");

// Inverse of substitute_u on its image: given p(x) of the form q(x - x^{-1})
// with q an ordinary polynomial, recover q(z). Throws domain_error otherwise.
LaurentPoly to_z_polynomial(const LaurentPoly& p, const std::string& var = "z");

// (x^l - x^{-l}) and its exact quotient by (x - x^{-1}).
LaurentPoly x_power_diff(std::int64_t l, const std::string& var = "x");
LaurentPoly x_power_diff_over_u(std::int64_t l, const std::string& var = "x");

// Exact division: returns q with a = q*b. Throws domain_error if b is zero or
// does not divide a.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace cwl
