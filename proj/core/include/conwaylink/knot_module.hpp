#pragma once

#include <array>
#include <string>
#include <vector>

#include "conwaylink/laurent.hpp"

namespace cwl {

enum class RingTag {
    ZT,      // Z[t^{+-1}]
    ZST,     // Z[s^{+-1}, t^{+-1}]
    ZT_loc,  // Z[t^{+-1}][1/(1-t)]
};

std::string ring_name(RingTag tag);

// Element num/(1-t)^k of the localization of Z[t^{+-1}] at {(1-t)^i}.
// Normalized: (1-t) does not divide num unless num = 0.
class LocalizedLaurent {
public:
    LocalizedLaurent();  // zero
    LocalizedLaurent(LaurentPoly num, int denom_pow);
    static LocalizedLaurent from_poly(const LaurentPoly& p) { return {p, 0}; }
    static LocalizedLaurent constant(Int c);

    const LaurentPoly& num() const { return num_; }
    int denom_pow() const { return pow_; }
    bool is_zero() const { return num_.is_zero(); }

    LocalizedLaurent operator+(const LocalizedLaurent& o) const;
    LocalizedLaurent operator-(const LocalizedLaurent& o) const;
    LocalizedLaurent operator*(const LocalizedLaurent& o) const;
    LocalizedLaurent operator-() const;
    bool operator==(const LocalizedLaurent& o) const;
    bool operator!=(const LocalizedLaurent& o) const { return !(*this == o); }

    // Units are +- t^a (1-t)^b; inverse() throws domain_error otherwise.
    bool is_unit() const;
    LocalizedLaurent inverse() const;

    std::string str() const;

private:
    void normalize();

    LaurentPoly num_;
    int pow_ = 0;
};

// Finitely presented module over a Laurent coefficient ring: rows of the
// relation matrix are relations, columns follow the generator list.
struct ModulePresentation {
    RingTag ring = RingTag::ZT;
    std::vector<std::string> gens;
    std::vector<std::vector<LaurentPoly>> rels;  // rels[i][j]: coeff of gens[j]

    void validate() const;
};

// The built-in two-generator presentation of the wild-knot module:
// <a, b | (a - b) = t a, (2 - s) b = t (2 - s^{-1}) b - t a> over Z[s,t].
ModulePresentation wild_module_presentation();

// Elimination of b via b = (1-t) a, with an audit log; the single relator is
// (1 - t^{-1}) s + (1 - t) s^{-1} + (2t + 2t^{-1} - 3). Also returns the
// exact combination relator_row = c1 * row1 + c2 * row2 certifying the step.
struct WildReduction {
    ModulePresentation two_generator;
    ModulePresentation one_generator;
    LaurentPoly relator;            // over {s, t}
    LaurentPoly substitution;       // b = (1-t) a, the (1-t) coefficient
    std::array<LaurentPoly, 2> combination;  // c1, c2 with relator = c1 R1 + c2 R2 on (a, b)
    std::vector<std::string> log;
};
WildReduction presentation_reduce_wild();

// The s-action on the free rank-2 localized model with basis (x0, x1):
// s x0 = x1, s x1 = t x0 + (2t^2 - 3t + 2)/(1-t) x1 (the unique solution of
// the relation (1-t^{-1}) x_{i+1} + (1-t) x_{i-1} + (2t+2t^{-1}-3) x_i = 0).
struct CompanionAction {
    std::array<std::array<LocalizedLaurent, 2>, 2> action;   // columns = images of x0, x1
    std::array<std::array<LocalizedLaurent, 2>, 2> inverse;  // exact matrix inverse
    LocalizedLaurent determinant;                            // -t, a unit

    std::array<LocalizedLaurent, 2> apply(const std::array<LocalizedLaurent, 2>& v) const;
    std::array<LocalizedLaurent, 2> apply_inverse(const std::array<LocalizedLaurent, 2>& v) const;
};
CompanionAction wild_module_companion();

// s^k x0 expressed in the basis (x0, x1) by iterated rewriting with the
// relation itself (independent of the companion matrix powers).
std::array<LocalizedLaurent, 2> wild_s_power_of_x0(int k);

// Unit-square-scaled variants of the rewriting coefficients: each pair is
// the exact one times (1-t^{-1})^2 resp. (1-t)^2, obtained by multiplying
// the relation through instead of dividing. Kept as a regression pin; these
// do not satisfy the relation themselves.
struct ScaledRewriting {
    std::array<LocalizedLaurent, 2> forward;   // on (x_{i-1}, x_i)
    std::array<LocalizedLaurent, 2> backward;  // on (x_{i+1}, x_i)
};
ScaledRewriting wild_scaled_rewriting();

// p != 0 never kills x0 in the free rank-2 localized model.
bool annihilator_trivial_check(const LaurentPoly& p);

// Torsion decision for a finite presentation over Z[t^{+-1}]: true iff the
// relation matrix has full column rank over the fraction field Q(t).
bool torsion_decide(const ModulePresentation& pres);

// For a cyclic presentation <a | Delta(t) a>: multiplication by (1-t) is an
// automorphism iff Delta(1) = +-1.
bool one_minus_t_invertible(const LaurentPoly& delta);

// Verifies the pushoff-cycle bookkeeping: eliminating gamma = beta - alpha and
// delta = (s-1) beta from the raw pushoff classes yields the reduced forms,
// and assembling a^- = t a^+, b^- = t b^+ gives wild_module_presentation().
struct SeifertCycleCheck {
    bool eliminations_ok = false;
    bool assembly_ok = false;
    std::vector<std::string> log;
};
SeifertCycleCheck seifert_cycle_relations_check();

}  // namespace cwl
