#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "conwaylink/laurent.hpp"

namespace cwl {

// Discrete Heisenberg group element in the normal form x^l y^m [y,x]^n.
// Multiplication: (l,m,n)(l',m',n') = (l+l', m+m', n+n'+m*l').
struct HeisElement {
    std::int64_t l = 0, m = 0, n = 0;
    bool operator==(const HeisElement&) const = default;
    bool is_identity() const { return l == 0 && m == 0 && n == 0; }
    std::string str() const;
};

HeisElement heis_mul(const HeisElement& a, const HeisElement& b);
HeisElement heis_inv(const HeisElement& a);  // (-l, -m, -n + l*m)
HeisElement heis_pow(const HeisElement& a, std::int64_t k);
// phi(x) = y^{-1}, phi(y) = yx:
// phi(x^l y^m [y,x]^n) = x^m y^{m-l} [y,x]^{n - lm + m(m+1)/2}.
HeisElement heis_phi(const HeisElement& a);
// phi^{-1}(y) = x^{-1}, phi^{-1}(x) = xy.
HeisElement heis_phi_inv(const HeisElement& a);
HeisElement heis_phi_power(const HeisElement& a, std::int64_t k);

// Element t^k h of G = H x|_phi Z, with h t = t phi(h).
struct GElement {
    std::int64_t k = 0;
    HeisElement h;
    bool operator==(const GElement&) const = default;
    bool is_identity() const { return k == 0 && h.is_identity(); }
    std::string str() const;
};

GElement g_mul(const GElement& a, const GElement& b);  // t^k h t^l h' = t^{k+l} phi^l(h) h'
GElement g_inv(const GElement& a);
GElement g_conj(const GElement& a, const GElement& g);  // g^{-1} a g

// Closed form of t^g for g = t^k x^l y^m [y,x]^n:
// t * x^{l-m} y^l [y,x]^{l(l-m) + m(m-1)/2}.
GElement conj_t_closed_form(const GElement& g);

// The (t, txy) conjugacy instance: the closed form requires l-m = 1, l = 1 and
// l(l-m) + m(m-1)/2 = 0, which is inconsistent; an exhaustive search over
// |k|,|l|,|m|,|n| <= bound corroborates it.
struct ConjugacyVerdict {
    bool conjugate = false;
    std::int64_t searched_bound = 0;
    std::string witness;  // the inconsistent linear system
};
ConjugacyVerdict conj_t_vs_txy(std::int64_t bound = 3);

// Abelianization data of phi: the matrix (0 1 / -1 1), phi-id = (-1 1 / -1 0),
// both unimodular; phi-bar has order 6.
struct AbelianizationCheck {
    std::array<std::array<std::int64_t, 2>, 2> phibar;
    std::array<std::array<std::int64_t, 2>, 2> phibar_minus_id;
    std::int64_t det_phibar = 0;
    std::int64_t det_phibar_minus_id = 0;
    int order_of_phibar = 0;
    bool ok = false;  // both determinants in {+-1}
};
AbelianizationCheck abelianization_check();

// Reduced word in (Z/3) * (Z/2): alternating syllables p^{1,2} and q.
struct Syllable {
    int factor;    // 0 = the Z/3 factor (p), 1 = the Z/2 factor (q)
    int exponent;  // p: 1 or 2; q: 1
    bool operator==(const Syllable&) const = default;
};
struct FreeProductWord {
    std::vector<Syllable> syllables;
    bool operator==(const FreeProductWord&) const = default;
    std::size_t alternation() const { return syllables.size(); }
    std::string str() const;
};

// Reduction from arbitrary (factor, exponent) runs: exponents mod the factor
// order, identity syllables dropped, adjacent same-factor runs merged.
FreeProductWord freeprod_reduce(const std::vector<std::pair<int, std::int64_t>>& runs);
FreeProductWord freeprod_cyclic_reduce(const FreeProductWord& w);
// Conjugacy of cyclically reduced words: cyclic rotation for length >= 2,
// equality within the abelian factor for length <= 1.
bool freeprod_conjugate_test(const FreeProductWord& a, const FreeProductWord& b);

// Words over named generators with ^exponents, juxtaposition, parentheses and
// commutators [a,b] = a^{-1} b^{-1} a b. Alphabet is validated by the caller.
using Word = std::vector<std::pair<char, std::int64_t>>;
Word parse_word(const std::string& text);

// Evaluation of words over {x, y, [y,x]} in H, and over {t, x, y} in G.
HeisElement eval_heis(const Word& w);
GElement eval_g(const Word& w);

// Trefoil-group translation x -> p^{-1} q, y -> q^{-1} p^2 into (Z/3)*(Z/2);
// accepts words over x, y, p, q.
FreeProductWord trefoil_word_translate(const Word& w);
FreeProductWord trefoil_word_translate(const std::string& text);

// The trefoil meridian test: x^2 y^{-1} translates to a 6-syllable cyclically
// reduced word, the meridian x to a 2-syllable one, so they are not conjugate.
struct MeridianVerdict {
    FreeProductWord candidate, meridian;
    std::size_t alternation_candidate = 0, alternation_meridian = 0;
    bool conjugate = true;
};
MeridianVerdict trefoil_meridian_test();

}  // namespace cwl
