#include "conwaylink/groups.hpp"

#include <cctype>
#include <functional>
#include <sstream>

namespace cwl {

std::string HeisElement::str() const {
    std::ostringstream o;
    o << "x^" << l << " y^" << m << " [y,x]^" << n;
    return o.str();
}

HeisElement heis_mul(const HeisElement& a, const HeisElement& b) {
    return {a.l + b.l, a.m + b.m, a.n + b.n + a.m * b.l};
}

HeisElement heis_inv(const HeisElement& a) { return {-a.l, -a.m, -a.n + a.l * a.m}; }

HeisElement heis_pow(const HeisElement& a, std::int64_t k) {
    if (k < 0) return heis_pow(heis_inv(a), -k);
    HeisElement r;
    for (std::int64_t i = 0; i < k; ++i) r = heis_mul(r, a);
    return r;
}

HeisElement heis_phi(const HeisElement& a) {
    return {a.m, a.m - a.l, a.n - a.l * a.m + a.m * (a.m + 1) / 2};
}

HeisElement heis_phi_inv(const HeisElement& a) {
    return {a.l - a.m, a.l, a.n + a.l * (a.l - 1) / 2 - a.l * a.m};
}

HeisElement heis_phi_power(const HeisElement& a, std::int64_t k) {
    HeisElement r = a;
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i)
        r = k > 0 ? heis_phi(r) : heis_phi_inv(r);
    return r;
}

std::string GElement::str() const {
    std::ostringstream o;
    o << "t^" << k << " " << h.str();
    return o.str();
}

GElement g_mul(const GElement& a, const GElement& b) {
    return {a.k + b.k, heis_mul(heis_phi_power(a.h, b.k), b.h)};
}

GElement g_inv(const GElement& a) {
    return {-a.k, heis_phi_power(heis_inv(a.h), -a.k)};
}

GElement g_conj(const GElement& a, const GElement& g) { return g_mul(g_mul(g_inv(g), a), g); }

GElement conj_t_closed_form(const GElement& g) {
    const std::int64_t l = g.h.l, m = g.h.m;
    return {1, {l - m, l, l * (l - m) + m * (m - 1) / 2}};
}

ConjugacyVerdict conj_t_vs_txy(std::int64_t bound) {
    ConjugacyVerdict v;
    v.searched_bound = bound;
    // The system from the closed form: l - m = 1, l = 1, l(l-m) + m(m-1)/2 = 0.
    // The first two force m = 0, and then the third reads 1 = 0.
    v.witness =
        "l-m=1, l=1, l(l-m)+m(m-1)/2=0: first two give m=0, third becomes 1=0 (inconsistent)";
    const GElement a{1, {}};
    const GElement b{1, {1, 1, 0}};  // t x y
    for (std::int64_t k = -bound; k <= bound; ++k)
        for (std::int64_t l = -bound; l <= bound; ++l)
            for (std::int64_t m = -bound; m <= bound; ++m)
                for (std::int64_t n = -bound; n <= bound; ++n)
                    if (g_conj(a, {k, {l, m, n}}) == b) {
                        v.conjugate = true;
                        v.witness = "conjugator found at t^" + std::to_string(k);
                        return v;
                    }
    v.conjugate = false;
    return v;
}

namespace {

std::int64_t det2(const std::array<std::array<std::int64_t, 2>, 2>& m) {
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

std::array<std::array<std::int64_t, 2>, 2> mat_mul(
    const std::array<std::array<std::int64_t, 2>, 2>& a,
    const std::array<std::array<std::int64_t, 2>, 2>& b) {
    std::array<std::array<std::int64_t, 2>, 2> r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

}  // namespace

AbelianizationCheck abelianization_check() {
    AbelianizationCheck c;
    c.phibar = {{{0, 1}, {-1, 1}}};  // columns = images of x, y in H/H'
    c.phibar_minus_id = {{{-1, 1}, {-1, 0}}};
    c.det_phibar = det2(c.phibar);
    c.det_phibar_minus_id = det2(c.phibar_minus_id);
    const std::array<std::array<std::int64_t, 2>, 2> id{{{1, 0}, {0, 1}}};
    auto m = c.phibar;
    c.order_of_phibar = 1;
    while (!(m == id) && c.order_of_phibar < 24) {
        m = mat_mul(m, c.phibar);
        ++c.order_of_phibar;
    }
    c.ok = (c.det_phibar == 1 || c.det_phibar == -1) &&
           (c.det_phibar_minus_id == 1 || c.det_phibar_minus_id == -1);
    return c;
}

std::string FreeProductWord::str() const {
    if (syllables.empty()) return "1";
    std::string s;
    for (const auto& syl : syllables) {
        s += syl.factor == 0 ? "p" : "q";
        if (syl.exponent != 1) s += "^" + std::to_string(syl.exponent);
    }
    return s;
}

FreeProductWord freeprod_reduce(const std::vector<std::pair<int, std::int64_t>>& runs) {
    FreeProductWord w;
    for (const auto& [factor, exp] : runs) {
        if (factor != 0 && factor != 1) throw usage_error("freeprod_reduce: bad factor");
        const std::int64_t order = factor == 0 ? 3 : 2;
        std::int64_t e = ((exp % order) + order) % order;
        if (!w.syllables.empty() && w.syllables.back().factor == factor) {
            e = (w.syllables.back().exponent + e) % order;
            w.syllables.pop_back();
        }
        if (e != 0) w.syllables.push_back({factor, static_cast<int>(e)});
        // a dropped syllable may expose two mergeable neighbours
        while (w.syllables.size() >= 2) {
            auto& a = w.syllables[w.syllables.size() - 2];
            auto& b = w.syllables.back();
            if (a.factor != b.factor) break;
            const std::int64_t ord = a.factor == 0 ? 3 : 2;
            const std::int64_t merged = (a.exponent + b.exponent) % ord;
            w.syllables.pop_back();
            w.syllables.pop_back();
            if (merged != 0) w.syllables.push_back({a.factor, static_cast<int>(merged)});
        }
    }
    return w;
}

FreeProductWord freeprod_cyclic_reduce(const FreeProductWord& w) {
    FreeProductWord r = w;
    while (r.syllables.size() >= 2 && r.syllables.front().factor == r.syllables.back().factor) {
        const int factor = r.syllables.front().factor;
        const std::int64_t order = factor == 0 ? 3 : 2;
        const std::int64_t merged =
            (r.syllables.front().exponent + r.syllables.back().exponent) % order;
        r.syllables.erase(r.syllables.begin());
        r.syllables.pop_back();
        if (merged != 0) {
            // merged syllable joins at the seam, i.e. at the end of the cycle
            std::vector<std::pair<int, std::int64_t>> runs;
            for (const auto& s : r.syllables) runs.emplace_back(s.factor, s.exponent);
            runs.emplace_back(factor, merged);
            r = freeprod_reduce(runs);
        }
    }
    return r;
}

bool freeprod_conjugate_test(const FreeProductWord& a, const FreeProductWord& b) {
    const FreeProductWord ra = freeprod_cyclic_reduce(a);
    const FreeProductWord rb = freeprod_cyclic_reduce(b);
    if (ra.syllables.size() != rb.syllables.size()) return false;
    if (ra.syllables.size() <= 1) return ra == rb;  // abelian factors
    const std::size_t n = ra.syllables.size();
    for (std::size_t shift = 0; shift < n; ++shift) {
        bool match = true;
        for (std::size_t i = 0; i < n && match; ++i)
            match = ra.syllables[(i + shift) % n] == rb.syllables[i];
        if (match) return true;
    }
    return false;
}

Word parse_word(const std::string& text) {
    Word out;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_int = [&]() -> std::int64_t {
        skip_ws();
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) neg = text[pos++] == '-';
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw usage_error("parse_word: integer expected at position " + std::to_string(pos));
        std::int64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + (text[pos++] - '0');
        return neg ? -v : v;
    };
    auto invert = [](const Word& w) {
        Word r;
        for (auto it = w.rbegin(); it != w.rend(); ++it) r.emplace_back(it->first, -it->second);
        return r;
    };
    auto repeat = [&invert](const Word& w, std::int64_t k) {
        Word r;
        const Word base = k < 0 ? invert(w) : w;
        for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i)
            r.insert(r.end(), base.begin(), base.end());
        return r;
    };

    // sequence := (atom ['^' int])*
    // atom := letter | '(' sequence ')' | '[' sequence ',' sequence ']'
    std::function<Word(char)> parse_seq = [&](char stop) -> Word {
        Word seq;
        for (;;) {
            skip_ws();
            if (pos >= text.size() || text[pos] == stop || text[pos] == ',') break;
            Word atom;
            const char c = text[pos];
            if (std::isalpha(static_cast<unsigned char>(c))) {
                atom.emplace_back(c, 1);
                ++pos;
            } else if (c == '(') {
                ++pos;
                atom = parse_seq(')');
                if (pos >= text.size() || text[pos] != ')')
                    throw usage_error("parse_word: missing ')'");
                ++pos;
            } else if (c == '[') {
                ++pos;
                Word a = parse_seq(']');
                if (pos >= text.size() || text[pos] != ',')
                    throw usage_error("parse_word: missing ',' in commutator");
                ++pos;
                Word b = parse_seq(']');
                if (pos >= text.size() || text[pos] != ']')
                    throw usage_error("parse_word: missing ']'");
                ++pos;
                atom = invert(a);
                Word bi = invert(b);
                atom.insert(atom.end(), bi.begin(), bi.end());
                atom.insert(atom.end(), a.begin(), a.end());
                atom.insert(atom.end(), b.begin(), b.end());
            } else {
                throw usage_error(std::string("parse_word: unexpected character '") + c + "'");
            }
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                atom = repeat(atom, parse_int());
            }
            seq.insert(seq.end(), atom.begin(), atom.end());
        }
        return seq;
    };
    out = parse_seq('\0');
    skip_ws();
    if (pos != text.size()) throw usage_error("parse_word: trailing input");
    return out;
}

HeisElement eval_heis(const Word& w) {
    HeisElement r;
    for (const auto& [gen, exp] : w) {
        HeisElement g;
        switch (gen) {
            case 'x': g = {1, 0, 0}; break;
            case 'y': g = {0, 1, 0}; break;
            case 'c': g = {0, 0, 1}; break;  // c = [y,x]
            default: throw usage_error(std::string("eval_heis: unknown generator '") + gen + "'");
        }
        r = heis_mul(r, heis_pow(g, exp));
    }
    return r;
}

GElement eval_g(const Word& w) {
    GElement r;
    for (const auto& [gen, exp] : w) {
        GElement g;
        switch (gen) {
            case 't': g = {1, {}}; break;
            case 'x': g = {0, {1, 0, 0}}; break;
            case 'y': g = {0, {0, 1, 0}}; break;
            case 'c': g = {0, {0, 0, 1}}; break;
            default: throw usage_error(std::string("eval_g: unknown generator '") + gen + "'");
        }
        GElement p = exp >= 0 ? g : g_inv(g);
        for (std::int64_t i = 0; i < (exp < 0 ? -exp : exp); ++i) r = g_mul(r, p);
    }
    return r;
}

FreeProductWord trefoil_word_translate(const Word& w) {
    // x = p^{-1} q, y = q^{-1} p^2  (inverses: x^{-1} = q^{-1} p, y^{-1} = p^{-2} q)
    std::vector<std::pair<int, std::int64_t>> runs;
    auto push = [&](int factor, std::int64_t exp) { runs.emplace_back(factor, exp); };
    for (const auto& [gen, exp] : w) {
        const std::int64_t reps = exp < 0 ? -exp : exp;
        for (std::int64_t i = 0; i < reps; ++i) {
            switch (gen) {
                case 'x':
                    if (exp > 0) { push(0, -1); push(1, 1); }
                    else { push(1, -1); push(0, 1); }
                    break;
                case 'y':
                    if (exp > 0) { push(1, -1); push(0, 2); }
                    else { push(0, -2); push(1, 1); }
                    break;
                case 'p': push(0, exp > 0 ? 1 : -1); break;
                case 'q': push(1, exp > 0 ? 1 : -1); break;
                default:
                    throw usage_error(std::string("trefoil_word_translate: unknown generator '") +
                                      gen + "'");
            }
        }
    }
    return freeprod_reduce(runs);
}

FreeProductWord trefoil_word_translate(const std::string& text) {
    return trefoil_word_translate(parse_word(text));
}

MeridianVerdict trefoil_meridian_test() {
    MeridianVerdict v;
    v.candidate = freeprod_cyclic_reduce(trefoil_word_translate("x^2y^-1"));
    v.meridian = freeprod_cyclic_reduce(trefoil_word_translate("x"));
    v.alternation_candidate = v.candidate.alternation();
    v.alternation_meridian = v.meridian.alternation();
    v.conjugate = freeprod_conjugate_test(v.candidate, v.meridian);
    return v;
}

}  // namespace cwl
