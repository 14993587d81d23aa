#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conwaylink/groups.hpp"
#include "helpers.hpp"

using namespace cwl;
using cwl::testing::rand_int;

namespace {

HeisElement random_heis(std::int64_t bound) {
    return {rand_int(-bound, bound), rand_int(-bound, bound), rand_int(-bound, bound)};
}

GElement random_g(std::int64_t bound) {
    return {rand_int(-bound, bound), random_heis(bound)};
}

}  // namespace

TEST_CASE("heisenberg normal-form arithmetic") {
    // y * x = x y [y,x]
    CHECK(heis_mul({0, 1, 0}, {1, 0, 0}) == HeisElement{1, 1, 1});
    // (x y [y,x])^{-1} = x^{-1} y^{-1} (inverse exponent -n + lm = -1 + 1 = 0)
    CHECK(heis_inv({1, 1, 1}) == HeisElement{-1, -1, 0});
    for (int t = 0; t < 200; ++t) {
        HeisElement a = random_heis(6);
        CHECK(heis_mul(a, heis_inv(a)).is_identity());
        CHECK(heis_mul(heis_inv(a), a).is_identity());
    }
}

TEST_CASE("group axioms on random triples") {
    for (int t = 0; t < 1000; ++t) {
        HeisElement a = random_heis(5), b = random_heis(5), c = random_heis(5);
        CHECK(heis_mul(heis_mul(a, b), c) == heis_mul(a, heis_mul(b, c)));
        CHECK(heis_mul(a, HeisElement{}) == a);
        GElement ga = random_g(4), gb = random_g(4), gc = random_g(4);
        CHECK(g_mul(g_mul(ga, gb), gc) == g_mul(ga, g_mul(gb, gc)));
        CHECK(g_mul(ga, g_inv(ga)).is_identity());
        CHECK(g_mul(g_inv(ga), ga).is_identity());
    }
}

TEST_CASE("phi is an automorphism with the stated values") {
    CHECK(heis_phi({1, 0, 0}) == HeisElement{0, -1, 0});  // phi(x) = y^{-1}
    CHECK(heis_phi({0, 1, 0}) == HeisElement{1, 1, 1});   // phi(y) = yx = x y [y,x]
    CHECK(heis_phi({0, 0, 1}) == HeisElement{0, 0, 1});   // phi([y,x]) = [y,x]
    CHECK(heis_phi_inv({0, 1, 0}) == HeisElement{-1, 0, 0});  // phi^{-1}(y) = x^{-1}
    CHECK(heis_phi_inv({1, 0, 0}) == HeisElement{1, 1, 0});   // phi^{-1}(x) = xy
    for (int t = 0; t < 400; ++t) {
        HeisElement a = random_heis(6), b = random_heis(6);
        CHECK(heis_phi(heis_mul(a, b)) == heis_mul(heis_phi(a), heis_phi(b)));
        CHECK(heis_phi_inv(heis_phi(a)) == a);
        CHECK(heis_phi(heis_phi_inv(a)) == a);
    }
    // phi on generators generates the same map as the closed form
    for (int t = 0; t < 100; ++t) {
        HeisElement a = random_heis(5);
        HeisElement expanded = heis_mul(
            heis_mul(heis_pow(heis_phi({1, 0, 0}), a.l), heis_pow(heis_phi({0, 1, 0}), a.m)),
            heis_pow({0, 0, 1}, a.n));
        CHECK(heis_phi(a) == expanded);
    }
}

TEST_CASE("semidirect product conjugation") {
    // t^x = t x y [y,x]
    GElement t{1, {}};
    GElement x{0, {1, 0, 0}};
    CHECK(g_conj(t, x) == GElement{1, {1, 1, 1}});
    // a^e = a
    for (int i = 0; i < 50; ++i) {
        GElement a = random_g(4);
        CHECK(g_conj(a, GElement{}) == a);
    }
    // closed form matches brute force on the full box |k|,|l|,|m|,|n| <= 3
    for (std::int64_t k = -3; k <= 3; ++k)
        for (std::int64_t l = -3; l <= 3; ++l)
            for (std::int64_t m = -3; m <= 3; ++m)
                for (std::int64_t n = -3; n <= 3; ++n) {
                    GElement g{k, {l, m, n}};
                    CHECK(g_conj(t, g) == conj_t_closed_form(g));
                }
}

TEST_CASE("t and txy are not conjugate") {
    ConjugacyVerdict v3 = conj_t_vs_txy(3);
    CHECK_FALSE(v3.conjugate);
    CHECK(v3.witness.find("1=0") != std::string::npos);
    ConjugacyVerdict v6 = conj_t_vs_txy(6);
    CHECK_FALSE(v6.conjugate);
    CHECK(v6.searched_bound == 6);
    // the inconsistent system, checked symbolically: l - m = 1 and l = 1 force
    // m = 0, and then l(l-m) + m(m-1)/2 = 1 != 0
    const std::int64_t l = 1, m = 0;
    CHECK(l - m == 1);
    CHECK(l * (l - m) + m * (m - 1) / 2 == 1);
}

TEST_CASE("abelianization matrices") {
    AbelianizationCheck c = abelianization_check();
    CHECK(c.phibar == std::array<std::array<std::int64_t, 2>, 2>{{{0, 1}, {-1, 1}}});
    CHECK(c.phibar_minus_id == std::array<std::array<std::int64_t, 2>, 2>{{{-1, 1}, {-1, 0}}});
    CHECK(c.det_phibar == 1);
    CHECK(c.det_phibar_minus_id == 1);
    CHECK(c.order_of_phibar == 6);
    CHECK(c.ok);
}

TEST_CASE("free product reduction") {
    // p^3 -> empty
    CHECK(freeprod_reduce({{0, 3}}).syllables.empty());
    CHECK(freeprod_reduce({{1, 2}}).syllables.empty());
    // x^2 y^{-1} -> p^{-1} q p^{-1} q p^{-2} q: 6 syllables
    FreeProductWord w = trefoil_word_translate("x^2y^-1");
    CHECK(w.alternation() == 6);
    CHECK(freeprod_cyclic_reduce(w) == w);
    // x -> p^{-1} q: 2 syllables
    FreeProductWord x = trefoil_word_translate("x");
    CHECK(x.alternation() == 2);
    CHECK(x.syllables[0] == Syllable{0, 2});  // p^{-1} = p^2
    CHECK(x.syllables[1] == Syllable{1, 1});
    // y -> q^{-1} p^2
    FreeProductWord y = trefoil_word_translate("y");
    CHECK(y.syllables == std::vector<Syllable>{{1, 1}, {0, 2}});
    // idempotence of reduce on random runs
    for (int t = 0; t < 200; ++t) {
        std::vector<std::pair<int, std::int64_t>> runs;
        const int len = static_cast<int>(rand_int(0, 10));
        for (int i = 0; i < len; ++i)
            runs.emplace_back(static_cast<int>(rand_int(0, 1)), rand_int(-4, 4));
        FreeProductWord r = freeprod_reduce(runs);
        std::vector<std::pair<int, std::int64_t>> again;
        for (const auto& s : r.syllables) again.emplace_back(s.factor, s.exponent);
        CHECK(freeprod_reduce(again) == r);
    }
}

TEST_CASE("trefoil relator maps to the identity") {
    // xyx (yxy)^{-1} -> empty word
    CHECK(trefoil_word_translate("xyx(yxy)^-1").syllables.empty());
    // p = xy and q = xyx as words in x, y
    CHECK(trefoil_word_translate("xy") == trefoil_word_translate("p"));
    CHECK(trefoil_word_translate("xyx") == trefoil_word_translate("q"));
    // p^3 = q^2 maps to the identity in the quotient
    CHECK(trefoil_word_translate("p^3q^-2").syllables.empty());
    CHECK(trefoil_word_translate("(xy)^3((xyx)^2)^-1").syllables.empty());
}

TEST_CASE("free product conjugacy") {
    MeridianVerdict v = trefoil_meridian_test();
    CHECK(v.alternation_candidate == 6);
    CHECK(v.alternation_meridian == 2);
    CHECK_FALSE(v.conjugate);

    // any word is conjugate to its cyclic rotations
    for (int t = 0; t < 100; ++t) {
        std::vector<std::pair<int, std::int64_t>> runs;
        const int len = static_cast<int>(rand_int(1, 8));
        for (int i = 0; i < len; ++i)
            runs.emplace_back(static_cast<int>(rand_int(0, 1)), rand_int(-4, 4));
        FreeProductWord r = freeprod_cyclic_reduce(freeprod_reduce(runs));
        if (r.syllables.size() < 2) continue;
        const std::size_t shift = static_cast<std::size_t>(
            rand_int(0, static_cast<std::int64_t>(r.syllables.size()) - 1));
        FreeProductWord rot;
        for (std::size_t i = 0; i < r.syllables.size(); ++i)
            rot.syllables.push_back(r.syllables[(i + shift) % r.syllables.size()]);
        CHECK(freeprod_conjugate_test(r, rot));
    }

    // p vs p^2: not conjugate in the abelian factor
    FreeProductWord p = freeprod_reduce({{0, 1}});
    FreeProductWord p2 = freeprod_reduce({{0, 2}});
    CHECK_FALSE(freeprod_conjugate_test(p, p2));
    CHECK(freeprod_conjugate_test(p, p));

    // equivalence-relation sanity on a random sample
    for (int t = 0; t < 50; ++t) {
        std::vector<std::pair<int, std::int64_t>> runs1, runs2;
        for (int i = 0; i < 6; ++i) {
            runs1.emplace_back(static_cast<int>(rand_int(0, 1)), rand_int(-3, 3));
            runs2.emplace_back(static_cast<int>(rand_int(0, 1)), rand_int(-3, 3));
        }
        FreeProductWord a = freeprod_reduce(runs1), b = freeprod_reduce(runs2);
        CHECK(freeprod_conjugate_test(a, a));
        CHECK(freeprod_conjugate_test(a, b) == freeprod_conjugate_test(b, a));
    }
}

TEST_CASE("word parser") {
    CHECK(parse_word("x^2y^-1") ==
          Word{{'x', 1}, {'x', 1}, {'y', -1}});
    // commutator [y,x] = y^{-1} x^{-1} y x
    CHECK(parse_word("[y,x]") == Word{{'y', -1}, {'x', -1}, {'y', 1}, {'x', 1}});
    CHECK(eval_heis(parse_word("[y,x]")) == HeisElement{0, 0, 1});
    CHECK(eval_heis(parse_word("x y [y,x]^3")) == HeisElement{1, 1, 3});
    CHECK(eval_g(parse_word("t x y")) == GElement{1, {1, 1, 0}});
    // x^{-1} t x computed from the word equals g_conj
    CHECK(eval_g(parse_word("x^-1 t x")) == g_conj(GElement{1, {}}, GElement{0, {1, 0, 0}}));
    CHECK_THROWS_AS(parse_word("x^"), usage_error);
    CHECK_THROWS_AS(parse_word("[x y]"), usage_error);
    CHECK_THROWS_AS(eval_heis(parse_word("t")), usage_error);
}
