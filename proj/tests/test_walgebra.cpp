#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conwaylink/conway.hpp"
#include "conwaylink/json_io.hpp"
#include "conwaylink/linalg.hpp"
#include "conwaylink/walgebra.hpp"
#include "helpers.hpp"

using namespace cwl;
using cwl::testing::rand_int;
using cwl::testing::upoly;

namespace {

LaurentPoly xmono(std::int64_t ex, std::int64_t ey, long c) {
    return LaurentPoly::monomial({"x", "y"}, {ex, ey}, Int(c));
}

WElement welt(int lambda, std::initializer_list<std::tuple<int, int, bool, long>> terms,
              int order = -1) {
    WElement e(lambda, order);
    for (const auto& [i, j, w, c] : terms) e.insert(i, j, w, Int(c));
    return e;
}

// Random parity-legal element with entries of total degree <= deg.
WElement random_w(int lambda, int deg) {
    WElement e(lambda, -1);
    for (int t = 0; t < 8; ++t) {
        const int i = static_cast<int>(rand_int(0, deg));
        const int j = static_cast<int>(rand_int(0, deg - i));
        if (i % 2 != j % 2) continue;
        const bool w = i % 2 == lambda % 2;
        e.insert(i, j, w, Int(rand_int(-5, 5)));
    }
    return e;
}

// Reduced invariant of the swapped family link (B, J_r): B on x, J_r on y.
WElement reduced_swapped(std::int64_t r, int order) {
    LaurentPoly omega = omega_Mr(r).swap_vars();
    WElement sig = omega_to_w(omega, 1);
    return reduced_w(sig, LaurentPoly::constant1("z", 1), nabla_J(r), order);
}

}  // namespace

TEST_CASE("omega_to_w examples") {
    // Hopf
    WElement hopf = omega_to_w(LaurentPoly::constant({"x", "y"}, 1), 1);
    CHECK(hopf == welt(1, {{0, 0, false, 1}}));

    // Omega_M -> 1 + u^2 v^2 + u v w
    WElement m = omega_to_w(LinkData::mazur().potential, 1);
    CHECK(m == welt(1, {{0, 0, false, 1}, {2, 2, false, 1}, {1, 1, true, 1}}));

    // xy + x^-1 y^-1 = uv + w
    WElement wb = omega_to_w(xmono(1, 1, 1) + xmono(-1, -1, 1), 0);
    CHECK(wb == welt(0, {{1, 1, false, 1}, {0, 0, true, 1}}));

    // symmetry violation -> domain error
    CHECK_THROWS_AS(omega_to_w(xmono(1, 1, 1), 0), domain_error);
}

TEST_CASE("w_to_omega examples and round trips") {
    CHECK(w_to_omega(welt(1, {{0, 0, false, 1}})) == LaurentPoly::constant({"x", "y"}, 1));
    CHECK(w_to_omega(welt(0, {{0, 0, true, 1}})) == xmono(1, -1, 1) + xmono(-1, 1, 1));
    for (std::int64_t r = 1; r <= 4; ++r) {
        LaurentPoly om = omega_Mr(r);
        CHECK(w_to_omega(omega_to_w(om, 1)) == om);
    }
    // round trip on random parity-legal elements
    for (int t = 0; t < 40; ++t) {
        for (int lambda : {0, 1}) {
            WElement e = random_w(lambda, 6);
            CHECK(omega_to_w(w_to_omega(e), lambda) == e);
        }
    }
}

TEST_CASE("w_mul reduction identities") {
    WElement w0 = welt(0, {{0, 0, true, 1}});  // the element w
    WElement ww = w_mul(w0, w0);
    CHECK(ww == welt(1, {{2, 0, false, 1}, {0, 2, false, 1}, {0, 0, false, 4}, {1, 1, true, -1}}));

    // a * 1 = a (1 is lambda=1-legal)
    WElement one = welt(1, {{0, 0, false, 1}});
    WElement m = omega_to_w(LinkData::mazur().potential, 1);
    CHECK(w_mul(m, one) == m);

    // (uv + w) * w = u^2 + v^2 + 4
    WElement wbar = welt(0, {{1, 1, false, 1}, {0, 0, true, 1}});
    CHECK(w_mul(wbar, w0) ==
          welt(1, {{2, 0, false, 1}, {0, 2, false, 1}, {0, 0, false, 4}}));
}

TEST_CASE("w_mul matches the x,y expansion and is associative/commutative") {
    for (int t = 0; t < 25; ++t) {
        WElement a = random_w(static_cast<int>(rand_int(0, 1)), 4);
        WElement b = random_w(static_cast<int>(rand_int(0, 1)), 4);
        WElement c = random_w(static_cast<int>(rand_int(0, 1)), 3);
        CHECK(w_to_omega(w_mul(a, b)) == w_to_omega(a) * w_to_omega(b));
        CHECK(w_mul(a, b) == w_mul(b, a));
        CHECK(w_mul(w_mul(a, b), c) == w_mul(a, w_mul(b, c)));
    }
}

TEST_CASE("uniqueness: monomial images are linearly independent up to degree 10") {
    // columns: all parity-legal u^i v^j and u^i v^j w with i + j <= 10 (both
    // lambda classes together cover every i = j (mod 2) pair once with w and
    // once without); exact rank must equal the column count.
    std::vector<LaurentPoly> cols;
    const LaurentPoly u = xmono(1, 0, 1) + xmono(-1, 0, -1);
    const LaurentPoly v = xmono(0, 1, 1) + xmono(0, -1, -1);
    const LaurentPoly w = xmono(1, -1, 1) + xmono(-1, 1, 1);
    for (int i = 0; i <= 10; ++i)
        for (int j = 0; i + j <= 10; ++j) {
            if (i % 2 != j % 2) continue;
            cols.push_back(u.pow(i) * v.pow(j));
            cols.push_back(u.pow(i) * v.pow(j) * w);
        }
    std::map<LaurentPoly::Exp, int> rows;
    for (const auto& p : cols)
        for (const auto& [e, c] : p.terms()) rows.emplace(e, static_cast<int>(rows.size()));
    RatMat mat(rows.size(), RatVec(cols.size(), Rat(0)));
    for (std::size_t cidx = 0; cidx < cols.size(); ++cidx)
        for (const auto& [e, c] : cols[cidx].terms()) mat[rows[e]][cidx] = Rat(c);
    CHECK(rank_rational(std::move(mat)) == static_cast<int>(cols.size()));
}

TEST_CASE("reduced_w examples") {
    // Hopf with unknot components
    WElement hopf = omega_to_w(LinkData::hopf().potential, 1);
    WElement red = reduced_w(hopf, LaurentPoly::constant1("z", 1),
                             LaurentPoly::constant1("z", 1), 10);
    CHECK(red.coeff(0, 0, false) == 1);
    CHECK(red.plain().size() == 1);
    CHECK(red.wpart().empty());

    // P_0 = 1 for the swapped family links
    for (std::int64_t r = 1; r <= 3; ++r) {
        WElement rw = reduced_swapped(r, 2 * static_cast<int>(r) + 8);
        PkExpansion pk = pk_expand(rw, 0);
        CHECK(pk.p[0].coeff(0) == 1);
        for (int k = 1; k <= pk.p[0].order(); ++k) CHECK(pk.p[0].coeff(k) == 0);
    }

    // specialization consistency: sigma-bar_{M_r}(z,z,2) * z * nabla_{J_r} = nabla_{M_r}
    for (std::int64_t r = 1; r <= 4; ++r) {
        const int order = 2 * static_cast<int>(r) + 8;
        WElement sig = omega_to_w(omega_Mr(r), 1);
        WElement rw = reduced_w(sig, nabla_J(r), LaurentPoly::constant1("z", 1), order);
        TruncatedSeries diag = specialize_diagonal_series(rw);
        TruncatedSeries lhs = diag * TruncatedSeries::from_poly(nabla_J(r), order);
        bool match = true;
        for (int k = 1; k <= order; ++k)  // lhs shifted by one power of z
            match = match && lhs.coeff(k - 1) == nabla_M(r).coeff1(k);
        CHECK(match);
    }

    CHECK_THROWS_AS(reduced_w(hopf, upoly("z", {0, 1}), LaurentPoly::constant1("z", 1), 6),
                    domain_error);
}

TEST_CASE("specialize_diagonal on exact elements") {
    WElement m = omega_to_w(LinkData::mazur().potential, 1);
    // sigma_M(z,z,2) = 1 + z^4 + 2 z^2 = z^{-1} nabla_{M_1}(z)
    CHECK(specialize_diagonal(m) == upoly("z", {1, 0, 2, 0, 1}));
}

TEST_CASE("pk_expand examples") {
    // sigma-bar = 1: P_0 = 1, all later P_k = 0, C_L = 0
    WElement one(1, 12);
    one.insert(0, 0, false, 1);
    PkExpansion pk = pk_expand(one, 3);
    CHECK(pk.p[0].coeff(0) == 1);
    CHECK(pk.p[1].is_zero());
    CHECK(pk.p[2].is_zero());

    // mod u^2: sigma-bar = 1 + u v w C(v^2) recovers C exactly
    WElement e(1, 9);
    e.insert(0, 0, false, 1);
    e.insert(1, 1, true, 7);    // C = 7
    e.insert(1, 3, true, -2);   // + (-2) v^2
    PkExpansion pk2 = pk_expand(e, 1);
    CHECK(pk2.p[1].coeff(0) == 7);
    CHECK(pk2.p[1].coeff(1) == -2);

    // u^1-w component of swapped M_r: (-1)^{r+1} v^r F_r(v)/nabla_{J_r}(v)
    for (std::int64_t r = 1; r <= 3; ++r) {
        const int order = 2 * static_cast<int>(r) + 7;
        WElement rw = reduced_swapped(r, order);
        TruncatedSeries u1w = u_row_w(rw, 1, order - 1);
        TruncatedSeries want =
            TruncatedSeries::from_poly(fibonacci(r).with_vars({"v"}), order - 1)
                .shift(static_cast<int>(r)) *
            TruncatedSeries::from_poly(nabla_J(r).with_vars({"v"}), order - 1).inverse();
        if (r % 2 == 0) want = -want;
        CHECK(u1w == want);
        // v * P_1(v^2) reproduces the same series
        PkExpansion pk3 = pk_expand(rw, 1);
        bool agree = true;
        for (int k = 0; k <= pk3.p[1].order(); ++k)
            agree = agree && pk3.p[1].coeff(k) == u1w.coeff(2 * k + 1);
        CHECK(agree);
    }
}

TEST_CASE("cochran splice additivity: two independent paths for (r1, r2) = (2, 3)") {
    const int order = 14;
    WElement red2 = reduced_swapped(2, order);
    WElement red3 = reduced_swapped(3, order);

    // path 1: sum of the u^1-w components
    TruncatedSeries c2 = u_row_w(red2, 1, order - 1);
    TruncatedSeries c3 = u_row_w(red3, 1, order - 1);
    TruncatedSeries sum = cochran_splice_add(c2, c3);

    // path 2: reduced invariant of the splice, expanded
    LaurentPoly omega_splice = omega_Mr(2).swap_vars() * omega_Mr(3).swap_vars();
    WElement sig = omega_to_w(omega_splice, 1);
    WElement red = reduced_w(sig, LaurentPoly::constant1("z", 1), nabla_J(2) * nabla_J(3), order);
    TruncatedSeries via_splice = u_row_w(red, 1, order - 1);
    CHECK(via_splice == sum);

    // and the product path agrees with w_mul of the reduced factors
    CHECK(red == w_mul(red2, red3));

    // C + 0 = C, and associativity of the addition
    TruncatedSeries zero("v", order - 1);
    CHECK(cochran_splice_add(c2, zero) == c2);
    CHECK(cochran_splice_add(cochran_splice_add(c2, c3), c2) ==
          cochran_splice_add(c2, cochran_splice_add(c3, c2)));
}

TEST_CASE("factor_series") {
    TruncatedSeries one("z", 8);
    one.set_coeff(0, 1);
    for (const auto& [n, b] : factor_series(one)) CHECK(b == 0);

    // 1 + z: b_1 = 1 and every later b_n = 0 (the degree-n coefficient of the
    // partial product already matches)
    TruncatedSeries s("z", 8);
    s.set_coeff(0, 1);
    s.set_coeff(1, 1);
    auto bs = factor_series(s);
    CHECK(bs[0] == std::pair<int, Int>(1, Int(1)));
    for (std::size_t i = 1; i < bs.size(); ++i) CHECK(bs[i].second == 0);

    // multiply-back reproduces the series for random inputs
    for (int t = 0; t < 30; ++t) {
        TruncatedSeries r("z", 12);
        r.set_coeff(0, 1);
        for (int k = 1; k <= 12; ++k) r.set_coeff(k, Int(rand_int(-6, 6)));
        auto factors = factor_series(r);
        TruncatedSeries back("z", 12);
        back.set_coeff(0, 1);
        for (const auto& [n, b] : factors) {
            TruncatedSeries f("z", 12);
            f.set_coeff(0, 1);
            if (n <= 12) f.set_coeff(n, b);
            back = back * f;
        }
        CHECK(back == r);
    }

    // sigma-bar of the (2,3) splice refactors with multiply-back through its order
    WElement red = w_mul(reduced_swapped(2, 12), reduced_swapped(3, 12));
    TruncatedSeries diag = specialize_diagonal_series(red);
    auto factors = factor_series(diag);
    TruncatedSeries back("z", diag.order());
    back.set_coeff(0, 1);
    for (const auto& [n, b] : factors) {
        TruncatedSeries f("z", diag.order());
        f.set_coeff(0, 1);
        if (n <= diag.order()) f.set_coeff(n, b);
        back = back * f;
    }
    CHECK(back == diag);
}

TEST_CASE("w_series_rational_split") {
    // R = 1: both parts rational
    WElement one(1, -1);
    one.insert(0, 0, false, 1);
    WSeriesRationalForm f1 = w_series_rational_split(one, 2, 2);
    CHECK(f1.decided());
    CHECK(f1.part_plain->num == LaurentPoly::constant({"u", "v"}, 1));
    CHECK(f1.part_w->num.is_zero());

    // R = sigma-bar_{M_1} (exact polynomial): rational pair over denominator 1
    WElement m = omega_to_w(LinkData::mazur().potential, 1);
    WSeriesRationalForm f2 = w_series_rational_split(m, 4, 0);
    CHECK(f2.decided());
    CHECK(f2.part_plain->den == LaurentPoly::constant({"u", "v"}, 1));

    // R = w/(1 - uv) truncated: R' = 0, R'' = 1/(1 - uv)
    WElement::Table plain, wpart;
    const int order = 10;
    for (int k = 0; k <= order / 2; ++k) wpart[{k, k}] = 1;
    WSeriesRationalForm f3 = w_series_rational_split(plain, wpart, order, 0, 2);
    CHECK(f3.decided());
    CHECK(f3.part_plain->num.is_zero());
    CHECK(f3.part_w->num == LaurentPoly::constant({"u", "v"}, 1));
    LaurentPoly want_den = LaurentPoly::constant({"u", "v"}, 1) -
                           LaurentPoly::monomial({"u", "v"}, {1, 1}, 1);
    CHECK(f3.part_w->den == want_den);

    // factorially growing diagonal admits no (2,2) fit: not decided
    WElement::Table fact;
    Int f = 1;
    for (int k = 0; k <= 8; ++k) {
        fact[{k, 0}] = f;
        f *= (k + 1);
    }
    WSeriesRationalForm f4 = w_series_rational_split(fact, {}, 8, 2, 2);
    CHECK_FALSE(f4.part_plain.has_value());
    CHECK(f4.part_w.has_value());  // the zero part is rational
}

TEST_CASE("parity legality is enforced") {
    WElement e(1, -1);
    CHECK_THROWS_AS(e.insert(1, 1, false, Int(1)), std::logic_error);
    CHECK_THROWS_AS(e.insert(0, 0, true, Int(1)), std::logic_error);
    CHECK_THROWS_AS(e.insert(1, 2, false, Int(1)), std::logic_error);
}

TEST_CASE("three-stage splice chain and diagonal collapse") {
    // sigma-bar of Y_3 = product of the three stage invariants, and the
    // diagonal specialization collapses the product identity to one variable
    const int order = 16;
    auto reduced_of = [&](std::int64_t r) {
        return reduced_w(omega_to_w(omega_Mr(r).swap_vars(), 1), LaurentPoly::constant1("z", 1),
                         nabla_J(r), order);
    };
    WElement r1 = reduced_of(1), r2 = reduced_of(2), r3 = reduced_of(3);
    WElement chain = w_mul(w_mul(r1, r2), r3);

    LinkData l1 = swap_components(LinkData::two_component("m1", 1, omega_Mr(1)));
    LinkData l2 = swap_components(LinkData::two_component("m2", 1, omega_Mr(2)));
    LinkData l3 = swap_components(LinkData::two_component("m3", 1, omega_Mr(3)));
    LinkData y2 = LinkData::two_component("y2", 1, splice_omega(l1, l2, 1, 1));
    LaurentPoly omega_y3 = splice_omega(y2, l3, 1, 1);
    WElement direct = reduced_w(omega_to_w(omega_y3, 1), LaurentPoly::constant1("z", 1),
                                nabla_J(1) * nabla_J(2) * nabla_J(3), order);
    CHECK(chain == direct);

    // u^1-w component is additive across all three stages
    TruncatedSeries total = u_row_w(chain, 1, order - 1);
    TruncatedSeries sum = cochran_splice_add(
        cochran_splice_add(u_row_w(r1, 1, order - 1), u_row_w(r2, 1, order - 1)),
        u_row_w(r3, 1, order - 1));
    CHECK(total == sum);

    // diagonal: specialize both sides of the product identity
    TruncatedSeries d_chain = specialize_diagonal_series(chain);
    TruncatedSeries d_prod = specialize_diagonal_series(r1) * specialize_diagonal_series(r2) *
                             specialize_diagonal_series(r3);
    CHECK(d_chain == d_prod);
}

TEST_CASE("welement json round trip") {
    WElement m = omega_to_w(LinkData::mazur().potential, 1);
    json j = to_json(m);
    CHECK(welement_from_json(j) == m);
    CHECK(j.dump() ==
          R"({"lambda":1,"terms":[{"i":0,"j":0,"w":false,"c":"1"},{"i":2,"j":2,"w":false,"c":"1"},{"i":1,"j":1,"w":true,"c":"1"}]})");

    WElement truncated = m.truncate(24);
    json jt = to_json(truncated);
    CHECK(jt["order"] == 24);
    CHECK(welement_from_json(jt) == truncated);
}
