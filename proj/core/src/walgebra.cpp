#include "conwaylink/walgebra.hpp"

#include <algorithm>
#include <sstream>

#include "conwaylink/linalg.hpp"

namespace cwl {

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kUV{"u", "v"};

int min_order(const WElement& a, const WElement& b) {
    if (a.is_exact()) return b.order();
    if (b.is_exact()) return a.order();
    return std::min(a.order(), b.order());
}

bool parity_legal(int lambda, int i, int j, bool w) {
    if (i < 0 || j < 0) return false;
    if (i % 2 != j % 2) return false;
    return w ? (i % 2 == lambda % 2) : (i % 2 != lambda % 2);
}

LaurentPoly xy_mono(std::int64_t ex, std::int64_t ey, Int c) {
    return LaurentPoly::monomial(kXY, {ex, ey}, std::move(c));
}

}  // namespace

WElement::WElement(int lambda, int order) : lambda_(((lambda % 2) + 2) % 2), order_(order) {}

void WElement::insert(int i, int j, bool w, const Int& c) {
    if (c == 0) return;
    if (!parity_legal(lambda_, i, j, w))
        throw std::logic_error("WElement: parity-illegal monomial u^" + std::to_string(i) +
                               " v^" + std::to_string(j) + (w ? " w" : "") + " for lambda=" +
                               std::to_string(lambda_));
    if (order_ >= 0 && i + j > order_) return;
    Table& t = w ? wpart_ : plain_;
    auto [it, fresh] = t.emplace(Key{i, j}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

Int WElement::coeff(int i, int j, bool w) const {
    const Table& t = w ? wpart_ : plain_;
    auto it = t.find({i, j});
    return it == t.end() ? Int(0) : it->second;
}

WElement WElement::truncate(int order) const {
    if (order < 0) throw usage_error("WElement::truncate: negative order");
    if (order_ >= 0 && order > order_)
        throw usage_error("WElement::truncate: cannot extend the known order");
    WElement r(lambda_, order);
    for (const auto& [k, c] : plain_)
        if (k.first + k.second <= order) r.plain_.emplace(k, c);
    for (const auto& [k, c] : wpart_)
        if (k.first + k.second <= order) r.wpart_.emplace(k, c);
    return r;
}

WElement WElement::operator+(const WElement& o) const {
    if (lambda_ != o.lambda_) throw usage_error("WElement: lambda mismatch in addition");
    WElement r(lambda_, min_order(*this, o));
    for (const auto& [k, c] : plain_) r.insert(k.first, k.second, false, c);
    for (const auto& [k, c] : wpart_) r.insert(k.first, k.second, true, c);
    for (const auto& [k, c] : o.plain_) r.insert(k.first, k.second, false, c);
    for (const auto& [k, c] : o.wpart_) r.insert(k.first, k.second, true, c);
    return r;
}

WElement WElement::operator-(const WElement& o) const { return *this + (-o); }

WElement WElement::operator-() const {
    WElement r(lambda_, order_);
    for (const auto& [k, c] : plain_) r.plain_.emplace(k, -c);
    for (const auto& [k, c] : wpart_) r.wpart_.emplace(k, -c);
    return r;
}

bool WElement::operator==(const WElement& o) const {
    return lambda_ == o.lambda_ && order_ == o.order_ && plain_ == o.plain_ && wpart_ == o.wpart_;
}

std::string WElement::str() const {
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const Table& t, bool w) {
        for (const auto& [k, c] : t) {
            Int a = c;
            if (first) {
                if (a < 0) { out << "-"; a = -a; }
            } else {
                out << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            std::string mono;
            if (k.first) mono += "u" + (k.first == 1 ? std::string() : "^" + std::to_string(k.first));
            if (k.second) {
                if (!mono.empty()) mono += "*";
                mono += "v" + (k.second == 1 ? std::string() : "^" + std::to_string(k.second));
            }
            if (w) {
                if (!mono.empty()) mono += "*";
                mono += "w";
            }
            if (mono.empty()) out << a.get_str();
            else {
                if (a != 1) out << a.get_str() << "*";
                out << mono;
            }
        }
    };
    emit(plain_, false);
    emit(wpart_, true);
    if (first) out << "0";
    if (order_ >= 0) out << " + O(deg " << order_ + 1 << ")";
    return out.str();
}

WElement w_mul(const WElement& a, const WElement& b) {
    WElement r((a.lambda() + b.lambda() + 1) % 2, min_order(a, b));
    auto add = [&](int i, int j, bool w, const Int& c) { r.insert(i, j, w, c); };
    // plain * plain and w-cross terms
    for (const auto& [ka, ca] : a.plain())
        for (const auto& [kb, cb] : b.plain())
            add(ka.first + kb.first, ka.second + kb.second, false, ca * cb);
    for (const auto& [ka, ca] : a.plain())
        for (const auto& [kb, cb] : b.wpart())
            add(ka.first + kb.first, ka.second + kb.second, true, ca * cb);
    for (const auto& [ka, ca] : a.wpart())
        for (const auto& [kb, cb] : b.plain())
            add(ka.first + kb.first, ka.second + kb.second, true, ca * cb);
    // w * w = u^2 + v^2 + 4 - uvw
    for (const auto& [ka, ca] : a.wpart())
        for (const auto& [kb, cb] : b.wpart()) {
            const int i = ka.first + kb.first, j = ka.second + kb.second;
            const Int c = ca * cb;
            add(i + 2, j, false, c);
            add(i, j + 2, false, c);
            add(i, j, false, c * 4);
            add(i + 1, j + 1, true, -c);
        }
    return r;
}

WElement omega_to_w(const LaurentPoly& omega, std::int64_t lk) {
    if (omega.nvars() != 2) throw usage_error("omega_to_w: bivariate potential required");
    const int lambda = static_cast<int>(((lk % 2) + 2) % 2);
    WElement out(lambda, -1);
    if (omega.is_zero()) return out;

    const std::int64_t ix = std::max(std::abs(omega.degree(0)), std::abs(omega.low_degree(0)));
    const std::int64_t jy = std::max(std::abs(omega.degree(1)), std::abs(omega.low_degree(1)));
    const LaurentPoly u = xy_mono(1, 0, 1) + xy_mono(-1, 0, -1);
    const LaurentPoly v = xy_mono(0, 1, 1) + xy_mono(0, -1, -1);
    const LaurentPoly w = xy_mono(1, -1, 1) + xy_mono(-1, 1, 1);

    struct Basis {
        int i, j;
        bool has_w;
        LaurentPoly expansion;
    };
    std::vector<Basis> basis;
    std::vector<LaurentPoly> upow{LaurentPoly::constant(kXY, 1)};
    for (std::int64_t i = 1; i <= ix; ++i) upow.push_back(upow.back() * u);
    std::vector<LaurentPoly> vpow{LaurentPoly::constant(kXY, 1)};
    for (std::int64_t j = 1; j <= jy; ++j) vpow.push_back(vpow.back() * v);
    for (std::int64_t i = 0; i <= ix; ++i)
        for (std::int64_t j = 0; j <= jy; ++j) {
            if (i % 2 != j % 2) continue;
            const LaurentPoly uv = upow[i] * vpow[j];
            if (i % 2 != lambda)
                basis.push_back({static_cast<int>(i), static_cast<int>(j), false, uv});
            else
                basis.push_back({static_cast<int>(i), static_cast<int>(j), true, uv * w});
        }

    std::map<LaurentPoly::Exp, int> rows;
    auto touch = [&](const LaurentPoly& p) {
        for (const auto& [e, c] : p.terms())
            rows.emplace(e, static_cast<int>(rows.size()));
    };
    touch(omega);
    for (const auto& bcol : basis) touch(bcol.expansion);

    RatMat A(rows.size(), RatVec(basis.size(), Rat(0)));
    RatVec rhs(rows.size(), Rat(0));
    for (std::size_t col = 0; col < basis.size(); ++col)
        for (const auto& [e, c] : basis[col].expansion.terms()) A[rows[e]][col] += Rat(c);
    for (const auto& [e, c] : omega.terms()) rhs[rows[e]] += Rat(c);

    LinearSolve sol = solve_linear(std::move(A), std::move(rhs));
    if (!sol.consistent)
        throw domain_error("omega_to_w: no parity-legal representative (symmetry violated)");
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const Rat& q = sol.solution[col];
        if (q == 0) continue;
        if (q.get_den() != 1)
            throw domain_error("omega_to_w: non-integer solution (symmetry violated)");
        out.insert(basis[col].i, basis[col].j, basis[col].has_w, q.get_num());
    }
    return out;
}

LaurentPoly w_to_omega(const WElement& e) {
    if (!e.is_exact()) throw usage_error("w_to_omega: exact element required");
    const LaurentPoly u = xy_mono(1, 0, 1) + xy_mono(-1, 0, -1);
    const LaurentPoly v = xy_mono(0, 1, 1) + xy_mono(0, -1, -1);
    const LaurentPoly w = xy_mono(1, -1, 1) + xy_mono(-1, 1, 1);
    LaurentPoly r(kXY);
    auto emit = [&](const WElement::Table& t, bool has_w) {
        for (const auto& [k, c] : t) {
            LaurentPoly term = u.pow(k.first) * v.pow(k.second) * c;
            if (has_w) term = term * w;
            r += term;
        }
    };
    emit(e.plain(), false);
    emit(e.wpart(), true);
    return r;
}

WElement reduced_w(const WElement& sigma, const LaurentPoly& nabla1,
                   const LaurentPoly& nabla2, int order) {
    if (order < 0) throw usage_error("reduced_w: order >= 0 required");
    if (nabla1.constant_term() != 1 || nabla2.constant_term() != 1)
        throw domain_error("reduced_w: knot polynomials must have constant term 1");
    TruncatedSeries inv1 = TruncatedSeries::from_poly(nabla1.with_vars({"u"}), order).inverse();
    TruncatedSeries inv2 = TruncatedSeries::from_poly(nabla2.with_vars({"v"}), order).inverse();
    WElement r(sigma.lambda(), order);
    auto scatter = [&](const WElement::Table& t, bool w) {
        for (const auto& [k, c] : t)
            for (int a = 0; k.first + a <= order; ++a) {
                if (inv1.coeff(a) == 0) continue;
                for (int b = 0; k.first + a + k.second + b <= order; ++b) {
                    if (inv2.coeff(b) == 0) continue;
                    r.insert(k.first + a, k.second + b, w, c * inv1.coeff(a) * inv2.coeff(b));
                }
            }
    };
    scatter(sigma.plain(), false);
    scatter(sigma.wpart(), true);
    return r;
}

LaurentPoly specialize_diagonal(const WElement& e) {
    if (!e.is_exact()) throw usage_error("specialize_diagonal: exact element required");
    LaurentPoly r({"z"});
    for (const auto& [k, c] : e.plain()) r.insert({k.first + k.second, 0}, c);
    for (const auto& [k, c] : e.wpart()) r.insert({k.first + k.second, 0}, c * 2);
    return r;
}

TruncatedSeries specialize_diagonal_series(const WElement& e) {
    if (e.is_exact()) throw usage_error("specialize_diagonal_series: truncated element required");
    TruncatedSeries s("z", e.order());
    for (const auto& [k, c] : e.plain())
        s.set_coeff(k.first + k.second, s.coeff(k.first + k.second) + c);
    for (const auto& [k, c] : e.wpart())
        s.set_coeff(k.first + k.second, s.coeff(k.first + k.second) + c * 2);
    return s;
}

namespace {

TruncatedSeries u_row(const WElement& e, const WElement::Table& t, int i, int order) {
    if (i < 0) throw usage_error("u_row: i >= 0 required");
    if (!e.is_exact() && i + order > e.order())
        throw usage_error("u_row: requested v-order exceeds the known total order");
    TruncatedSeries s("v", order);
    for (const auto& [k, c] : t)
        if (k.first == i && k.second <= order) s.set_coeff(k.second, c);
    return s;
}

}  // namespace

TruncatedSeries u_row_w(const WElement& e, int i, int order) { return u_row(e, e.wpart(), i, order); }

TruncatedSeries u_row_plain(const WElement& e, int i, int order) {
    return u_row(e, e.plain(), i, order);
}

PkExpansion pk_expand(const WElement& e, int k_max) {
    if (k_max < 0) throw usage_error("pk_expand: k_max >= 0 required");
    PkExpansion out;
    out.lambda = e.lambda();
    const int total = e.is_exact() ? -1 : e.order();
    for (int k = 0; k <= k_max; ++k) {
        // odd lambda: even k sits in the plain part, odd k in the w part
        // (coefficient of u^k is v * P_k(v^2)); even lambda swaps the parts.
        const bool in_w = (e.lambda() % 2 == 1) ? (k % 2 == 1) : (k % 2 == 0);
        const bool shifted = k % 2 == 1;  // odd k rows carry the extra factor v
        int vorder;
        if (total < 0) {
            vorder = 0;
            const WElement::Table& t = in_w ? e.wpart() : e.plain();
            for (const auto& [key, c] : t)
                if (key.first == k) vorder = std::max(vorder, key.second);
        } else {
            vorder = total - k;
            if (vorder < 0) break;
        }
        TruncatedSeries row = in_w ? u_row_w(e, k, vorder) : u_row_plain(e, k, vorder);
        if (shifted) row = row.shift(-1);
        // contract v^2 -> argument variable
        const int sorder = row.order() / 2;
        TruncatedSeries pk("v2", sorder);
        for (int m = 0; m <= row.order(); ++m) {
            if (row.coeff(m) == 0) continue;
            if (m % 2 != 0)
                throw std::logic_error("pk_expand: parity violation in row " + std::to_string(k));
            if (m / 2 <= sorder) pk.set_coeff(m / 2, row.coeff(m));
        }
        out.p.push_back(std::move(pk));
    }
    return out;
}

TruncatedSeries cochran_splice_add(const TruncatedSeries& c1, const TruncatedSeries& c2) {
    return c1 + c2;
}

std::vector<std::pair<int, Int>> factor_series(const TruncatedSeries& s) {
    if (s.coeff(0) != 1) throw usage_error("factor_series: constant term must be 1");
    const int N = s.order();
    std::vector<Int> prod(static_cast<std::size_t>(N) + 1, Int(0));
    prod[0] = 1;
    std::vector<std::pair<int, Int>> out;
    for (int n = 1; n <= N; ++n) {
        Int b = s.coeff(n) - prod[n];
        out.emplace_back(n, b);
        if (b != 0)
            for (int k = N - n; k >= 0; --k)
                if (prod[k] != 0) prod[k + n] += b * prod[k];
    }
    return out;
}

namespace {

std::optional<BivariateRational> fit_bivariate(const WElement::Table& t, int order, int M, int N) {
    // Unknowns: q_{ab} for 1 <= a+b <= N (q_{00} fixed to 1). Equations:
    // coefficient of u^i v^j in Q*R vanishes for M < i+j <= order.
    std::vector<std::pair<int, int>> qcols;
    for (int a = 0; a <= N; ++a)
        for (int b = 0; a + b <= N; ++b)
            if (a + b > 0) qcols.emplace_back(a, b);
    auto rcoeff = [&](int i, int j) -> Int {
        auto it = t.find({i, j});
        return it == t.end() ? Int(0) : it->second;
    };
    RatMat A;
    RatVec rhs;
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j) {
            if (i + j <= M) continue;
            RatVec row(qcols.size(), Rat(0));
            for (std::size_t c = 0; c < qcols.size(); ++c) {
                auto [a, b] = qcols[c];
                if (a <= i && b <= j) row[c] = Rat(rcoeff(i - a, j - b));
            }
            A.push_back(std::move(row));
            rhs.push_back(-Rat(rcoeff(i, j)));
        }
    LinearSolve sol = solve_linear(std::move(A), std::move(rhs));
    if (!sol.consistent) return std::nullopt;
    LaurentPoly Q = LaurentPoly::constant(kUV, 1);
    for (std::size_t c = 0; c < qcols.size(); ++c) {
        if (sol.solution[c] == 0) continue;
        if (sol.solution[c].get_den() != 1) return std::nullopt;
        Q.insert({qcols[c].first, qcols[c].second}, sol.solution[c].get_num());
    }
    // P = (Q * R) truncated to total degree <= M
    LaurentPoly R(kUV);
    for (const auto& [k, c] : t)
        if (k.first + k.second <= order) R.insert({k.first, k.second}, c);
    const LaurentPoly QR = Q * R;
    LaurentPoly P(kUV);
    for (const auto& [e, c] : QR.terms())
        if (e[0] + e[1] <= M) P.insert(e, c);
    return BivariateRational{P, Q};
}

}  // namespace

WSeriesRationalForm w_series_rational_split(const WElement& e, int M, int N) {
    WSeriesRationalForm out;
    if (e.is_exact()) {
        // polynomial parts are rational outright
        LaurentPoly rp(kUV), rw(kUV);
        for (const auto& [k, c] : e.plain()) rp.insert({k.first, k.second}, c);
        for (const auto& [k, c] : e.wpart()) rw.insert({k.first, k.second}, c);
        out.part_plain = BivariateRational{rp, LaurentPoly::constant(kUV, 1)};
        out.part_w = BivariateRational{rw, LaurentPoly::constant(kUV, 1)};
        return out;
    }
    return w_series_rational_split(e.plain(), e.wpart(), e.order(), M, N);
}

WSeriesRationalForm w_series_rational_split(const WElement::Table& plain,
                                            const WElement::Table& wpart, int order, int M,
                                            int N) {
    if (order < 0) throw usage_error("w_series_rational_split: order >= 0 required");
    WSeriesRationalForm out;
    out.part_plain = fit_bivariate(plain, order, M, N);
    out.part_w = fit_bivariate(wpart, order, M, N);
    return out;
}

}  // namespace cwl
