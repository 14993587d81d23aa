#include "conwaylink/series.hpp"

#include <algorithm>
#include <sstream>

namespace cwl {

TruncatedSeries::TruncatedSeries(std::string var, int order)
    : var_(std::move(var)), order_(order), c_(static_cast<std::size_t>(order) + 1, Int(0)) {
    if (order < 0) throw usage_error("TruncatedSeries: negative order");
}

TruncatedSeries::TruncatedSeries(std::string var, int order, std::vector<Int> coeffs)
    : TruncatedSeries(std::move(var), order) {
    if (coeffs.size() > c_.size())
        throw usage_error("TruncatedSeries: more coefficients than the order allows");
    std::copy(coeffs.begin(), coeffs.end(), c_.begin());
}

TruncatedSeries TruncatedSeries::from_poly(const LaurentPoly& p, int order) {
    if (p.nvars() != 1) throw usage_error("from_poly: univariate input required");
    TruncatedSeries s(p.vars()[0], order);
    for (const auto& [e, c] : p.terms()) {
        if (e[0] < 0) throw usage_error("from_poly: negative exponent");
        if (e[0] <= order) s.c_[static_cast<std::size_t>(e[0])] = c;
    }
    return s;
}

const Int& TruncatedSeries::coeff(int k) const {
    if (k < 0 || k > order_) throw usage_error("coeff: index beyond known order");
    return c_[static_cast<std::size_t>(k)];
}

void TruncatedSeries::set_coeff(int k, Int v) {
    if (k < 0 || k > order_) throw usage_error("set_coeff: index beyond known order");
    c_[static_cast<std::size_t>(k)] = std::move(v);
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Int& v) { return v == 0; });
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
    if (var_ != o.var_) throw usage_error("TruncatedSeries: variable mismatch");
}

TruncatedSeries TruncatedSeries::truncate(int order) const {
    if (order > order_) throw usage_error("truncate: cannot extend the known order");
    TruncatedSeries s(var_, order);
    std::copy(c_.begin(), c_.begin() + order + 1, s.c_.begin());
    return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    check_compatible(o);
    TruncatedSeries s(var_, std::min(order_, o.order_));
    for (int k = 0; k <= s.order_; ++k) s.c_[k] = c_[k] + o.c_[k];
    return s;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    check_compatible(o);
    TruncatedSeries s(var_, std::min(order_, o.order_));
    for (int k = 0; k <= s.order_; ++k) s.c_[k] = c_[k] - o.c_[k];
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    check_compatible(o);
    TruncatedSeries s(var_, std::min(order_, o.order_));
    for (int i = 0; i <= s.order_; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; i + j <= s.order_; ++j)
            if (o.c_[j] != 0) s.c_[i + j] += c_[i] * o.c_[j];
    }
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const Int& k) const {
    TruncatedSeries s(var_, order_);
    for (int i = 0; i <= order_; ++i) s.c_[i] = c_[i] * k;
    return s;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries s(var_, order_);
    for (int i = 0; i <= order_; ++i) s.c_[i] = -c_[i];
    return s;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return var_ == o.var_ && order_ == o.order_ && c_ == o.c_;
}

TruncatedSeries TruncatedSeries::shift(int k) const {
    if (k >= 0) {
        TruncatedSeries s(var_, order_);
        for (int i = 0; i + k <= order_; ++i) s.c_[i + k] = c_[i];
        return s;
    }
    for (int i = 0; i < -k; ++i)
        if (i <= order_ && c_[i] != 0)
            throw domain_error("shift: low-order coefficients are nonzero");
    TruncatedSeries s(var_, order_ + k);
    for (int i = 0; i <= s.order_; ++i) s.c_[i] = c_[i - k];
    return s;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (c_[0] != 1 && c_[0] != -1)
        throw domain_error("series inverse: constant term is not a unit");
    TruncatedSeries s(var_, order_);
    s.c_[0] = c_[0];
    for (int n = 1; n <= order_; ++n) {
        Int acc = 0;
        for (int k = 1; k <= n; ++k)
            if (c_[k] != 0) acc += c_[k] * s.c_[n - k];
        s.c_[n] = -c_[0] * acc;  // c0 == 1/c0 for units
    }
    return s;
}

bool TruncatedSeries::divisible_by_power(int k) const {
    for (int i = 0; i <= order_ && i < k; ++i)
        if (c_[i] != 0) return false;
    return true;
}

std::string TruncatedSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= order_; ++k) {
        if (c_[k] == 0) continue;
        Int a = c_[k];
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (k == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << var_;
            if (k != 1) out << "^" << k;
        }
    }
    if (first) out << "0";
    out << " + O(" << var_ << "^" << order_ + 1 << ")";
    return out.str();
}

TruncatedSeries series_inverse(const TruncatedSeries& s) { return s.inverse(); }

TruncatedSeries expand_fraction(const LaurentPoly& p, const LaurentPoly& q, int order) {
    return TruncatedSeries::from_poly(p, order) * TruncatedSeries::from_poly(q, order).inverse();
}

}  // namespace cwl
