#include "orbchi/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orbchi {

BivariatePoly::BivariatePoly(int s_cutoff) : s_cutoff_(s_cutoff)
{
    if (s_cutoff < 0) {
        throw std::invalid_argument("s_cutoff must be non-negative");
    }
}

BivariatePoly BivariatePoly::constant(const Rational& c, int s_cutoff)
{
    return monomial(c, 0, 0, s_cutoff);
}

BivariatePoly BivariatePoly::monomial(const Rational& c, int s_deg, int y_deg, int s_cutoff)
{
    BivariatePoly p(s_cutoff);
    p.add_term(c, s_deg, y_deg);
    return p;
}

Rational BivariatePoly::coeff(int s_deg, int y_deg) const
{
    const auto it = terms_.find(Monomial{s_deg, y_deg});
    return it == terms_.end() ? Rational{} : it->second;
}

void BivariatePoly::add_term(const Rational& c, int s_deg, int y_deg)
{
    if (s_deg < 0 || y_deg < 0) {
        throw std::invalid_argument("negative exponent in BivariatePoly");
    }
    if (s_deg > s_cutoff_ || c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(Monomial{s_deg, y_deg}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

BivariatePoly BivariatePoly::truncated(int s_cutoff) const
{
    BivariatePoly r(std::min(s_cutoff, s_cutoff_));
    for (const auto& [m, c] : terms_) {
        if (m.s <= r.s_cutoff_) {
            r.terms_.emplace(m, c);
        }
    }
    return r;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o)
{
    if (o.s_cutoff_ < s_cutoff_) {
        *this = truncated(o.s_cutoff_);
    }
    for (const auto& [m, c] : o.terms_) {
        add_term(c, m.s, m.y);
    }
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o)
{
    return *this += -o;
}

BivariatePoly& BivariatePoly::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) {
        v *= c;
    }
    return *this;
}

BivariatePoly BivariatePoly::operator-() const
{
    BivariatePoly r = *this;
    for (auto& [m, v] : r.terms_) {
        v = -v;
    }
    return r;
}

std::string BivariatePoly::str() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << '(' << c << ')';
        if (m.s != 0) {
            os << "*s^" << m.s;
        }
        if (m.y != 0) {
            os << "*y^" << m.y;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const BivariatePoly& p)
{
    return os << p.str();
}

BivariatePoly poly_mul(const BivariatePoly& a, const BivariatePoly& b)
{
    const int cutoff = std::min(a.s_cutoff(), b.s_cutoff());
    BivariatePoly r(cutoff);
    for (const auto& [ma, ca] : a.terms()) {
        if (ma.s > cutoff) {
            continue;
        }
        for (const auto& [mb, cb] : b.terms()) {
            if (ma.s + mb.s > cutoff) {
                continue;
            }
            r.add_term(ca * cb, ma.s + mb.s, ma.y + mb.y);
        }
    }
    return r;
}

BivariatePoly poly_exp_graded(const BivariatePoly& e)
{
    for (const auto& [m, c] : e.terms()) {
        if (m.s < 1) {
            throw std::domain_error("exponential not graded-finite");
        }
    }
    const int cutoff = e.s_cutoff();
    BivariatePoly result = BivariatePoly::constant(Rational{1}, cutoff);
    // power = e^k / k!; e^k only reaches s-degree >= k, so k <= cutoff suffices.
    BivariatePoly power = result;
    for (int k = 1; k <= cutoff; ++k) {
        power = poly_mul(power, e);
        if (power.is_zero()) {
            break;
        }
        power *= rational_from(1, k);
        result += power;
    }
    return result;
}

TSeries::TSeries(int order)
{
    if (order < 0) {
        throw std::invalid_argument("TSeries order must be non-negative");
    }
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational{});
}

TSeries::TSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("TSeries needs at least one coefficient");
    }
}

TSeries TSeries::truncated(int order) const
{
    const int n = std::min(order, this->order());
    return TSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

TSeries& TSeries::operator+=(const TSeries& o)
{
    if (o.order() < order()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += o.coeffs_[k];
    }
    return *this;
}

TSeries& TSeries::operator-=(const TSeries& o)
{
    if (o.order() < order()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= o.coeffs_[k];
    }
    return *this;
}

TSeries& TSeries::operator*=(const Rational& c)
{
    for (auto& v : coeffs_) {
        v *= c;
    }
    return *this;
}

std::string TSeries::str() const
{
    std::ostringstream os;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k != 0) {
            os << " + ";
        }
        os << '(' << coeffs_[k] << ")*t^" << k;
    }
    os << " + O(t^" << coeffs_.size() << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TSeries& s)
{
    return os << s.str();
}

TSeries series_mul(const TSeries& a, const TSeries& b)
{
    const int n = std::min(a.order(), b.order());
    TSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= n; ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

TSeries series_log(const TSeries& g)
{
    if (g[0] != Rational{1}) {
        throw std::domain_error("log requires unit constant term");
    }
    const int n = g.order();
    TSeries u = g;
    u[0] = Rational{};
    TSeries result(n);
    TSeries power(n);
    power[0] = Rational{1};
    for (int k = 1; k <= n; ++k) {
        power = series_mul(power, u);
        const Rational weight = rational_from(k % 2 == 1 ? 1 : -1, k);
        result += power * weight;
    }
    return result;
}

TSeries series_exp(const TSeries& f)
{
    if (!f[0].is_zero()) {
        throw std::domain_error("exponential not graded-finite");
    }
    const int n = f.order();
    TSeries result(n);
    result[0] = Rational{1};
    TSeries power = result;
    for (int k = 1; k <= n; ++k) {
        power = series_mul(power, f) * rational_from(1, k);
        result += power;
    }
    return result;
}

} // namespace orbchi
