#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "orbchi/rational.hpp"

namespace orbchi {

/// Exponent pair of a monomial s^i y^j.
struct Monomial {
    int s = 0;
    int y = 0;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse polynomial in the formal variables s and y with rational
/// coefficients, truncated at a fixed s-degree. The y-degree is never
/// truncated.
///
/// Zero coefficients are never stored and every stored monomial has
/// s-degree <= s_cutoff(). Binary operations truncate to the smaller
/// of the two cutoffs.
class BivariatePoly {
public:
    using Terms = std::map<Monomial, Rational>;

    explicit BivariatePoly(int s_cutoff);

    static BivariatePoly constant(const Rational& c, int s_cutoff);
    static BivariatePoly monomial(const Rational& c, int s_deg, int y_deg, int s_cutoff);

    int s_cutoff() const { return s_cutoff_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of s^i y^j, zero when absent.
    Rational coeff(int s_deg, int y_deg) const;

    /// Adds c * s^i y^j; dropped silently when i exceeds the cutoff.
    void add_term(const Rational& c, int s_deg, int y_deg);

    /// Same polynomial with a smaller (or equal) cutoff.
    BivariatePoly truncated(int s_cutoff) const;

    BivariatePoly& operator+=(const BivariatePoly& o);
    BivariatePoly& operator-=(const BivariatePoly& o);
    BivariatePoly& operator*=(const Rational& c);

    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
    friend BivariatePoly operator*(BivariatePoly a, const Rational& c) { return a *= c; }
    friend BivariatePoly operator*(const Rational& c, BivariatePoly a) { return a *= c; }
    BivariatePoly operator-() const;

    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b)
    {
        return a.s_cutoff_ == b.s_cutoff_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    int s_cutoff_;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const BivariatePoly& p);

/// Distributive product truncated at min(a.s_cutoff, b.s_cutoff).
BivariatePoly poly_mul(const BivariatePoly& a, const BivariatePoly& b);
inline BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) { return poly_mul(a, b); }

/// Formal exponential sum_k e^k / k!. Every term of e must have s-degree >= 1,
/// which makes each coefficient of the result a finite sum; throws
/// std::domain_error("exponential not graded-finite") otherwise.
BivariatePoly poly_exp_graded(const BivariatePoly& e);

inline Rational coeff(const BivariatePoly& p, int s_deg, int y_deg) { return p.coeff(s_deg, y_deg); }

/// Univariate power series in t, truncated after t^order.
class TSeries {
public:
    explicit TSeries(int order);
    explicit TSeries(std::vector<Rational> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    Rational& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

    TSeries truncated(int order) const;

    TSeries& operator+=(const TSeries& o);
    TSeries& operator-=(const TSeries& o);
    TSeries& operator*=(const Rational& c);

    friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
    friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
    friend TSeries operator*(TSeries a, const Rational& c) { return a *= c; }
    friend TSeries operator*(const Rational& c, TSeries a) { return a *= c; }

    friend bool operator==(const TSeries&, const TSeries&) = default;

    std::string str() const;

private:
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const TSeries& s);

/// Cauchy product truncated at the smaller order.
TSeries series_mul(const TSeries& a, const TSeries& b);
inline TSeries operator*(const TSeries& a, const TSeries& b) { return series_mul(a, b); }

/// log(g) for g[0] = 1; throws std::domain_error("log requires unit constant term").
TSeries series_log(const TSeries& g);

/// exp(f) for f[0] = 0; throws std::domain_error("exponential not graded-finite").
TSeries series_exp(const TSeries& f);

} // namespace orbchi
