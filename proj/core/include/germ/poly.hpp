#pragma once

#include <map>
#include <optional>
#include <vector>

#include "germ/monomial.hpp"
#include "germ/rational.hpp"

namespace germ {

/// Order of a germ at the origin: the minimum total degree of a nonzero
/// term. The zero polynomial gets a distinct +infinity value so degree
/// arithmetic can never silently wrap to an integer.
class Order {
public:
    static Order infinite() { return Order{}; }
    static Order of(int d) {
        Order o;
        o.value_ = d;
        return o;
    }

    bool is_infinite() const { return !value_.has_value(); }
    /// Finite value; throws if infinite.
    int value() const {
        if (!value_) throw std::logic_error("order of the zero polynomial is infinite");
        return *value_;
    }

    friend bool operator==(const Order&, const Order&) = default;
    friend bool operator<(const Order& a, const Order& b) {
        if (a.value_ && b.value_) return *a.value_ < *b.value_;
        return a.value_.has_value() && !b.value_.has_value();
    }
    friend bool operator<=(const Order& a, const Order& b) { return a == b || a < b; }
    friend bool operator>(const Order& a, const Order& b) { return b < a; }
    friend bool operator>=(const Order& a, const Order& b) { return b <= a; }

    friend Order operator+(const Order& a, const Order& b) {
        if (a.is_infinite() || b.is_infinite()) return infinite();
        return of(*a.value_ + *b.value_);
    }

private:
    std::optional<int> value_;
};

/// Sparse bivariate polynomial over Rational. Terms are kept in the
/// canonical monomial order; zero coefficients are never stored, so two
/// polynomials are equal iff their term maps are equal.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational>;

    Poly() = default;
    explicit Poly(const Rational& constant) {
        if (constant != 0) terms_[Monomial{0, 0}] = constant;
    }

    static Poly monomial(Rational coeff, int ex, int ey) {
        Poly p;
        if (coeff != 0) p.terms_[Monomial{ex, ey}] = std::move(coeff);
        return p;
    }
    static Poly var_x() { return monomial(1, 1, 0); }
    static Poly var_y() { return monomial(1, 0, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational{0} : it->second;
    }

    /// Adds c * m into this polynomial (builder-style; drops the term when
    /// the sum cancels).
    Poly& add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return *this;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    Order order() const {
        if (terms_.empty()) return Order::infinite();
        return Order::of(terms_.begin()->first.degree());
    }

    /// Maximum total degree; -1 for the zero polynomial.
    int total_degree() const {
        if (terms_.empty()) return -1;
        return terms_.rbegin()->first.degree();
    }

    /// Sum of all terms of total degree exactly d.
    Poly homogeneous_component(int d) const {
        Poly out;
        for (const auto& [m, c] : terms_)
            if (m.degree() == d) out.terms_[m] = c;
        return out;
    }

    bool is_homogeneous() const {
        return terms_.empty() ||
               terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
    }

    /// Drops every term of total degree > k.
    Poly truncate(int k) const {
        Poly out;
        for (const auto& [m, c] : terms_) {
            if (m.degree() > k) break;  // canonical order is degree-ascending
            out.terms_[m] = c;
        }
        return out;
    }

    friend bool operator==(const Poly&, const Poly&) = default;

    friend Poly operator-(const Poly& p) {
        Poly out;
        for (const auto& [m, c] : p.terms_) out.terms_[m] = -c;
        return out;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, c);
        return out;
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
        return out;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }

    friend Poly operator*(const Rational& c, const Poly& p) {
        Poly out;
        if (c == 0) return out;
        for (const auto& [m, pc] : p.terms_) out.terms_[m] = c * pc;
        return out;
    }
    friend Poly operator*(const Poly& p, const Rational& c) { return c * p; }

    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

private:
    TermMap terms_;
};

inline Poly add(const Poly& p, const Poly& q) { return p + q; }
inline Poly mul(const Poly& p, const Poly& q) { return p * q; }
inline Poly scale(const Rational& c, const Poly& p) { return c * p; }
inline Order order(const Poly& p) { return p.order(); }
inline Poly homogeneous_component(const Poly& p, int d) { return p.homogeneous_component(d); }

/// Product with every term of degree > k discarded; pairs whose degrees
/// already sum past k are skipped before multiplying.
Poly mul_truncated(const Poly& a, const Poly& b, int k);

/// p^n truncated at degree k.
Poly pow_truncated(const Poly& p, int n, int k);

}  // namespace germ
