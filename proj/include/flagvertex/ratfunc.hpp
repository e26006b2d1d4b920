#pragma once

#include <string>
#include <utility>

#include "flagvertex/laurent.hpp"

namespace flagvertex {

/// Quotient of Laurent polynomials. Normalization removes the common
/// monomial content, rescales so the lexicographically least denominator
/// term has coefficient 1, and collapses num == den to 1. No multivariate
/// GCD is attempted; equality is always decided by cross-multiplication.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(const VariableSystem& sys)
        : num_(LaurentPoly::zero(sys)), den_(LaurentPoly::one(sys)) {}

    RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        require_same_system(num_.system(), den_.system(), "RatFunc");
        if (den_.is_zero()) throw DivisionByZeroError("RatFunc: zero denominator");
        normalize();
    }

    static RatFunc zero(const VariableSystem& sys) { return RatFunc(sys); }
    static RatFunc one(const VariableSystem& sys) {
        return RatFunc(LaurentPoly::one(sys), LaurentPoly::one(sys));
    }
    static RatFunc constant(const VariableSystem& sys, const Rational& c) {
        return RatFunc(LaurentPoly::constant(sys, c), LaurentPoly::one(sys));
    }
    static RatFunc from_poly(LaurentPoly p) {
        LaurentPoly one = LaurentPoly::one(p.system());
        return RatFunc(std::move(p), std::move(one));
    }
    static RatFunc from_monomial(const Monomial& m, const Rational& c = Rational(1)) {
        return from_poly(LaurentPoly::from_monomial(m, c));
    }

    const VariableSystem& system() const { return num_.system(); }
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        require_same_system(a.system(), b.system(), "RatFunc::operator+");
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        require_same_system(a.system(), b.system(), "RatFunc::operator-");
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        require_same_system(a.system(), b.system(), "RatFunc::operator*");
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        require_same_system(a.system(), b.system(), "RatFunc::operator/");
        if (b.is_zero()) throw DivisionByZeroError("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc& scale(const Rational& c) {
        num_.scale(c);
        return *this;
    }
    RatFunc& mul_monomial(const Monomial& m, const Rational& c = Rational(1)) {
        num_.mul_monomial(m, c);
        normalize();
        return *this;
    }

    RatFunc inverse() const {
        if (is_zero()) throw DivisionByZeroError("RatFunc::inverse of zero");
        return RatFunc(den_, num_);
    }

    /// Integer power; negative powers require a nonzero function.
    RatFunc pow(std::int64_t k) const {
        if (k == 0) return one(system());
        RatFunc base = k > 0 ? *this : inverse();
        std::uint64_t e = k > 0 ? static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(-k);
        RatFunc acc = one(system());
        while (e != 0) {
            if (e & 1u) acc *= base;
            base *= base;
            e >>= 1u;
        }
        return acc;
    }

    RatFunc substitute(const MonomialMap& rules) const {
        LaurentPoly n = num_.substitute(rules);
        LaurentPoly d = den_.substitute(rules);
        if (d.is_zero()) throw DivisionByZeroError("RatFunc::substitute produced a zero denominator");
        return RatFunc(std::move(n), std::move(d));
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        Rational d = den_.evaluate(point);
        if (d == 0) throw DivisionByZeroError("RatFunc::evaluate: denominator vanishes at the point");
        return num_.evaluate(point) / d;
    }

    /// Exact structural comparison (same normal form). For mathematical
    /// equality use ratfunc_eq.
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string str() const {
        if (den_ == LaurentPoly::one(system())) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = LaurentPoly::one(system());
            return;
        }
        // Remove the common monomial content of the pair.
        ExpVec mn = num_.min_exponents();
        ExpVec md = den_.min_exponents();
        ExpVec common(mn.size());
        bool any = false;
        for (std::size_t i = 0; i < mn.size(); ++i) {
            common[i] = mn[i] < md[i] ? mn[i] : md[i];
            if (!common[i].is_zero()) any = true;
        }
        if (any) {
            num_.shift_exponents(common);
            den_.shift_exponents(common);
        }
        // Make the lexicographically least denominator coefficient equal to 1.
        const Rational& lead = den_.terms().begin()->second;
        if (lead != 1) {
            Rational inv = Rational(1) / lead;
            num_.scale(inv);
            den_.scale(inv);
        }
        if (num_ == den_) {
            num_ = LaurentPoly::one(system());
            den_ = LaurentPoly::one(system());
        }
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

/// True iff x and y agree as rational functions (cross-multiplication,
/// immune to normalization choices).
inline bool ratfunc_eq(const RatFunc& x, const RatFunc& y) {
    require_same_system(x.system(), y.system(), "ratfunc_eq");
    return x.num() * y.den() == y.num() * x.den();
}

} // namespace flagvertex
