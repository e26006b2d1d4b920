#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flagvertex/ratfunc.hpp"

namespace flagvertex {

/// A product  coeff * prefactor * prod_i (1 - m_i)^{k_i}  kept in factored
/// form. This is the shape every vertex summand and every truncated
/// phi-product naturally has, and it is the input format of the q->0 limit
/// engine below: each factor is classified by the q-exponent of its monomial
/// instead of being expanded.
class FactorProduct {
public:
    FactorProduct() = default;
    explicit FactorProduct(const VariableSystem& sys)
        : sys_(sys), coeff_(1), prefactor_(Monomial::one(sys)) {}

    static FactorProduct one(const VariableSystem& sys) { return FactorProduct(sys); }

    const VariableSystem& system() const { return sys_; }
    const Rational& coeff() const { return coeff_; }
    const Monomial& prefactor() const { return prefactor_; }
    const std::map<ExpVec, int>& factors() const { return factors_; }

    FactorProduct& mul_scalar(const Rational& c) {
        if (c == 0) throw Error("FactorProduct: zero scalar");
        coeff_ *= c;
        return *this;
    }

    FactorProduct& mul_monomial(const Monomial& m, std::int64_t power = 1) {
        require_same_system(sys_, m.system(), "FactorProduct::mul_monomial");
        prefactor_ *= m.pow(Frac(power));
        return *this;
    }

    /// Multiplies by (1 - m)^k.
    FactorProduct& mul_factor(const Monomial& m, int k) {
        require_same_system(sys_, m.system(), "FactorProduct::mul_factor");
        if (k == 0) return *this;
        auto it = factors_.find(m.exponents());
        if (it == factors_.end()) {
            factors_.emplace(m.exponents(), k);
        } else {
            it->second += k;
            if (it->second == 0) factors_.erase(it);
        }
        return *this;
    }

    FactorProduct& operator*=(const FactorProduct& o) {
        require_same_system(sys_, o.sys_, "FactorProduct::operator*");
        coeff_ *= o.coeff_;
        prefactor_ *= o.prefactor_;
        for (const auto& [e, k] : o.factors_) mul_factor(Monomial(sys_, e), k);
        return *this;
    }
    friend FactorProduct operator*(FactorProduct a, const FactorProduct& b) { return a *= b; }

    FactorProduct inverse() const {
        FactorProduct out(sys_);
        out.coeff_ = Rational(1) / coeff_;
        out.prefactor_ = prefactor_.inverse();
        for (const auto& [e, k] : factors_) out.factors_.emplace(e, -k);
        return out;
    }

    FactorProduct pow_sign(int sign) const { return sign >= 0 ? *this : inverse(); }

    /// Contains a literal (1-1) factor with positive power, i.e. the whole
    /// product is the zero function.
    bool is_structurally_zero() const {
        auto it = factors_.find(ExpVec(static_cast<std::size_t>(sys_.var_count()), Frac(0)));
        return it != factors_.end() && it->second > 0;
    }

    FactorProduct substitute(const MonomialMap& rules) const {
        require_same_system(sys_, rules.source(), "FactorProduct::substitute");
        FactorProduct out(rules.target());
        auto [c, pm] = rules.apply(prefactor_);
        out.coeff_ = coeff_ * c;
        out.prefactor_ = pm;
        for (const auto& [e, k] : factors_) {
            auto [fc, fm] = rules.apply(Monomial(sys_, e));
            if (fc != 1)
                throw Error("FactorProduct::substitute: factor image is not a pure monomial");
            out.mul_factor(fm, k);
        }
        return out;
    }

    /// Expands to an explicit rational function.
    RatFunc expand() const {
        LaurentPoly num = LaurentPoly::from_monomial(prefactor_, coeff_);
        LaurentPoly den = LaurentPoly::one(sys_);
        for (const auto& [e, k] : factors_) {
            LaurentPoly f = LaurentPoly::one_minus(Monomial(sys_, e));
            for (int i = 0; i < (k > 0 ? k : -k); ++i) {
                if (k > 0)
                    num *= f;
                else
                    den *= f;
            }
        }
        return RatFunc(std::move(num), std::move(den));
    }

    std::string str() const {
        std::string out;
        if (coeff_ != 1 || prefactor_.is_one()) out += rational_to_string(coeff_);
        if (!prefactor_.is_one()) {
            if (!out.empty()) out += "*";
            out += prefactor_.str();
        }
        for (const auto& [e, k] : factors_) {
            if (!out.empty()) out += " * ";
            out += "(1 - " + Monomial(sys_, e).str() + ")";
            if (k != 1) out += "^(" + std::to_string(k) + ")";
        }
        return out.empty() ? "1" : out;
    }

private:
    VariableSystem sys_;
    Rational coeff_{1};
    Monomial prefactor_;
    std::map<ExpVec, int> factors_;
};

/// Exact q->0 limit of a factored product.
///
/// Each factor (1 - m)^k is classified by the q-exponent alpha of m:
///   * alpha > 0: the factor tends to 1.
///   * alpha = 0: the factor survives unchanged (m is q-free).
///   * alpha < 0: rewrite (1 - m) = (-m)(1 - 1/m) exactly; the inverted
///     factor then has positive alpha and tends to 1 while (-m)^k joins the
///     prefactor.
/// After normalization the prefactor's q-exponent decides the limit: negative
/// means divergence, positive means 0, zero means the prefactor times the
/// surviving factors.
inline RatFunc q_limit(const FactorProduct& f) {
    const VariableSystem& sys = f.system();
    if (f.is_structurally_zero()) return RatFunc::zero(sys);

    Rational coeff = f.coeff();
    Monomial prefactor = f.prefactor();
    std::vector<std::pair<Monomial, int>> survivors;
    for (const auto& [e, k] : f.factors()) {
        Monomial m(sys, e);
        if (m.is_one()) {
            // k > 0 handled by the structural-zero check above.
            throw DivisionByZeroError("q_limit: identically-zero factor in the denominator");
        }
        Frac alpha = m.q_exponent();
        if (alpha > Frac(0)) continue;
        if (alpha == Frac(0)) {
            survivors.emplace_back(std::move(m), k);
            continue;
        }
        if (k % 2 != 0) coeff = -coeff;
        prefactor *= m.pow(Frac(k));
    }

    Frac total = prefactor.q_exponent();
    if (total < Frac(0))
        throw NegativeExponentDivergence("q_limit: prefactor q-exponent " + total.str() + " is negative");
    if (total > Frac(0)) return RatFunc::zero(sys);

    LaurentPoly num = LaurentPoly::from_monomial(prefactor, coeff);
    LaurentPoly den = LaurentPoly::one(sys);
    for (const auto& [m, k] : survivors) {
        LaurentPoly fac = LaurentPoly::one_minus(m);
        for (int i = 0; i < (k > 0 ? k : -k); ++i) {
            if (k > 0)
                num *= fac;
            else
                den *= fac;
        }
    }
    return RatFunc(std::move(num), std::move(den));
}

/// Exact q->0 limit of a rational function: compare the lowest q-exponents
/// of numerator and denominator. Independent of the factored-limit route;
/// used both as a general engine and as a cross-check of q_limit.
inline RatFunc q_limit(const RatFunc& f) {
    const VariableSystem& sys = f.system();
    if (f.is_zero()) return RatFunc::zero(sys);
    Frac an = *f.num().min_q_exponent();
    Frac ad = *f.den().min_q_exponent();
    if (an < ad)
        throw NegativeExponentDivergence("q_limit: numerator order " + an.str() + " below denominator order " + ad.str());
    if (an > ad) return RatFunc::zero(sys);
    return RatFunc(f.num().q_coefficient(an), f.den().q_coefficient(ad));
}

} // namespace flagvertex
