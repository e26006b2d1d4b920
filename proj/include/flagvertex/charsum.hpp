#pragma once

#include <map>
#include <string>

#include "flagvertex/factor_product.hpp"

namespace flagvertex {

/// Virtual multiset of torus weights: a finite map monomial -> signed
/// multiplicity. Weights live in the equivariant variables, hbar and
/// (for quasimap tangent data) q.
class CharacterSum {
public:
    CharacterSum() = default;
    explicit CharacterSum(const VariableSystem& sys) : sys_(sys) {}

    const VariableSystem& system() const { return sys_; }
    const std::map<ExpVec, int>& weights() const { return weights_; }
    bool empty() const { return weights_.empty(); }

    /// Signed rank: the sum of multiplicities.
    int rank() const {
        int r = 0;
        for (const auto& [e, m] : weights_) {
            (void)e;
            r += m;
        }
        return r;
    }

    void add(const Monomial& w, int mult = 1) {
        require_same_system(sys_, w.system(), "CharacterSum::add");
        if (mult == 0) return;
        auto it = weights_.find(w.exponents());
        if (it == weights_.end()) {
            weights_.emplace(w.exponents(), mult);
        } else {
            it->second += mult;
            if (it->second == 0) weights_.erase(it);
        }
    }

    CharacterSum& operator+=(const CharacterSum& o) {
        require_same_system(sys_, o.sys_, "CharacterSum::operator+");
        for (const auto& [e, m] : o.weights_) add(Monomial(sys_, e), m);
        return *this;
    }
    CharacterSum& operator-=(const CharacterSum& o) {
        require_same_system(sys_, o.sys_, "CharacterSum::operator-");
        for (const auto& [e, m] : o.weights_) add(Monomial(sys_, e), -m);
        return *this;
    }
    friend CharacterSum operator+(CharacterSum a, const CharacterSum& b) { return a += b; }
    friend CharacterSum operator-(CharacterSum a, const CharacterSum& b) { return a -= b; }

    /// Dual class: every weight is inverted.
    CharacterSum dual() const {
        CharacterSum out(sys_);
        for (const auto& [e, m] : weights_) out.add(Monomial(sys_, e).inverse(), m);
        return out;
    }

    /// Tensor by a line: every weight is multiplied by m.
    CharacterSum scaled(const Monomial& m) const {
        CharacterSum out(sys_);
        for (const auto& [e, mult] : weights_) out.add(Monomial(sys_, e) * m, mult);
        return out;
    }

    bool has_trivial_weight() const {
        return weights_.find(ExpVec(static_cast<std::size_t>(sys_.var_count()), Frac(0))) != weights_.end();
    }

    friend bool operator==(const CharacterSum& a, const CharacterSum& b) {
        return a.sys_ == b.sys_ && a.weights_ == b.weights_;
    }
    friend bool operator!=(const CharacterSum& a, const CharacterSum& b) { return !(a == b); }

    std::string str() const {
        if (weights_.empty()) return "0";
        std::string out;
        for (const auto& [e, m] : weights_) {
            if (!out.empty()) out += " + ";
            if (m != 1) out += std::to_string(m) + "*";
            out += Monomial(sys_, e).str();
        }
        return out;
    }

private:
    VariableSystem sys_;
    std::map<ExpVec, int> weights_;
};

inline void require_no_trivial_weight(const CharacterSum& v, const char* what) {
    if (v.has_trivial_weight())
        throw Error(std::string(what) + ": class contains the trivial weight");
}

/// Roof genus: w -> 1/(w^{1/2} - w^{-1/2}), extended multiplicatively over a
/// virtual class. Undefined on the trivial weight.
inline RatFunc roof(const CharacterSum& v) {
    require_no_trivial_weight(v, "roof");
    const VariableSystem& sys = v.system();
    RatFunc out = RatFunc::one(sys);
    for (const auto& [e, m] : v.weights()) {
        Monomial w(sys, e);
        LaurentPoly edge = LaurentPoly::from_monomial(w.pow(Frac(1, 2))) -
                           LaurentPoly::from_monomial(w.pow(Frac(-1, 2)));
        out *= RatFunc::from_poly(edge).pow(-m);
    }
    return out;
}

/// S^\bullet(V) = prod (1-w)^{-m}; on negatives this is the exterior power.
inline RatFunc sym_power(const CharacterSum& v) {
    require_no_trivial_weight(v, "sym_power");
    const VariableSystem& sys = v.system();
    RatFunc out = RatFunc::one(sys);
    for (const auto& [e, m] : v.weights())
        out *= RatFunc::from_poly(LaurentPoly::one_minus(Monomial(sys, e))).pow(-m);
    return out;
}

/// Wedge^\bullet(V) = prod (1-w)^{m}.
inline RatFunc ext_power(const CharacterSum& v) {
    require_no_trivial_weight(v, "ext_power");
    return sym_power(v).inverse();
}

/// Square root of the determinant line: prod w^{m/2}, a monomial with
/// half-integer exponents. Squaring recovers prod w^m.
inline Monomial det_sqrt(const CharacterSum& v) {
    Monomial out = Monomial::one(v.system());
    for (const auto& [e, m] : v.weights())
        out *= Monomial(v.system(), e).pow(Frac(m, 2));
    return out;
}

/// Truncation of Phi(V) = prod_w phi(w)^{m}, phi(x) = prod_{i>=0}(1 - x q^i),
/// cut at i <= q_cutoff. The cutoff must be chosen so that every omitted
/// factor provably tends to 1 in the limit that consumes the product.
inline FactorProduct phi_product(const CharacterSum& v, int q_cutoff) {
    if (q_cutoff < 0) throw Error("phi_product: negative cutoff");
    const VariableSystem& sys = v.system();
    Monomial q = Monomial::var(sys, sys.q_index());
    FactorProduct out(sys);
    for (const auto& [e, m] : v.weights()) {
        Monomial w(sys, e);
        for (int i = 0; i <= q_cutoff; ++i) out.mul_factor(w * q.pow(Frac(i)), m);
    }
    return out;
}

} // namespace flagvertex
