#pragma once

#include <utility>
#include <vector>

#include "flagvertex/factor_product.hpp"

namespace flagvertex {

/// The factors of the q-Pochhammer symbol (x)_d = phi(x)/phi(x q^d):
///   d >= 0 :  (1 - x q^k)      for k = 0 .. d-1
///   d <  0 :  (1 - x q^{-k})^{-1}  for k = 1 .. -d
inline std::vector<std::pair<Monomial, int>> pochhammer_factors(const Monomial& x, int d) {
    const VariableSystem& sys = x.system();
    Monomial q = Monomial::var(sys, sys.q_index());
    std::vector<std::pair<Monomial, int>> out;
    if (d >= 0) {
        for (int k = 0; k < d; ++k) out.emplace_back(x * q.pow(Frac(k)), 1);
    } else {
        for (int k = 1; k <= -d; ++k) out.emplace_back(x * q.pow(Frac(-k)), -1);
    }
    return out;
}

/// (x)_d as an explicit rational function. x must not involve Kahler
/// variables.
inline RatFunc pochhammer(const Monomial& x, int d) {
    if (x.has_kahler_part()) throw Error("pochhammer: argument contains Kahler variables");
    FactorProduct f(x.system());
    for (const auto& [m, k] : pochhammer_factors(x, d)) f.mul_factor(m, k);
    return f.expand();
}

/// The cocycle identity (x)_{d+e} = (x)_d * (x q^d)_e, checked exactly.
inline bool pochhammer_cocycle_check(const Monomial& x, int d, int e) {
    const VariableSystem& sys = x.system();
    Monomial q = Monomial::var(sys, sys.q_index());
    RatFunc lhs = pochhammer(x, d + e);
    RatFunc rhs = pochhammer(x, d) * pochhammer(x * q.pow(Frac(d)), e);
    return ratfunc_eq(lhs, rhs);
}

/// The ratio (num_scale * x)_d / (den_scale * x)_d in factored form. This is
/// the building block of vertex summands; the factored form keeps the q->0
/// limit structural and lets the x = 1, d < 0 case vanish cleanly instead of
/// dividing by zero.
inline FactorProduct pochhammer_ratio(const Monomial& num_scale, const Monomial& den_scale,
                                      const Monomial& x, int d) {
    FactorProduct f(x.system());
    for (const auto& [m, k] : pochhammer_factors(num_scale * x, d)) f.mul_factor(m, k);
    for (const auto& [m, k] : pochhammer_factors(den_scale * x, d)) f.mul_factor(m, -k);
    return f;
}

} // namespace flagvertex
