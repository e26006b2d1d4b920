#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "flagvertex/flag.hpp"
#include "flagvertex/mirror.hpp"
#include "flagvertex/pochhammer.hpp"
#include "flagvertex/tableau.hpp"

namespace flagvertex {

/// One vertex summand in factored form: the triple product of Pochhammer
/// ratios attached to a degree tableau at a fixed point,
///
///   prod_{i<=n-2, j<=i, k<=i+1} (hbar u_{Ik}/u_{Ij})_{d_{i,j}-d_{i+1,k}} /
///                               (q    u_{Ik}/u_{Ij})_{d_{i,j}-d_{i+1,k}}
///   prod_{i<=n-1, j,k<=i}       (q    u_{Ik}/u_{Ij})_{d_{i,j}-d_{i,k}} /
///                               (hbar u_{Ik}/u_{Ij})_{d_{i,j}-d_{i,k}}
///   prod_{i<=n, j<=n-1}         (hbar u_i/u_{Ij})_{d_{n-1,j}} /
///                               (q    u_i/u_{Ij})_{d_{n-1,j}}
///
/// Ratios whose argument is trivial and whose subscript is negative vanish
/// identically; the factored form keeps that structural (a literal (1-1)
/// factor) instead of dividing by zero.
inline FactorProduct vertex_term_factored(const VariableSystem& sys, const FixedPoint& I,
                                          const DegreeTableau& t) {
    if (sys.rank() != I.n() || t.n != I.n()) throw Error("vertex_term: rank mismatch");
    const int n = sys.rank();
    Monomial hbar = Monomial::var(sys, sys.hbar_index());
    Monomial q = Monomial::var(sys, sys.q_index());
    FactorProduct out(sys);
    for (int i = 1; i <= n - 2; ++i)
        for (int j = 1; j <= i; ++j)
            for (int k = 1; k <= i + 1; ++k)
                out *= pochhammer_ratio(hbar, q, u_ratio(sys, I[k], I[j]), t.entry(i, j) - t.entry(i + 1, k));
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= i; ++j)
            for (int k = 1; k <= i; ++k)
                out *= pochhammer_ratio(q, hbar, u_ratio(sys, I[k], I[j]), t.entry(i, j) - t.entry(i, k));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n - 1; ++j)
            out *= pochhammer_ratio(hbar, q, u_ratio(sys, i, I[j]), t.entry(n - 1, j));
    return out;
}

inline RatFunc vertex_term(const VariableSystem& sys, const FixedPoint& I, const DegreeTableau& t) {
    return vertex_term_factored(sys, I, t).expand();
}

/// The vertex series restricted to a fixed point, as a factored series: one
/// summand per cone tableau of total degree <= D.
inline FactoredZSeries vertex_series_factored(const VariableSystem& sys, const FixedPoint& I, int D) {
    FactoredZSeries out{sys, D, {}};
    for (const DegreeTableau& t : enumerate_tableaux(sys.rank(), D))
        out.terms.emplace_back(t.z_degree(), vertex_term_factored(sys, I, t));
    return out;
}

/// The vertex series as an explicit truncated power series; its constant
/// term is exactly 1.
inline ZSeries vertex_series(const VariableSystem& sys, const FixedPoint& I, int D) {
    return vertex_series_factored(sys, I, D).expand();
}

/// Fixed-quasimap data: the polarization bundle splits into line-bundle
/// summands w q^m O(m). A summand is recorded as (weight, qshift, degree,
/// sign); qshift always equals the degree for these bundles.
struct LineBundleTerm {
    Monomial weight;
    int qshift = 0;
    int degree = 0;
    int sign = 1;
};

struct LineBundleSum {
    VariableSystem sys;
    std::vector<LineBundleTerm> terms;

    int virtual_degree() const {
        int d = 0;
        for (const auto& t : terms) d += t.sign * t.degree;
        return d;
    }
};

/// The polarization bundle of the fixed quasimap over a point I with degree
/// tableau t (nonnegative entries; column j of row i carries weight u_{Ij}
/// and the line bundle u_{Ij} q^{-t_{i,j}} O(-t_{i,j})):
///   sum_i Hom(V_i, V_{i+1}) - sum_i End(V_i),
/// with the framing bundle trivial of full rank.
inline LineBundleSum polarization_bundle(const VariableSystem& sys, const FixedPoint& I,
                                         const DegreeTableau& t) {
    if (sys.rank() != I.n() || t.n != I.n()) throw Error("polarization_bundle: rank mismatch");
    if (!tableau_identity_dominated(t))
        throw Error("polarization_bundle: tableau is not columnwise dominated");
    const int n = sys.rank();
    LineBundleSum out{sys, {}};
    for (int i = 1; i <= n - 1; ++i) {
        for (int j = 1; j <= i; ++j) {
            if (i + 1 < n) {
                for (int k = 1; k <= i + 1; ++k) {
                    int m = t.entry(i, j) - t.entry(i + 1, k);
                    out.terms.push_back({u_ratio(sys, I[k], I[j]), m, m, +1});
                }
            } else {
                for (int k = 1; k <= n; ++k) {
                    int m = t.entry(i, j);
                    out.terms.push_back({u_ratio(sys, k, I[j]), m, m, +1});
                }
            }
            for (int k = 1; k <= i; ++k) {
                int m = t.entry(i, j) - t.entry(i, k);
                out.terms.push_back({u_ratio(sys, I[k], I[j]), m, m, -1});
            }
        }
    }
    return out;
}

/// Cohomology of a line-bundle pair w q^m O(m) + hbar^{-1} w^{-1} q^{-m} O(-m),
/// reduced by the fibers. Only the first half is returned (the polarization
/// part of the reduced virtual tangent space):
///   m > 0 :  w (q + q^2 + ... + q^m)
///   m < 0 : -w (1 + q^{-1} + ... + q^{m+1})
///   m = 0 :  0
inline void accumulate_reduced_half(CharacterSum& acc, const LineBundleTerm& term) {
    const VariableSystem& sys = acc.system();
    Monomial q = Monomial::var(sys, sys.q_index());
    if (term.degree > 0) {
        for (int k = 1; k <= term.degree; ++k) acc.add(term.weight * q.pow(Frac(k)), term.sign);
    } else if (term.degree < 0) {
        for (int k = 0; k <= -term.degree - 1; ++k)
            acc.add(term.weight * q.pow(Frac(-k)), -term.sign);
    }
}

/// The polarization part of the reduced virtual tangent space at a fixed
/// quasimap: apply the reduction row by row and sum. The fiber subtraction
/// accounts exactly for removing the tangent polarization of the base point.
inline CharacterSum reduced_polarization(const VariableSystem& sys, const FixedPoint& I,
                                         const DegreeTableau& t) {
    CharacterSum acc(sys);
    for (const auto& term : polarization_bundle(sys, I, t).terms) accumulate_reduced_half(acc, term);
    return acc;
}

/// The full reduced virtual tangent space: the polarization half plus the
/// hbar-twisted dual half,
///   m > 0 : -(w hbar)^{-1} (1 + q^{-1} + ... + q^{-m+1})
///   m < 0 :  (w hbar)^{-1} (q + q^2 + ... + q^{-m})
inline CharacterSum reduced_tvir(const VariableSystem& sys, const FixedPoint& I,
                                 const DegreeTableau& t) {
    CharacterSum acc = reduced_polarization(sys, I, t);
    Monomial q = Monomial::var(sys, sys.q_index());
    Monomial hbar_inv = Monomial::var(sys, sys.hbar_index(), Frac(-1));
    for (const auto& term : polarization_bundle(sys, I, t).terms) {
        Monomial dual_weight = term.weight.inverse() * hbar_inv;
        if (term.degree > 0) {
            for (int k = 0; k <= term.degree - 1; ++k)
                acc.add(dual_weight * q.pow(Frac(-k)), -term.sign);
        } else if (term.degree < 0) {
            for (int k = 1; k <= -term.degree; ++k)
                acc.add(dual_weight * q.pow(Frac(k)), term.sign);
        }
    }
    return acc;
}

/// Localization form of the vertex series: one summand per fixed quasimap,
/// each the product of the pair contributions
///   [ (-q^{1/2} hbar^{-1/2})^m (hbar w)_m / (q w)_m ]^{sign}
/// over the polarization bundle, times the symmetrization twist
/// q^{deg/2}.
inline FactoredZSeries localization_series_factored(const VariableSystem& sys, const FixedPoint& I,
                                                    int D) {
    Monomial hbar = Monomial::var(sys, sys.hbar_index());
    Monomial q = Monomial::var(sys, sys.q_index());
    FactoredZSeries out{sys, D, {}};
    for (const DegreeTableau& t : enumerate_quasimap_tableaux(sys.rank(), D)) {
        LineBundleSum bundle = polarization_bundle(sys, I, t);
        FactorProduct fp(sys);
        for (const auto& term : bundle.terms) {
            fp *= pochhammer_ratio(hbar, q, term.weight, term.degree).pow_sign(term.sign);
            fp.mul_monomial(q.pow(Frac(term.degree * term.sign, 2)) *
                            hbar.pow(Frac(-term.degree * term.sign, 2)));
            if ((term.degree * term.sign) % 2 != 0) fp.mul_scalar(Rational(-1));
        }
        fp.mul_monomial(q.pow(Frac(bundle.virtual_degree(), 2)));
        out.terms.emplace_back(t.z_degree(), std::move(fp));
    }
    return out;
}

inline ZSeries localization_series(const VariableSystem& sys, const FixedPoint& I, int D) {
    return localization_series_factored(sys, I, D).expand();
}

/// The prefactor Phi((q - hbar) N^+_I) = prod_{w in N^+} phi(q w)/phi(hbar w)
/// in factored form, truncated at the given q-power cutoff.
inline FactorProduct phi_prefactor(const VariableSystem& sys, const FixedPoint& I, int cutoff) {
    auto [nplus, nminus] = attracting_split(sys, I);
    (void)nminus;
    Monomial hbar = Monomial::var(sys, sys.hbar_index());
    Monomial q = Monomial::var(sys, sys.q_index());
    CharacterSum arg = nplus.scaled(q) - nplus.scaled(hbar);
    return phi_product(arg, cutoff);
}

/// Smallest cutoff such that every omitted factor of Phi(V) has strictly
/// positive q-exponent after the substitution: factor i of weight w has
/// exponent alpha_0(w) + i, so alpha stays positive beyond
/// max(0, floor(-alpha_0) + 1).
inline int phi_limit_cutoff(const CharacterSum& v, const MonomialMap& rules) {
    int cutoff = 0;
    for (const auto& [e, m] : v.weights()) {
        (void)m;
        auto [c, image] = rules.apply(Monomial(v.system(), e));
        (void)c;
        Frac alpha0 = image.q_exponent();
        if (alpha0 <= Frac(0)) {
            long need = (-alpha0).floor() + 1;
            cutoff = std::max(cutoff, static_cast<int>(need));
        }
    }
    return cutoff;
}

} // namespace flagvertex
