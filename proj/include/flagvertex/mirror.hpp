#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flagvertex/factor_product.hpp"
#include "flagvertex/zseries.hpp"

namespace flagvertex {

/// A slope: n-1 exact rational coordinates on the Kahler side.
struct Slope {
    std::vector<Frac> s;

    Slope() = default;
    explicit Slope(std::vector<Frac> v) : s(std::move(v)) {}

    int size() const { return static_cast<int>(s.size()); }
    const Frac& operator[](int i) const { return s[static_cast<std::size_t>(i)]; } // 0-based

    Slope shifted(int by) const {
        Slope out(*this);
        for (auto& x : out.s) x += Frac(by);
        return out;
    }

    /// Pairing with an integer exponent vector.
    Frac pair(const std::vector<int>& e) const {
        Frac acc(0);
        for (std::size_t i = 0; i < s.size(); ++i) acc += s[i] * Frac(e[i]);
        return acc;
    }

    static Slope parse(const std::string& text) {
        std::vector<Frac> v;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto comma = text.find(',', pos);
            std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (part.empty()) throw SchemaError("Slope::parse: empty component in '" + text + "'");
            v.push_back(frac_from_string(part));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return Slope(std::move(v));
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += ",";
            out += s[i].str();
        }
        return out;
    }

    friend bool operator==(const Slope& a, const Slope& b) { return a.s == b.s; }
};

/// True iff some nonempty subset of the entries sums to an integer.
inline bool is_wall(const Slope& s) {
    int m = s.size();
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        Frac sum(0);
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) sum += s[i];
        if (sum.is_integer()) return true;
    }
    return false;
}

/// True iff s_i > 0 for all i and every consecutive window satisfies
/// s_i + ... + s_j > j - i - 1.
inline bool is_big_enough(const Slope& s) {
    int m = s.size();
    for (int i = 0; i < m; ++i)
        if (!(s[i] > Frac(0))) return false;
    for (int i = 0; i < m; ++i) {
        Frac sum(0);
        for (int j = i; j < m; ++j) {
            sum += s[j];
            if (!(sum > Frac(j - i - 1))) return false;
        }
    }
    return true;
}

/// The torus identification between the two sides:
///   z_i -> hbar! a!_i,  a_i -> (hbar!/q) z!_i,  hbar -> q/hbar!,  q -> q.
inline MonomialMap kappa_map(int n) {
    VariableSystem src = VariableSystem::primal(n);
    VariableSystem dst = VariableSystem::dual(n);
    MonomialMap map(src, dst);
    Monomial hbar_dual = Monomial::var(dst, dst.hbar_index());
    Monomial q = Monomial::var(dst, dst.q_index());
    for (int i = 1; i <= n - 1; ++i) {
        map.set(src.z_index(i), hbar_dual * Monomial::var(dst, dst.a_index(i)));
        map.set(src.a_index(i), hbar_dual * q.inverse() * Monomial::var(dst, dst.z_index(i)));
    }
    map.set(src.hbar_index(), q * hbar_dual.inverse());
    return map;
}

/// Inverse identification, solved from the forward one:
///   a!_i -> z_i hbar / q,  z!_i -> a_i hbar,  hbar! -> q/hbar,  q -> q.
inline MonomialMap kappa_inv_map(int n) {
    VariableSystem src = VariableSystem::dual(n);
    VariableSystem dst = VariableSystem::primal(n);
    MonomialMap map(src, dst);
    Monomial hbar = Monomial::var(dst, dst.hbar_index());
    Monomial q = Monomial::var(dst, dst.q_index());
    for (int i = 1; i <= n - 1; ++i) {
        map.set(src.a_index(i), hbar * q.inverse() * Monomial::var(dst, dst.z_index(i)));
        map.set(src.z_index(i), hbar * Monomial::var(dst, dst.a_index(i)));
    }
    map.set(src.hbar_index(), q * hbar.inverse());
    return map;
}

inline RatFunc kappa(const RatFunc& f) {
    if (f.system().side() != Side::primal) throw MixedSystemsError("kappa: expected primal-side input");
    return f.substitute(kappa_map(f.system().rank()));
}

inline RatFunc kappa_inv(const RatFunc& f) {
    if (f.system().side() != Side::dual) throw MixedSystemsError("kappa_inv: expected dual-side input");
    return f.substitute(kappa_inv_map(f.system().rank()));
}

/// kappa on a truncated series: each summand z^deg * c_deg maps to a dual
/// rational function, which is re-expanded in the dual Kahler variables.
inline ZSeries kappa_series(const ZSeries& f, int out_truncation) {
    const VariableSystem& src = f.system();
    if (src.side() != Side::primal) throw MixedSystemsError("kappa_series: expected primal-side input");
    VariableSystem dst = VariableSystem::dual(src.rank());
    MonomialMap map = kappa_map(src.rank());
    ZSeries out(dst, out_truncation);
    for (const auto& [deg, c] : f.coeffs()) {
        Monomial zmono = Monomial::one(src);
        for (int i = 1; i <= src.rank() - 1; ++i)
            zmono *= Monomial::var(src, src.z_index(i), Frac(deg[static_cast<std::size_t>(i - 1)]));
        RatFunc image = RatFunc::from_monomial(zmono).substitute(map) * c.substitute(map);
        out += series_expand(image, out_truncation);
    }
    return out;
}

inline ZSeries kappa_inv_series(const ZSeries& f, int out_truncation) {
    const VariableSystem& src = f.system();
    if (src.side() != Side::dual) throw MixedSystemsError("kappa_inv_series: expected dual-side input");
    VariableSystem dst = VariableSystem::primal(src.rank());
    MonomialMap map = kappa_inv_map(src.rank());
    ZSeries out(dst, out_truncation);
    for (const auto& [deg, c] : f.coeffs()) {
        Monomial zmono = Monomial::one(src);
        for (int i = 1; i <= src.rank() - 1; ++i)
            zmono *= Monomial::var(src, src.z_index(i), Frac(deg[static_cast<std::size_t>(i - 1)]));
        RatFunc image = RatFunc::from_monomial(zmono).substitute(map) * c.substitute(map);
        out += series_expand(image, out_truncation);
    }
    return out;
}

/// A truncated series kept as a list of factored summands, the native output
/// shape of vertex enumeration. Several summands may share a degree vector.
struct FactoredZSeries {
    VariableSystem sys;
    int truncation = 0;
    std::vector<std::pair<ZDeg, FactorProduct>> terms;

    ZSeries expand() const {
        ZSeries out(sys, truncation);
        for (const auto& [deg, fp] : terms) out.add_coeff(deg, fp.expand());
        return out;
    }
};

/// Substitution applied to dual-side series coefficients inside the index
/// limit: the composite of kappa_inv with the shift z -> z q^{s+1}, i.e.
///   a!_i -> z_i hbar q^{s_i},  hbar! -> q/hbar,  q -> q.
inline MonomialMap index_limit_coeff_map(int n, const Slope& s) {
    VariableSystem src = VariableSystem::dual(n);
    VariableSystem dst = VariableSystem::primal(n);
    if (s.size() != n - 1) throw Error("index_limit: slope has wrong length");
    MonomialMap map(src, dst);
    Monomial hbar = Monomial::var(dst, dst.hbar_index());
    Monomial q = Monomial::var(dst, dst.q_index());
    for (int i = 1; i <= n - 1; ++i)
        map.set(src.a_index(i), hbar * Monomial::var(dst, dst.z_index(i)) * q.pow(s[i - 1]));
    map.set(src.hbar_index(), q * hbar.inverse());
    return map;
}

/// Index limit of a single dual-side coefficient (no Kahler variables):
/// kappa( lim_{q->0} kappa^{-1}(c)|_{z -> z q^{s+1}} ). The z-degree part of
/// the ambient series passes through the pipeline unchanged and is handled
/// by the callers.
inline RatFunc index_limit_coeff(const RatFunc& c, const Slope& s) {
    int n = c.system().rank();
    RatFunc shifted = c.substitute(index_limit_coeff_map(n, s));
    return q_limit(shifted).substitute(kappa_map(n));
}

/// Same limit computed structurally on a factored summand.
inline RatFunc index_limit_coeff(const FactorProduct& c, const Slope& s) {
    int n = c.system().rank();
    FactorProduct shifted = c.substitute(index_limit_coeff_map(n, s));
    return q_limit(shifted).substitute(kappa_map(n));
}

/// Index limit of a dual-side truncated series with respect to a slope.
/// Defined for every slope, wall or not.
inline ZSeries index_limit(const ZSeries& f, const Slope& s) {
    const VariableSystem& sys = f.system();
    if (sys.side() != Side::dual) throw MixedSystemsError("index_limit: expected dual-side input");
    ZSeries out(sys, f.truncation());
    for (const auto& [deg, c] : f.coeffs()) out.set_coeff(deg, index_limit_coeff(c, s));
    return out;
}

/// Index limit of a factored dual-side series, one summand at a time.
inline ZSeries index_limit(const FactoredZSeries& f, const Slope& s) {
    if (f.sys.side() != Side::dual) throw MixedSystemsError("index_limit: expected dual-side input");
    ZSeries out(f.sys, f.truncation);
    for (const auto& [deg, fp] : f.terms) out.add_coeff(deg, index_limit_coeff(fp, s));
    return out;
}

/// The alternative limit pipeline: substitute hbar! = q/t and shift
/// a!_i -> a!_i q^{s_i}, take q -> 0 with t held fixed, then put t = q/hbar!
/// back. Implemented literally; agrees with index_limit at the slopes where
/// both are exercised by the ground-truth checks.
inline MonomialMap rm2_forward_map(int n, const Slope& s) {
    VariableSystem sys = VariableSystem::dual(n);
    if (s.size() != n - 1) throw Error("index_limit_rm2: slope has wrong length");
    MonomialMap map(sys, sys);
    Monomial q = Monomial::var(sys, sys.q_index());
    Monomial t = Monomial::var(sys, sys.t_index());
    for (int i = 1; i <= n - 1; ++i)
        map.set(sys.a_index(i), Monomial::var(sys, sys.a_index(i)) * q.pow(s[i - 1]));
    map.set(sys.hbar_index(), q * t.inverse());
    return map;
}

inline MonomialMap rm2_backward_map(int n) {
    VariableSystem sys = VariableSystem::dual(n);
    MonomialMap map(sys, sys);
    map.set(sys.t_index(), Monomial::var(sys, sys.q_index()) *
                               Monomial::var(sys, sys.hbar_index()).inverse());
    return map;
}

inline RatFunc index_limit_rm2_coeff(const RatFunc& c, const Slope& s) {
    int n = c.system().rank();
    RatFunc shifted = c.substitute(rm2_forward_map(n, s));
    return q_limit(shifted).substitute(rm2_backward_map(n));
}

inline ZSeries index_limit_rm2(const ZSeries& f, const Slope& s) {
    const VariableSystem& sys = f.system();
    if (sys.side() != Side::dual) throw MixedSystemsError("index_limit_rm2: expected dual-side input");
    ZSeries out(sys, f.truncation());
    for (const auto& [deg, c] : f.coeffs()) out.set_coeff(deg, index_limit_rm2_coeff(c, s));
    return out;
}

/// Plain limit lim_{q->0} F(., z q^{s+1}) of a factored series over its own
/// variable system: the Kahler shift only multiplies each summand by
/// q^{<s+1, deg>}. This is the limit that trivializes vertex functions at
/// big-enough slopes.
inline ZSeries shifted_q_limit(const FactoredZSeries& f, const Slope& s) {
    if (s.size() != f.sys.rank() - 1) throw Error("shifted_q_limit: slope has wrong length");
    Monomial q = Monomial::var(f.sys, f.sys.q_index());
    ZSeries out(f.sys, f.truncation);
    for (const auto& [deg, fp] : f.terms) {
        Frac boost(0);
        for (std::size_t i = 0; i < deg.size(); ++i)
            boost += (s[static_cast<int>(i)] + Frac(1)) * Frac(deg[i]);
        FactorProduct shifted(fp);
        shifted.mul_monomial(q.pow(boost));
        out.add_coeff(deg, q_limit(shifted));
    }
    return out;
}

} // namespace flagvertex
