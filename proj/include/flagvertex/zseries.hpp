#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagvertex/ratfunc.hpp"

namespace flagvertex {

/// Degree vector in the Kahler variables (length n-1, entries >= 0).
using ZDeg = std::vector<int>;

inline int zdeg_total(const ZDeg& d) {
    int t = 0;
    for (int x : d) t += x;
    return t;
}

/// All degree vectors of the given length with total <= total_max, in graded
/// lexicographic order. Deterministic; shared by series code and enumerators.
inline std::vector<ZDeg> degree_vectors(int length, int total_max) {
    std::vector<ZDeg> out;
    if (length == 0) {
        out.push_back({});
        return out;
    }
    for (int total = 0; total <= total_max; ++total) {
        ZDeg cur(static_cast<std::size_t>(length), 0);
        // enumerate compositions of `total` into `length` parts, lex order
        std::function<void(int, int)> rec = [&](int pos, int remaining) {
            if (pos == length - 1) {
                cur[static_cast<std::size_t>(pos)] = remaining;
                out.push_back(cur);
                return;
            }
            for (int v = 0; v <= remaining; ++v) {
                cur[static_cast<std::size_t>(pos)] = v;
                rec(pos + 1, remaining - v);
            }
        };
        rec(0, total);
    }
    return out;
}

/// Power series in the Kahler variables truncated at a total degree bound,
/// with exact rational-function coefficients (which are Kahler-free). Absent
/// degree vectors mean zero coefficients.
class ZSeries {
public:
    ZSeries() = default;
    ZSeries(const VariableSystem& sys, int truncation) : sys_(sys), trunc_(truncation) {
        if (truncation < 0) throw Error("ZSeries: negative truncation");
    }

    static ZSeries one(const VariableSystem& sys, int truncation) {
        ZSeries s(sys, truncation);
        s.set_coeff(ZDeg(static_cast<std::size_t>(sys.rank() - 1), 0), RatFunc::one(sys));
        return s;
    }

    const VariableSystem& system() const { return sys_; }
    int truncation() const { return trunc_; }
    const std::map<ZDeg, RatFunc>& coeffs() const { return coeffs_; }

    RatFunc coeff(const ZDeg& d) const {
        auto it = coeffs_.find(d);
        return it == coeffs_.end() ? RatFunc::zero(sys_) : it->second;
    }

    void set_coeff(const ZDeg& d, RatFunc value) {
        check_deg(d);
        if (value.is_zero())
            coeffs_.erase(d);
        else
            coeffs_.insert_or_assign(d, std::move(value));
    }

    void add_coeff(const ZDeg& d, const RatFunc& value) {
        check_deg(d);
        if (value.is_zero()) return;
        auto it = coeffs_.find(d);
        if (it == coeffs_.end()) {
            coeffs_.emplace(d, value);
        } else {
            it->second += value;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    ZSeries& operator+=(const ZSeries& o) {
        require_same_system(sys_, o.sys_, "ZSeries::operator+");
        for (const auto& [d, c] : o.coeffs_)
            if (zdeg_total(d) <= trunc_) add_coeff(d, c);
        return *this;
    }
    friend ZSeries operator+(ZSeries a, const ZSeries& b) { return a += b; }

    friend ZSeries operator*(const ZSeries& a, const ZSeries& b) {
        require_same_system(a.sys_, b.sys_, "ZSeries::operator*");
        ZSeries out(a.sys_, std::min(a.trunc_, b.trunc_));
        for (const auto& [da, ca] : a.coeffs_) {
            for (const auto& [db, cb] : b.coeffs_) {
                ZDeg d(da);
                for (std::size_t i = 0; i < d.size(); ++i) d[i] += db[i];
                if (zdeg_total(d) > out.trunc_) continue;
                out.add_coeff(d, ca * cb);
            }
        }
        return out;
    }

    ZSeries& scale(const RatFunc& c) {
        std::map<ZDeg, RatFunc> out;
        for (const auto& [d, v] : coeffs_) {
            RatFunc nv = v * c;
            if (!nv.is_zero()) out.emplace(d, std::move(nv));
        }
        coeffs_ = std::move(out);
        return *this;
    }

    /// Applies a monomial map to every coefficient. The map must not involve
    /// Kahler variables on either end.
    ZSeries substitute_coeffs(const MonomialMap& rules) const {
        ZSeries out(rules.target(), trunc_);
        for (const auto& [d, v] : coeffs_) out.set_coeff(d, v.substitute(rules));
        return out;
    }

    ZSeries truncated(int new_trunc) const {
        ZSeries out(sys_, new_trunc);
        for (const auto& [d, v] : coeffs_)
            if (zdeg_total(d) <= new_trunc) out.coeffs_.emplace(d, v);
        return out;
    }

    bool is_one() const {
        if (coeffs_.size() != 1) return coeffs_.empty();
        const auto& [d, v] = *coeffs_.begin();
        return zdeg_total(d) == 0 && ratfunc_eq(v, RatFunc::one(sys_));
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (const auto& [d, v] : coeffs_) {
            if (!out.empty()) out += " + ";
            std::string zmono;
            for (std::size_t i = 0; i < d.size(); ++i) {
                if (d[i] == 0) continue;
                if (!zmono.empty()) zmono += "*";
                zmono += sys_.var_name(sys_.z_index(static_cast<int>(i) + 1));
                if (d[i] != 1) zmono += "^" + std::to_string(d[i]);
            }
            out += "[" + v.str() + "]";
            if (!zmono.empty()) out += "*" + zmono;
        }
        return out;
    }

private:
    void check_deg(const ZDeg& d) const {
        if (static_cast<int>(d.size()) != sys_.rank() - 1)
            throw Error("ZSeries: degree vector has wrong length");
        for (int x : d)
            if (x < 0) throw Error("ZSeries: negative degree entry");
        if (zdeg_total(d) > trunc_) throw Error("ZSeries: degree beyond truncation");
    }

    VariableSystem sys_;
    int trunc_ = 0;
    std::map<ZDeg, RatFunc> coeffs_;
};

/// Coefficientwise equality of truncated series, via cross-multiplication.
inline bool zseries_eq(const ZSeries& a, const ZSeries& b) {
    require_same_system(a.system(), b.system(), "zseries_eq");
    int d = std::min(a.truncation(), b.truncation());
    for (const ZDeg& deg : degree_vectors(a.system().rank() - 1, d))
        if (!ratfunc_eq(a.coeff(deg), b.coeff(deg))) return false;
    return true;
}

/// First degree vector (graded-lex) where the two series disagree.
inline std::optional<ZDeg> zseries_first_mismatch(const ZSeries& a, const ZSeries& b) {
    require_same_system(a.system(), b.system(), "zseries_first_mismatch");
    int d = std::min(a.truncation(), b.truncation());
    for (const ZDeg& deg : degree_vectors(a.system().rank() - 1, d))
        if (!ratfunc_eq(a.coeff(deg), b.coeff(deg))) return deg;
    return std::nullopt;
}

/// The z-adic expansion of a rational function around z = 0, truncated at
/// total degree D. Requires the denominator to be nonzero at z = 0 and all
/// Kahler exponents to be nonnegative integers.
inline ZSeries series_expand(const RatFunc& f, int D) {
    const VariableSystem& sys = f.system();
    const int nz = sys.rank() - 1;

    // Split a Laurent polynomial by Kahler degree; coefficients are
    // Kahler-free polynomials.
    auto split = [&](const LaurentPoly& p) {
        std::map<ZDeg, LaurentPoly> parts;
        for (const auto& [e, c] : p.terms()) {
            ZDeg d(static_cast<std::size_t>(nz), 0);
            ExpVec rest(e);
            for (int i = 1; i <= nz; ++i) {
                const Frac& x = e[static_cast<std::size_t>(sys.z_index(i))];
                if (!x.is_integer() || x.num < 0)
                    throw Error("series_expand: Kahler exponents must be nonnegative integers");
                d[static_cast<std::size_t>(i - 1)] = static_cast<int>(x.num);
                rest[static_cast<std::size_t>(sys.z_index(i))] = Frac(0);
            }
            auto it = parts.find(d);
            if (it == parts.end()) it = parts.emplace(d, LaurentPoly::zero(sys)).first;
            it->second.add_term(rest, c);
        }
        return parts;
    };

    std::map<ZDeg, LaurentPoly> nparts = split(f.num());
    std::map<ZDeg, LaurentPoly> dparts = split(f.den());

    ZDeg zero_deg(static_cast<std::size_t>(nz), 0);
    auto d0 = dparts.find(zero_deg);
    if (d0 == dparts.end())
        throw DenominatorVanishesAtZero("series_expand: denominator vanishes at z = 0");
    RatFunc d0_inv = RatFunc::from_poly(d0->second).inverse();

    // Inverse series B of the denominator: B_v = -1/D_0 * sum D_w B_{v-w}.
    std::vector<ZDeg> degs = degree_vectors(nz, D);
    std::map<ZDeg, RatFunc> inv;
    for (const ZDeg& v : degs) {
        if (zdeg_total(v) == 0) {
            inv.emplace(v, d0_inv);
            continue;
        }
        RatFunc acc = RatFunc::zero(sys);
        for (const auto& [w, dw] : dparts) {
            if (zdeg_total(w) == 0) continue;
            ZDeg rem(v);
            bool ok = true;
            for (std::size_t i = 0; i < rem.size(); ++i) {
                rem[i] -= w[i];
                if (rem[i] < 0) { ok = false; break; }
            }
            if (!ok) continue;
            auto it = inv.find(rem);
            if (it == inv.end() || it->second.is_zero()) continue;
            acc += RatFunc::from_poly(dw) * it->second;
        }
        inv.emplace(v, -(d0_inv * acc));
    }

    ZSeries out(sys, D);
    for (const ZDeg& v : degs) {
        RatFunc acc = RatFunc::zero(sys);
        for (const auto& [w, nw] : nparts) {
            ZDeg rem(v);
            bool ok = true;
            for (std::size_t i = 0; i < rem.size(); ++i) {
                rem[i] -= w[i];
                if (rem[i] < 0) { ok = false; break; }
            }
            if (!ok) continue;
            acc += RatFunc::from_poly(nw) * inv.at(rem);
        }
        out.set_coeff(v, acc);
    }
    return out;
}

} // namespace flagvertex
