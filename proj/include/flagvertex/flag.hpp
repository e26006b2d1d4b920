#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "flagvertex/charsum.hpp"

namespace flagvertex {

/// A torus fixed point of the cotangent bundle of the full flag variety,
/// i.e. a permutation of {1..n} in one-line notation (1-based entries).
class FixedPoint {
public:
    FixedPoint() = default;
    explicit FixedPoint(std::vector<int> perm) : perm_(std::move(perm)) {
        std::vector<bool> seen(perm_.size() + 1, false);
        for (int x : perm_) {
            if (x < 1 || x > static_cast<int>(perm_.size()) || seen[static_cast<std::size_t>(x)])
                throw Error("FixedPoint: not a permutation");
            seen[static_cast<std::size_t>(x)] = true;
        }
    }

    static FixedPoint identity(int n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 1);
        return FixedPoint(std::move(p));
    }

    int n() const { return static_cast<int>(perm_.size()); }
    int operator[](int pos) const { return perm_[static_cast<std::size_t>(pos - 1)]; } // 1-based
    const std::vector<int>& one_line() const { return perm_; }

    FixedPoint inverse() const {
        std::vector<int> inv(perm_.size());
        for (int pos = 1; pos <= n(); ++pos) inv[static_cast<std::size_t>(perm_[static_cast<std::size_t>(pos - 1)] - 1)] = pos;
        return FixedPoint(std::move(inv));
    }

    friend bool operator==(const FixedPoint& a, const FixedPoint& b) { return a.perm_ == b.perm_; }
    friend bool operator!=(const FixedPoint& a, const FixedPoint& b) { return !(a == b); }
    friend bool operator<(const FixedPoint& a, const FixedPoint& b) { return a.perm_ < b.perm_; }

    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < perm_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(perm_[i]);
        }
        return out + ")";
    }

private:
    std::vector<int> perm_;
};

/// Ordered index rows of a permutation: row k lists {I_1,...,I_k} sorted
/// increasingly.
class OrderedIndexTable {
public:
    explicit OrderedIndexTable(const FixedPoint& I) {
        std::vector<int> cur;
        for (int k = 1; k <= I.n() - 1; ++k) {
            cur.push_back(I[k]);
            std::sort(cur.begin(), cur.end());
            rows_.push_back(cur);
        }
    }

    const std::vector<int>& row(int k) const { return rows_[static_cast<std::size_t>(k - 1)]; }
    int row_count() const { return static_cast<int>(rows_.size()); }

private:
    std::vector<std::vector<int>> rows_;
};

/// The attraction order: I < J iff every ordered index of I is strictly
/// below the corresponding ordered index of J, at every level.
inline bool precedes(const FixedPoint& I, const FixedPoint& J) {
    if (I.n() != J.n()) throw Error("precedes: ranks differ");
    OrderedIndexTable ti(I), tj(J);
    for (int k = 1; k <= I.n() - 1; ++k) {
        const auto& ri = ti.row(k);
        const auto& rj = tj.row(k);
        for (std::size_t m = 0; m < ri.size(); ++m)
            if (!(ri[m] < rj[m])) return false;
    }
    return I.n() > 1;
}

/// A fixed, documented linear extension of the attraction order. Points are
/// sorted by the total sum of all ordered indices with lexicographic
/// tie-break on one-line notation; the sum strictly increases along the
/// order, so this is a linear extension. Minimal elements come first: the
/// identity permutation leads, and restriction matrices are upper triangular
/// in this basis.
inline std::vector<FixedPoint> total_order(int n) {
    if (n < 1 || n > 8) throw Error("total_order: rank out of supported range [1,8]");
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<FixedPoint> all;
    do {
        all.emplace_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto index_sum = [](const FixedPoint& I) {
        OrderedIndexTable t(I);
        long s = 0;
        for (int k = 1; k <= t.row_count(); ++k)
            for (int x : t.row(k)) s += x;
        return s;
    };
    std::stable_sort(all.begin(), all.end(), [&](const FixedPoint& a, const FixedPoint& b) {
        long sa = index_sum(a), sb = index_sum(b);
        if (sa != sb) return sa < sb;
        return a.one_line() < b.one_line();
    });
    return all;
}

/// All n! fixed points, sorted by total_order.
inline std::vector<FixedPoint> enumerate_fixed_points(int n) { return total_order(n); }

/// Weight u_{Ij}/u_{Ik} in a-coordinates.
inline Monomial u_ratio(const VariableSystem& sys, int num_u, int den_u) {
    std::vector<int> eu(static_cast<std::size_t>(sys.rank()), 0);
    eu[static_cast<std::size_t>(num_u - 1)] += 1;
    eu[static_cast<std::size_t>(den_u - 1)] -= 1;
    return Monomial::from_u_exponents(sys, eu);
}

/// Tangent character at a fixed point:
///   T_I = sum_{j<k} u_{Ik}/u_{Ij} + hbar^{-1} sum_{j<k} u_{Ij}/u_{Ik}.
inline CharacterSum tangent_character(const VariableSystem& sys, const FixedPoint& I) {
    if (sys.rank() != I.n()) throw Error("tangent_character: rank mismatch");
    CharacterSum out(sys);
    Monomial hbar_inv = Monomial::var(sys, sys.hbar_index(), Frac(-1));
    for (int j = 1; j <= I.n(); ++j)
        for (int k = j + 1; k <= I.n(); ++k) {
            out.add(u_ratio(sys, I[k], I[j]));
            out.add(hbar_inv * u_ratio(sys, I[j], I[k]));
        }
    return out;
}

/// Polarization character T^{1/2}_I = sum_{j<k} u_{Ik}/u_{Ij}; satisfies
/// T_I = T^{1/2}_I + hbar^{-1} (T^{1/2}_I)^dual.
inline CharacterSum polarization_character(const VariableSystem& sys, const FixedPoint& I) {
    if (sys.rank() != I.n()) throw Error("polarization_character: rank mismatch");
    CharacterSum out(sys);
    for (int j = 1; j <= I.n(); ++j)
        for (int k = j + 1; k <= I.n(); ++k) out.add(u_ratio(sys, I[k], I[j]));
    return out;
}

/// The one supported chamber: the cocharacter u -> (u^{-1},...,u^{-n}).
/// Its pairing with a weight equals the sum of the weight's a-exponents,
/// so attracting weights are exactly those with positive total a-degree.
struct Chamber {
    static Frac pairing(const Monomial& w) {
        const VariableSystem& sys = w.system();
        Frac acc(0);
        for (int i = 1; i <= sys.rank() - 1; ++i) acc += w.exponent(sys.a_index(i));
        return acc;
    }

    /// Nonzero pairing with every tangent weight of every fixed point.
    static bool valid_for(const VariableSystem& sys) {
        for (const FixedPoint& I : enumerate_fixed_points(sys.rank())) {
            CharacterSum tangent = tangent_character(sys, I);
            for (const auto& [e, m] : tangent.weights()) {
                (void)m;
                if (pairing(Monomial(sys, e)).is_zero()) return false;
            }
        }
        return true;
    }
};

/// Attracting/repelling split of the tangent space with respect to the fixed
/// chamber:
///   N^+_I = sum_{j<k, Ik<Ij} u_{Ik}/u_{Ij} + hbar^{-1} sum_{j<k, Ik>Ij} u_{Ij}/u_{Ik}
///   N^-_I = sum_{j<k, Ik>Ij} u_{Ik}/u_{Ij} + hbar^{-1} sum_{j<k, Ik<Ij} u_{Ij}/u_{Ik}
inline std::pair<CharacterSum, CharacterSum> attracting_split(const VariableSystem& sys,
                                                              const FixedPoint& I) {
    if (sys.rank() != I.n()) throw Error("attracting_split: rank mismatch");
    CharacterSum nplus(sys), nminus(sys);
    Monomial hbar_inv = Monomial::var(sys, sys.hbar_index(), Frac(-1));
    for (int j = 1; j <= I.n(); ++j)
        for (int k = j + 1; k <= I.n(); ++k) {
            if (I[k] < I[j]) {
                nplus.add(u_ratio(sys, I[k], I[j]));
                nminus.add(hbar_inv * u_ratio(sys, I[j], I[k]));
            } else {
                nminus.add(u_ratio(sys, I[k], I[j]));
                nplus.add(hbar_inv * u_ratio(sys, I[j], I[k]));
            }
        }
    return {std::move(nplus), std::move(nminus)};
}

/// A weight of the full torus (u_1,...,u_n), not descended to the quotient:
/// used for tautological line bundles, whose u-degree is nonzero.
struct UMonomial {
    std::vector<int> exponents; // one per u_i

    friend bool operator==(const UMonomial& a, const UMonomial& b) {
        return a.exponents == b.exponents;
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (exponents[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += "u" + std::to_string(i + 1);
            if (exponents[i] != 1) out += "^" + std::to_string(exponents[i]);
        }
        return out.empty() ? "1" : out;
    }
};

/// Restriction of the i-th tautological determinant line to a fixed point:
/// prod_{j<=i} u_{Ij}.
inline UMonomial line_bundle_restriction(int i, const FixedPoint& I) {
    if (i < 1 || i > I.n() - 1) throw Error("line_bundle_restriction: index out of range");
    UMonomial out{std::vector<int>(static_cast<std::size_t>(I.n()), 0)};
    for (int j = 1; j <= i; ++j) out.exponents[static_cast<std::size_t>(I[j] - 1)] += 1;
    return out;
}

} // namespace flagvertex
