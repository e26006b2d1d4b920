#pragma once

#include <string>
#include <vector>

#include "flagvertex/rational.hpp"
#include "flagvertex/variables.hpp"

namespace flagvertex {

/// Exponent vector over a VariableSystem; entries are exact fractions.
using ExpVec = std::vector<Frac>;

inline bool expvec_is_zero(const ExpVec& e) {
    for (const auto& x : e)
        if (!x.is_zero()) return false;
    return true;
}

/// A coefficient-free monomial over a fixed variable system. Exponents are
/// exact rationals; half-powers represent square roots of monomials.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(const VariableSystem& sys) : sys_(sys), e_(sys.var_count(), Frac(0)) {}
    Monomial(const VariableSystem& sys, ExpVec e) : sys_(sys), e_(std::move(e)) {
        if (static_cast<int>(e_.size()) != sys_.var_count())
            throw Error("Monomial: exponent vector has wrong length");
    }

    static Monomial one(const VariableSystem& sys) { return Monomial(sys); }

    static Monomial var(const VariableSystem& sys, int v, Frac e = Frac(1)) {
        Monomial m(sys);
        m.e_[v] = e;
        return m;
    }

    /// Builds the a-coordinate image of a u-monomial with exponents eu
    /// (length n). Requires total u-degree zero, since the diagonal torus
    /// acts trivially. The a_i exponent is the partial sum eu_1+...+eu_i.
    static Monomial from_u_exponents(const VariableSystem& sys, const std::vector<int>& eu) {
        if (static_cast<int>(eu.size()) != sys.rank())
            throw Error("from_u_exponents: expected one exponent per u variable");
        int total = 0;
        for (int x : eu) total += x;
        if (total != 0) throw Error("from_u_exponents: total u-degree must be zero");
        Monomial m(sys);
        int partial = 0;
        for (int i = 1; i <= sys.rank() - 1; ++i) {
            partial += eu[i - 1];
            m.e_[sys.a_index(i)] = Frac(partial);
        }
        return m;
    }

    const VariableSystem& system() const { return sys_; }
    const ExpVec& exponents() const { return e_; }
    const Frac& exponent(int v) const { return e_[v]; }

    bool is_one() const { return expvec_is_zero(e_); }

    Frac q_exponent() const { return e_[sys_.q_index()]; }

    bool has_kahler_part() const {
        for (int v = 0; v < sys_.var_count(); ++v)
            if (sys_.is_kahler(v) && !e_[v].is_zero()) return true;
        return false;
    }

    Monomial& operator*=(const Monomial& o) {
        require_same_system(sys_, o.sys_, "Monomial::operator*");
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

    Monomial pow(const Frac& k) const {
        Monomial r(*this);
        for (auto& x : r.e_) x *= k;
        return r;
    }
    Monomial inverse() const { return pow(Frac(-1)); }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.sys_ == b.sys_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    std::string str() const {
        std::string out;
        for (int v = 0; v < sys_.var_count(); ++v) {
            if (e_[v].is_zero()) continue;
            if (!out.empty()) out += "*";
            out += sys_.var_name(v);
            if (e_[v] != Frac(1)) out += "^(" + e_[v].str() + ")";
        }
        return out.empty() ? "1" : out;
    }

private:
    VariableSystem sys_;
    ExpVec e_;
};

} // namespace flagvertex
