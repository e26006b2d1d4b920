#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagvertex/monomial.hpp"

namespace flagvertex {

/// Monomial substitution between variable systems. Each source variable maps
/// to coeff * image where image is a monomial over the target system; the
/// image must be nonzero (coeff != 0). Variables without an explicit rule map
/// identically by name (q stays q, t stays t).
class MonomialMap {
public:
    MonomialMap(VariableSystem src, VariableSystem dst) : src_(src), dst_(dst) {
        rules_.resize(src_.var_count());
        for (int v = 0; v < src_.var_count(); ++v) {
            if (auto w = dst_.var_by_name(src_.var_name(v)))
                rules_[v] = Rule{Rational(1), Monomial::var(dst_, *w)};
        }
    }

    const VariableSystem& source() const { return src_; }
    const VariableSystem& target() const { return dst_; }

    MonomialMap& set(int src_var, Monomial image, Rational coeff = Rational(1)) {
        require_same_system(image.system(), dst_, "MonomialMap::set");
        if (coeff == 0) throw Error("MonomialMap: variable image must be nonzero");
        rules_[static_cast<std::size_t>(src_var)] = Rule{std::move(coeff), std::move(image)};
        return *this;
    }

    /// Image of a monomial: scalar coefficient together with a target monomial.
    std::pair<Rational, Monomial> apply(const Monomial& m) const {
        require_same_system(m.system(), src_, "MonomialMap::apply");
        Rational coeff(1);
        Monomial out(dst_);
        for (int v = 0; v < src_.var_count(); ++v) {
            const Frac& e = m.exponent(v);
            if (e.is_zero()) continue;
            const auto& rule = rules_[static_cast<std::size_t>(v)];
            if (!rule)
                throw Error("MonomialMap: no rule for variable " + src_.var_name(v));
            if (rule->coeff != 1) {
                if (!e.is_integer())
                    throw Error("MonomialMap: fractional power of a non-monomial image of " + src_.var_name(v));
                coeff *= rational_pow(rule->coeff, e.num);
            }
            out *= rule->image.pow(e);
        }
        return {std::move(coeff), std::move(out)};
    }

private:
    struct Rule {
        Rational coeff;
        Monomial image;
    };
    VariableSystem src_, dst_;
    std::vector<std::optional<Rule>> rules_;
};

/// Sparse Laurent polynomial with exact rational coefficients and exact
/// rational exponents. Terms are kept in lexicographic order of the exponent
/// vector; no zero coefficients are stored.
class LaurentPoly {
public:
    using TermMap = std::map<ExpVec, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(const VariableSystem& sys) : sys_(sys) {}

    static LaurentPoly zero(const VariableSystem& sys) { return LaurentPoly(sys); }

    static LaurentPoly constant(const VariableSystem& sys, Rational c) {
        LaurentPoly p(sys);
        if (c != 0) p.terms_.emplace(ExpVec(sys.var_count(), Frac(0)), std::move(c));
        return p;
    }

    static LaurentPoly one(const VariableSystem& sys) { return constant(sys, Rational(1)); }

    static LaurentPoly from_monomial(const Monomial& m, Rational c = Rational(1)) {
        LaurentPoly p(m.system());
        if (c != 0) p.terms_.emplace(m.exponents(), std::move(c));
        return p;
    }

    /// 1 - m, the basic building block of Pochhammer factors.
    static LaurentPoly one_minus(const Monomial& m) {
        LaurentPoly p = one(m.system());
        p.add_term(m.exponents(), Rational(-1));
        return p;
    }

    const VariableSystem& system() const { return sys_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && expvec_is_zero(terms_.begin()->first));
    }

    /// The unique term if the polynomial is a monomial, otherwise nullopt.
    std::optional<std::pair<Monomial, Rational>> as_monomial() const {
        if (terms_.size() != 1) return std::nullopt;
        return std::make_pair(Monomial(sys_, terms_.begin()->first), terms_.begin()->second);
    }

    void add_term(const ExpVec& e, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        require_same_system(sys_, o.sys_, "LaurentPoly::operator+");
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        require_same_system(sys_, o.sys_, "LaurentPoly::operator-");
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r(a.sys_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        require_same_system(a.sys_, b.sys_, "LaurentPoly::operator*");
        LaurentPoly r(a.sys_);
        ExpVec e(a.sys_.var_count());
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly& scale(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, coeff] : terms_) coeff *= c;
        return *this;
    }

    LaurentPoly& mul_monomial(const Monomial& m, const Rational& c = Rational(1)) {
        require_same_system(sys_, m.system(), "LaurentPoly::mul_monomial");
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        TermMap out;
        for (const auto& [e, coeff] : terms_) {
            ExpVec ne(e);
            for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += m.exponent(i);
            out.emplace(std::move(ne), coeff * c);
        }
        terms_ = std::move(out);
        return *this;
    }

    /// Per-variable minimum exponent over all terms (the monomial content).
    /// Zero polynomial has empty content.
    ExpVec min_exponents() const {
        ExpVec mins(sys_.var_count(), Frac(0));
        bool first = true;
        for (const auto& [e, c] : terms_) {
            (void)c;
            if (first) {
                mins = e;
                first = false;
            } else {
                for (std::size_t i = 0; i < mins.size(); ++i)
                    if (e[i] < mins[i]) mins[i] = e[i];
            }
        }
        return mins;
    }

    /// Divides by the monomial with the given exponents.
    LaurentPoly& shift_exponents(const ExpVec& by) {
        TermMap out;
        for (const auto& [e, c] : terms_) {
            ExpVec ne(e);
            for (std::size_t i = 0; i < ne.size(); ++i) ne[i] -= by[i];
            out.emplace(std::move(ne), c);
        }
        terms_ = std::move(out);
        return *this;
    }

    /// Substitution along a monomial map; exact, lands in the target system.
    LaurentPoly substitute(const MonomialMap& rules) const {
        require_same_system(sys_, rules.source(), "LaurentPoly::substitute");
        LaurentPoly out(rules.target());
        for (const auto& [e, c] : terms_) {
            auto [coeff, image] = rules.apply(Monomial(sys_, e));
            out.add_term(image.exponents(), c * coeff);
        }
        return out;
    }

    /// Minimum q-exponent over all terms; nullopt for the zero polynomial.
    std::optional<Frac> min_q_exponent() const {
        std::optional<Frac> m;
        int qi = sys_.q_index();
        for (const auto& [e, c] : terms_) {
            (void)c;
            if (!m || e[qi] < *m) m = e[qi];
        }
        return m;
    }

    /// The sum of terms whose q-exponent equals alpha, with q removed.
    LaurentPoly q_coefficient(const Frac& alpha) const {
        LaurentPoly out(sys_);
        int qi = sys_.q_index();
        for (const auto& [e, c] : terms_) {
            if (e[qi] == alpha) {
                ExpVec ne(e);
                ne[qi] = Frac(0);
                out.terms_.emplace(std::move(ne), c);
            }
        }
        return out;
    }

    /// Exact evaluation at a rational point (one value per variable).
    /// Every exponent of an evaluated variable must be an integer.
    Rational evaluate(const std::vector<Rational>& point) const {
        if (static_cast<int>(point.size()) != sys_.var_count())
            throw Error("LaurentPoly::evaluate: wrong point dimension");
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational term = c;
            for (std::size_t v = 0; v < e.size(); ++v) {
                if (e[v].is_zero()) continue;
                if (!e[v].is_integer())
                    throw Error("LaurentPoly::evaluate: fractional exponent of " + sys_.var_name(static_cast<int>(v)));
                term *= rational_pow(point[v], e[v].num);
            }
            acc += term;
        }
        return acc;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.sys_ == b.sys_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            std::string mono = Monomial(sys_, e).str();
            std::string cs = rational_to_string(c);
            if (!out.empty()) out += " + ";
            if (mono == "1")
                out += cs;
            else if (c == 1)
                out += mono;
            else if (c == -1)
                out += "-" + mono;
            else
                out += cs + "*" + mono;
        }
        return out;
    }

private:
    VariableSystem sys_;
    TermMap terms_;
};

} // namespace flagvertex
