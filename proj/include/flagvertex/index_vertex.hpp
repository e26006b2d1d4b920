#pragma once

#include <map>
#include <vector>

#include "flagvertex/vertex.hpp"

namespace flagvertex {

/// A torus-fixed quasimap into the dual variety: a base fixed point together
/// with the (negated, hence nonnegative) degrees of its tautological
/// bundles. Column j of row i carries weight u_{Ij} and bundle
/// u_{Ij} q^{-t_{i,j}} O(-t_{i,j}); fixedness forces columnwise dominance.
struct FixedQuasimap {
    FixedPoint base;
    DegreeTableau degrees;

    FixedQuasimap(FixedPoint p, DegreeTableau t) : base(std::move(p)), degrees(std::move(t)) {
        if (base.n() != degrees.n) throw Error("FixedQuasimap: rank mismatch");
        if (!tableau_identity_dominated(degrees))
            throw Error("FixedQuasimap: degrees are not columnwise dominated");
        if (!tableau_in_C(degrees)) throw Error("FixedQuasimap: degrees outside the cone");
    }
};

inline LineBundleSum polarization_bundle(const VariableSystem& sys, const FixedQuasimap& f) {
    return polarization_bundle(sys, f.base, f.degrees);
}

inline CharacterSum reduced_polarization(const VariableSystem& sys, const FixedQuasimap& f) {
    return reduced_polarization(sys, f.base, f.degrees);
}

inline CharacterSum reduced_tvir(const VariableSystem& sys, const FixedQuasimap& f) {
    return reduced_tvir(sys, f.base, f.degrees);
}

/// The s-index: the signed count of monomials of the reduced polarization
/// whose total q-exponent is strictly negative after substituting
/// a_i = q^{s_i}. A vanishing exponent means the slope is resonant for this
/// degree and raises ZeroExponentError.
inline int s_index(const VariableSystem& sys, const FixedQuasimap& f, const Slope& s) {
    if (s.size() != sys.rank() - 1) throw Error("s_index: slope has wrong length");
    int count = 0;
    CharacterSum reduced = reduced_polarization(sys, f);
    for (const auto& [e, mult] : reduced.weights()) {
        Frac exponent = e[static_cast<std::size_t>(sys.q_index())];
        for (int i = 1; i <= sys.rank() - 1; ++i)
            exponent += s[i - 1] * e[static_cast<std::size_t>(sys.a_index(i))];
        if (exponent.is_zero())
            throw ZeroExponentError("s_index: weight " + Monomial(sys, e).str() +
                                    " has zero exponent at slope " + s.str());
        if (exponent < Frac(0)) count += mult;
    }
    return count;
}

/// Index vertex by direct enumeration of fixed quasimaps:
///   sum over degrees of  z^{deg} (hbar/q)^{s-index}.
inline ZSeries index_vertex_enum(const FixedPoint& p_dual, const Slope& s, int D) {
    VariableSystem sys = VariableSystem::dual(p_dual.n());
    Monomial hq = Monomial::var(sys, sys.hbar_index()) * Monomial::var(sys, sys.q_index(), Frac(-1));
    ZSeries out(sys, D);
    for (const DegreeTableau& t : enumerate_quasimap_tableaux(sys.rank(), D)) {
        FixedQuasimap f(p_dual, t);
        int idx = s_index(sys, f, s);
        out.add_coeff(t.z_degree(), RatFunc::from_monomial(hq.pow(Frac(idx))));
    }
    return out;
}

/// Index vertex as the index limit of the vertex series, computed summand by
/// summand on the factored series. Total in s: defined on walls as well.
inline ZSeries index_vertex_limit(const FixedPoint& p_dual, const Slope& s, int D) {
    VariableSystem sys = VariableSystem::dual(p_dual.n());
    return index_limit(vertex_series_factored(sys, p_dual, D), s);
}

/// Closed forms of the rank-2 index vertices, one branch per floor of the
/// slope. point = 1 labels the identity fixed point, point = 2 the
/// transposition; s must be non-integral.
inline RatFunc closed_form_n2(int point, const Slope& s) {
    if (s.size() != 1) throw Error("closed_form_n2: rank-2 slope expected");
    Frac slope = s[0];
    if (slope.is_integer()) throw Error("closed_form_n2: integral slope sits on a branch boundary");
    VariableSystem sys = VariableSystem::dual(2);
    RatFunc z = RatFunc::from_monomial(Monomial::var(sys, sys.z_index(1)));
    RatFunc hq = RatFunc::from_monomial(Monomial::var(sys, sys.hbar_index()) *
                                        Monomial::var(sys, sys.q_index(), Frac(-1)));
    RatFunc one = RatFunc::one(sys);
    auto geometric = [&](std::int64_t floor_val) {
        // (1 - (z hbar/q)^{floor+1})/(1 - z hbar/q) + (hbar/q)^{floor} z^{floor+1}/(1 - z)
        RatFunc zhq = z * hq;
        RatFunc head = (one - zhq.pow(floor_val + 1)) / (one - zhq);
        RatFunc tail = hq.pow(floor_val) * z.pow(floor_val + 1) / (one - z);
        return head + tail;
    };
    if (point == 1) {
        if (slope < Frac(1)) return one / (one - z);
        return geometric(slope.floor());
    }
    if (point == 2) {
        if (slope > Frac(-1)) return one / (one - z);
        return geometric((-slope).floor());
    }
    throw Error("closed_form_n2: point must be 1 or 2");
}

/// Tests whether the coefficient sequence of F along one Kahler variable
/// (all other Kahler degrees zero), after exact numeric specialization of
/// the remaining variables, satisfies some linear recurrence with constant
/// coefficients of the given order. A necessary condition for rationality
/// in that variable.
inline bool recurrence_check(const ZSeries& F, int var, int order,
                             const std::map<int, Rational>& numeric_spec) {
    const VariableSystem& sys = F.system();
    if (var < 1 || var > sys.rank() - 1) throw Error("recurrence_check: variable index out of range");
    if (order < 1) throw Error("recurrence_check: order must be positive");
    const int count = F.truncation() + 1;
    if (count < 2 * order + 2)
        throw InsufficientTruncation("recurrence_check: need at least " + std::to_string(2 * order + 2) +
                                     " coefficients, have " + std::to_string(count));

    std::vector<Rational> point(static_cast<std::size_t>(sys.var_count()), Rational(1));
    for (const auto& [v, val] : numeric_spec) point[static_cast<std::size_t>(v)] = val;

    std::vector<Rational> c;
    for (int k = 0; k < count; ++k) {
        ZDeg d(static_cast<std::size_t>(sys.rank() - 1), 0);
        d[static_cast<std::size_t>(var - 1)] = k;
        RatFunc coeff = F.coeff(d);
        // Every variable actually present must be pinned by the
        // specialization (Kahler variables never appear in coefficients).
        for (int v = 0; v < sys.var_count(); ++v) {
            if (numeric_spec.count(v) || sys.is_kahler(v)) continue;
            for (const auto& [e, cc] : coeff.num().terms()) {
                (void)cc;
                if (!e[static_cast<std::size_t>(v)].is_zero())
                    throw Error("recurrence_check: variable " + sys.var_name(v) + " not specialized");
            }
            for (const auto& [e, cc] : coeff.den().terms()) {
                (void)cc;
                if (!e[static_cast<std::size_t>(v)].is_zero())
                    throw Error("recurrence_check: variable " + sys.var_name(v) + " not specialized");
            }
        }
        c.push_back(coeff.evaluate(point));
    }

    // Solve c_{k+order} = sum_i lambda_i c_{k+order-i} by exact elimination
    // over all available rows; true iff the system is consistent.
    const int rows_n = count - order;
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(rows_n));
    for (int k = 0; k < rows_n; ++k) {
        auto& row = m[static_cast<std::size_t>(k)];
        row.resize(static_cast<std::size_t>(order) + 1);
        for (int i = 1; i <= order; ++i) row[static_cast<std::size_t>(i - 1)] = c[static_cast<std::size_t>(k + order - i)];
        row[static_cast<std::size_t>(order)] = c[static_cast<std::size_t>(k + order)];
    }
    int pivot_row = 0;
    for (int col = 0; col < order && pivot_row < rows_n; ++col) {
        int sel = -1;
        for (int r = pivot_row; r < rows_n; ++r)
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) { sel = r; break; }
        if (sel == -1) continue;
        std::swap(m[static_cast<std::size_t>(sel)], m[static_cast<std::size_t>(pivot_row)]);
        const auto& prow = m[static_cast<std::size_t>(pivot_row)];
        for (int r = 0; r < rows_n; ++r) {
            if (r == pivot_row || m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] == 0) continue;
            Rational factor = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / prow[static_cast<std::size_t>(col)];
            for (int cc = col; cc <= order; ++cc)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -= factor * prow[static_cast<std::size_t>(cc)];
        }
        ++pivot_row;
    }
    for (int r = 0; r < rows_n; ++r) {
        bool all_zero = true;
        for (int cc = 0; cc < order; ++cc)
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] != 0) { all_zero = false; break; }
        if (all_zero && m[static_cast<std::size_t>(r)][static_cast<std::size_t>(order)] != 0) return false;
    }
    return true;
}

} // namespace flagvertex
