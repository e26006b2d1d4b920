#pragma once

#include <functional>
#include <string>
#include <vector>

#include "flagvertex/errors.hpp"
#include "flagvertex/zseries.hpp"

namespace flagvertex {

/// Nonnegative integer tableau {d_{i,j}}, row i of length i for
/// i = 1..n-1. Encodes a vertex summand / the (negated) degrees of the
/// tautological bundles of a fixed quasimap.
struct DegreeTableau {
    int n = 0;
    std::vector<std::vector<int>> rows; // rows[i-1] has length i

    DegreeTableau() = default;
    DegreeTableau(int rank, std::vector<std::vector<int>> r) : n(rank), rows(std::move(r)) {
        if (static_cast<int>(rows.size()) != n - 1) throw Error("DegreeTableau: wrong row count");
        for (int i = 1; i <= n - 1; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size()) != i)
                throw Error("DegreeTableau: row " + std::to_string(i) + " has wrong length");
            for (int x : rows[static_cast<std::size_t>(i - 1)])
                if (x < 0) throw Error("DegreeTableau: negative entry");
        }
    }

    static DegreeTableau zero(int rank) {
        std::vector<std::vector<int>> r;
        for (int i = 1; i <= rank - 1; ++i) r.emplace_back(static_cast<std::size_t>(i), 0);
        return DegreeTableau(rank, std::move(r));
    }

    int entry(int i, int j) const { return rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }

    int total_degree() const {
        int t = 0;
        for (const auto& r : rows)
            for (int x : r) t += x;
        return t;
    }

    /// Kahler degree vector: component i is the row-i sum.
    ZDeg z_degree() const {
        ZDeg d;
        for (const auto& r : rows) {
            int s = 0;
            for (int x : r) s += x;
            d.push_back(s);
        }
        return d;
    }

    friend bool operator==(const DegreeTableau& a, const DegreeTableau& b) {
        return a.n == b.n && a.rows == b.rows;
    }

    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) out += "; ";
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                if (j) out += ",";
                out += std::to_string(rows[i][j]);
            }
        }
        return out + "]";
    }
};

/// Cone membership: for every consecutive row pair there must be distinct
/// columns j_1..j_i of row i+1 with d_{i,k} >= d_{i+1,j_k}. Decided by
/// bipartite maximum matching (augmenting paths over the dominance graph).
inline bool tableau_in_C(const DegreeTableau& t) {
    for (int i = 1; i <= t.n - 2; ++i) {
        const auto& a = t.rows[static_cast<std::size_t>(i - 1)];
        const auto& b = t.rows[static_cast<std::size_t>(i)];
        const int left = static_cast<int>(a.size());
        const int right = static_cast<int>(b.size());
        std::vector<int> match_right(static_cast<std::size_t>(right), -1);
        std::function<bool(int, std::vector<bool>&)> augment = [&](int k, std::vector<bool>& seen) {
            for (int j = 0; j < right; ++j) {
                if (seen[static_cast<std::size_t>(j)] || a[static_cast<std::size_t>(k)] < b[static_cast<std::size_t>(j)])
                    continue;
                seen[static_cast<std::size_t>(j)] = true;
                int owner = match_right[static_cast<std::size_t>(j)];
                if (owner == -1 || augment(owner, seen)) {
                    match_right[static_cast<std::size_t>(j)] = k;
                    return true;
                }
            }
            return false;
        };
        for (int k = 0; k < left; ++k) {
            std::vector<bool> seen(static_cast<std::size_t>(right), false);
            if (!augment(k, seen)) return false;
        }
    }
    return true;
}

/// Exhaustive-injection oracle for tableau_in_C, kept as an independent
/// check: tries every choice of distinct columns directly.
inline bool tableau_in_C_bruteforce(const DegreeTableau& t) {
    for (int i = 1; i <= t.n - 2; ++i) {
        const auto& a = t.rows[static_cast<std::size_t>(i - 1)];
        const auto& b = t.rows[static_cast<std::size_t>(i)];
        const int left = static_cast<int>(a.size());
        const int right = static_cast<int>(b.size());
        std::vector<int> pick;
        std::vector<bool> used(static_cast<std::size_t>(right), false);
        std::function<bool(int)> rec = [&](int k) {
            if (k == left) return true;
            for (int j = 0; j < right; ++j) {
                if (used[static_cast<std::size_t>(j)]) continue;
                if (a[static_cast<std::size_t>(k)] < b[static_cast<std::size_t>(j)]) continue;
                used[static_cast<std::size_t>(j)] = true;
                if (rec(k + 1)) return true;
                used[static_cast<std::size_t>(j)] = false;
            }
            return false;
        };
        if (!rec(0)) return false;
    }
    return true;
}

/// Columnwise dominance d_{i,j} >= d_{i+1,j}: the tableaux of torus-fixed
/// quasimaps, where column j of every row carries the same torus weight.
inline bool tableau_identity_dominated(const DegreeTableau& t) {
    for (int i = 1; i <= t.n - 2; ++i)
        for (int j = 1; j <= i; ++j)
            if (t.entry(i, j) < t.entry(i + 1, j)) return false;
    return true;
}

/// All nonnegative tableaux of rank n with total degree <= D, in
/// lexicographic order of the flattened entry list, filtered by `keep`.
inline std::vector<DegreeTableau> enumerate_tableaux_filtered(
    int n, int D, const std::function<bool(const DegreeTableau&)>& keep) {
    if (D < 0) throw Error("enumerate_tableaux: negative degree bound");
    std::vector<DegreeTableau> out;
    DegreeTableau t = DegreeTableau::zero(n);
    int positions = n * (n - 1) / 2;
    std::function<void(int, int)> rec = [&](int pos, int budget) {
        if (pos == positions) {
            if (keep(t)) out.push_back(t);
            return;
        }
        // map flat position to (row, col)
        int i = 1, p = pos;
        while (p >= i) {
            p -= i;
            ++i;
        }
        for (int v = 0; v <= budget; ++v) {
            t.rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(p)] = v;
            rec(pos + 1, budget - v);
        }
        t.rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(p)] = 0;
    };
    rec(0, D);
    return out;
}

/// The elements of the cone C with total degree <= D.
inline std::vector<DegreeTableau> enumerate_tableaux(int n, int D) {
    return enumerate_tableaux_filtered(n, D, tableau_in_C);
}

/// The degree tableaux of torus-fixed quasimaps with total degree <= D.
inline std::vector<DegreeTableau> enumerate_quasimap_tableaux(int n, int D) {
    return enumerate_tableaux_filtered(n, D, tableau_identity_dominated);
}

} // namespace flagvertex
