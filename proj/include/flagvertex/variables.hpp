#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagvertex/errors.hpp"

namespace flagvertex {

/// Which copy of the variety the variables describe. The dual side carries
/// the shrieked variables a!_i, hbar!, z!_i.
enum class Side { primal, dual };

/// Variable roles within a system.
enum class VarRole { equivariant, hbar, q, kahler, aux };

/// The variable system of rank n on one side of the duality. Layout is
/// positional and fixed:
///
///   [0 .. n-2]   a_1 .. a_{n-1}   equivariant coordinates a_i = u_i/u_{i+1}
///   [n-1]        hbar             symplectic weight
///   [n]          q                degeneration parameter (shared by both sides)
///   [n+1 .. 2n-1] z_1 .. z_{n-1}  Kahler parameters
///   [2n]         t                auxiliary variable for formal limits
///
/// u-monomials are admitted only with total u-degree zero and are stored in
/// a-coordinates; see Monomial::from_u_exponents.
class VariableSystem {
public:
    VariableSystem() : side_(Side::primal), n_(1) {}

private:
    Side side_;
    int n_;

    VariableSystem(Side s, int n) : side_(s), n_(n) {
        if (n < 1 || n > 8) throw Error("VariableSystem: rank out of supported range [1,8]");
    }

public:
    static VariableSystem primal(int n) { return VariableSystem(Side::primal, n); }
    static VariableSystem dual(int n) { return VariableSystem(Side::dual, n); }

    Side side() const { return side_; }
    int rank() const { return n_; }
    int var_count() const { return 2 * n_ + 1; }

    int a_index(int i) const {
        check_range(i);
        return i - 1;
    }
    int hbar_index() const { return n_ - 1; }
    int q_index() const { return n_; }
    int z_index(int i) const {
        check_range(i);
        return n_ + i;
    }
    int t_index() const { return 2 * n_; }

    VarRole role(int v) const {
        if (v < 0 || v >= var_count()) throw Error("VariableSystem: variable index out of range");
        if (v < n_ - 1) return VarRole::equivariant;
        if (v == n_ - 1) return VarRole::hbar;
        if (v == n_) return VarRole::q;
        if (v < 2 * n_) return VarRole::kahler;
        return VarRole::aux;
    }

    bool is_kahler(int v) const { return role(v) == VarRole::kahler; }

    std::string var_name(int v) const {
        const char* bang = side_ == Side::dual ? "!" : "";
        switch (role(v)) {
            case VarRole::equivariant: return std::string("a") + bang + std::to_string(v + 1);
            case VarRole::hbar: return std::string("hbar") + bang;
            case VarRole::q: return "q";
            case VarRole::kahler: return std::string("z") + bang + std::to_string(v - n_);
            case VarRole::aux: return "t";
        }
        throw Error("unreachable");
    }

    std::optional<int> var_by_name(const std::string& name) const {
        for (int v = 0; v < var_count(); ++v)
            if (var_name(v) == name) return v;
        return std::nullopt;
    }

    friend bool operator==(const VariableSystem& a, const VariableSystem& b) {
        return a.side_ == b.side_ && a.n_ == b.n_;
    }
    friend bool operator!=(const VariableSystem& a, const VariableSystem& b) { return !(a == b); }

private:
    void check_range(int i) const {
        if (i < 1 || i > n_ - 1) throw Error("VariableSystem: index " + std::to_string(i) + " out of range");
    }
};

inline void require_same_system(const VariableSystem& a, const VariableSystem& b, const char* what) {
    if (a != b) throw MixedSystemsError(std::string(what) + ": operands over different variable systems");
}

} // namespace flagvertex
