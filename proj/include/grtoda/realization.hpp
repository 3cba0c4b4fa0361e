#pragma once

#include <map>

#include "grtoda/diffop.hpp"
#include "grtoda/paths.hpp"

namespace grtoda {

// First-order differential-operator model of gl_N on functions of the
// Gelfand-Zetlin coordinates x_{n,i}, 1 <= i <= n <= N-1 (x_{N,i} = 0).
class GeneratorTable {
public:
    explicit GeneratorTable(int N);

    int N() const { return N_; }
    // E_{ab}; Chevalley entries are transcribed directly, the rest closed
    // under commutators
    const DiffOperator& E(int a, int b) const;

    static DiffOperator chevalley_diag(int N, int i);
    static DiffOperator chevalley_raise(int N, int i);  // E_{i,i+1}
    static DiffOperator chevalley_lower(int N, int i);  // E_{i+1,i}

    // path-sum constructions of the extreme generators (independent route)
    static DiffOperator path_E_n1(int N, int n);
    static DiffOperator path_E_nN(int N, int n);

    // D_{n,j} and D~^mu_{n,j} vertex operators of the path construction
    static DiffOperator D_op(int N, int n, int j);
    static DiffOperator Dt_op(int N, int n, int j);

private:
    int N_;
    mutable std::map<std::pair<int, int>, DiffOperator> table_;
    const DiffOperator& get(int a, int b) const;
};

RelationReport verify_chevalley_relations(int N);

enum class Side { L, R };

struct GammaFactor {
    // hbar^{exp} * Gamma(arg), both affine expressions in nu
    ParamScalar hbar_exponent;
    ParamScalar gamma_argument;
};

struct WhittakerVector {
    Side side;
    int m = 0, N = 0;
    ExpFunction value;                        // normalization constant excluded
    std::vector<GammaFactor> normalization;   // the product C^{L/R}_{m,N}
};

WhittakerVector build_whittaker_vector(Side side, int m, int N);

// generators of the modified nilpotent subalgebras, in the order listed by
// the defining equations
std::vector<std::pair<int, int>> nminus_generators(int m, int N);
std::vector<std::pair<int, int>> nplus_generators(int m, int N);

struct CharacterEntry {
    std::pair<int, int> generator;
    Side side;
    bool scalar_action = false;                 // hard requirement
    ParamScalar realized;                       // scalar, when scalar_action
    ParamScalar printed;                        // value from the defining equations
    bool match = false;                         // realized == printed at vs symbolic
};

struct CharacterTable {
    int m = 0, N = 0;
    std::vector<CharacterEntry> entries;
    bool all_scalar() const {
        for (const auto& e : entries)
            if (!e.scalar_action) return false;
        return true;
    }
    bool zero_pattern_ok() const {
        for (const auto& e : entries)
            if (e.realized.is_zero() != e.printed.is_zero()) return false;
        return true;
    }
};

CharacterTable verify_whittaker(int m, int N);

// character value tables used by the matrix-element reduction
ParamScalar char_minus(int m, int N, int a, int b, bool printed);
ParamScalar char_plus(int m, int N, int a, int b, bool printed);

} // namespace grtoda
