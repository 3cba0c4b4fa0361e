#pragma once

#include <array>
#include <optional>

#include "grtoda/realization.hpp"
#include "grtoda/uelement.hpp"

namespace grtoda {

// ---------- group element and adjoint action ----------

// g(x) = exp(sum x_i H_i) over the commutative generators of the modified
// triangular decomposition; closed form D(I + U + V) with D diagonal and
// U, V the rank-one unipotent parts.
struct GroupElement {
    int m = 0, N = 0;
    std::vector<double> x;

    // dense numeric matrix via the closed form
    std::vector<std::vector<double>> matrix() const;
    // independent numeric route: scaling-and-squaring series exponential
    std::vector<std::vector<double>> matrix_by_series(int scaling = 16) const;
};

GroupElement make_group_element(int m, int N, std::vector<double> x);

// the modified commutative generators H_i as numeric matrices
std::vector<std::vector<std::vector<double>>> h_generator_matrices(int m, int N);

// g^{-1} E_{ij} g (or g E_{ij} g^{-1}) as a UElement with ExpPoly-in-x coefficients
UElement adjoint_action(int i, int j, int m, int N, bool inverse_conj = true);

// max-norm difference between the symbolic adjoint formula evaluated at x
// and the dense numeric conjugation with the series exponential
double adjoint_numeric_residual(int i, int j, int m, int N, const std::vector<double>& x);

// ---------- membership in the modified triangular decomposition ----------

enum class Zone { Minus = 0, H = 1, Plus = 2 };

struct Piece {
    Zone zone;
    int a = 0, b = 0; // generator indices; for Zone::H, a = index of H_a
    auto operator<=>(const Piece&) const = default;
};

// decomposition of E_{ab} into pure pieces of n_- , h, n_+
std::vector<std::pair<GaussRat, Piece>> decompose_generator(int m, int N, int a, int b);

// ---------- matrix-element reduction ----------

struct ReduceOptions {
    // character table branch: the defining equations carry varsigma and the
    // signs as printed; the realized branch is the one the constructed
    // vectors actually satisfy (all extremal values -h)
    bool printed_characters = true;
};

// <X g> = D <g>; h-zone factors act as hbar * d/dx_i, extremal factors by
// the character table (with the pairing flip on the left side)
DiffOperator reduce_matrix_element(const UElement& X, int m, int N,
                                   const ReduceOptions& opts = {});

// ---------- Lax operator ----------

struct LaxMatrix {
    int m = 0, N = 0;
    std::vector<std::vector<DiffOperator>> entry; // N x N
};

LaxMatrix lax_operator(int m, int N, const ReduceOptions& opts = {});
// transcription of the printed operator table. `op` carries the repaired
// index reading used for conformance; where that differs from the verbatim
// text, `verbatim` holds the literal transcription (see docs/conventions.md).
// Entries the table leaves unspecified are flagged.
struct PrintedEntry {
    DiffOperator op;
    std::optional<DiffOperator> verbatim;
    bool specified = false;
    bool zero_required = false;
};
std::vector<std::vector<PrintedEntry>> printed_lax_table(int m, int N);

// term-level conformance: realized coefficient == unit * printed coefficient
// with unit in {+-1, +-vs} * h^z
struct TermRatio {
    std::string skeleton;   // derivative monomial and exp/power key, printed form
    std::string realized;
    std::string printed;
    bool equal = false;
    bool unit = false;      // proportional by {+-1,+-vs} * h^z
    int h_power = 0;
    std::string unit_sign;  // "+1", "-1", "+vs", "-vs" when unit
};

struct EntryConformance {
    int i = 0, j = 0;
    bool specified = false;
    bool zero_required = false;
    bool zero_ok = true;          // zero pattern respected
    bool support_match = false;   // same term skeletons
    bool all_equal = false;
    bool all_unit = false;
    std::vector<TermRatio> ratios;
};

std::vector<EntryConformance> lax_conformance(int m, int N, const ReduceOptions& opts = {});

// generic operator comparison used by the Lax and Hamiltonian reports
EntryConformance compare_operators(const DiffOperator& realized, const DiffOperator& printed);

// ---------- Hamiltonians ----------

struct HamiltonianResult {
    DiffOperator op;          // conjugated by the e^{-x_1 m(N-m)/2} prefactor
    DiffOperator unconjugated;
};

HamiltonianResult hamiltonian(int k, int m, int N, const ReduceOptions& opts = {});
DiffOperator printed_H1(int m, int N);
DiffOperator printed_H2(int m, int N);

struct HamiltonianTrace {
    DiffOperator c_upper;      // diagonal-product part of the quadratic Casimir
    DiffOperator c_mixed;      // sum of E_{ji}E_{ij} reductions
    DiffOperator c_linear;     // rho-weighted diagonal part
    ParamScalar constant;      // the sigma_2(rho) constant
};

HamiltonianTrace hamiltonian_trace(int m, int N, const ReduceOptions& opts = {});

// ---------- specialized Lax matrix, characteristic polynomial, quantum cohomology ----------

using PolyMatrix = std::vector<std::vector<ExpPoly>>;

// the printed specialized table with q = e^{-x_1}; the unlisted diagonal
// entry L_NN is set to p_N
PolyMatrix specialized_lax(int m, int N);

// det(lambda I + L) by exact cofactor expansion
ExpPoly char_poly(const PolyMatrix& L);

// coefficient of lambda^d
ExpPoly lambda_coefficient(const ExpPoly& p, int d);

struct QhPresentation {
    int m = 0, N = 0;
    std::vector<ExpPoly> Y;          // Y_0..Y_N in the sigma generators
    std::vector<ExpPoly> relations;  // Y_{N-m+1}, ..., Y_{N-1}, Y_N - (-1)^{m-1} q
};

QhPresentation qh_presentation(int m, int N);

struct QhComparison {
    bool found = false;
    int e1 = 0, e2 = 0, vs_sign = 0;
    std::string substitution; // human-readable description
};

QhComparison compare_charpoly_qh(int m, int N);

// exact membership of a weighted-homogeneous polynomial in an ideal
// (weights: sigma_k -> k, q -> N), by linear solve over the rationals
bool ideal_member(const ExpPoly& r, const std::vector<ExpPoly>& gens, int m, int N);

} // namespace grtoda
