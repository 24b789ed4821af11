// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qcert/dicke.hpp"
#include "qcert/pauli.hpp"

namespace qcert {

/// Parameters of one member of the Dicke-family parent Hamiltonians,
/// together with its certified spectral gap (1 for the whole family) and
/// the identity coefficient C = (n/2 - k)^2 + (2n - 1)/4.
struct HamiltonianSpec {
    int n = 0;
    int k = 0;
    double delta = 1.0;
    double c_const = 0.0;
};

/// What dense diagonalization found for one (n, k). `max_eig_method` records
/// whether max_eig came from the dense solver or from power iteration; the
/// gap is only ever reported from the dense path.
struct SpectrumReport {
    int n = 0;
    int k = 0;
    double ground_energy = 0.0;
    double ground_fidelity = 0.0;
    double gap = 0.0;
    double max_eig = 0.0;
    std::string max_eig_method = "dense";
};

HamiltonianSpec hamiltonian_spec(int n, int k);

/// The parent Hamiltonian in Pauli form:
///   C*I - (n/2 - k) sum_j Z_j - 1/(2n) sum_{j<l} (X_j X_l + Y_j Y_l)
///       + (1/2 - 1/(2n)) sum_{j<l} Z_j Z_l.
/// All coefficients are exact dyadic combinations where it matters: at
/// k = n/2 the single-Z coefficient is exactly zero and those terms drop,
/// leaving 1 + 3*C(n,2) terms instead of 1 + n + 3*C(n,2).
PauliSum build_pauli(int n, int k);

/// The same operator built directly from its definition: the scaled
/// pairwise swap penalty (1/n) sum_{j<l} (1 - S_jl) plus the squared
/// excitation-number penalty (P - k)^2, with P the Hamming-weight operator.
/// Dense, guarded to n <= 12; the independent route for form-equivalence
/// checks.
DenseMatrix build_operator(int n, int k);

/// Dense form of the swap penalty (1/n) sum_{j<l} (1 - S_jl) alone.
DenseMatrix swap_penalty_operator(int n);

/// Dense form of the excitation penalty (P - k)^2 alone (diagonal).
DenseMatrix weight_penalty_operator(int n, int k);

/// Pauli form of the swap penalty: C(n,2)/(2n) * I - 1/(2n) sum (XX+YY+ZZ).
PauliSum swap_penalty_pauli(int n);

/// Pauli form of (P - k)^2.
PauliSum weight_penalty_pauli(int n, int k);

/// Hamming-weight operator P = (n*I - sum_j Z_j)/2 as a PauliSum
/// (n + 1 terms); P|x> = |x|_1 |x>.
PauliSum hamming_weight_operator(int n);

/// Dense diagonalization of build_pauli(n, k), n <= 10. Asserts the
/// spectral certificate — |E0| <= 1e-9, ground fidelity >= 1 - 1e-9 with
/// the Dicke target, gap within 1e-9 of 1 — and throws VerificationError
/// if construction and certificate disagree. This is the trust anchor:
/// a failure here is a bug, not bad data.
SpectrumReport verify_spectrum(int n, int k);

/// Largest eigenvalue by power iteration on the sparse Pauli action, for
/// sizes beyond the dense-solver budget. Relative tolerance on the Rayleigh
/// quotient; results are flagged as approximate by callers.
double max_eig_power(const PauliSum& h, double rel_tol = 1e-6);

} // namespace qcert
