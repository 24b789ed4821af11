// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qcert/types.hpp"

#include <cstdint>
#include <map>

namespace qcert {

/// Target state selector: the n-qubit Dicke state with k excitations
/// (the equal superposition of all weight-k basis states). k = 1 is the
/// W state.
struct DickeSpec {
    int n = 0;
    int k = 0;

    void validate() const {
        if (n < 1) {
            throw InputError("qubit count must be >= 1, got " +
                             std::to_string(n));
        }
        if (k < 0 || k > n) {
            throw InputError("excitation number " + std::to_string(k) +
                             " outside [0, " + std::to_string(n) + "]");
        }
    }
};

/// Squared Schmidt coefficients of a Dicke state across an a : (n-a) cut,
/// keyed by the number of excitations beta held by the a-qubit side. By
/// permutation symmetry only the cut size matters, not which qubits.
struct BipartitionSpectrum {
    int a = 0;
    std::map<int, double> lambdas;
};

/// Biseparable-fidelity threshold. `vacuous` marks the k = 0 and k = n
/// sectors, where the target is a product state and the witness certifies
/// nothing.
struct Alpha {
    double value = 1.0;
    bool vacuous = false;
};

/// Exact binomial coefficient in 64-bit integer arithmetic (safe to n = 60).
std::uint64_t binomial(int n, int k);

/// The Dicke statevector: amplitude C(n,k)^(-1/2) on every weight-k basis
/// index, zero elsewhere.
StateVector dicke_state(DickeSpec spec);

/// |<D|psi>|^2 against the Dicke target.
double fidelity_pure(const StateVector& psi, DickeSpec target);

/// Squared Schmidt coefficient lambda_{a:n-a}(beta) =
/// C(a,beta) C(n-a,k-beta) / C(n,k), evaluated from exact integer binomials
/// with a single final division. Out-of-range beta gives 0.
double schmidt_lambda(DickeSpec spec, int a, int beta);

BipartitionSpectrum bipartition_spectrum(DickeSpec spec, int a);

/// Maximal squared Schmidt coefficient over every cut size and excitation
/// split. Iterating cut sizes (not all 2^n bipartitions) is justified by
/// permutation invariance of Dicke states.
Alpha alpha_bruteforce(DickeSpec spec);

/// Closed-form threshold: (n-k)/n for k < n/2, n/(2(n-1)) for k = n/2,
/// k/n for k > n/2. The balanced-case formula assumes n >= 4; at n = 2 it
/// returns 1 while the direct Schmidt value is 1/2, so callers deciding
/// verdicts use alpha_bruteforce below n = 4.
Alpha alpha_closed_form(DickeSpec spec);

/// Amplitudes permuted by swapping qubits i and j of each basis index.
StateVector apply_transposition(const StateVector& psi, int i, int j);

} // namespace qcert
