// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qcert/types.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qcert {

/// One weighted Pauli string. `letters` holds one of {I,X,Y,Z} per qubit,
/// qubit 0 leftmost. Coefficients are real: every Hamiltonian in this
/// toolkit is a real combination of Pauli strings.
struct PauliTerm {
    double coeff = 0.0;
    std::string letters;
};

/// A real-weighted sum of n-qubit Pauli strings. Terms with identical
/// letter sequences are merged on insertion and exact-zero coefficients are
/// dropped, so no two stored terms share letters. The identity string is a
/// regular term (it carries the constant offset), which keeps reassembly
/// checks exact.
class PauliSum {
  public:
    explicit PauliSum(int n);
    PauliSum(int n, const std::vector<PauliTerm>& terms);

    int qubits() const { return n_; }
    std::size_t size() const { return terms_.size(); }

    /// Merge `coeff * letters` into the sum. Throws InputError on a letter
    /// outside {I,X,Y,Z}, a length mismatch, or a non-finite coefficient.
    void add(std::string_view letters, double coeff);

    /// Stored terms, keyed by letter sequence (lexicographic order, which
    /// fixes the iteration order everywhere downstream).
    const std::map<std::string, double, std::less<>>& terms() const {
        return terms_;
    }

    /// Coefficient of a letter sequence, 0 if absent.
    double coefficient(std::string_view letters) const;

    /// Coefficient of the identity string (the trace of H divided by 2^n,
    /// since all other Pauli strings are traceless).
    double identity_coefficient() const;

    std::string identity_letters() const { return std::string(n_, 'I'); }

    friend PauliSum operator+(const PauliSum& a, const PauliSum& b);
    friend PauliSum operator*(double scale, const PauliSum& h);

  private:
    int n_;
    std::map<std::string, double, std::less<>> terms_;
};

/// The three-basis partition of a uniform-letter PauliSum: every
/// non-identity term of x_terms uses only {I,X}, and so on. The identity
/// coefficient lives in `constant` (it is estimated with the Z record).
struct BasisGroups {
    PauliSum x_terms;
    PauliSum y_terms;
    PauliSum z_terms;
    double constant = 0.0;

    const PauliSum& group(Basis b) const {
        switch (b) {
        case Basis::X: return x_terms;
        case Basis::Y: return y_terms;
        default: return z_terms;
        }
    }
};

/// <psi|H|psi>, computed term by term by sparse Pauli action (no dense
/// matrix), so it scales to n = 16 and beyond. Per-term values are combined
/// with a pairwise tree sum for bit-stable results. Throws InputError on a
/// dimension mismatch or when |norm - 1| > 1e-6; throws VerificationError
/// if the imaginary residue exceeds 1e-10.
double expectation(const PauliSum& h, const StateVector& psi);

/// H|psi| without materializing H; same sparse per-term action as
/// expectation(). Used by the power-iteration bound on max H.
StateVector apply(const PauliSum& h, const StateVector& psi);

/// Dense 2^n x 2^n materialization, the oracle backend for spectral
/// checks. Guarded to n <= 12; Hermiticity is asserted within 1e-12.
DenseMatrix to_dense(const PauliSum& h);

/// Partition into the three global measurement bases. Requires every
/// non-identity term to be uniform-letter (all non-I letters identical);
/// a mixed-letter term throws InputError, since it falls outside the
/// three-basis measurement protocol.
BasisGroups group_by_basis(const PauliSum& h);

} // namespace qcert
