#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "decolab/layout.hpp"
#include "decolab/tolerances.hpp"

namespace decolab::hilbert {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Normalized pure state on a composite space.
class StateVector {
  public:
    StateVector(Vector amplitudes, SpaceLayout layout, Tolerances tol = {});

    const Vector& amplitudes() const { return amplitudes_; }
    const SpaceLayout& layout() const { return layout_; }
    int dim() const { return layout_.total_dim(); }

  private:
    Vector amplitudes_;
    SpaceLayout layout_;
};

/// General (not necessarily hermitian) operator on a composite space.
class Operator {
  public:
    Operator(Matrix matrix, SpaceLayout layout);

    const Matrix& matrix() const { return matrix_; }
    const SpaceLayout& layout() const { return layout_; }
    int dim() const { return layout_.total_dim(); }

  private:
    Matrix matrix_;
    SpaceLayout layout_;
};

/// Hermitian, positive, unit-trace operator. Validity is checked at
/// construction: hermiticity and trace against tol.norm/tol.herm, the
/// spectrum (of the hermitized matrix) against -tol.pos.
class DensityOperator {
  public:
    DensityOperator(Matrix matrix, SpaceLayout layout, Tolerances tol = {});

    /// |psi><psi| for a normalized state.
    static DensityOperator from_pure(const StateVector& psi, Tolerances tol = {});

    const Matrix& matrix() const { return matrix_; }
    const SpaceLayout& layout() const { return layout_; }
    int dim() const { return layout_.total_dim(); }

  private:
    Matrix matrix_;
    SpaceLayout layout_;
};

// ---------------------------------------------------------------------------
// small matrix/vector helpers

/// max_ij |m_ij - conj(m_ji)|
double hermiticity_residual(const Matrix& m);
bool is_hermitian(const Matrix& m, double tol = 1e-12);

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

/// Computational basis vector |index> of the given dimension.
Vector basis_vector(int dim, int index);

/// Multiply by a global phase so the first entry with |v_i| > tol is real
/// and positive. Zero vectors are returned unchanged.
Vector canonicalize_phase(const Vector& v, double tol = 1e-12);

// ---------------------------------------------------------------------------
// operations

/// Kronecker product; result layout is the concatenation of the operand
/// layouts, first factor varying slowest.
StateVector tensor_product(const StateVector& a, const StateVector& b);
Operator tensor_product(const Operator& a, const Operator& b);

Complex trace(const Operator& a);

/// Reduced density operator on the kept factors (ascending factor order).
DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep,
                              Tolerances tol = {});

/// Partial trace of |psi><psi| without forming the full projector.
DensityOperator reduced_pure(const StateVector& psi, const std::vector<int>& keep,
                             Tolerances tol = {});

/// Tr(rho A) for hermitian A; throws if A is not hermitian or the
/// imaginary residue of the trace exceeds tol.herm.
double expectation(const DensityOperator& rho, const Operator& obs, Tolerances tol = {});

/// Weighted sum of density operators with nonnegative weights summing to 1.
DensityOperator convex_combine(const std::vector<double>& weights,
                               const std::vector<DensityOperator>& rhos, Tolerances tol = {});

/// U rho U^dag with U = exp(-i H t), hbar = 1. H must be hermitian; the
/// exponential is computed by eigendecomposition and is exact to rounding.
DensityOperator evolve_von_neumann(const DensityOperator& rho, const Operator& hamiltonian,
                                   double t, Tolerances tol = {});

/// exp(-i H t) |psi>.
StateVector evolve_state(const StateVector& psi, const Operator& hamiltonian, double t,
                         Tolerances tol = {});

/// Tr(rho^2); equals 1 exactly for pure states.
double purity(const DensityOperator& rho);

/// Eigendecomposition of a hermitian matrix, reusable across many
/// evolution times (one factorization, cheap per-t application).
class HermitianEigensystem {
  public:
    explicit HermitianEigensystem(const Matrix& hermitian, double herm_tol = 1e-12);

    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
    const Matrix& eigenvectors() const { return eigenvectors_; }

    /// exp(-i H t)
    Matrix evolution_operator(double t) const;
    /// exp(-i H t) v
    Vector evolve(const Vector& v, double t) const;

  private:
    Eigen::VectorXd eigenvalues_;
    Matrix eigenvectors_;
};

}  // namespace decolab::hilbert
