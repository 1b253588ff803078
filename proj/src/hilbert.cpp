#include "decolab/hilbert.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unsupported/Eigen/KroneckerProduct>

namespace decolab::hilbert {

namespace {

void check_square(const Matrix& m, const char* who) {
    if (m.rows() != m.cols()) throw std::invalid_argument(std::string(who) + ": matrix not square");
}

void check_layout_dim(long long rows, const SpaceLayout& layout, const char* who) {
    if (rows != layout.total_dim())
        throw std::invalid_argument(std::string(who) + ": size does not match layout");
}

}  // namespace

StateVector::StateVector(Vector amplitudes, SpaceLayout layout, Tolerances tol)
    : amplitudes_(std::move(amplitudes)), layout_(std::move(layout)) {
    check_layout_dim(amplitudes_.size(), layout_, "StateVector");
    double norm2 = amplitudes_.squaredNorm();
    if (std::abs(norm2 - 1.0) > tol.norm)
        throw std::invalid_argument("StateVector: squared norm deviates from 1 by " +
                                    std::to_string(std::abs(norm2 - 1.0)));
}

Operator::Operator(Matrix matrix, SpaceLayout layout)
    : matrix_(std::move(matrix)), layout_(std::move(layout)) {
    check_square(matrix_, "Operator");
    check_layout_dim(matrix_.rows(), layout_, "Operator");
}

DensityOperator::DensityOperator(Matrix matrix, SpaceLayout layout, Tolerances tol)
    : matrix_(std::move(matrix)), layout_(std::move(layout)) {
    check_square(matrix_, "DensityOperator");
    check_layout_dim(matrix_.rows(), layout_, "DensityOperator");
    double herm = hermiticity_residual(matrix_);
    if (herm > tol.herm)
        throw std::invalid_argument("DensityOperator: hermiticity residual " +
                                    std::to_string(herm));
    double trace_err = std::abs(matrix_.trace() - Complex(1.0, 0.0));
    if (trace_err > tol.norm)
        throw std::invalid_argument("DensityOperator: trace deviates from 1 by " +
                                    std::to_string(trace_err));
    // Spectrum of the hermitized matrix; robust against sub-tolerance asymmetry noise.
    Matrix sym = 0.5 * (matrix_ + matrix_.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
    double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < -tol.pos)
        throw std::invalid_argument("DensityOperator: negative eigenvalue " +
                                    std::to_string(min_eig));
}

DensityOperator DensityOperator::from_pure(const StateVector& psi, Tolerances tol) {
    Matrix m = psi.amplitudes() * psi.amplitudes().adjoint();
    return DensityOperator(std::move(m), psi.layout(), tol);
}

double hermiticity_residual(const Matrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
    return m.rows() == m.cols() && hermiticity_residual(m) <= tol;
}

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix pauli_y() {
    Matrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Vector basis_vector(int dim, int index) {
    if (index < 0 || index >= dim) throw std::out_of_range("basis_vector: index out of range");
    Vector v = Vector::Zero(dim);
    v[index] = 1.0;
    return v;
}

Vector canonicalize_phase(const Vector& v, double tol) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        double mag = std::abs(v[i]);
        if (mag > tol) return v * (std::conj(v[i]) / mag);
    }
    return v;
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
    Vector out = Eigen::kroneckerProduct(a.amplitudes(), b.amplitudes());
    return StateVector(std::move(out), concat(a.layout(), b.layout()));
}

Operator tensor_product(const Operator& a, const Operator& b) {
    Matrix out = Eigen::kroneckerProduct(a.matrix(), b.matrix());
    return Operator(std::move(out), concat(a.layout(), b.layout()));
}

Complex trace(const Operator& a) { return a.matrix().trace(); }

namespace {

// Shared index machinery: enumerate flattened indices of the kept and
// traced factor groups. keep must be validated beforehand.
struct TraceIndexing {
    std::vector<int> kept_offsets;    // flattened offset for each kept multi-index
    std::vector<int> traced_offsets;  // flattened offset for each traced multi-index
    int kept_dim = 1;

    TraceIndexing(const SpaceLayout& layout, const std::vector<int>& keep) {
        int factors = layout.factor_count();
        std::vector<bool> is_kept(static_cast<std::size_t>(factors), false);
        for (int f : keep) is_kept[static_cast<std::size_t>(f)] = true;

        std::vector<int> kept_factors, traced_factors;
        for (int f = 0; f < factors; ++f)
            (is_kept[static_cast<std::size_t>(f)] ? kept_factors : traced_factors).push_back(f);

        kept_offsets = enumerate(layout, kept_factors);
        traced_offsets = enumerate(layout, traced_factors);
        kept_dim = static_cast<int>(kept_offsets.size());
    }

    // All flattened offsets produced by sweeping the listed factors, with the
    // first listed factor varying slowest (consistent with Kronecker order).
    static std::vector<int> enumerate(const SpaceLayout& layout, const std::vector<int>& factors) {
        std::vector<int> offsets{0};
        for (int f : factors) {
            int d = layout.dim(f);
            int s = layout.stride(f);
            std::vector<int> next;
            next.reserve(offsets.size() * static_cast<std::size_t>(d));
            for (int base : offsets)
                for (int k = 0; k < d; ++k) next.push_back(base + k * s);
            offsets.swap(next);
        }
        return offsets;
    }
};

std::vector<int> validated_keep(const SpaceLayout& layout, std::vector<int> keep) {
    if (keep.empty()) throw std::invalid_argument("partial_trace: must keep at least one factor");
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (int f : keep)
        if (f < 0 || f >= layout.factor_count())
            throw std::invalid_argument("partial_trace: factor index out of range");
    return keep;
}

SpaceLayout kept_layout(const SpaceLayout& layout, const std::vector<int>& keep) {
    std::vector<int> dims;
    dims.reserve(keep.size());
    for (int f : keep) dims.push_back(layout.dim(f));
    return SpaceLayout(dims);
}

}  // namespace

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep,
                              Tolerances tol) {
    std::vector<int> k = validated_keep(rho.layout(), keep);
    TraceIndexing ix(rho.layout(), k);
    const Matrix& m = rho.matrix();
    Matrix out = Matrix::Zero(ix.kept_dim, ix.kept_dim);
    for (int i = 0; i < ix.kept_dim; ++i)
        for (int j = 0; j < ix.kept_dim; ++j) {
            Complex sum = 0.0;
            for (int t : ix.traced_offsets)
                sum += m(ix.kept_offsets[static_cast<std::size_t>(i)] + t,
                         ix.kept_offsets[static_cast<std::size_t>(j)] + t);
            out(i, j) = sum;
        }
    return DensityOperator(std::move(out), kept_layout(rho.layout(), k), tol);
}

DensityOperator reduced_pure(const StateVector& psi, const std::vector<int>& keep,
                             Tolerances tol) {
    std::vector<int> k = validated_keep(psi.layout(), keep);
    TraceIndexing ix(psi.layout(), k);
    const Vector& v = psi.amplitudes();
    // rho_ij = sum_t psi[i,t] conj(psi[j,t])
    Matrix coeff(ix.kept_dim, static_cast<Eigen::Index>(ix.traced_offsets.size()));
    for (int i = 0; i < ix.kept_dim; ++i)
        for (std::size_t t = 0; t < ix.traced_offsets.size(); ++t)
            coeff(i, static_cast<Eigen::Index>(t)) =
                v[ix.kept_offsets[static_cast<std::size_t>(i)] + ix.traced_offsets[t]];
    Matrix out = coeff * coeff.adjoint();
    return DensityOperator(std::move(out), kept_layout(psi.layout(), k), tol);
}

double expectation(const DensityOperator& rho, const Operator& obs, Tolerances tol) {
    if (rho.layout() != obs.layout())
        throw std::invalid_argument("expectation: layout mismatch");
    if (!is_hermitian(obs.matrix(), tol.herm))
        throw std::invalid_argument("expectation: observable not hermitian");
    Complex val = (rho.matrix() * obs.matrix()).trace();
    if (std::abs(val.imag()) > tol.herm)
        throw std::runtime_error("expectation: imaginary residue " +
                                 std::to_string(val.imag()));
    return val.real();
}

DensityOperator convex_combine(const std::vector<double>& weights,
                               const std::vector<DensityOperator>& rhos, Tolerances tol) {
    if (weights.empty() || weights.size() != rhos.size())
        throw std::invalid_argument("convex_combine: weights/operators size mismatch");
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("convex_combine: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > tol.norm)
        throw std::invalid_argument("convex_combine: weights sum to " + std::to_string(sum));
    const SpaceLayout& layout = rhos.front().layout();
    Matrix out = Matrix::Zero(layout.total_dim(), layout.total_dim());
    for (std::size_t i = 0; i < rhos.size(); ++i) {
        if (rhos[i].layout() != layout)
            throw std::invalid_argument("convex_combine: layout mismatch");
        out += weights[i] * rhos[i].matrix();
    }
    return DensityOperator(std::move(out), layout, tol);
}

HermitianEigensystem::HermitianEigensystem(const Matrix& hermitian, double herm_tol) {
    if (!is_hermitian(hermitian, herm_tol))
        throw std::invalid_argument("HermitianEigensystem: matrix not hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (hermitian + hermitian.adjoint()));
    if (es.info() != Eigen::Success)
        throw std::runtime_error("HermitianEigensystem: eigensolver failed");
    eigenvalues_ = es.eigenvalues();
    eigenvectors_ = es.eigenvectors();
}

Matrix HermitianEigensystem::evolution_operator(double t) const {
    Vector phases(eigenvalues_.size());
    for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i)
        phases[i] = std::exp(Complex(0.0, -eigenvalues_[i] * t));
    return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

Vector HermitianEigensystem::evolve(const Vector& v, double t) const {
    Vector coeffs = eigenvectors_.adjoint() * v;
    for (Eigen::Index i = 0; i < coeffs.size(); ++i)
        coeffs[i] *= std::exp(Complex(0.0, -eigenvalues_[i] * t));
    return eigenvectors_ * coeffs;
}

DensityOperator evolve_von_neumann(const DensityOperator& rho, const Operator& hamiltonian,
                                   double t, Tolerances tol) {
    if (rho.layout() != hamiltonian.layout())
        throw std::invalid_argument("evolve_von_neumann: layout mismatch");
    HermitianEigensystem eig(hamiltonian.matrix(), tol.herm);
    Matrix u = eig.evolution_operator(t);
    Matrix out = u * rho.matrix() * u.adjoint();
    return DensityOperator(std::move(out), rho.layout(), tol);
}

StateVector evolve_state(const StateVector& psi, const Operator& hamiltonian, double t,
                         Tolerances tol) {
    if (psi.layout() != hamiltonian.layout())
        throw std::invalid_argument("evolve_state: layout mismatch");
    HermitianEigensystem eig(hamiltonian.matrix(), tol.herm);
    return StateVector(eig.evolve(psi.amplitudes(), t), psi.layout(), tol);
}

double purity(const DensityOperator& rho) {
    return (rho.matrix() * rho.matrix()).trace().real();
}

}  // namespace decolab::hilbert
