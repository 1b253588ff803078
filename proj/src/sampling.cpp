#include "decolab/sampling.hpp"

#include <Eigen/QR>
#include <cmath>
#include <stdexcept>

namespace decolab::sampling {

hilbert::StateVector random_state(CounterRng& rng, const SpaceLayout& layout) {
    Vector v(layout.total_dim());
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = rng.complex_normal();
    v /= v.norm();
    return hilbert::StateVector(std::move(v), layout);
}

Matrix random_unitary(CounterRng& rng, int dim) {
    if (dim < 1) throw std::invalid_argument("random_unitary: dim must be >= 1");
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix column phases so the factorization (and hence the sample) is unique.
    for (int j = 0; j < dim; ++j) {
        std::complex<double> d = r(j, j);
        double mag = std::abs(d);
        if (mag > 0) q.col(j) *= d / mag;
    }
    return q;
}

std::vector<Vector> random_orthonormal_set(CounterRng& rng, int dim, int count) {
    if (count < 1 || count > dim)
        throw std::invalid_argument("random_orthonormal_set: need 1 <= count <= dim");
    Matrix u = random_unitary(rng, dim);
    std::vector<Vector> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) out.push_back(u.col(j));
    return out;
}

Matrix random_hermitian(CounterRng& rng, int dim, double scale) {
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
    return scale * 0.5 * (g + g.adjoint());
}

hilbert::DensityOperator random_density(CounterRng& rng, const SpaceLayout& layout) {
    int dim = layout.total_dim();
    Matrix u = random_unitary(rng, dim);
    Eigen::VectorXd w(dim);
    double sum = 0.0;
    for (int i = 0; i < dim; ++i) {
        w[i] = -std::log(1.0 - rng.uniform());  // exponential weights -> Dirichlet after scaling
        sum += w[i];
    }
    w /= sum;
    Matrix m = u * w.cast<std::complex<double>>().asDiagonal() * u.adjoint();
    m = 0.5 * (m + m.adjoint());
    m /= m.trace().real();
    return hilbert::DensityOperator(std::move(m), layout);
}

}  // namespace decolab::sampling
