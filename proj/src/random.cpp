#include "qdsys/random.hpp"

#include <cmath>

namespace qdsys {

Vector gaussian_vector(int dim, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(dim);
    for (int i = 0; i < dim; ++i) {
        double re = gauss(rng), im = gauss(rng);
        v(i) = Complex(re, im);
    }
    return v;
}

StateVector haar_random_state(const HilbertShape& shape, Rng& rng) {
    Vector v = gaussian_vector(shape.total_dim(), rng);
    return StateVector(shape, v / v.norm());
}

Operator gaussian_matrix(int rows, int cols, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Operator m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = Complex(gauss(rng), gauss(rng));
    return m;
}

Operator random_unitary(int dim, Rng& rng) {
    Operator a = gaussian_matrix(dim, dim, rng);
    Eigen::HouseholderQR<Operator> qr(a);
    Operator q = qr.householderQ();
    Operator r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase ambiguity of QR so the distribution is Haar.
    for (int i = 0; i < dim; ++i) {
        Complex d = r(i, i);
        q.col(i) *= d / std::abs(d);
    }
    return q;
}

Eigen::MatrixXd random_special_orthogonal(int dim, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            a(i, j) = gauss(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i)
        if (r(i, i) < 0) q.col(i) *= -1.0;
    if (q.determinant() < 0) q.col(0) *= -1.0;
    return q;
}

Operator random_sl_matrix(int dim, Rng& rng, double max_condition) {
    std::uniform_real_distribution<double> uni(1.0, std::sqrt(max_condition));
    Operator u = random_unitary(dim, rng);
    Operator v = random_unitary(dim, rng);
    Eigen::VectorXd s(dim);
    for (int i = 0; i < dim; ++i) s(i) = uni(rng);
    s /= std::pow(s.prod(), 1.0 / dim);  // geometric mean 1 keeps |det| = 1
    Operator g = u * s.cast<Complex>().asDiagonal() * v;
    // unit-modulus determinant left over from the unitaries; rescale to det 1
    Complex det = g.determinant();
    g /= std::pow(det, Complex(1.0 / dim, 0.0));
    return g;
}

} // namespace qdsys
