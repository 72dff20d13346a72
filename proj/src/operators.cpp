#include "berry/operators.hpp"

#include <cmath>

namespace berry {

double maxnorm(const Operator& a)
{
    if (a.size() == 0)
        return 0.0;
    return a.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Operator& a, double tol)
{
    if (a.rows() != a.cols())
        return false;
    const double dev = maxnorm(a - a.adjoint());
    return dev <= tol * std::max(1.0, maxnorm(a));
}

bool is_unitary(const Operator& u, double tol)
{
    if (u.rows() != u.cols())
        return false;
    const Operator gram = u.adjoint() * u;
    const Operator eye = Operator::Identity(u.rows(), u.cols());
    return maxnorm(gram - eye) <= tol;
}

Operator kron(const Operator& a, const Operator& b)
{
    const Eigen::Index ra = a.rows(), ca = a.cols();
    const Eigen::Index rb = b.rows(), cb = b.cols();
    Operator out(ra * rb, ca * cb);
    for (Eigen::Index i = 0; i < ra; ++i)
        for (Eigen::Index j = 0; j < ca; ++j)
            out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    return out;
}

EigenSystem eig_hermitian(const Operator& h)
{
    if (!is_hermitian(h))
        throw NotHermitian("eig_hermitian: input deviates from Hermiticity beyond tolerance");

    // Symmetrize so roundoff in the input cannot leak into the solve.
    const Operator hs = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<Operator> solver(hs);
    if (solver.info() != Eigen::Success)
        throw ConvergenceFailure("eig_hermitian: eigensolver did not converge");

    EigenSystem es;
    es.values = solver.eigenvalues();   // ascending by Eigen's contract
    es.vectors = solver.eigenvectors();
    return es;
}

Operator step_propagator(const Operator& h, double dt)
{
    if (!std::isfinite(dt))
        throw Error("step_propagator: dt must be finite");
    const EigenSystem es = eig_hermitian(h);
    const Eigen::Index n = es.dim();
    Eigen::VectorXcd phases(n);
    for (Eigen::Index k = 0; k < n; ++k)
        phases[k] = std::exp(Complex(0.0, -es.values[k] * dt));
    return es.vectors * phases.asDiagonal() * es.vectors.adjoint();
}

} // namespace berry
