#include "jcent/oracle.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "jcent/errors.hpp"

namespace jcent::oracle {

namespace {

constexpr double kNegativeEigenvalueFloor = -1e-8;

Eigen::VectorXcd to_eigen(const FockVector& v) {
    Eigen::VectorXcd out(static_cast<Eigen::Index>(v.dim()));
    for (std::size_t n = 0; n < v.dim(); ++n) out(static_cast<Eigen::Index>(n)) = v[n];
    return out;
}

std::size_t joint_dim_of(const DensityMatrix& rho) {
    if (rho.rows() != rho.cols() || rho.rows() % 2 != 0)
        throw DimensionMismatch("oracle: joint density matrix must be 2*dim square");
    return static_cast<std::size_t>(rho.rows()) / 2;
}

} // namespace

JointHamiltonian build_hamiltonian(std::size_t dim) {
    if (dim < 1) throw std::invalid_argument("build_hamiltonian: dim must be >= 1");

    JointHamiltonian h;
    h.dim = dim;
    const auto d = static_cast<Eigen::Index>(dim);
    h.entries = Eigen::MatrixXd::Zero(2 * d, 2 * d);
    for (Eigen::Index n = 0; n + 1 < d; ++n) {
        const double g = std::sqrt(static_cast<double>(n) + 1.0);
        h.entries(d + n + 1, n) = g; // |g,n+1><e,n|
        h.entries(n, d + n + 1) = g;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.entries);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("build_hamiltonian: eigendecomposition failed");
    h.eigenvalues = es.eigenvalues();
    h.eigenvectors = es.eigenvectors();
    return h;
}

DensityMatrix build_initial_density(const ScenarioSpec& spec) {
    const ScenarioSpec r = resolve(spec);
    const auto d = static_cast<Eigen::Index>(r.dim);

    Eigen::Matrix2cd atom = Eigen::Matrix2cd::Zero();
    Eigen::MatrixXcd field = Eigen::MatrixXcd::Zero(d, d);

    if (r.scenario == Scenario::FieldMixture) {
        const Eigen::VectorXcd a =
            to_eigen(coherent_state(r.alpha, r.dim, r.tail_tolerance));
        const Eigen::VectorXcd b =
            to_eigen(coherent_state(r.beta, r.dim, r.tail_tolerance));
        field = r.weight * (a * a.adjoint()) + (1.0 - r.weight) * (b * b.adjoint());
        atom(0, 0) = 1.0; // |e><e|
    } else {
        const Eigen::VectorXcd a =
            to_eigen(coherent_state(r.alpha, r.dim, r.tail_tolerance));
        field = a * a.adjoint();
        atom(0, 0) = r.weight;
        atom(1, 1) = 1.0 - r.weight;
    }

    // atom-major layout == kron(atom, field)
    DensityMatrix rho = DensityMatrix::Zero(2 * d, 2 * d);
    for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index j = 0; j < 2; ++j)
            rho.block(i * d, j * d, d, d) = atom(i, j) * field;
    return rho;
}

DensityMatrix evolve_density(const DensityMatrix& rho0, const JointHamiltonian& h,
                             double t) {
    if (rho0.rows() != h.entries.rows() || rho0.cols() != h.entries.cols()) {
        std::ostringstream msg;
        msg << "evolve_density: rho is " << rho0.rows() << "x" << rho0.cols()
            << " but H is " << h.entries.rows() << "x" << h.entries.cols();
        throw DimensionMismatch(msg.str());
    }
    const std::complex<double> minus_i(0.0, -1.0);
    Eigen::VectorXcd phases(h.eigenvalues.size());
    for (Eigen::Index k = 0; k < h.eigenvalues.size(); ++k)
        phases(k) = std::exp(minus_i * h.eigenvalues(k) * t);

    const Eigen::MatrixXcd u =
        h.eigenvectors.cast<std::complex<double>>() * phases.asDiagonal() *
        h.eigenvectors.transpose().cast<std::complex<double>>();
    return u * rho0 * u.adjoint();
}

DensityMatrix partial_trace_atom(const DensityMatrix& rho) {
    const auto d = static_cast<Eigen::Index>(joint_dim_of(rho));
    return rho.block(0, 0, d, d) + rho.block(d, d, d, d);
}

AtomicState partial_trace_field(const DensityMatrix& rho) {
    const auto d = static_cast<Eigen::Index>(joint_dim_of(rho));
    AtomicState a{};
    a.ee = rho.block(0, 0, d, d).trace();
    a.eg = rho.block(0, d, d, d).trace();
    a.ge = rho.block(d, 0, d, d).trace();
    a.gg = rho.block(d, d, d, d).trace();
    return a;
}

Eigen::VectorXd density_spectrum(const DensityMatrix& rho) {
    const Eigen::MatrixXcd herm = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm,
                                                       Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("density_spectrum: eigendecomposition failed");
    return es.eigenvalues().reverse();
}

double vn_entropy(const DensityMatrix& rho) {
    Eigen::VectorXd mu = density_spectrum(rho);

    double sum = 0.0;
    for (Eigen::Index k = 0; k < mu.size(); ++k) {
        if (mu(k) < kNegativeEigenvalueFloor) {
            std::ostringstream msg;
            msg << "vn_entropy: eigenvalue " << mu(k) << " below "
                << kNegativeEigenvalueFloor;
            throw NegativeEigenvalueError(msg.str());
        }
        if (mu(k) < 0.0) mu(k) = 0.0;
        sum += mu(k);
    }
    if (sum > 0.0) mu /= sum;

    double entropy = 0.0;
    for (Eigen::Index k = 0; k < mu.size(); ++k) {
        if (mu(k) < 1e-300) continue;
        entropy -= mu(k) * std::log(mu(k));
    }
    return entropy;
}

ArakiLiebReport check_araki_lieb(double s_atom, double s_field, double s_joint) {
    ArakiLiebReport r;
    r.s_atom = s_atom;
    r.s_field = s_field;
    r.s_joint = s_joint;
    r.lower_margin = s_joint - std::abs(s_atom - s_field);
    r.upper_margin = s_atom + s_field - s_joint;
    r.pass = r.lower_margin >= -1e-8 && r.upper_margin >= -1e-8;
    return r;
}

DensityMatrix component_projector_sum(const ComponentSet& cs) {
    if (cs.components.empty())
        throw DimensionMismatch("component_projector_sum: empty component set");
    const auto d = static_cast<Eigen::Index>(cs.components.front().dim());
    DensityMatrix rho = DensityMatrix::Zero(d, d);
    for (const FockVector& psi : cs.components) {
        const Eigen::VectorXcd v = to_eigen(psi);
        rho += v * v.adjoint();
    }
    return rho;
}

SchmidtReport check_schmidt_invariant(const ComponentSet& cs,
                                      const DensityMatrix& rho_field) {
    const DensityMatrix sum = component_projector_sum(cs);
    if (sum.rows() != rho_field.rows() || sum.cols() != rho_field.cols())
        throw DimensionMismatch("check_schmidt_invariant: field dims differ");
    SchmidtReport r;
    r.max_deviation = (sum - rho_field).cwiseAbs().maxCoeff();
    return r;
}

} // namespace jcent::oracle
