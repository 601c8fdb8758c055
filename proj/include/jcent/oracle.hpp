#pragma once

#include <Eigen/Dense>

#include <cstddef>

#include "jcent/dynamics.hpp"
#include "jcent/virtual_atom.hpp"

namespace jcent::oracle {

// Brute-force verification path. Everything here works on the full truncated
// product space with the joint basis laid out atom-major:
//
//   index = atom_row * dim + n,   atom_row 0 = excited, 1 = ground.
//
// The evolution goes through a dense eigendecomposition of the Hamiltonian
// rather than the analytic closed form, so agreement with the component
// route is a genuine two-path check.

using DensityMatrix = Eigen::MatrixXcd;

// Interaction Hamiltonian with lambda = 1: the only nonzero entries are
// <g,n+1|H|e,n> = <e,n|H|g,n+1> = sqrt(n+1). The coupling out of |e,dim-1>
// leaves the basis and is dropped; the induced error is bounded by the
// tail-mass precondition on the initial state. The eigendecomposition is
// computed once at construction and shared by every evolve call.
struct JointHamiltonian {
    std::size_t dim = 0;             // photon truncation
    Eigen::MatrixXd entries;         // 2*dim x 2*dim, real symmetric
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
};

JointHamiltonian build_hamiltonian(std::size_t dim);

// The stated convex combination of projectors in the product basis.
DensityMatrix build_initial_density(const ScenarioSpec& spec);

// U rho0 U^dag with U = exp(-i H t) assembled from the cached spectrum.
DensityMatrix evolve_density(const DensityMatrix& rho0, const JointHamiltonian& h,
                             double t);

// Trace out the atom: (rho_F)_{mn} = sum_{a in {e,g}} rho_{(a,m),(a,n)}.
DensityMatrix partial_trace_atom(const DensityMatrix& rho);

// Trace out the field: 2x2 atomic state, rows (excited, ground).
AtomicState partial_trace_field(const DensityMatrix& rho);

// Full spectrum of a Hermitian matrix, descending.
Eigen::VectorXd density_spectrum(const DensityMatrix& rho);

// -sum mu_k ln mu_k over the full spectrum, 0 ln 0 = 0, eigenvalues in
// [-1e-8, 0) clamped to zero and the spectrum renormalized; below -1e-8
// throws NegativeEigenvalueError.
double vn_entropy(const DensityMatrix& rho);

struct ArakiLiebReport {
    double s_atom = 0.0;
    double s_field = 0.0;
    double s_joint = 0.0;
    double lower_margin = 0.0; // S_AB - |S_A - S_F|
    double upper_margin = 0.0; // S_A + S_F - S_AB
    bool pass = false;         // both margins >= -1e-8
};

// |S_A - S_F| <= S_AB <= S_A + S_F with slack 1e-8; failures are report
// content, never exceptions.
ArakiLiebReport check_araki_lieb(double s_atom, double s_field, double s_joint);

// sum_k |psi_k><psi_k| assembled from the analytic components.
DensityMatrix component_projector_sum(const ComponentSet& cs);

struct SchmidtReport {
    double max_deviation = 0.0; // entrywise, vs. the traced field matrix
};

// Verifies that the component projector sum reproduces the traced field
// state, i.e. the decomposition invariant survives the evolution.
SchmidtReport check_schmidt_invariant(const ComponentSet& cs,
                                      const DensityMatrix& rho_field);

} // namespace jcent::oracle
