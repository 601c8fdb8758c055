#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "jcent/dynamics.hpp"
#include "jcent/fock.hpp"

namespace jcent {

// n x n matrix of pairwise component overlaps P_ij = <psi_i|psi_j>. This is
// the density matrix of the virtual n-level atom that purifies the field
// mixture: its spectrum equals the nonzero spectrum of the field state.
class GramMatrix {
  public:
    explicit GramMatrix(std::size_t n) : n_(n), entries_(n * n) {}

    std::size_t size() const { return n_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * n_ + j];
    }

    double trace_real() const {
        double s = 0.0;
        for (std::size_t i = 0; i < n_; ++i) s += entries_[i * n_ + i].real();
        return s;
    }

    // max |P_ij - conj(P_ji)|, zero for an exactly Hermitian matrix
    double asymmetry() const;

  private:
    std::size_t n_;
    std::vector<Complex> entries_;
};

// Overlap matrix of the component set, Hermiticity enforced by averaging P
// with its conjugate transpose. Throws NormalizationError when the trace
// (the total component norm) deviates from 1 by more than 1e-8.
GramMatrix gram_matrix(const ComponentSet& cs);

// As above without the unit-trace requirement (building block for tests and
// non-density uses).
GramMatrix gram_matrix_unchecked(const ComponentSet& cs);

struct SpectrumResult {
    std::vector<double> eigenvalues; // descending, clamped to [0,1], sum exactly 1
    double raw_sum = 0.0;            // eigenvalue sum before clamping/renormalization
    double clamp_delta = 0.0;        // total mass moved by clamping
    double asymmetry = 0.0;          // input Hermiticity defect, diagnostic
};

// All n eigenvalues of the Hermitian matrix P, descending. The complex
// problem is embedded as the 2n x 2n real symmetric matrix [[A,-B],[B,A]]
// (P = A + iB), whose spectrum is that of P doubled; cyclic Jacobi sweeps
// run until the off-diagonal norm falls below 1e-14, then the doubled
// spectrum is collapsed by pairing. Eigenvalues in [-1e-8, 0) are clamped
// to zero and the spectrum renormalized; anything below -1e-8 signals
// upstream truncation damage and throws NegativeEigenvalueError.
SpectrumResult hermitian_eigenvalues(const GramMatrix& P);

// -sum lambda_k ln lambda_k in nats, with 0 ln 0 = 0. In [0, ln n].
double entropy_from_spectrum(const SpectrumResult& s);

// xi = 1 - sum_ij |P_ij|^2, which equals 1 - Tr(rho_F^2). Zero iff pure.
double purity(const GramMatrix& P);

// Reduced 2x2 state of the real two-level atom, rows (excited, ground).
struct AtomicState {
    Complex ee, eg, ge, gg;

    double trace_real() const { return ee.real() + gg.real(); }
};

// rho_A = [[P11+P22, conj(P13+P24)], [P13+P24, P33+P44]], read off the
// diagonal blocks of the evolved joint state. Throws NormalizationError
// when the trace deviates from 1 by more than 1e-8.
AtomicState atomic_state(const ComponentSet& cs);

// lambda_pm = 1/2 +- 1/2 sqrt((rho_ee - rho_gg)^2 + 4|rho_ge|^2),
// the closed-form eigenvalues of a unit-trace Hermitian 2x2 matrix.
std::pair<double, double> atomic_eigenvalues(const AtomicState& a);

// Binary entropy of lambda_pm in nats, in [0, ln 2].
double atomic_entropy(const AtomicState& a);

} // namespace jcent
