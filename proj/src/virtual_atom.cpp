#include "jcent/virtual_atom.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "jcent/errors.hpp"

namespace jcent {

namespace {

constexpr double kTraceTolerance = 1e-8;
constexpr double kAsymmetryTolerance = 1e-10;
constexpr double kNegativeEigenvalueFloor = -1e-8;
constexpr double kJacobiOffTolerance = 1e-14;
constexpr int kJacobiMaxSweeps = 100;

// Dense real symmetric matrix, row-major, for the Jacobi solver only.
class SymmetricWork {
  public:
    explicit SymmetricWork(std::size_t m) : m_(m), a_(m * m, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return a_[i * m_ + j]; }
    double at(std::size_t i, std::size_t j) const { return a_[i * m_ + j]; }
    std::size_t size() const { return m_; }

    double off_diagonal_norm() const {
        double s = 0.0;
        for (std::size_t p = 0; p < m_; ++p)
            for (std::size_t q = p + 1; q < m_; ++q) s += 2.0 * at(p, q) * at(p, q);
        return std::sqrt(s);
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (double x : a_) s += x * x;
        return std::sqrt(s);
    }

    // One cyclic sweep of two-sided Jacobi rotations.
    void sweep() {
        for (std::size_t p = 0; p < m_; ++p) {
            for (std::size_t q = p + 1; q < m_; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                // smaller-magnitude root of t^2 + 2 theta t - 1 = 0
                double tan_phi = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(tan_phi * tan_phi + 1.0);
                const double s = tan_phi * c;
                rotate(p, q, c, s);
            }
        }
    }

  private:
    // A <- J^T A J with the Givens rotation J acting on rows/cols p,q.
    void rotate(std::size_t p, std::size_t q, double c, double s) {
        for (std::size_t k = 0; k < m_; ++k) {
            const double akp = at(k, p);
            const double akq = at(k, q);
            at(k, p) = c * akp - s * akq;
            at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < m_; ++k) {
            const double apk = at(p, k);
            const double aqk = at(q, k);
            at(p, k) = c * apk - s * aqk;
            at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
    }

    std::size_t m_;
    std::vector<double> a_;
};

std::vector<double> jacobi_eigenvalues(SymmetricWork m) {
    const double tol = kJacobiOffTolerance * std::max(1.0, m.frobenius_norm());
    int sweeps = 0;
    while (m.off_diagonal_norm() >= tol) {
        if (++sweeps > kJacobiMaxSweeps)
            throw std::runtime_error("jacobi_eigenvalues: no convergence after 100 sweeps");
        m.sweep();
    }
    std::vector<double> ev(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) ev[i] = m.at(i, i);
    return ev;
}

} // namespace

double GramMatrix::asymmetry() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j)
            worst = std::max(worst,
                             std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
}

GramMatrix gram_matrix_unchecked(const ComponentSet& cs) {
    const std::size_t n = cs.components.size();
    for (const FockVector& psi : cs.components)
        if (psi.dim() != cs.components.front().dim())
            throw DimensionMismatch("gram_matrix: components have mixed dims");

    GramMatrix p(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Complex pij = inner_product(cs.components[i], cs.components[j]);
            // averaging with the conjugate transpose; the diagonal comes out real
            p(i, j) = (i == j) ? Complex{pij.real(), 0.0} : pij;
            p(j, i) = std::conj(p(i, j));
        }
    }
    return p;
}

GramMatrix gram_matrix(const ComponentSet& cs) {
    GramMatrix p = gram_matrix_unchecked(cs);
    const double trace = p.trace_real();
    if (std::abs(trace - 1.0) > kTraceTolerance) {
        std::ostringstream msg;
        msg << "gram_matrix: trace " << trace << " deviates from 1 beyond "
            << kTraceTolerance;
        throw NormalizationError(msg.str());
    }
    return p;
}

SpectrumResult hermitian_eigenvalues(const GramMatrix& p) {
    const std::size_t n = p.size();

    SpectrumResult result;
    result.asymmetry = p.asymmetry();
    if (result.asymmetry > kAsymmetryTolerance) {
        std::ostringstream msg;
        msg << "hermitian_eigenvalues: Hermiticity defect " << result.asymmetry;
        throw NonHermitianError(msg.str());
    }

    // Embed the symmetrized P = A + iB as [[A,-B],[B,A]]; every eigenvalue
    // of P appears twice in the embedding.
    SymmetricWork m(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Complex h = 0.5 * (p(i, j) + std::conj(p(j, i)));
            m.at(i, j) = h.real();
            m.at(n + i, n + j) = h.real();
            m.at(i, n + j) = -h.imag();
            m.at(n + i, j) = h.imag();
        }
    }

    std::vector<double> doubled = jacobi_eigenvalues(std::move(m));
    std::sort(doubled.begin(), doubled.end(), std::greater<>());

    result.eigenvalues.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        result.eigenvalues[k] = 0.5 * (doubled[2 * k] + doubled[2 * k + 1]);

    for (double lam : result.eigenvalues) result.raw_sum += lam;

    for (double& lam : result.eigenvalues) {
        if (lam < kNegativeEigenvalueFloor) {
            std::ostringstream msg;
            msg << "hermitian_eigenvalues: eigenvalue " << lam << " below "
                << kNegativeEigenvalueFloor << "; truncation damage upstream";
            throw NegativeEigenvalueError(msg.str());
        }
        if (lam < 0.0) {
            result.clamp_delta += -lam;
            lam = 0.0;
        } else if (lam > 1.0) {
            result.clamp_delta += lam - 1.0;
            lam = 1.0;
        }
    }

    double sum = 0.0;
    for (double lam : result.eigenvalues) sum += lam;
    if (sum > 0.0) {
        for (double& lam : result.eigenvalues) lam /= sum;
        // pin the sum to exactly 1 by absorbing the last ulps into the top
        double resid = 1.0;
        for (double lam : result.eigenvalues) resid -= lam;
        result.eigenvalues.front() += resid;
    }
    return result;
}

double entropy_from_spectrum(const SpectrumResult& s) {
    double entropy = 0.0;
    for (double lam : s.eigenvalues) {
        if (lam < 1e-300) continue; // 0 ln 0 = 0
        entropy -= lam * std::log(lam);
    }
    return entropy;
}

double purity(const GramMatrix& p) {
    double sq = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) sq += std::norm(p(i, j));
    return 1.0 - sq;
}

AtomicState atomic_state(const ComponentSet& cs) {
    const GramMatrix p = gram_matrix_unchecked(cs);
    if (cs.row_map[0].size() != 2 || cs.row_map[1].size() != 2)
        throw DimensionMismatch("atomic_state: expected two components per atomic row");

    const std::size_t e0 = cs.row_map[0][0], e1 = cs.row_map[0][1];
    const std::size_t g0 = cs.row_map[1][0], g1 = cs.row_map[1][1];

    AtomicState a;
    a.ee = p(e0, e0) + p(e1, e1);
    a.gg = p(g0, g0) + p(g1, g1);
    a.ge = p(e0, g0) + p(e1, g1); // <psi_1|psi_3> + <psi_2|psi_4>
    a.eg = std::conj(a.ge);

    const double trace = a.trace_real();
    if (std::abs(trace - 1.0) > kTraceTolerance) {
        std::ostringstream msg;
        msg << "atomic_state: trace " << trace << " deviates from 1 beyond "
            << kTraceTolerance;
        throw NormalizationError(msg.str());
    }
    return a;
}

std::pair<double, double> atomic_eigenvalues(const AtomicState& a) {
    const double pop = a.ee.real() - a.gg.real();
    const double disc = std::sqrt(pop * pop + 4.0 * std::norm(a.ge));
    double hi = 0.5 + 0.5 * disc;
    double lo = 0.5 - 0.5 * disc;
    hi = std::clamp(hi, 0.0, 1.0);
    lo = std::clamp(lo, 0.0, 1.0);
    return {hi, lo};
}

double atomic_entropy(const AtomicState& a) {
    const auto [hi, lo] = atomic_eigenvalues(a);
    double entropy = 0.0;
    if (hi > 1e-300) entropy -= hi * std::log(hi);
    if (lo > 1e-300) entropy -= lo * std::log(lo);
    return entropy;
}

} // namespace jcent
