#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jcent/errors.hpp"

namespace jcent {

using Complex = std::complex<double>;

// Probability mass allowed to fall outside the truncated basis.
inline constexpr double kDefaultTailTolerance = 1e-12;

// Complex amplitude vector over the truncated photon-number basis n = 0..dim-1.
// Unnormalized vectors are first-class; nothing here normalizes implicitly.
class FockVector {
  public:
    explicit FockVector(std::size_t dim) : amp_(check_dim(dim)) {}

    // |n> basis element
    static FockVector basis(std::size_t dim, std::size_t n) {
        FockVector v(dim);
        if (n >= dim) throw std::out_of_range("FockVector::basis: n out of range");
        v.amp_[n] = 1.0;
        return v;
    }

    std::size_t dim() const { return amp_.size(); }

    Complex& operator[](std::size_t n) { return amp_[n]; }
    const Complex& operator[](std::size_t n) const { return amp_[n]; }

    std::span<const Complex> amplitudes() const { return amp_; }

    double norm_sq() const {
        double s = 0.0;
        for (const Complex& c : amp_) s += std::norm(c);
        return s;
    }

    FockVector& operator*=(Complex z) {
        for (Complex& c : amp_) c *= z;
        return *this;
    }

    friend FockVector operator*(Complex z, FockVector v) {
        v *= z;
        return v;
    }

  private:
    static std::size_t check_dim(std::size_t dim) {
        if (dim < 1) throw std::invalid_argument("FockVector: dim must be >= 1");
        return dim;
    }

    std::vector<Complex> amp_;
};

// c_n = e^{-|alpha|^2/2} alpha^n / sqrt(n!), built by the recurrence
// c_{n+1} = c_n * alpha / sqrt(n+1) so no factorial ever overflows.
// Throws TailMassError when the discarded tail 1 - sum |c_n|^2 exceeds
// tail_tolerance, i.e. the truncation is too small for this alpha.
FockVector coherent_state(Complex alpha, std::size_t dim,
                          double tail_tolerance = kDefaultTailTolerance);

// <a|b> = sum_n conj(a_n) b_n
Complex inner_product(const FockVector& a, const FockVector& b);

// Diagonal number-operator function: out_n = f(n) * c_n.
template <class F>
FockVector apply_diag_fn(F&& f, const FockVector& v) {
    FockVector out(v.dim());
    for (std::size_t n = 0; n < v.dim(); ++n) {
        const double fn = std::forward<F>(f)(n);
        if (!std::isfinite(fn))
            throw std::invalid_argument("apply_diag_fn: f(n) not finite");
        out[n] = fn * v[n];
    }
    return out;
}

// London phase operator V: out_n = in_{n+1}, top slot zero.  V|0> = 0.
FockVector apply_lower(const FockVector& v);

// V^dagger: out_n = in_{n-1}, slot 0 zero.  The amplitude that would be
// pushed past the truncation must already be negligible, otherwise the
// shift silently loses norm; that is flagged as TailMassError.
FockVector apply_raise(const FockVector& v,
                       double tail_tolerance = kDefaultTailTolerance);

} // namespace jcent
