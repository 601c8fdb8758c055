#include "jcent/fock.hpp"

#include <sstream>

namespace jcent {

FockVector coherent_state(Complex alpha, std::size_t dim, double tail_tolerance) {
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
        throw std::invalid_argument("coherent_state: alpha not finite");

    FockVector v(dim);
    Complex c = std::exp(-0.5 * std::norm(alpha));
    double captured = 0.0;
    for (std::size_t n = 0; n < dim; ++n) {
        v[n] = c;
        captured += std::norm(c);
        c *= alpha / std::sqrt(static_cast<double>(n + 1));
    }

    const double tail = 1.0 - captured;
    if (tail > tail_tolerance) {
        std::ostringstream msg;
        msg << "coherent_state: truncation dim=" << dim << " leaves tail mass "
            << tail << " > " << tail_tolerance << " for |alpha|^2=" << std::norm(alpha)
            << "; increase dim";
        throw TailMassError(msg.str());
    }
    return v;
}

Complex inner_product(const FockVector& a, const FockVector& b) {
    if (a.dim() != b.dim()) {
        std::ostringstream msg;
        msg << "inner_product: dims " << a.dim() << " vs " << b.dim();
        throw DimensionMismatch(msg.str());
    }
    Complex s = 0.0;
    for (std::size_t n = 0; n < a.dim(); ++n) s += std::conj(a[n]) * b[n];
    return s;
}

FockVector apply_lower(const FockVector& v) {
    FockVector out(v.dim());
    for (std::size_t n = 0; n + 1 < v.dim(); ++n) out[n] = v[n + 1];
    return out;
}

FockVector apply_raise(const FockVector& v, double tail_tolerance) {
    const double top = std::norm(v[v.dim() - 1]);
    if (top > tail_tolerance) {
        std::ostringstream msg;
        msg << "apply_raise: top amplitude |c_" << (v.dim() - 1) << "|^2=" << top
            << " > " << tail_tolerance << " would be pushed out of the truncation";
        throw TailMassError(msg.str());
    }
    FockVector out(v.dim());
    for (std::size_t n = 1; n < v.dim(); ++n) out[n] = v[n - 1];
    return out;
}

} // namespace jcent
