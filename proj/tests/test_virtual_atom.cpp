#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "jcent/errors.hpp"
#include "jcent/virtual_atom.hpp"

using jcent::AtomicState;
using jcent::Complex;
using jcent::ComponentSet;
using jcent::FockVector;
using jcent::GramMatrix;
using jcent::Scenario;
using jcent::ScenarioSpec;
using jcent::SpectrumResult;

namespace {

const double kLn2 = std::log(2.0);

ScenarioSpec fig1_spec(double weight = 0.5) {
    ScenarioSpec s;
    s.scenario = Scenario::FieldMixture;
    s.alpha = {4.0, 0.0};
    s.beta = {-4.0, 0.0};
    s.weight = weight;
    return jcent::resolve(s);
}

GramMatrix from_eigen(const Eigen::MatrixXcd& m) {
    GramMatrix p(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            p(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
    return p;
}

Eigen::MatrixXcd random_psd_unit_trace(std::mt19937& rng, int n) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Complex{g(rng), g(rng)};
    Eigen::MatrixXcd p = m * m.adjoint();
    return p / p.trace().real();
}

SpectrumResult spectrum_of(std::vector<double> eigenvalues) {
    SpectrumResult s;
    s.eigenvalues = std::move(eigenvalues);
    return s;
}

// Independent eigenvalue oracle for 4x4 Hermitian matrices: characteristic
// polynomial by Faddeev-LeVerrier, roots from the companion matrix of the
// (real-coefficient) quartic.
std::vector<double> quartic_companion_roots(const Eigen::Matrix4cd& a) {
    std::array<double, 4> c{}; // p(x) = x^4 + c[0] x^3 + c[1] x^2 + c[2] x + c[3]
    Eigen::Matrix4cd m = a;
    for (int k = 1; k <= 4; ++k) {
        c[k - 1] = -m.trace().real() / k;
        if (k < 4) m = a * (m + c[k - 1] * Eigen::Matrix4cd::Identity());
    }

    Eigen::Matrix4d companion = Eigen::Matrix4d::Zero();
    companion(0, 3) = -c[3];
    companion(1, 3) = -c[2];
    companion(2, 3) = -c[1];
    companion(3, 3) = -c[0];
    companion(1, 0) = companion(2, 1) = companion(3, 2) = 1.0;

    const Eigen::EigenSolver<Eigen::Matrix4d> es(companion);
    std::vector<double> roots(4);
    for (int k = 0; k < 4; ++k) roots[k] = es.eigenvalues()(k).real();
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return roots;
}

} // namespace

TEST_CASE("gram matrix of the t=0 field mixture") {
    const ComponentSet cs = jcent::evolve(fig1_spec(), 0.0);
    const GramMatrix p = jcent::gram_matrix(cs);

    CHECK(p.size() == 4);
    CHECK(p(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(p(1, 1).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(p(2, 2)) == 0.0);
    CHECK(std::abs(p(3, 3)) == 0.0);
    // coherent overlap: P_12 = <psi_1|psi_2> = e^{-32}/2
    CHECK(std::abs(p(0, 1) - 0.5 * std::exp(-32.0)) < 1e-15);
    CHECK(p.trace_real() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(p.asymmetry() == 0.0);
}

TEST_CASE("gram matrix of the pure C=1 start") {
    const ComponentSet cs = jcent::evolve(fig1_spec(1.0), 0.0);
    const GramMatrix p = jcent::gram_matrix(cs);
    CHECK(p(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != 0 || j != 0) CHECK(std::abs(p(i, j)) < 1e-15);
}

TEST_CASE("gram matrix trace stays 1 along the evolution") {
    const ScenarioSpec spec = fig1_spec();
    for (double t : {0.5, 3.0, 11.0, 24.0}) {
        const GramMatrix p = jcent::gram_matrix(jcent::evolve(spec, t));
        CHECK(std::abs(p.trace_real() - 1.0) < 1e-10);
    }
}

TEST_CASE("gram matrix rejects unnormalized and mismatched sets") {
    ComponentSet cs;
    cs.components.assign(4, FockVector::basis(8, 0)); // norm 4, not 1
    cs.row_map = {std::vector<std::size_t>{0, 1}, std::vector<std::size_t>{2, 3}};
    CHECK_THROWS_AS(jcent::gram_matrix(cs), jcent::NormalizationError);
    CHECK_NOTHROW(jcent::gram_matrix_unchecked(cs));

    cs.components[2] = FockVector::basis(9, 0);
    CHECK_THROWS_AS(jcent::gram_matrix(cs), jcent::DimensionMismatch);
}

TEST_CASE("eigenvalues: diagonal and rank-one cases") {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(4, 4);
    d(0, 0) = 1.0;
    const SpectrumResult s = jcent::hermitian_eigenvalues(from_eigen(d));
    CHECK(s.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
    for (int k = 1; k < 4; ++k) CHECK(std::abs(s.eigenvalues[k]) < 1e-14);
    CHECK(s.clamp_delta < 1e-13);
}

TEST_CASE("eigenvalues: 2x2 coherent-overlap closed form") {
    // diag(1/2,1/2) with P_12 = g/2 has eigenvalues (1 +- g)/2
    const double g = 0.3;
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(4, 4);
    p(0, 0) = p(1, 1) = 0.5;
    p(0, 1) = p(1, 0) = g / 2.0;
    const SpectrumResult s = jcent::hermitian_eigenvalues(from_eigen(p));
    CHECK(s.eigenvalues[0] == doctest::Approx((1.0 + g) / 2.0).epsilon(1e-13));
    CHECK(s.eigenvalues[1] == doctest::Approx((1.0 - g) / 2.0).epsilon(1e-13));
    CHECK(std::abs(s.eigenvalues[2]) < 1e-14);
    CHECK(std::abs(s.eigenvalues[3]) < 1e-14);
}

TEST_CASE("eigenvalues match the quartic companion-matrix oracle") {
    std::mt19937 rng(20240813);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::MatrixXcd p = random_psd_unit_trace(rng, 4);
        const SpectrumResult s = jcent::hermitian_eigenvalues(from_eigen(p));
        const std::vector<double> oracle =
            quartic_companion_roots(Eigen::Matrix4cd(p));
        for (int k = 0; k < 4; ++k)
            CHECK(std::abs(s.eigenvalues[k] - oracle[k]) < 1e-10);
    }
}

TEST_CASE("eigenvalues: generic n against a dense solver") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::MatrixXcd p = random_psd_unit_trace(rng, 6);
        const SpectrumResult s = jcent::hermitian_eigenvalues(from_eigen(p));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(p);
        for (int k = 0; k < 6; ++k)
            CHECK(std::abs(s.eigenvalues[k] - es.eigenvalues()(5 - k)) < 1e-12);
        CHECK(std::abs(s.raw_sum - 1.0) < 1e-12);
    }
}

TEST_CASE("eigenvalues: non-Hermitian and genuinely negative inputs throw") {
    Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(4, 4);
    bad(0, 1) = 1.0; // P_10 stays 0
    CHECK_THROWS_AS(jcent::hermitian_eigenvalues(from_eigen(bad)),
                    jcent::NonHermitianError);

    Eigen::MatrixXcd neg = Eigen::MatrixXcd::Zero(4, 4);
    neg(0, 0) = 1.0 + 1e-7;
    neg(1, 1) = -1e-7;
    CHECK_THROWS_AS(jcent::hermitian_eigenvalues(from_eigen(neg)),
                    jcent::NegativeEigenvalueError);
}

TEST_CASE("eigenvalues: roundoff negatives are clamped and renormalized") {
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(4, 4);
    p(0, 0) = 1.0;
    p(1, 1) = -1e-9; // inside the clamp window
    const SpectrumResult s = jcent::hermitian_eigenvalues(from_eigen(p));
    CHECK(s.eigenvalues[3] == 0.0);
    CHECK(s.clamp_delta == doctest::Approx(1e-9).epsilon(1e-3));
    double sum = 0.0;
    for (double lam : s.eigenvalues) sum += lam;
    CHECK(sum == 1.0);
}

TEST_CASE("entropy of named spectra") {
    CHECK(jcent::entropy_from_spectrum(spectrum_of({1.0, 0.0, 0.0, 0.0})) == 0.0);
    // the four-level ceiling ln 4
    CHECK(jcent::entropy_from_spectrum(spectrum_of({0.25, 0.25, 0.25, 0.25})) ==
          doctest::Approx(std::log(4.0)).epsilon(1e-14));
    CHECK(jcent::entropy_from_spectrum(spectrum_of({0.5, 0.5, 0.0, 0.0})) ==
          doctest::Approx(kLn2).epsilon(1e-14));
}

TEST_CASE("entropy bounds with the ceiling only at the uniform spectrum") {
    std::mt19937 rng(555);
    for (int trial = 0; trial < 40; ++trial) {
        const SpectrumResult s =
            jcent::hermitian_eigenvalues(from_eigen(random_psd_unit_trace(rng, 4)));
        const double entropy = jcent::entropy_from_spectrum(s);
        CHECK(entropy >= 0.0);
        CHECK(entropy <= std::log(4.0) + 1e-12);
    }
    CHECK(jcent::entropy_from_spectrum(spectrum_of({0.3, 0.3, 0.2, 0.2})) <
          std::log(4.0) - 1e-3);
}

TEST_CASE("purity: pure, balanced, and the spectral identity") {
    Eigen::MatrixXcd pure = Eigen::MatrixXcd::Zero(4, 4);
    pure(0, 0) = 1.0;
    CHECK(jcent::purity(from_eigen(pure)) == doctest::Approx(0.0).epsilon(1e-14));

    Eigen::MatrixXcd half = Eigen::MatrixXcd::Zero(4, 4);
    half(0, 0) = half(1, 1) = 0.5;
    CHECK(jcent::purity(from_eigen(half)) == doctest::Approx(0.5).epsilon(1e-14));

    std::mt19937 rng(777);
    for (int trial = 0; trial < 30; ++trial) {
        const GramMatrix p = from_eigen(random_psd_unit_trace(rng, 4));
        const SpectrumResult s = jcent::hermitian_eigenvalues(p);
        double sum_sq = 0.0;
        for (double lam : s.eigenvalues) sum_sq += lam * lam;
        CHECK(std::abs(jcent::purity(p) - (1.0 - sum_sq)) < 1e-10);
    }
}

TEST_CASE("atomic state: excited start, atom mixture, vacuum Rabi") {
    const AtomicState excited = jcent::atomic_state(jcent::evolve(fig1_spec(), 0.0));
    CHECK(excited.ee.real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(excited.gg) < 1e-12);
    CHECK(std::abs(excited.ge) < 1e-15);

    ScenarioSpec b;
    b.scenario = Scenario::AtomMixture;
    b.alpha = {4.0, 0.0};
    b.weight = 0.5;
    b = jcent::resolve(b);
    const AtomicState mixed = jcent::atomic_state(jcent::evolve(b, 0.0));
    CHECK(mixed.ee.real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(mixed.gg.real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(mixed.ge) < 1e-15);

    ScenarioSpec vac;
    vac.scenario = Scenario::FieldMixture;
    vac.alpha = vac.beta = {0.0, 0.0};
    vac.weight = 0.5;
    vac = jcent::resolve(vac);
    const AtomicState rabi =
        jcent::atomic_state(jcent::evolve(vac, std::acos(-1.0) / 4.0));
    CHECK(rabi.ee.real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rabi.gg.real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(rabi.ge) < 1e-15); // psi_1, psi_2 live on |0>, psi_3, psi_4 on |1>
    CHECK(jcent::atomic_entropy(rabi) == doctest::Approx(kLn2).epsilon(1e-10));
}

TEST_CASE("atomic state rejects unnormalized sets") {
    ComponentSet cs;
    cs.components.assign(4, FockVector::basis(8, 0));
    cs.row_map = {std::vector<std::size_t>{0, 1}, std::vector<std::size_t>{2, 3}};
    CHECK_THROWS_AS(jcent::atomic_state(cs), jcent::NormalizationError);
}

TEST_CASE("atomic eigenvalues: closed form against trace/determinant") {
    AtomicState pure{Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0},
                     Complex{0.0, 0.0}};
    CHECK(jcent::atomic_eigenvalues(pure) == std::pair{1.0, 0.0});
    CHECK(jcent::atomic_entropy(pure) == 0.0);

    AtomicState balanced{Complex{0.5, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0},
                         Complex{0.5, 0.0}};
    CHECK(jcent::atomic_eigenvalues(balanced).first == doctest::Approx(0.5));
    CHECK(jcent::atomic_entropy(balanced) == doctest::Approx(kLn2).epsilon(1e-14));

    // random Bloch vectors give every valid 2x2 state
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        double x = u(rng), y = u(rng), z = u(rng);
        const double r = std::sqrt(x * x + y * y + z * z);
        if (r > 1.0) {
            x /= r;
            y /= r;
            z /= r;
        }
        AtomicState a;
        a.ee = 0.5 * (1.0 + z);
        a.gg = 0.5 * (1.0 - z);
        a.ge = Complex{0.5 * x, 0.5 * y};
        a.eg = std::conj(a.ge);

        const double trace = a.trace_real();
        const double det = (a.ee * a.gg - a.eg * a.ge).real();
        const double root = std::sqrt(trace * trace - 4.0 * det);
        const auto [hi, lo] = jcent::atomic_eigenvalues(a);
        CHECK(std::abs(hi - 0.5 * (trace + root)) < 1e-12);
        CHECK(std::abs(lo - 0.5 * (trace - root)) < 1e-12);
    }
}

TEST_CASE("pure joint state: field and atom entropies coincide") {
    const ScenarioSpec spec = fig1_spec(1.0);
    for (double t : {0.4, 1.9, 6.2, 13.7, 21.0}) {
        const ComponentSet cs = jcent::evolve(spec, t);
        const double field =
            jcent::entropy_from_spectrum(jcent::hermitian_eigenvalues(jcent::gram_matrix(cs)));
        const double atom = jcent::atomic_entropy(jcent::atomic_state(cs));
        CHECK(std::abs(field - atom) < 1e-8);
    }
}

TEST_CASE("entropy and purity vanish together") {
    ScenarioSpec vac;
    vac.scenario = Scenario::FieldMixture;
    vac.alpha = vac.beta = {0.0, 0.0};
    vac.weight = 0.5;
    vac = jcent::resolve(vac);

    const double pi = std::acos(-1.0);
    for (double t = 0.0; t < 2.0 * pi; t += pi / 16.0) {
        const GramMatrix p = jcent::gram_matrix(jcent::evolve(vac, t));
        const double entropy =
            jcent::entropy_from_spectrum(jcent::hermitian_eigenvalues(p));
        const double impurity = jcent::purity(p);
        CHECK((entropy < 1e-6) == (impurity < 1e-6));
    }
}

TEST_CASE("vacuum entropies repeat with period pi") {
    ScenarioSpec vac;
    vac.scenario = Scenario::FieldMixture;
    vac.alpha = vac.beta = {0.0, 0.0};
    vac.weight = 0.5;
    vac = jcent::resolve(vac);

    const double pi = std::acos(-1.0);
    for (double t : {0.15, 0.8, 2.3}) {
        const auto entropy_at = [&](double when) {
            return jcent::entropy_from_spectrum(
                jcent::hermitian_eigenvalues(jcent::gram_matrix(jcent::evolve(vac, when))));
        };
        CHECK(std::abs(entropy_at(t) - entropy_at(t + pi)) < 1e-10);
    }
}
