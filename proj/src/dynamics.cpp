#include "jcent/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace jcent {

namespace {

const Complex kMinusI{0.0, -1.0};

void check_common(const ScenarioSpec& spec, double t) {
    if (!(spec.weight >= 0.0 && spec.weight <= 1.0))
        throw std::invalid_argument("ScenarioSpec: weight C must be in [0,1]");
    if (spec.dim < 1)
        throw std::invalid_argument("ScenarioSpec: dim must be resolved to >= 1");
    if (!std::isfinite(t))
        throw std::invalid_argument("evolve: t not finite");
}

double rabi_cos_shifted(std::size_t n, double t) { // cos(t sqrt(n+1))
    return std::cos(t * std::sqrt(static_cast<double>(n) + 1.0));
}

double rabi_sin_shifted(std::size_t n, double t) { // sin(t sqrt(n+1))
    return std::sin(t * std::sqrt(static_cast<double>(n) + 1.0));
}

double rabi_cos(std::size_t n, double t) { // cos(t sqrt(n))
    return std::cos(t * std::sqrt(static_cast<double>(n)));
}

double rabi_sin(std::size_t n, double t) { // sin(t sqrt(n))
    return std::sin(t * std::sqrt(static_cast<double>(n)));
}

} // namespace

std::size_t auto_dim(const ScenarioSpec& spec) {
    double m = std::norm(spec.alpha);
    if (spec.scenario == Scenario::FieldMixture) m = std::max(m, std::norm(spec.beta));
    return static_cast<std::size_t>(std::ceil(m + 10.0 * std::sqrt(m) + 20.0));
}

ScenarioSpec resolve(const ScenarioSpec& spec) {
    if (!(spec.weight >= 0.0 && spec.weight <= 1.0))
        throw std::invalid_argument("ScenarioSpec: weight C must be in [0,1]");
    ScenarioSpec r = spec;
    if (r.dim == 0) r.dim = auto_dim(spec);
    return r;
}

ComponentSet evolve_field_mixture(const ScenarioSpec& spec, double t) {
    if (spec.scenario != Scenario::FieldMixture)
        throw std::invalid_argument("evolve_field_mixture: spec is not FieldMixture");
    check_common(spec, t);

    const double wc = std::sqrt(spec.weight);
    const double wg = std::sqrt(1.0 - spec.weight);
    const FockVector a = coherent_state(spec.alpha, spec.dim, spec.tail_tolerance);
    const FockVector b = coherent_state(spec.beta, spec.dim, spec.tail_tolerance);

    auto cosf = [t](std::size_t n) { return rabi_cos_shifted(n, t); };
    auto sinf = [t](std::size_t n) { return rabi_sin_shifted(n, t); };

    ComponentSet cs;
    cs.time = t;
    cs.scenario = Scenario::FieldMixture;
    cs.components.push_back(wc * apply_diag_fn(cosf, a));
    cs.components.push_back(wg * apply_diag_fn(cosf, b));
    cs.components.push_back((kMinusI * wc) *
                            apply_raise(apply_diag_fn(sinf, a), spec.tail_tolerance));
    cs.components.push_back((kMinusI * wg) *
                            apply_raise(apply_diag_fn(sinf, b), spec.tail_tolerance));
    cs.row_map = {std::vector<std::size_t>{0, 1}, std::vector<std::size_t>{2, 3}};
    return cs;
}

ComponentSet evolve_atom_mixture(const ScenarioSpec& spec, double t) {
    if (spec.scenario != Scenario::AtomMixture)
        throw std::invalid_argument("evolve_atom_mixture: spec is not AtomMixture");
    check_common(spec, t);

    const double wc = std::sqrt(spec.weight);
    const double wg = std::sqrt(1.0 - spec.weight);
    const FockVector a = coherent_state(spec.alpha, spec.dim, spec.tail_tolerance);

    auto cos1 = [t](std::size_t n) { return rabi_cos_shifted(n, t); };
    auto sin1 = [t](std::size_t n) { return rabi_sin_shifted(n, t); };
    auto cos0 = [t](std::size_t n) { return rabi_cos(n, t); };
    auto sin0 = [t](std::size_t n) { return rabi_sin(n, t); };

    ComponentSet cs;
    cs.time = t;
    cs.scenario = Scenario::AtomMixture;
    cs.components.push_back(wc * apply_diag_fn(cos1, a));
    cs.components.push_back((kMinusI * wg) * apply_lower(apply_diag_fn(sin0, a)));
    cs.components.push_back((kMinusI * wc) *
                            apply_raise(apply_diag_fn(sin1, a), spec.tail_tolerance));
    cs.components.push_back(wg * apply_diag_fn(cos0, a));
    cs.row_map = {std::vector<std::size_t>{0, 1}, std::vector<std::size_t>{2, 3}};
    return cs;
}

ComponentSet evolve(const ScenarioSpec& spec, double t) {
    return spec.scenario == Scenario::FieldMixture ? evolve_field_mixture(spec, t)
                                                   : evolve_atom_mixture(spec, t);
}

double atomic_inversion(const ComponentSet& cs) {
    double excited = 0.0;
    double ground = 0.0;
    for (std::size_t k : cs.row_map[0]) excited += cs.components[k].norm_sq();
    for (std::size_t k : cs.row_map[1]) ground += cs.components[k].norm_sq();
    return excited - ground;
}

} // namespace jcent
