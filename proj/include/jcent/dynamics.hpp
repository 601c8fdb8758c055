#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "jcent/fock.hpp"

namespace jcent {

enum class Scenario {
    FieldMixture, // field in C|alpha><alpha| + (1-C)|beta><beta|, atom excited
    AtomMixture,  // atom in C|e><e| + (1-C)|g><g|, field coherent |alpha>
};

// Initial-state description plus truncation. The coupling is fixed to 1;
// every time argument below is the dimensionless lambda*t.
struct ScenarioSpec {
    Scenario scenario = Scenario::FieldMixture;
    Complex alpha{4.0, 0.0};
    Complex beta{-4.0, 0.0}; // FieldMixture only
    double weight = 0.5;     // mixing weight C of the first branch, in [0,1]
    std::size_t dim = 0;     // 0 = auto
    double tail_tolerance = kDefaultTailTolerance;
};

// Truncation covering the Poisson tail of the largest coherent amplitude in
// play: ceil(m + 10*sqrt(m) + 20) with m = max |amplitude|^2.
std::size_t auto_dim(const ScenarioSpec& spec);

// Resolved copy: dim filled in when 0, weight range checked.
ScenarioSpec resolve(const ScenarioSpec& spec);

// The four unnormalized field components |psi_k> of the evolved joint state,
// in block order: components in row_map[0] sit on the excited atomic row of
// the joint density matrix, row_map[1] on the ground row.
struct ComponentSet {
    std::vector<FockVector> components;
    std::array<std::vector<std::size_t>, 2> row_map; // [0]=excited, [1]=ground
    double time = 0.0;
    Scenario scenario = Scenario::FieldMixture;

    double total_norm_sq() const {
        double s = 0.0;
        for (const FockVector& psi : components) s += psi.norm_sq();
        return s;
    }
};

// Field-mixture components:
//   psi_1 = sqrt(C)   cos(t sqrt(n+1)) |alpha>
//   psi_2 = sqrt(1-C) cos(t sqrt(n+1)) |beta>
//   psi_3 = -i sqrt(C)   V^dag sin(t sqrt(n+1)) |alpha>
//   psi_4 = -i sqrt(1-C) V^dag sin(t sqrt(n+1)) |beta>
ComponentSet evolve_field_mixture(const ScenarioSpec& spec, double t);

// Atom-mixture components:
//   psi_1 = sqrt(C)   cos(t sqrt(n+1)) |alpha>
//   psi_2 = -i sqrt(1-C) V     sin(t sqrt(n))   |alpha>
//   psi_3 = -i sqrt(C)   V^dag sin(t sqrt(n+1)) |alpha>
//   psi_4 = sqrt(1-C) cos(t sqrt(n)) |alpha>
ComponentSet evolve_atom_mixture(const ScenarioSpec& spec, double t);

// Dispatch on spec.scenario.
ComponentSet evolve(const ScenarioSpec& spec, double t);

// <sigma_z> = excited-row population minus ground-row population, in [-1,1].
double atomic_inversion(const ComponentSet& cs);

} // namespace jcent
