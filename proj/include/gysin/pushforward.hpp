#pragma once

#include "gysin/kernels.hpp"

#include <optional>

namespace gysin {

struct PushforwardOptions {
    // Drop all monomials of grade above the cutoff in the final value.
    std::optional<int> cutoff;
    long long term_ceiling = kTermCeiling;
};

struct PushforwardResult {
    ClassPoly value;
    int fiber_dim = 0;
    // Total degree of the input when homogeneous (coefficient grades count);
    // nullopt for inhomogeneous input.
    std::optional<int> input_degree;
    bool halved = false;
};

// Coefficient extraction of f times the family kernel against the Segre
// series of the assigned bundles. base trivial is applied after extraction;
// halve divides the value by 2 and is only legal on halvable geometries.
// f is a class on the flag bundle itself and need not be symmetric in the
// t variables; symmetric f corresponds to pullbacks from the Grassmann
// bundle.
PushforwardResult pushforward(const TPoly& f, const FlagGeometry& g,
                              bool halve = false,
                              const PushforwardOptions& opts = {});

// Pushforward of the degenerate-flag class attached to lambda: nu is derived
// from lambda by the family's lambda <-> nu conversion and replaces g's mu
// (g supplies family, n, d, twist and base mode). The two-argument form
// pushes f = 1.
PushforwardResult schubert_class_to_base(const Partition& lambda,
                                         const FlagGeometry& g);
PushforwardResult schubert_class_to_base(const Partition& lambda,
                                         const FlagGeometry& g, const TPoly& f);

}  // namespace gysin
