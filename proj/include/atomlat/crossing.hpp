#pragma once

#include <span>

#include "atomlat/model.hpp"

namespace atomlat {

// Full crossing of one duple: discriminating atoms are replaced by their
// joins with the atoms below the right side. The result satisfies the duple,
// keeps every positive duple of the input, and is the freest model doing so.
// Crossing an already-positive duple returns the model unchanged.
Model full_cross(const Model& m, const Duple& r);

// Left fold of full_cross in list order. Resulting theories are independent
// of the order; the atomizations themselves may differ, which is why the
// fold order is fixed.
Model full_cross_batch(const Model& m, std::span<const Duple> rules);

// Same theory through the other route: atomize by every atom compatible with
// the model, then drop the ones discriminating some rule. Exponential in the
// universe size, hence guarded.
Model full_cross_omega(const Model& m, std::span<const Duple> rules,
                       unsigned guard = kOmegaGuard);

// The freest model satisfying the rules: one singleton atom per constant,
// then a batch crossing.
Model freest_model(TablePtr table, std::span<const Duple> rules);

} // namespace atomlat
