#pragma once

// Path-enumeration kernels. Each has a serial reference implementation and an
// OpenMP one that partitions the path index range across threads and merges
// per-thread partial results; the two must agree exactly.

#include <cstdint>
#include <functional>
#include <map>

#include "affcrystal/energy.hpp"
#include "affcrystal/laurent.hpp"

namespace affcrystal {

enum class Exec { serial, parallel };

/// content vector -> sum of q^{E(b)} over the paths with that content.
using GradedWeightTable = std::map<FiniteWeight, LaurentPoly>;

/// Must be safe to call concurrently.
using PathFilter = std::function<bool(const Path&)>;

struct RestrictedSum {
  LaurentPoly poly;
  std::uint64_t count = 0;
};

namespace serial {
GradedWeightTable graded_weight_table(const TensorCrystal& B, const EnergyFunction& E);
RestrictedSum restricted_sum(const TensorCrystal& B, const EnergyFunction& E, const PathFilter& keep);
}  // namespace serial

namespace omp {
GradedWeightTable graded_weight_table(const TensorCrystal& B, const EnergyFunction& E);
RestrictedSum restricted_sum(const TensorCrystal& B, const EnergyFunction& E, const PathFilter& keep);
}  // namespace omp

GradedWeightTable graded_weight_table(const TensorCrystal& B, const EnergyFunction& E, Exec exec);
RestrictedSum restricted_sum(const TensorCrystal& B, const EnergyFunction& E, const PathFilter& keep, Exec exec);

/// Bounds the OpenMP worker count; values < 1 restore the runtime default.
void set_worker_count(int workers);

}  // namespace affcrystal
