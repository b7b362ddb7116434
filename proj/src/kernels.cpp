#include "affcrystal/kernels.hpp"

#include <omp.h>

#include <exception>

namespace affcrystal {

namespace serial {

GradedWeightTable graded_weight_table(const TensorCrystal& B, const EnergyFunction& E) {
  GradedWeightTable table;
  B.for_each([&](const Path& b) { table[B.weight(b)].add_term(E(b), 1); });
  return table;
}

RestrictedSum restricted_sum(const TensorCrystal& B, const EnergyFunction& E, const PathFilter& keep) {
  RestrictedSum out;
  B.for_each([&](const Path& b) {
    if (!keep(b)) return;
    out.poly.add_term(E(b), 1);
    ++out.count;
  });
  return out;
}

}  // namespace serial

namespace omp {

GradedWeightTable graded_weight_table(const TensorCrystal& B, const EnergyFunction& E) {
  const auto total = static_cast<std::int64_t>(B.cardinality());
  GradedWeightTable table;
  std::exception_ptr failure;
#pragma omp parallel
  {
    GradedWeightTable local;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::int64_t idx = 0; idx < total; ++idx) {
      try {
        const Path b = B.element_at(static_cast<std::uint64_t>(idx));
        local[B.weight(b)].add_term(E(b), 1);
      } catch (...) {
#pragma omp critical(affcrystal_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(affcrystal_merge)
    for (auto& [w, p] : local) table[w] += p;
  }
  if (failure) std::rethrow_exception(failure);
  return table;
}

RestrictedSum restricted_sum(const TensorCrystal& B, const EnergyFunction& E, const PathFilter& keep) {
  const auto total = static_cast<std::int64_t>(B.cardinality());
  RestrictedSum out;
  std::exception_ptr failure;
#pragma omp parallel
  {
    RestrictedSum local;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::int64_t idx = 0; idx < total; ++idx) {
      try {
        const Path b = B.element_at(static_cast<std::uint64_t>(idx));
        if (keep(b)) {
          local.poly.add_term(E(b), 1);
          ++local.count;
        }
      } catch (...) {
#pragma omp critical(affcrystal_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(affcrystal_merge)
    {
      out.poly += local.poly;
      out.count += local.count;
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace omp

GradedWeightTable graded_weight_table(const TensorCrystal& B, const EnergyFunction& E, Exec exec) {
  return exec == Exec::serial ? serial::graded_weight_table(B, E) : omp::graded_weight_table(B, E);
}

RestrictedSum restricted_sum(const TensorCrystal& B, const EnergyFunction& E, const PathFilter& keep, Exec exec) {
  return exec == Exec::serial ? serial::restricted_sum(B, E, keep) : omp::restricted_sum(B, E, keep);
}

void set_worker_count(int workers) {
  omp_set_num_threads(workers >= 1 ? workers : omp_get_num_procs());
}

}  // namespace affcrystal
