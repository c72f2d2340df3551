// Ratio-ordered greedy construction.

#ifndef MKGA_GREEDY_HPP
#define MKGA_GREEDY_HPP

#include <optional>

#include "mkga/instance.hpp"
#include "mkga/multipliers.hpp"

namespace mkga {

// Scans objects in ratio order and keeps every object that still fits in
// all m constraints; misfits are skipped and the scan continues. When
// `candidates` is given only its selected objects are considered. The
// result is always feasible.
Selection greedy_construct(const Instance& instance, const UtilityRatios& ratios,
                           const std::optional<Selection>& candidates = std::nullopt);

// Objective of greedy_construct over all objects with divide_by_m ratios.
double greedy_estimate(const Instance& instance, const Multipliers& mult);

}  // namespace mkga

#endif  // MKGA_GREEDY_HPP
