// Random instance generator in the usual MKP convention: integer values in
// [1, 100], weights in [1, 50], capacity_j = floor(tightness * row sum).

#ifndef MKGA_GENERATE_HPP
#define MKGA_GENERATE_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include "mkga/instance.hpp"

namespace mkga {

inline constexpr double kDefaultTightness = 0.5;

Instance generate_instance(std::size_t n, std::size_t m, std::uint64_t seed,
                           double tightness = kDefaultTightness,
                           std::string name = "generated");

}  // namespace mkga

#endif  // MKGA_GENERATE_HPP
