#include "mkga/multipliers.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mkga {

namespace {

// sum_j l_j w_ij for every object i.
std::vector<double> weighted_cost(const Instance& instance,
                                  const std::vector<double>& l) {
  std::vector<double> cost(instance.n, 0.0);
  for (std::size_t j = 0; j < instance.m; ++j) {
    const auto& row = instance.weights[j];
    for (std::size_t i = 0; i < instance.n; ++i) cost[i] += l[j] * row[i];
  }
  return cost;
}

void check_shape(const Instance& instance, const std::vector<double>& l) {
  if (l.size() != instance.m) {
    throw std::invalid_argument("multiplier vector has " + std::to_string(l.size()) +
                                " entries, instance has m=" +
                                std::to_string(instance.m));
  }
}

}  // namespace

Multipliers init_multipliers(const Instance& instance) {
  Multipliers mult;
  mult.l.assign(instance.m, 1.0);
  mult.best_bound = relaxation_bound(instance, mult.l);
  return mult;
}

Selection relaxed_selection(const Instance& instance, const Multipliers& mult) {
  check_shape(instance, mult.l);
  const auto cost = weighted_cost(instance, mult.l);
  Selection sel(instance.n);
  for (std::size_t i = 0; i < instance.n; ++i)
    if (instance.values[i] - cost[i] > 0) sel.set(i);
  return sel;
}

double relaxation_bound(const Instance& instance, const std::vector<double>& l) {
  check_shape(instance, l);
  double bound = 0.0;
  for (std::size_t j = 0; j < instance.m; ++j) bound += l[j] * instance.capacities[j];
  const auto cost = weighted_cost(instance, l);
  for (std::size_t i = 0; i < instance.n; ++i)
    bound += std::max(0.0, instance.values[i] - cost[i]);
  return bound;
}

double relaxation_bound(const Instance& instance, const Multipliers& mult) {
  return relaxation_bound(instance, mult.l);
}

Multipliers update_multipliers(const Instance& instance, const Multipliers& mult,
                               double step) {
  if (!(step > 0)) throw std::invalid_argument("subgradient step must be positive");
  const Selection relaxed = relaxed_selection(instance, mult);

  Multipliers next = mult;
  for (std::size_t j = 0; j < instance.m; ++j) {
    const double g = usage(instance, relaxed, j) - instance.capacities[j];
    const double scale = std::max(instance.capacities[j], 1.0);
    next.l[j] = std::max(kMultiplierFloor, mult.l[j] + step * g / scale);
  }
  next.iterations_run = mult.iterations_run + 1;
  next.best_bound = std::min(mult.best_bound, relaxation_bound(instance, next.l));
  return next;
}

double price_scale(const Instance& instance) {
  double value = 0.0, weight = 0.0;
  for (double v : instance.values) value += v;
  for (const auto& row : instance.weights)
    for (double w : row) weight += w;
  return value > 0 && weight > 0 ? std::max(1.0, value / weight) : 1.0;
}

Multipliers compute_multipliers(const Instance& instance, std::size_t iterations,
                                double initial_step) {
  if (!(initial_step > 0))
    throw std::invalid_argument("initial subgradient step must be positive");

  const double scale = price_scale(instance);
  Multipliers current = init_multipliers(instance);
  std::vector<double> best_l = current.l;
  double best = current.best_bound;
  for (std::size_t k = 1; k <= iterations; ++k) {
    current = update_multipliers(instance, current,
                                 initial_step * scale / static_cast<double>(k));
    const double bound = relaxation_bound(instance, current.l);
    if (bound < best) {
      best = bound;
      best_l = current.l;
    }
  }
  return Multipliers{std::move(best_l), current.iterations_run, best};
}

UtilityRatios compute_ratios(const Instance& instance, const Multipliers& mult,
                             bool divide_by_m) {
  check_shape(instance, mult.l);
  UtilityRatios out;
  out.denominator = weighted_cost(instance, mult.l);
  if (divide_by_m)
    for (auto& d : out.denominator) d /= static_cast<double>(instance.m);

  out.r.resize(instance.n);
  for (std::size_t i = 0; i < instance.n; ++i) {
    const double d = out.denominator[i];
    out.r[i] = d > 0 ? instance.values[i] / d
                     : std::numeric_limits<double>::infinity();
  }

  out.order.resize(instance.n);
  std::iota(out.order.begin(), out.order.end(), std::size_t{0});
  const auto& r = out.r;
  const auto& v = instance.values;
  std::stable_sort(out.order.begin(), out.order.end(),
                   [&](std::size_t a, std::size_t b) {
                     const bool free_a = std::isinf(r[a]);
                     const bool free_b = std::isinf(r[b]);
                     if (free_a != free_b) return free_a;
                     if (free_a) return v[a] > v[b];
                     return r[a] > r[b];
                   });

  // Ratios that agree to within rounding are ties and go by index, so the
  // order does not depend on how the denominators were scaled.
  auto first = std::find_if(out.order.begin(), out.order.end(),
                            [&](std::size_t i) { return !std::isinf(r[i]); });
  while (first != out.order.end()) {
    auto last = std::next(first);
    while (last != out.order.end() &&
           r[*std::prev(last)] - r[*last] <= kRatioTieTolerance * r[*std::prev(last)])
      ++last;
    std::sort(first, last);
    first = last;
  }
  return out;
}

}  // namespace mkga
