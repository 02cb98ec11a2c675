#include "submodea/core.hpp"

namespace submodea {

double marginal_gain(const ObjectiveFunction& obj, const Solution& x, int i) {
  if (i < 0 || i >= obj.n()) throw std::out_of_range("marginal_gain: element index out of range");
  if (x.size() != obj.n()) throw std::invalid_argument("marginal_gain: solution length mismatch");
  if (x.test(i)) return 0.0;
  const double base =
      x.cached_objective() ? *x.cached_objective() : obj.evaluate(x.bits());
  BitString with = x.bits();
  with.set(i);
  return obj.evaluate(with) - base;
}

std::pair<double, double> evaluate_cached(const Instance& inst, const Solution& x) {
  if (x.size() != inst.n) throw std::invalid_argument("evaluate_cached: solution length mismatch");
  if (!x.cached_objective()) x.store_objective(inst.objective->evaluate(x.bits()));
  if (!x.cached_cost()) x.store_cost(inst.cost->evaluate(x.bits()));
  return {*x.cached_objective(), *x.cached_cost()};
}

}  // namespace submodea
