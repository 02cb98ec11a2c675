#ifndef SUBMODEA_CORE_HPP
#define SUBMODEA_CORE_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>

#include "submodea/bitstring.hpp"

namespace submodea {

/// Thrown when an internal invariant is violated (a bug, not a usage error).
/// The CLI maps this to its own exit code, distinct from usage/parse errors.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// A candidate subset of the ground set, with lazily filled objective and
/// cost values. The bit string length is fixed at construction. Cached
/// values, once present, always equal a fresh evaluation of the same bits;
/// anything that changes the bits must go through flip()/set(), which drop
/// the caches.
class Solution {
 public:
  Solution() = default;
  explicit Solution(int n) : bits_(n) {}
  explicit Solution(BitString bits) : bits_(std::move(bits)) {}

  const BitString& bits() const { return bits_; }
  int size() const { return bits_.size(); }

  bool test(int i) const { return bits_.test(i); }
  int count() const { return bits_.count(); }

  void flip(int i) {
    bits_.flip(i);
    invalidate();
  }
  void set(int i, bool value = true) {
    bits_.set(i, value);
    invalidate();
  }

  std::optional<double> cached_objective() const { return cached_f_; }
  std::optional<double> cached_cost() const { return cached_c_; }
  void store_objective(double f) const { cached_f_ = f; }
  void store_cost(double c) const { cached_c_ = c; }

  friend bool operator==(const Solution& a, const Solution& b) { return a.bits_ == b.bits_; }
  friend bool operator!=(const Solution& a, const Solution& b) { return !(a == b); }

 private:
  void invalidate() {
    cached_f_.reset();
    cached_c_.reset();
  }

  BitString bits_;
  // Caches are value-semantics bookkeeping for an immutable-once-built
  // solution, so filling them through a const reference is fine.
  mutable std::optional<double> cached_f_;
  mutable std::optional<double> cached_c_;
};

/// Set-function contract: deterministic, non-negative. Monotonicity and
/// submodularity are properties of concrete implementations, checked by the
/// analysis utilities, never assumed here.
class ObjectiveFunction {
 public:
  virtual ~ObjectiveFunction() = default;
  virtual int n() const = 0;
  virtual double evaluate(const BitString& x) const = 0;
};

/// Cost-function contract: c(empty) = 0, monotone under element insertion.
/// min_increment() is a positive lower bound on the cost increase caused by
/// adding any single element to any set.
class CostFunction {
 public:
  virtual ~CostFunction() = default;
  virtual int n() const = 0;
  virtual double evaluate(const BitString& x) const = 0;
  virtual double min_increment() const = 0;
};

/// One constrained-maximization problem: maximize objective(x) subject to
/// cost(x) <= budget over subsets of an n-element ground set.
struct Instance {
  std::shared_ptr<const ObjectiveFunction> objective;
  std::shared_ptr<const CostFunction> cost;
  double budget = 0;
  int n = 0;

  Instance(std::shared_ptr<const ObjectiveFunction> obj,
           std::shared_ptr<const CostFunction> cst, double b)
      : objective(std::move(obj)), cost(std::move(cst)), budget(b) {
    if (!objective || !cost) throw std::invalid_argument("Instance: null function");
    if (objective->n() != cost->n())
      throw std::invalid_argument("Instance: objective and cost dimension mismatch");
    if (b <= 0) throw std::invalid_argument("Instance: budget must be positive");
    n = objective->n();
  }
};

/// Objective increase from adding element i to x; 0 if i is already in x.
double marginal_gain(const ObjectiveFunction& obj, const Solution& x, int i);

/// Fills both caches of x (if absent) and returns (objective, cost).
/// Repeated calls return the cached values without re-evaluating.
std::pair<double, double> evaluate_cached(const Instance& inst, const Solution& x);

}  // namespace submodea

#endif  // SUBMODEA_CORE_HPP
