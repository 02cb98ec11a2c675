#ifndef SUBMODEA_MUTATION_HPP
#define SUBMODEA_MUTATION_HPP

#include "submodea/core.hpp"
#include "submodea/random.hpp"

namespace submodea {

enum class MutationKind {
  StandardBit,      // flip each bit independently with probability 1/n
  StandardBitPlus,  // standard-bit-mutation redrawn until at least one bit flipped
};

/// Stateless offspring generator; all randomness comes from the caller's
/// RandomSource, so one operator can be shared across threads as long as each
/// thread draws from its own generator.
struct MutationOperator {
  MutationKind kind = MutationKind::StandardBit;
  int n = 0;

  Solution mutate(const Solution& parent, RandomSource& rng) const;
};

Solution mutate(const MutationOperator& op, const Solution& parent, RandomSource& rng);

/// Probability that a mutation flips exactly one prescribed bit and nothing
/// else: (1/n) * (1 - 1/n)^(n-1). Lower-bounded by 1/(e*n) for every n >= 1.
double single_bit_flip_probability(int n);

}  // namespace submodea

#endif  // SUBMODEA_MUTATION_HPP
