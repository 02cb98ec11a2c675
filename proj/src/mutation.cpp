#include "submodea/mutation.hpp"

#include <cmath>
#include <stdexcept>

namespace submodea {
namespace {

// Distance to the next flipped position under independent Bernoulli(p)
// per-bit draws, sampled as a geometric variate (number of unflipped bits
// skipped). Equivalent in distribution to testing every bit, but costs O(1)
// per flip instead of O(n) per offspring.
std::int64_t geometric_skip(RandomSource& rng, double log1m_p) {
  const double u = 1.0 - rng.next_double();  // (0, 1]
  return static_cast<std::int64_t>(std::floor(std::log(u) / log1m_p));
}

// Applies one standard-bit-mutation pass; returns the number of flips.
int flip_pass(BitString& bits, int n, double log1m_p, RandomSource& rng) {
  int flips = 0;
  std::int64_t pos = geometric_skip(rng, log1m_p);
  while (pos < n) {
    bits.flip(static_cast<int>(pos));
    ++flips;
    pos += 1 + geometric_skip(rng, log1m_p);
  }
  return flips;
}

}  // namespace

Solution MutationOperator::mutate(const Solution& parent, RandomSource& rng) const {
  if (parent.size() != n) throw std::invalid_argument("mutate: parent length mismatch");
  if (n == 1) {
    // p = 1/n = 1: the single bit flips with probability one in both kinds.
    BitString bits = parent.bits();
    bits.flip(0);
    return Solution(bits);
  }
  const double log1m_p = std::log1p(-1.0 / n);
  BitString bits = parent.bits();
  int flips = flip_pass(bits, n, log1m_p, rng);
  if (kind == MutationKind::StandardBitPlus) {
    // Redraw the whole pass from scratch until something flipped. Flip
    // positions within a pass are distinct, so flips > 0 means the offspring
    // differs from the parent.
    while (flips == 0) {
      bits = parent.bits();
      flips = flip_pass(bits, n, log1m_p, rng);
    }
  }
  return Solution(bits);
}

Solution mutate(const MutationOperator& op, const Solution& parent, RandomSource& rng) {
  return op.mutate(parent, rng);
}

double single_bit_flip_probability(int n) {
  if (n < 1) throw std::invalid_argument("single_bit_flip_probability: n must be >= 1");
  if (n == 1) return 1.0;
  const double p = 1.0 / n;
  return p * std::pow(1.0 - p, n - 1);
}

}  // namespace submodea
