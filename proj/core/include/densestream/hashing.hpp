#pragma once

#include <cstdint>

#include "densestream/common.hpp"

namespace densestream {

bool is_prime(uint64_t n);

// Smallest prime >= n.
uint64_t next_prime(uint64_t n);

// Smallest prime p >= n with p = 1 (mod 4); guaranteed p <= 2n for n >= 7.
uint64_t next_prime_1mod4(uint64_t n);

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m);

// Affine permutation x -> (c x + d) mod p over a prime modulus. A bijection
// on [0, p) for every c in [1, p), and 2-wise independent over the seed
// family: for fixed x1 != x2 the image pair is uniform over ordered pairs of
// distinct values.
struct PermHash {
  uint64_t p = 0;
  uint64_t c = 1;
  uint64_t d = 0;

  uint64_t operator()(uint64_t x) const { return (mulmod(c, x, p) + d) % p; }
};

// c uniform in [1, p), d uniform in [0, p).
PermHash sample_perm_hash(uint64_t p, Rng& rng);

// Pairwise-independent bucket hash: affine map over a fixed 61-bit Mersenne
// prime, reduced mod the bucket count.
struct BucketHash {
  static constexpr uint64_t kPrime = (1ULL << 61) - 1;

  uint64_t c = 1;
  uint64_t d = 0;
  uint64_t buckets = 1;

  uint64_t operator()(uint64_t x) const {
    return (mulmod(c, x % kPrime, kPrime) + d) % kPrime % buckets;
  }
};

BucketHash sample_bucket_hash(uint64_t buckets, Rng& rng);

}  // namespace densestream
