#include "densestream/hashing.hpp"

namespace densestream {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

uint64_t next_prime(uint64_t n) {
  if (n < 3) return 2;
  uint64_t p = n | 1;
  while (!is_prime(p)) p += 2;
  return p;
}

uint64_t next_prime_1mod4(uint64_t n) {
  if (n < 7) throw InputError("next_prime_1mod4 requires n >= 7");
  // First candidate >= n that is 1 mod 4, then step in residue class.
  uint64_t p = n + (5 - n % 4) % 4;
  while (!is_prime(p)) p += 4;
  return p;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

PermHash sample_perm_hash(uint64_t p, Rng& rng) {
  if (!is_prime(p)) throw ConfigError("permutation hash modulus must be prime");
  PermHash h;
  h.p = p;
  h.c = 1 + uniform_below(rng, p - 1);
  h.d = uniform_below(rng, p);
  return h;
}

BucketHash sample_bucket_hash(uint64_t buckets, Rng& rng) {
  if (buckets == 0) throw ConfigError("bucket hash needs at least one bucket");
  BucketHash h;
  h.c = 1 + uniform_below(rng, BucketHash::kPrime - 1);
  h.d = uniform_below(rng, BucketHash::kPrime);
  h.buckets = buckets;
  return h;
}

}  // namespace densestream
