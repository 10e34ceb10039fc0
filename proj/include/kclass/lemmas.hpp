#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kclass/report.hpp"

namespace kclass::lemmas {

/// Inclusive integer range of one sweep variable.
struct Range {
  std::string name;
  std::int64_t lower;
  std::int64_t upper;
};

struct SweepRange {
  std::vector<Range> variables;

  /// Throws InvalidInput if `name` is missing or its range is empty.
  const Range& operator[](const std::string& name) const;
};

/// Exact C(n, k); throws InvalidInput unless 0 <= k <= n.
mpz_class binomial(std::int64_t n, std::int64_t k);

/// Number of partitions of n (Euler's pentagonal recurrence); n <= 100000.
mpz_class partition_count(std::int64_t n);

/// p(0..n) in one pass.
std::vector<mpz_class> partition_counts_upto(std::int64_t n);

/// Partitions of n into distinct odd parts (= self-conjugate partitions).
mpz_class distinct_odd_partition_count(std::int64_t n);

/// k(A_n) = (p(n) + 3 s(n)) / 2 for n >= 2, where s counts partitions into distinct odd parts.
mpz_class alternating_class_count(std::int64_t n);

/// (q^a-1)(q^b-1) <= q^(a+b), (q^a-1)(q^b+1) <= q^(a+b), q >= 2f (and 3f once q >= 16),
/// 2 log2 f <= f for f != 3. Variables: "p" (primes only are used), "f", "a", "b".
std::vector<VerificationReport> verify_prime_power_inequalities(const SweepRange& ranges);

/// (log k)^2 log log k <= k^2 / 2 for 4 <= k <= k_max.
VerificationReport verify_klog_bound(std::int64_t k_max);

struct WeightedCase {
  std::int64_t n;
  std::int64_t k;
  double w;
};

struct WeightedCheck {
  bool holds;
  double lhs;
  double rhs;
  double margin() const { return rhs - lhs; }
};

/// n log n + c2 n (log k)^2 log log k <= w log 3 C(n+k-1, k-1).
WeightedCheck check_weighted_inequality(const WeightedCase& c, double slack = 0.0);

/// The five weighted cases over n <= n_max, k <= k_max, plus the sharpness
/// checks at (n=1, k=221/222) and (n=2, k=8/9) with w = 1.
std::vector<VerificationReport> verify_weighted_cases(std::int64_t n_max, std::int64_t k_max);

enum class SumProductPart { General, Mixed, Equal };

/// Part (i) for r >= 3: 2.5 sum <= prod. Part (ii) for r = 2: 2.5 x1 + 1.17 x2 <= x1 x2.
/// Part (iii) for r = 2 and x >= 5: 2.5 (x1 + x2) <= x1 x2. Exact integer arithmetic.
/// Throws InvalidInput if some x < 4 (or < 5 for part iii) or r does not fit the part.
bool verify_sum_product(std::span<const std::int64_t> xs, SumProductPart part);

/// Sweeps every part over r <= r_max, 4 <= x <= x_max, plus the induction step.
std::vector<VerificationReport> verify_sum_product_sweep(std::int64_t r_max, std::int64_t x_max);

/// p(n)/4 >= e^(2 sqrt n)/56 over [n_min, n_max] and the k >= 250 consequence at n = 22.
std::vector<VerificationReport> verify_partition_bound(std::int64_t n_min, std::int64_t n_max);

}  // namespace kclass::lemmas
