#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kclass/report.hpp"

namespace kclass::bounds {

enum class LieFamily {
  Linear,           // PSL_n(q)
  Unitary,          // PSU_n(q)
  Symplectic,       // PSp_2n(q)
  OddOrthogonal,    // Omega_2n+1(q), q odd
  PlusOrthogonal,   // POmega+_2n(q)
  MinusOrthogonal,  // POmega-_2n(q)
  Suzuki,           // 2B2(q^2), q^2 = 2^f, f odd
  ReeG2,            // 2G2(q^2), q^2 = 3^f, f odd
  ReeF4,            // 2F4(q^2), q^2 = 2^f, f odd
  TrialityD4,       // 3D4(q)
  TwistedE6,        // 2E6(q)
  G2,
  F4,
  E6,
  E7,
  E8,
  Alternating,
  Sporadic,
};

std::string to_string(LieFamily family);

/// Family plus parameters. For Suzuki and Ree groups p^f is the field size
/// written q^2 in the usual notation.
struct LieFamilySpec {
  LieFamily family;
  unsigned n = 0;
  unsigned long p = 0;
  unsigned f = 1;

  mpz_class q() const;
};

struct SimpleGroupFacts {
  std::uint64_t d;
  std::uint64_t out_order;
  /// Tabulated upper bound on |Aut(T)|, exactly and in bits.
  mpz_class aut_upper;
  double log2_aut_upper;
  /// Exact |Aut(T)|, only for PSL_2 and PSL_3.
  std::optional<mpz_class> exact_aut_order;
  /// Rank of the simply connected algebraic group (untwisted rank for twisted families).
  unsigned lie_rank;
};

bool is_prime(unsigned long n);

/// Throws InvalidInput on parameter/family mismatch or non-Lie families.
void validate(const LieFamilySpec& spec);

SimpleGroupFacts lie_facts(const LieFamilySpec& spec);

struct GammaValue {
  double log2_aut;
  std::uint64_t k;
  double gamma;
};

/// log2|Aut| / ((log2 k)^2 log2 log2 k); throws InvalidInput for k <= 2.
GammaValue gamma(double log2_aut, std::uint64_t k);

double log2(const mpz_class& x);

/// floor(max{e(T), q^r / (d |Out(T)|)}).
mpz_class k_star_lower_bound(const LieFamilySpec& spec, std::optional<std::uint64_t> e_of_t);

/// k(PSL_2(q)): q + 1 for even q, (q + 5) / 2 for odd q. Requires a prime power q >= 4.
std::uint64_t psl2_class_count(std::uint64_t q);

/// k(PGL_2(q)) = q + 2 for odd prime powers q >= 5.
std::uint64_t pgl2_class_count(std::uint64_t q);

/// Returns (p, f) with q = p^f, or nullopt if q is not a prime power.
std::optional<std::pair<unsigned long, unsigned>> prime_power(std::uint64_t q);

enum class C2Exception { None, Alt5, Psl34 };

struct C2Row {
  std::string name;
  double log2_aut;
  std::uint64_t k;
  std::optional<double> table_bound;
  C2Exception exception = C2Exception::None;
};

/// gamma < 1.613 for every non-exceptional row, gamma(A5) <= 1.727 and
/// gamma(PSL3(4)) <= 1.954; one report per row plus a closing summary.
std::vector<VerificationReport> verify_c2(const std::vector<C2Row>& rows);

}  // namespace kclass::bounds
