#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kclass/autorbits.hpp"
#include "kclass/corpus.hpp"
#include "kclass/group.hpp"
#include "kclass/report.hpp"

namespace kclass {

/// Minimal normal subgroups M_1..M_r of a socle; block i has `factors`
/// simple factors T_i with k*(T_i) = `k_star`.
struct SocleShape {
  std::vector<FactorBlock> blocks;

  unsigned total_factors() const;
  /// Throws InvalidInput unless r >= 1, every n_i >= 1 and every k_i >= 4.
  void validate() const;
};

/// log3|G| < k(G), checked exactly as |G| < 3^k(G), plus whether
/// k(G) = ceil(log3|G|). Skipped when G cannot be enumerated within `cap`.
VerificationReport verify_bertram(const std::string& subject, const FiniteGroup& group, std::size_t cap = kDefaultCap);

/// Same check from a known order and class count.
VerificationReport verify_bertram(const std::string& subject, const mpz_class& order, const mpz_class& k);

/// |G| <= 3^k(G) for T <= G <= A. When `k_star` is given, also reports
/// whether |A| <= 3^k* (informational; does not affect the verdict).
VerificationReport verify_base3_almost_simple(const std::string& subject, const AmbientPair& pair,
                                              const FiniteGroup& group, std::optional<std::size_t> k_star,
                                              std::size_t cap = kDefaultCap);

/// s |G| <= 3^(k(G)/s) for every listed G between T and Gamma, where
/// |A : Gamma| = s. Throws InvalidInput if Gamma is not inside A, T is not
/// normal in Gamma, or the index is not s.
VerificationReport verify_index_reduction(const std::string& subject, const FiniteGroup& ambient,
                                          const FiniteGroup& gamma, std::span<const Permutation> socle_generators,
                                          std::uint64_t s, std::size_t cap = kDefaultCap);

/// The product-of-binomials lower bound for k(G), the class count of G inside
/// each M_i against (k_i/n_i)^n_i, and log2|G| < n log2 n + c2 sum n_i (log2 k_i)^2 log2 log2 k_i.
/// The socle generators are split into n equal consecutive chunks, one per
/// simple factor, and block i takes the next n_i chunks.
VerificationReport verify_socle_bounds(const std::string& subject, const SocleShape& shape, const FiniteGroup& group,
                                       std::span<const Permutation> socle_generators, std::size_t cap = kDefaultCap);

/// Distinct subgroups <T, S> of A where S runs over subsets (size <= 3) of
/// the generators of A and their pairwise products. Always contains T and A;
/// sorted by order. At most `limit` groups.
std::vector<FiniteGroup> intermediate_subgroups(const FiniteGroup& ambient, std::span<const Permutation> socle_generators,
                                                std::size_t limit = 64);

struct VerifyOptions {
  std::size_t cap = kDefaultCap;
  std::filesystem::path catalog = default_catalog_dir();
};

const std::vector<std::string>& suite_names();

/// Runs one of tables, c2, lemmas, bertram, almost-simple, socle, all.
/// Throws InvalidInput for an unknown suite.
std::vector<VerificationReport> run_suite(std::string_view suite, const VerifyOptions& options = {});

}  // namespace kclass
