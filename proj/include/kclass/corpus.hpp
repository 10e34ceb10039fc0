#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "kclass/autorbits.hpp"
#include "kclass/bounds.hpp"
#include "kclass/group.hpp"
#include "kclass/permutation.hpp"

namespace kclass {

enum class SectionTag { Ambient, Socle };

struct GroupSection {
  SectionTag tag;
  std::vector<Permutation> generators;
};

struct GroupFile {
  std::string name;
  std::size_t degree = 0;
  std::vector<GroupSection> sections;

  /// True when the file had no section headers: one group, ambient = socle.
  bool implicit_section = false;

  const GroupSection* find(SectionTag tag) const;
  FiniteGroup ambient() const;
  /// Socle generators; the ambient ones when there is no socle section.
  std::vector<Permutation> socle_generators() const;
};

/// Throws ParseError (with line number) on any grammar violation.
GroupFile parse_group_file(std::string_view text);
std::string serialize(const GroupFile& file);
GroupFile load_group_file(const std::filesystem::path& path);

enum class FamilyKind { Alternating, Sporadic, Lie };

struct Family {
  FamilyKind kind = FamilyKind::Sporadic;
  unsigned n = 0;   // alternating degree, or Lie dimension
  std::uint64_t q = 0;

  /// PSL_n(q) as a bounds spec; throws InvalidInput for other kinds.
  bounds::LieFamilySpec lie_spec() const;
};

/// How an entry's ambient relates to its socle.
enum class EntryKind { Aut, Sub, Pgl, Gamma, Product };

/// One simple-factor block of a product entry: `factors` copies of a simple
/// group whose k* is `k_star`.
struct FactorBlock {
  unsigned factors;
  unsigned k_star;
};

struct CatalogEntry {
  std::string name;
  /// Absent for formula-only rows.
  std::optional<std::filesystem::path> path;
  mpz_class socle_order;
  std::uint64_t out_order = 1;
  std::optional<std::uint64_t> k;
  std::optional<std::uint64_t> k_star;
  /// k_star is only a lower bound.
  bool k_star_lower = false;
  std::optional<double> gamma_bound;
  Family family;
  EntryKind kind = EntryKind::Aut;
  /// For EntryKind::Gamma: the aut entry whose ambient contains this one.
  std::string parent;
  std::vector<FactorBlock> blocks;

  bool file_backed() const noexcept { return path.has_value(); }
  mpz_class ambient_order() const { return socle_order * out_order; }
};

/// Tab-separated rows `name path order out k kstar gamma family kind`;
/// `-` marks an absent value, `>=N` a lower bound for kstar. Relative
/// paths resolve against `base`.
std::vector<CatalogEntry> parse_manifest(std::string_view text, const std::filesystem::path& base);

/// Reads `<dir>/manifest.tsv`.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir);

/// KCLASS_CATALOG if set, otherwise the catalog shipped with the sources.
std::filesystem::path default_catalog_dir();
std::vector<CatalogEntry> bundled_catalog();

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog, std::string_view name);

/// Loads the entry's file and checks normality, |T| and |A:T| against the
/// declared values. Throws ValidationError naming the failed expectation.
AmbientPair realize(const CatalogEntry& entry, std::size_t cap = kDefaultCap);

}  // namespace kclass
