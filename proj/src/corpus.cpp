#include "kclass/corpus.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "kclass/errors.hpp"

#ifndef KCLASS_CATALOG_DIR
#define KCLASS_CATALOG_DIR "data/catalog"
#endif

namespace kclass {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
std::optional<T> parse_number(std::string_view s) {
  T value{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return value;
}

std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t number = 0;
  for (auto line : split(text, '\n')) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.emplace_back(number, line);
  }
  return out;
}

const char* tag_name(SectionTag tag) { return tag == SectionTag::Ambient ? "ambient" : "socle"; }

}  // namespace

const GroupSection* GroupFile::find(SectionTag tag) const {
  for (const auto& s : sections) {
    if (s.tag == tag) return &s;
  }
  return nullptr;
}

FiniteGroup GroupFile::ambient() const {
  const auto* s = find(SectionTag::Ambient);
  if (!s) throw InvalidInput("group file " + name + " has no ambient section");
  return FiniteGroup(degree, s->generators);
}

std::vector<Permutation> GroupFile::socle_generators() const {
  if (const auto* s = find(SectionTag::Socle)) return s->generators;
  return ambient().generators();
}

GroupFile parse_group_file(std::string_view text) {
  const auto lines = content_lines(text);
  GroupFile file;
  std::size_t i = 0;
  auto expect_keyword = [&](std::string_view keyword) -> std::string_view {
    if (i >= lines.size()) throw ParseError(lines.empty() ? 1 : lines.back().first, "missing '" + std::string(keyword) + "' line");
    const auto [number, line] = lines[i];
    if (line.substr(0, keyword.size()) != keyword || line.size() <= keyword.size() || line[keyword.size()] != ' ') {
      throw ParseError(number, "expected '" + std::string(keyword) + " <value>'");
    }
    ++i;
    return trim(line.substr(keyword.size() + 1));
  };

  file.name = std::string(expect_keyword("name"));
  {
    const std::size_t number = i < lines.size() ? lines[i].first : 0;
    const auto degree = parse_number<std::size_t>(expect_keyword("degree"));
    if (!degree || *degree == 0 || *degree > 65535) throw ParseError(number, "degree must be an integer in 1..65535");
    file.degree = *degree;
  }

  GroupSection* current = nullptr;
  for (; i < lines.size(); ++i) {
    const auto [number, line] = lines[i];
    const auto words = split(line, ' ');
    if (words[0] == "section") {
      if (words.size() != 2) throw ParseError(number, "malformed section header");
      SectionTag tag;
      if (words[1] == "ambient") tag = SectionTag::Ambient;
      else if (words[1] == "socle") tag = SectionTag::Socle;
      else throw ParseError(number, "unknown section '" + std::string(words[1]) + "'");
      if (file.implicit_section) throw ParseError(number, "section header after generators without a section");
      if (file.find(tag)) throw ParseError(number, std::string("duplicate section ") + tag_name(tag));
      if (tag == SectionTag::Socle && !file.find(SectionTag::Ambient)) {
        throw ParseError(number, "socle section without a preceding ambient section");
      }
      file.sections.push_back({tag, {}});
      current = &file.sections.back();
    } else if (words[0] == "gen") {
      if (!current) {
        file.sections.push_back({SectionTag::Ambient, {}});
        file.implicit_section = true;
        current = &file.sections.back();
      }
      if (words.size() - 1 != file.degree) {
        throw ParseError(number, "degree mismatch: " + std::to_string(words.size() - 1) + " images for degree " +
                                     std::to_string(file.degree));
      }
      std::vector<Point> images;
      images.reserve(file.degree);
      for (std::size_t w = 1; w < words.size(); ++w) {
        const auto v = parse_number<unsigned>(words[w]);
        if (!v) throw ParseError(number, "malformed image '" + std::string(words[w]) + "'");
        if (*v >= file.degree) throw ParseError(number, "not a bijection: image " + std::to_string(*v) + " out of range");
        images.push_back(static_cast<Point>(*v));
      }
      try {
        current->generators.emplace_back(std::move(images));
      } catch (const InvalidInput& e) {
        throw ParseError(number, e.what());
      }
    } else {
      throw ParseError(number, "malformed line");
    }
  }
  if (file.sections.empty()) throw ParseError(lines.empty() ? 1 : lines.back().first, "no generators");
  for (const auto& s : file.sections) {
    if (s.generators.empty()) throw ParseError(lines.back().first, std::string("empty section ") + tag_name(s.tag));
  }
  return file;
}

std::string serialize(const GroupFile& file) {
  std::ostringstream os;
  os << "name " << file.name << "\ndegree " << file.degree << '\n';
  for (const auto& s : file.sections) {
    if (!file.implicit_section) os << "section " << tag_name(s.tag) << '\n';
    for (const auto& g : s.generators) {
      os << "gen";
      for (auto v : g.images()) os << ' ' << v;
      os << '\n';
    }
  }
  return os.str();
}

GroupFile load_group_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_group_file(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.what());
  }
}

bounds::LieFamilySpec Family::lie_spec() const {
  if (kind != FamilyKind::Lie) throw InvalidInput("family is not of Lie type");
  const auto pf = bounds::prime_power(q);
  if (!pf) throw InvalidInput("q = " + std::to_string(q) + " is not a prime power");
  return {bounds::LieFamily::Linear, n, pf->first, pf->second};
}

namespace {

Family parse_family(std::string_view s, std::size_t line) {
  const auto parts = split(s, ':');
  Family f;
  if (parts[0] == "spor" && parts.size() == 1) {
    f.kind = FamilyKind::Sporadic;
    return f;
  }
  if (parts[0] == "alt" && parts.size() == 2) {
    if (const auto n = parse_number<unsigned>(parts[1]); n && *n >= 5) {
      f.kind = FamilyKind::Alternating;
      f.n = *n;
      return f;
    }
  }
  if (parts[0] == "psl" && parts.size() == 3) {
    const auto n = parse_number<unsigned>(parts[1]);
    const auto q = parse_number<std::uint64_t>(parts[2]);
    if (n && q && *n >= 2) {
      f.kind = FamilyKind::Lie;
      f.n = *n;
      f.q = *q;
      return f;
    }
  }
  throw ParseError(line, "bad family '" + std::string(s) + "'");
}

void parse_kind(std::string_view s, CatalogEntry& entry, std::size_t line) {
  if (s == "aut") entry.kind = EntryKind::Aut;
  else if (s == "sub") entry.kind = EntryKind::Sub;
  else if (s == "pgl") entry.kind = EntryKind::Pgl;
  else if (s.starts_with("gamma:") && s.size() > 6) {
    entry.kind = EntryKind::Gamma;
    entry.parent = std::string(s.substr(6));
  } else if (s.starts_with("product:")) {
    entry.kind = EntryKind::Product;
    for (auto block : split(s.substr(8), ',')) {
      const auto x = block.find('x');
      const auto n = x == std::string_view::npos ? std::nullopt : parse_number<unsigned>(block.substr(0, x));
      const auto k = x == std::string_view::npos ? std::nullopt : parse_number<unsigned>(block.substr(x + 1));
      if (!n || !k || *n == 0 || *k < 4) throw ParseError(line, "bad product block '" + std::string(block) + "'");
      entry.blocks.push_back({*n, *k});
    }
  } else {
    throw ParseError(line, "bad kind '" + std::string(s) + "'");
  }
}

}  // namespace

std::vector<CatalogEntry> parse_manifest(std::string_view text, const std::filesystem::path& base) {
  std::vector<CatalogEntry> out;
  std::size_t number = 0;
  for (auto line : split(text, '\n')) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    auto fields = split(trim(line), '\t');
    if (fields.size() != 9) throw ParseError(number, "expected 9 tab-separated fields, got " + std::to_string(fields.size()));
    for (auto& f : fields) f = trim(f);
    auto absent = [](std::string_view f) { return f == "-"; };
    auto integer = [&](std::string_view f, const char* what) {
      const auto v = parse_number<std::uint64_t>(f);
      if (!v) throw ParseError(number, std::string("bad ") + what + " '" + std::string(f) + "'");
      return *v;
    };

    CatalogEntry e;
    e.name = std::string(fields[0]);
    if (!absent(fields[1])) e.path = base / std::string(fields[1]);
    if (e.socle_order.set_str(std::string(fields[2]), 10) != 0 || e.socle_order <= 0) {
      throw ParseError(number, "bad order '" + std::string(fields[2]) + "'");
    }
    e.out_order = integer(fields[3], "out");
    if (e.out_order == 0) throw ParseError(number, "out must be positive");
    if (!absent(fields[4])) e.k = integer(fields[4], "k");
    if (!absent(fields[5])) {
      auto ks = fields[5];
      if (ks.starts_with(">=")) {
        e.k_star_lower = true;
        ks.remove_prefix(2);
      }
      e.k_star = integer(ks, "kstar");
      if (*e.k_star < 4) throw ParseError(number, "kstar must be at least 4");
    }
    if (!absent(fields[6])) {
      try {
        std::size_t used = 0;
        e.gamma_bound = std::stod(std::string(fields[6]), &used);
        if (used != fields[6].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(number, "bad gamma '" + std::string(fields[6]) + "'");
      }
    }
    e.family = parse_family(fields[7], number);
    parse_kind(fields[8], e, number);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir) {
  const auto manifest = dir / "manifest.tsv";
  std::ifstream in(manifest, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + manifest.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_manifest(buffer.str(), dir);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), manifest.string() + ": " + e.what());
  }
}

std::filesystem::path default_catalog_dir() {
  if (const char* env = std::getenv("KCLASS_CATALOG"); env && *env) return env;
  return KCLASS_CATALOG_DIR;
}

std::vector<CatalogEntry> bundled_catalog() { return load_catalog(default_catalog_dir()); }

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog, std::string_view name) {
  for (const auto& e : catalog) {
    if (e.name == name) return e;
  }
  throw InvalidInput("no catalog entry named " + std::string(name));
}

AmbientPair realize(const CatalogEntry& entry, std::size_t cap) {
  if (!entry.path) throw InvalidInput(entry.name + " is formula-only and has no group file");
  const GroupFile file = load_group_file(*entry.path);
  FiniteGroup ambient = file.ambient();
  if (ambient.order() > cap) throw CapExceeded(cap);
  AmbientPair pair(std::move(ambient), file.socle_generators());
  const mpz_class t = pair.socle().order();
  if (t != entry.socle_order) {
    throw ValidationError(entry.name + ": |T| = " + t.get_str() + ", expected " + entry.socle_order.get_str());
  }
  const mpz_class index = pair.outer_index();
  if (index != entry.out_order) {
    throw ValidationError(entry.name + ": |A:T| = " + index.get_str() + ", expected " + std::to_string(entry.out_order));
  }
  return pair;
}

}  // namespace kclass
