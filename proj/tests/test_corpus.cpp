#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "kclass/corpus.hpp"
#include "kclass/errors.hpp"
#include "support.hpp"

using namespace kclass;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_group_file(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("a file without sections is one group") {
  const auto f = parse_group_file("name A5\ndegree 5\ngen 1 2 3 4 0\ngen 1 2 0 3 4\n");
  CHECK(f.name == "A5");
  CHECK(f.degree == 5);
  REQUIRE(f.sections.size() == 1);
  CHECK(f.implicit_section);
  CHECK(f.sections[0].generators.size() == 2);
  CHECK(f.ambient().order() == 60);
  CHECK(f.socle_generators() == f.sections[0].generators);
}

TEST_CASE("ambient and socle sections, comments and trailing whitespace") {
  const auto f = parse_group_file(
      "# S5 over A5\n"
      "name S5 over A5   \n"
      "degree 5\n"
      "section ambient  # whole group\n"
      "gen 1 2 3 4 0\n"
      "\n"
      "gen 1 0 2 3 4\t\n"
      "section socle\n"
      "gen 1 2 0 3 4\n"
      "gen 0 2 3 1 4   # trailing comment\n");
  CHECK(f.name == "S5 over A5");
  REQUIRE(f.sections.size() == 2);
  CHECK(f.sections[1].tag == SectionTag::Socle);
  CHECK(f.ambient().order() == 120);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("name X\ndegree 3\ngen 0 0 1\n") == 3);
  CHECK(error_line("name X\ndegree 3\ngen 0 1\n") == 3);
  CHECK(error_line("name X\ndegree 3\ngen 0 1 5\n") == 3);
  CHECK(error_line("name X\ndegree 3\ngen 0 1 x\n") == 3);
  CHECK(error_line("name X\ndegree 3\nsection ambient\ngen 0 1 2\nsection ambient\ngen 0 1 2\n") == 5);
  CHECK(error_line("name X\ndegree 3\nsection socle\ngen 0 1 2\n") == 3);
  CHECK(error_line("name X\ndegree 3\nbogus\n") == 3);
  CHECK(error_line("degree 3\nname X\n") == 1);
  CHECK(error_line("name X\ndegree zero\n") == 2);
  CHECK(error_line("name X\ndegree 3\nsection other\n") == 3);
  CHECK(error_line("name X\ndegree 3\n") != 0);
}

TEST_CASE("repeated image is reported as a non-bijection") {
  try {
    parse_group_file("name X\ndegree 4\ngen 1 2 3 0\ngen 0 1 1 3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("not a bijection") != std::string::npos);
  }
}

TEST_CASE("serialize and parse round-trip every bundled file") {
  for (const auto& entry : bundled_catalog()) {
    if (!entry.file_backed()) continue;
    CAPTURE(entry.name);
    const auto original = load_group_file(*entry.path);
    const auto again = parse_group_file(serialize(original));
    CHECK(again.name == original.name);
    CHECK(again.degree == original.degree);
    REQUIRE(again.sections.size() == original.sections.size());
    for (std::size_t i = 0; i < again.sections.size(); ++i) {
      CHECK(again.sections[i].tag == original.sections[i].tag);
      CHECK(again.sections[i].generators == original.sections[i].generators);
    }
  }
  const auto implicit = parse_group_file("name C3\ndegree 3\ngen 1 2 0\n");
  CHECK(serialize(implicit) == "name C3\ndegree 3\ngen 1 2 0\n");
}

TEST_CASE("manifest rows") {
  const auto rows = parse_manifest(
      "# comment\n"
      "A5\tgroups/a5.grp\t60\t2\t5\t4\t1.727\talt:5\taut\n"
      "A20\t-\t1216451004088320000\t2\t-\t>=162\t0.395\talt:20\taut\n"
      "W\tgroups/w.grp\t3600\t8\t25\t-\t-\talt:5\tproduct:2x4\n"
      "G\tgroups/g.grp\t58800\t2\t27\t-\t-\tpsl:2:49\tgamma:PSL2(49)\n",
      "/cat");
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].path == std::filesystem::path("/cat/groups/a5.grp"));
  CHECK(*rows[0].k_star == 4);
  CHECK(*rows[0].gamma_bound == doctest::Approx(1.727));
  CHECK(rows[0].family.kind == FamilyKind::Alternating);
  CHECK(rows[0].ambient_order() == 120);
  CHECK_FALSE(rows[1].file_backed());
  CHECK(rows[1].k_star_lower);
  CHECK(*rows[1].k_star == 162);
  CHECK_FALSE(rows[1].k);
  CHECK(rows[2].kind == EntryKind::Product);
  REQUIRE(rows[2].blocks.size() == 1);
  CHECK(rows[2].blocks[0].factors == 2);
  CHECK(rows[2].blocks[0].k_star == 4);
  CHECK(rows[3].kind == EntryKind::Gamma);
  CHECK(rows[3].parent == "PSL2(49)");
  CHECK(rows[3].family.lie_spec().p == 7);

  CHECK_THROWS_AS(parse_manifest("A5\tx\t60\t2\t5\n", "."), ParseError);
  CHECK_THROWS_AS(parse_manifest("A5\tx\t60\t2\t5\t3\t-\talt:5\taut\n", "."), ParseError);
  CHECK_THROWS_AS(parse_manifest("A5\tx\t60\t2\t5\t4\t-\tfoo\taut\n", "."), ParseError);
  CHECK_THROWS_AS(parse_manifest("A5\tx\t60\t2\t5\t4\t-\talt:5\tproduct:2x3\n", "."), ParseError);
}

TEST_CASE("realize validates order, index and normality") {
  const auto catalog = bundled_catalog();
  const auto a5 = realize(find_entry(catalog, "A5"));
  CHECK(a5.socle().order() == 60);
  CHECK(a5.outer_index() == 2);
  const auto m11 = realize(find_entry(catalog, "M11"));
  CHECK(m11.socle().order() == 7920);
  CHECK(m11.outer_index() == 1);

  auto wrong = find_entry(catalog, "A5");
  wrong.socle_order = 61;
  CHECK_THROWS_AS(realize(wrong), ValidationError);
  wrong = find_entry(catalog, "A5");
  wrong.out_order = 1;
  CHECK_THROWS_AS(realize(wrong), ValidationError);
  CHECK_THROWS_AS(realize(find_entry(catalog, "A7"), 100), CapExceeded);
  CHECK_THROWS_AS(realize(find_entry(catalog, "M23")), InvalidInput);
  CHECK_THROWS_AS(find_entry(catalog, "nope"), InvalidInput);
}

TEST_CASE("a socle that is not normal fails validation") {
  const auto dir = std::filesystem::temp_directory_path() / "kclass_corpus_test";
  std::filesystem::create_directories(dir / "groups");
  std::ofstream(dir / "groups" / "bad.grp") << "name bad\ndegree 5\nsection ambient\ngen 1 2 3 4 0\ngen 1 0 2 3 4\n"
                                               "section socle\ngen 1 0 2 3 4\n";
  std::ofstream(dir / "manifest.tsv") << "bad\tgroups/bad.grp\t2\t60\t-\t-\t-\talt:5\tsub\n";
  const auto catalog = load_catalog(dir);
  CHECK_THROWS_AS(realize(catalog.at(0)), ValidationError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("bundled catalog contents") {
  const auto catalog = bundled_catalog();
  for (const char* name : {"A5", "A6", "A7", "A8", "A9", "A10", "M11", "M12", "M22", "PSL2(7)", "PSL2(8)", "PSL2(9)",
                           "PSL2(11)", "PSL2(13)", "PSL2(16)", "PSL2(17)", "PSL2(19)", "PSL2(23)", "PSL2(25)",
                           "PSL2(27)", "PGL2(5)", "PGL2(7)", "PGL2(9)", "PSL3(2)", "PSL3(3)", "PSL3(4)", "S5wrS2"}) {
    CAPTURE(name);
    CHECK(find_entry(catalog, name).file_backed());
  }
  CHECK(*find_entry(catalog, "PSL3(4)").k_star == 6);
  CHECK(*find_entry(catalog, "A8").k_star == 12);
  for (const auto& e : catalog) {
    if (e.k_star) CHECK(*e.k_star >= 4);
    if (!e.file_backed()) continue;
    CAPTURE(e.name);
    CHECK(e.ambient_order() <= kDefaultCap);
    const auto pair = realize(e);
    CHECK(pair.ambient().order() == e.ambient_order());
  }
}

TEST_CASE("KCLASS_CATALOG overrides the catalog location") {
  setenv("KCLASS_CATALOG", "/somewhere/else", 1);
  CHECK(default_catalog_dir() == std::filesystem::path("/somewhere/else"));
  unsetenv("KCLASS_CATALOG");
  CHECK(default_catalog_dir() != std::filesystem::path("/somewhere/else"));
}
