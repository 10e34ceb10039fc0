#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "kclass/classes.hpp"
#include "kclass/errors.hpp"
#include "kclass/verifier.hpp"
#include "support.hpp"

using namespace kclass;

namespace {

AmbientPair pair_from(const std::string& file) {
  const auto f = support::load(file);
  return AmbientPair(f.ambient(), f.socle_generators());
}

}  // namespace

TEST_CASE("Bertram bound with ceiling equality on PSL3(4) and M22") {
  const auto psl34 = pair_from("psl3_4.grp");
  auto r = verify_bertram("PSL3(4)", psl34.socle());
  CHECK(r.passed());
  CHECK(r.integer("k") == 10);
  CHECK(r.integer("k") == conjugacy_classes(psl34.socle()).k());
  CHECK(r.real("log3_order") == doctest::Approx(9.0218).epsilon(1e-4));
  CHECK(r.flag("ceiling_equality"));

  const auto m22 = pair_from("m22.grp");
  r = verify_bertram("M22", m22.socle());
  CHECK(r.passed());
  CHECK(r.integer("k") == 12);
  CHECK(r.real("log3_order") == doctest::Approx(11.835).epsilon(1e-4));
  CHECK(r.flag("ceiling_equality"));

  r = verify_bertram("A5", alternating_group(5));
  CHECK(r.passed());
  CHECK(r.real("log3_order") == doctest::Approx(3.727).epsilon(1e-3));
  CHECK_FALSE(r.flag("ceiling_equality"));
}

TEST_CASE("Bertram from known numbers, and a failing instance") {
  CHECK(verify_bertram("x", mpz_class(81), mpz_class(4)).verdict == Verdict::Fail);
  const auto r = verify_bertram("x", mpz_class(80), mpz_class(4));
  CHECK(r.passed());
  CHECK(r.flag("ceiling_equality"));
  CHECK_FALSE(verify_bertram("x", mpz_class(27), mpz_class(4)).flag("ceiling_equality"));
}

TEST_CASE("Bertram is skipped past the cap") {
  const auto r = verify_bertram("S7", symmetric_group(7), 100);
  CHECK(r.verdict == Verdict::Skipped);
  CHECK_FALSE(r.reason.empty());
}

TEST_CASE("base 3 inequality on S5") {
  const auto pair = pair_from("a5.grp");
  const auto r = verify_base3_almost_simple("S5", pair, pair.ambient(), 4);
  CHECK(r.passed());
  CHECK(r.integer("k_G") == 7);
  CHECK(r.real("log2_order") == doctest::Approx(6.9069).epsilon(1e-4));
  CHECK(r.real("log2_3_times_k") == doctest::Approx(11.0947).epsilon(1e-4));
  // |S5| = 120 > 3^4 = 81: reported, not decisive
  CHECK_FALSE(r.flag("aut_bound_holds"));
  CHECK_THROWS_AS(verify_base3_almost_simple("x", pair, symmetric_group(6), std::nullopt), InvalidInput);
}

TEST_CASE("base 3 inequality on larger almost simple groups") {
  CHECK(verify_base3_almost_simple("PGammaL2(8)", pair_from("psl2_8.grp"), pair_from("psl2_8.grp").ambient(), 5).passed());
  const auto m12 = pair_from("m12.grp");
  CHECK(verify_base3_almost_simple("M12:2", m12, m12.ambient(), std::nullopt).passed());
}

TEST_CASE("index reduction on PSL3(4) inside PGammaL3(4) fails at s = 2") {
  const auto aut = pair_from("psl3_4.grp");
  const auto gamma = pair_from("pgaml3_4.grp");
  const auto r = verify_index_reduction("PSL3(4)", aut.ambient(), gamma.ambient(), aut.socle_generators(), 2);
  CHECK(r.verdict == Verdict::Fail);
  CHECK(r.integer("G0_order") == 20160);
  CHECK(r.integer("G0_k") == 10);
  CHECK_FALSE(r.flag("G0_holds"));
  CHECK(r.get("conclusion"));
  CHECK_THROWS_AS(verify_index_reduction("x", aut.ambient(), gamma.ambient(), aut.socle_generators(), 3), InvalidInput);
}

TEST_CASE("index reduction on PSL2(49) inside PGL2(49) holds at s = 2") {
  const auto aut = pair_from("psl2_49.grp");
  const auto pgl = pair_from("pgl2_49.grp");
  const auto r = verify_index_reduction("PSL2(49)", aut.ambient(), pgl.ambient(), pgl.socle_generators(), 2);
  CHECK(r.passed());
  CHECK(r.integer("checked") >= 2);
}

TEST_CASE("index reduction with s = 1 is the base 3 check") {
  const auto pair = pair_from("a5.grp");
  const auto r = verify_index_reduction("S5", pair.ambient(), pair.ambient(), pair.socle_generators(), 1);
  CHECK(r.passed());
  CHECK(r.integer("G1_k") == 7);
}

TEST_CASE("socle bounds on S5 wr S2") {
  const auto pair = pair_from("s5_wr_s2.grp");
  const SocleShape shape{{{2, 4}}};
  const auto r = verify_socle_bounds("S5wrS2", shape, pair.ambient(), pair.socle_generators());
  CHECK(r.passed());
  CHECK(r.integer("binomial_product") == 10);
  CHECK(r.integer("k_G") >= 10);
  CHECK(r.integer("M1_classes_in_G") > 4);
  CHECK(r.flag("log_bound_holds"));
}

TEST_CASE("socle bounds on S5") {
  const auto pair = pair_from("a5.grp");
  const auto r = verify_socle_bounds("S5", SocleShape{{{1, 4}}}, pair.ambient(), pair.socle_generators());
  CHECK(r.passed());
  CHECK(r.integer("binomial_product") == 4);
  CHECK(r.integer("k_G") == 7);
}

TEST_CASE("socle shape validation") {
  const auto pair = pair_from("a5.grp");
  CHECK_THROWS_AS(verify_socle_bounds("x", SocleShape{{{1, 3}}}, pair.ambient(), pair.socle_generators()), InvalidInput);
  CHECK_THROWS_AS(verify_socle_bounds("x", SocleShape{}, pair.ambient(), pair.socle_generators()), InvalidInput);
  const auto wreath = pair_from("s5_wr_s2.grp");
  // three factors cannot share two generators evenly
  CHECK_THROWS_AS(verify_socle_bounds("x", SocleShape{{{3, 4}}}, wreath.ambient(), wreath.socle_generators()),
                  InvalidInput);
}

TEST_CASE("intermediate subgroups contain the socle and the ambient") {
  const auto pair = pair_from("s5_wr_s2.grp");
  const auto groups = intermediate_subgroups(pair.ambient(), pair.socle_generators());
  REQUIRE(groups.size() >= 3);
  CHECK(groups.front().order() == 3600);
  CHECK(groups.back().order() == 28800);
  for (const auto& g : groups) {
    CHECK(28800 % g.order().get_ui() == 0);
    CHECK(is_normal_subgroup(g, pair.socle_generators()));
  }
}

TEST_CASE("unknown suite") {
  CHECK_THROWS_AS(run_suite("everything"), InvalidInput);
}

TEST_CASE("socle suite reports are deterministic") {
  const auto first = to_json(run_suite("socle"));
  const auto second = to_json(run_suite("socle"));
  CHECK(first == second);
  CHECK(first.front() == '[');
  CHECK_FALSE(any_failed(run_suite("socle")));
}

TEST_CASE("JSON layout") {
  VerificationReport r("id", "subject \"quoted\"");
  r.set("exact", mpz_class("123456789012345678901234567890"));
  r.set("real", 1.0 / 3.0);
  r.set("flag", true);
  r.set("text", "a\tb");
  r.margin = -0.0000001;
  VerificationReport s("other", "s");
  s.skip("too big");
  const auto json = to_json({r, s});
  CHECK(json.find("\"exact\": 123456789012345678901234567890") != std::string::npos);
  CHECK(json.find("\"real\": 0.333333") != std::string::npos);
  CHECK(json.find("\"flag\": true") != std::string::npos);
  CHECK(json.find("subject \\\"quoted\\\"") != std::string::npos);
  CHECK(json.find("a\\tb") != std::string::npos);
  CHECK(json.find("\"margin\": 0.000000") != std::string::npos);
  CHECK(json.find("\"verdict\": \"skipped\"") != std::string::npos);
  CHECK(json.find("\"reason\": \"too big\"") != std::string::npos);
  CHECK(json.find("\"margin\": null") != std::string::npos);
}

TEST_CASE("verdict transitions") {
  VerificationReport r("x", "y");
  r.require(true);
  CHECK(r.passed());
  r.require(false);
  CHECK(r.verdict == Verdict::Fail);
  r.require(true);
  CHECK(r.verdict == Verdict::Fail);
  CHECK(any_failed({r}));
  std::ostringstream os;
  print_reports(os, {r});
  CHECK(os.str().find("0 passed, 1 failed, 0 skipped") != std::string::npos);
}
