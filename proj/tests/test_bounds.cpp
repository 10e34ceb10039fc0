#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kclass/bounds.hpp"
#include "kclass/constants.hpp"
#include "kclass/errors.hpp"
#include "oracles.hpp"

using namespace kclass;
using namespace kclass::bounds;

TEST_CASE("linear groups: d, |Out| and the |Aut| bound") {
  const auto psl28 = lie_facts({LieFamily::Linear, 2, 2, 3});
  CHECK(psl28.d == 1);
  CHECK(psl28.out_order == 3);
  CHECK(psl28.aut_upper == 3 * 512);
  CHECK(*psl28.exact_aut_order == 1512);

  const auto psl34 = lie_facts({LieFamily::Linear, 3, 2, 2});
  CHECK(psl34.d == 3);
  CHECK(psl34.out_order == 12);
  CHECK(psl34.aut_upper == 4 * mpz_class(65536));
  CHECK(*psl34.exact_aut_order == 241920);
  CHECK(*psl34.exact_aut_order <= psl34.aut_upper);
  CHECK(psl34.lie_rank == 2);

  const auto psl33 = lie_facts({LieFamily::Linear, 3, 3, 1});
  CHECK(*psl33.exact_aut_order == 11232);
}

TEST_CASE("exact |Aut| never exceeds the tabulated bound for small linear groups") {
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    for (unsigned f = 1; f <= 4; ++f) {
      for (unsigned n : {2u, 3u}) {
        const LieFamilySpec spec{LieFamily::Linear, n, p, f};
        if (n == 2 && spec.q() < 4) continue;
        const auto facts = lie_facts(spec);
        CAPTURE(n);
        CAPTURE(p);
        CAPTURE(f);
        CHECK(*facts.exact_aut_order <= facts.aut_upper);
        CHECK(std::abs(facts.log2_aut_upper - log2(facts.aut_upper)) < 1e-9);
      }
    }
  }
}

TEST_CASE("other families") {
  CHECK(lie_facts({LieFamily::Unitary, 3, 5, 1}).d == 3);
  CHECK(lie_facts({LieFamily::Symplectic, 2, 3, 1}).out_order == 2);
  CHECK(lie_facts({LieFamily::Symplectic, 2, 3, 1}).aut_upper == 2 * 59049);
  CHECK(lie_facts({LieFamily::PlusOrthogonal, 4, 3, 1}).out_order == 6 * 4);
  CHECK(lie_facts({LieFamily::Suzuki, 0, 2, 3}).aut_upper == 3 * (mpz_class(1) << 15));
  CHECK(lie_facts({LieFamily::ReeF4, 0, 2, 1}).aut_upper == mpz_class(1) << 26);
  CHECK(lie_facts({LieFamily::TrialityD4, 0, 2, 1}).out_order == 3);
  CHECK(lie_facts({LieFamily::G2, 0, 3, 1}).out_order == 2);
  CHECK(lie_facts({LieFamily::G2, 0, 5, 1}).out_order == 1);
  CHECK(lie_facts({LieFamily::F4, 0, 2, 1}).out_order == 2);
  CHECK(lie_facts({LieFamily::E7, 0, 3, 1}).d == 2);
  CHECK(lie_facts({LieFamily::E8, 0, 2, 1}).lie_rank == 8);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(lie_facts({LieFamily::Linear, 2, 3, 1}), InvalidInput);
  CHECK_THROWS_AS(lie_facts({LieFamily::Linear, 2, 4, 1}), InvalidInput);
  CHECK_THROWS_AS(lie_facts({LieFamily::Suzuki, 0, 2, 2}), InvalidInput);
  CHECK_THROWS_AS(lie_facts({LieFamily::ReeG2, 0, 2, 3}), InvalidInput);
  CHECK_THROWS_AS(lie_facts({LieFamily::OddOrthogonal, 3, 2, 1}), InvalidInput);
  CHECK_THROWS_AS(lie_facts({LieFamily::Alternating, 5, 0, 1}), InvalidInput);
  CHECK_THROWS_AS(lie_facts({LieFamily::G2, 0, 2, 1}), InvalidInput);
}

TEST_CASE("gamma against the direct formula") {
  for (auto [log2aut, k] : std::vector<std::pair<double, std::uint64_t>>{{6.906891, 4}, {10.562242, 5}, {17.884171, 6}, {180.0, 194}}) {
    CHECK(gamma(log2aut, k).gamma == doctest::Approx(static_cast<double>(oracle::gamma(log2aut, k))).epsilon(1e-12));
  }
  CHECK(gamma(std::log2(120.0), 4).gamma == doctest::Approx(1.726723).epsilon(1e-6));
  CHECK(gamma(std::log2(241920.0), 6).gamma > 1.952);
  CHECK(gamma(std::log2(241920.0), 6).gamma < kGammaPsl34);
  CHECK_THROWS_AS(gamma(10.0, 2), InvalidInput);
}

TEST_CASE("k* lower bound from q^r / (d |Out|)") {
  // PSL2(61): q = 61, d = 2, |Out| = 2
  CHECK(k_star_lower_bound({LieFamily::Linear, 2, 61, 1}, std::nullopt) == 15);
  // PSL3(4): 16 / 36 rounds down to 0, element orders take over
  CHECK(k_star_lower_bound({LieFamily::Linear, 3, 2, 2}, std::nullopt) == 0);
  CHECK(k_star_lower_bound({LieFamily::Linear, 3, 2, 2}, 6) == 6);
  // Suzuki: q^2 = 8, rank 2, so q^r = 8
  CHECK(k_star_lower_bound({LieFamily::Suzuki, 0, 2, 3}, std::nullopt) == 8 / 3);
}

TEST_CASE("class count formulas") {
  CHECK(psl2_class_count(7) == 6);
  CHECK(psl2_class_count(9) == 7);
  CHECK(psl2_class_count(8) == 9);
  CHECK(psl2_class_count(16) == 17);
  CHECK(pgl2_class_count(5) == 7);
  CHECK(pgl2_class_count(9) == 11);
  CHECK_THROWS_AS(psl2_class_count(6), InvalidInput);
  CHECK_THROWS_AS(pgl2_class_count(8), InvalidInput);
}

TEST_CASE("prime powers") {
  CHECK(prime_power(49) == std::pair<unsigned long, unsigned>{7, 2});
  CHECK(prime_power(2) == std::pair<unsigned long, unsigned>{2, 1});
  CHECK_FALSE(prime_power(12));
  CHECK_FALSE(prime_power(1));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("c2 verdicts: generic rows, exceptions and table bounds") {
  std::vector<C2Row> rows = {
      {"A5", std::log2(120.0), 4, 1.727, C2Exception::Alt5},
      {"PSL3(4)", std::log2(241920.0), 6, 1.954, C2Exception::Psl34},
      {"PSL2(8)", std::log2(1512.0), 5, 1.613, C2Exception::None},
  };
  auto reports = verify_c2(rows);
  REQUIRE(reports.size() == 4);
  for (const auto& r : reports) CHECK(r.verdict == Verdict::Pass);
  CHECK(reports.back().real("max_gamma") == doctest::Approx(1.953414).epsilon(1e-6));

  // A5 without its exception exceeds the generic bound
  rows[0].exception = C2Exception::None;
  reports = verify_c2(rows);
  CHECK(reports[0].verdict == Verdict::Fail);
  CHECK(reports.back().verdict == Verdict::Fail);

  // a row above its table bound fails
  reports = verify_c2({{"PSL2(8)", std::log2(1512.0), 5, 1.612, C2Exception::None}});
  CHECK(reports[0].verdict == Verdict::Fail);

  // an exception that does not actually exceed the generic bound is flagged
  reports = verify_c2({{"A5", std::log2(60.0), 5, std::nullopt, C2Exception::Alt5}});
  CHECK(reports[0].verdict == Verdict::Fail);
}
