#include "kclass/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kclass/bounds.hpp"
#include "kclass/constants.hpp"
#include "kclass/errors.hpp"

namespace kclass::lemmas {

namespace {

mpz_class pow_ui(const mpz_class& base, unsigned long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

long double to_long_double(const mpz_class& x) {
  long exp = 0;
  double mantissa = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::ldexp(static_cast<long double>(mantissa), static_cast<int>(exp));
}

double klog(double k) {
  const double lk = std::log2(k);
  return lk * lk * std::log2(lk);
}

const double kLog2Of3 = std::log2(3.0);

}  // namespace

const Range& SweepRange::operator[](const std::string& name) const {
  for (const auto& r : variables) {
    if (r.name == name) {
      if (r.lower > r.upper) throw InvalidInput("empty sweep range for " + name);
      return r;
    }
  }
  throw InvalidInput("sweep range has no variable " + name);
}

mpz_class binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) {
    throw InvalidInput("binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") out of range");
  }
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::vector<mpz_class> partition_counts_upto(std::int64_t n) {
  if (n < 0 || n > 100000) throw InvalidInput("partition_count supports 0 <= n <= 100000");
  std::vector<mpz_class> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  for (std::int64_t m = 1; m <= n; ++m) {
    mpz_class acc = 0;
    for (std::int64_t j = 1;; ++j) {
      const std::int64_t g1 = j * (3 * j - 1) / 2;
      if (g1 > m) break;
      const std::int64_t g2 = j * (3 * j + 1) / 2;
      mpz_class term = p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) term += p[static_cast<std::size_t>(m - g2)];
      if (j % 2) acc += term;
      else acc -= term;
    }
    p[static_cast<std::size_t>(m)] = acc;
  }
  return p;
}

mpz_class partition_count(std::int64_t n) { return partition_counts_upto(n).back(); }

mpz_class distinct_odd_partition_count(std::int64_t n) {
  if (n < 0) throw InvalidInput("negative n");
  std::vector<mpz_class> ways(static_cast<std::size_t>(n) + 1);
  ways[0] = 1;
  for (std::int64_t part = 1; part <= n; part += 2) {
    for (std::int64_t s = n; s >= part; --s) ways[s] += ways[s - part];
  }
  return ways[static_cast<std::size_t>(n)];
}

mpz_class alternating_class_count(std::int64_t n) {
  if (n < 2) throw InvalidInput("alternating_class_count needs n >= 2");
  return (partition_count(n) + 3 * distinct_odd_partition_count(n)) / 2;
}

std::vector<VerificationReport> verify_prime_power_inequalities(const SweepRange& ranges) {
  const Range& pr = ranges["p"];
  const Range& fr = ranges["f"];
  const Range& ar = ranges["a"];
  const Range& br = ranges["b"];
  if (fr.lower < 1 || ar.lower < 2) throw InvalidInput("need f >= 1 and a >= 2");

  VerificationReport part1("lemma.prime_power.1", "(q^a-1)(q^b-1) <= q^(a+b)");
  VerificationReport part2("lemma.prime_power.2", "(q^a-1)(q^b+1) <= q^(a+b)");
  VerificationReport part3("lemma.prime_power.3", "q >= 2f, and q >= 3f when q >= 16");
  VerificationReport part4("lemma.prime_power.4", "2 log2 f <= f for f != 3");
  std::uint64_t n12 = 0, n3 = 0, n4 = 0, fail1 = 0, fail2 = 0, fail3 = 0, fail4 = 0;
  double gap1 = std::numeric_limits<double>::infinity(), gap2 = gap1, gap3 = gap1;

  for (std::int64_t p = std::max<std::int64_t>(pr.lower, 2); p <= pr.upper; ++p) {
    if (!bounds::is_prime(static_cast<unsigned long>(p))) continue;
    for (std::int64_t f = fr.lower; f <= fr.upper; ++f) {
      const mpz_class q = pow_ui(mpz_class(static_cast<unsigned long>(p)), static_cast<unsigned long>(f));
      ++n3;
      const bool ok3 = q >= 2 * f && (q < 16 || q >= 3 * f);
      if (!ok3) ++fail3;
      gap3 = std::min(gap3, bounds::log2(q) - std::log2(static_cast<double>((q >= 16 ? 3 : 2) * f)));
      for (std::int64_t a = ar.lower; a <= ar.upper; ++a) {
        for (std::int64_t b = std::max(a, br.lower); b <= br.upper; ++b) {
          ++n12;
          const mpz_class qa = pow_ui(q, static_cast<unsigned long>(a));
          const mpz_class qb = pow_ui(q, static_cast<unsigned long>(b));
          const mpz_class rhs = qa * qb;
          const mpz_class l1 = (qa - 1) * (qb - 1);
          const mpz_class l2 = (qa - 1) * (qb + 1);
          if (l1 > rhs) ++fail1;
          if (l2 > rhs) ++fail2;
          gap1 = std::min(gap1, bounds::log2(rhs) - bounds::log2(l1));
          gap2 = std::min(gap2, bounds::log2(rhs) - bounds::log2(l2));
        }
      }
    }
  }
  for (std::int64_t f = fr.lower; f <= fr.upper; ++f) {
    if (f == 3) continue;
    ++n4;
    // 2 log2 f <= f  <=>  f^2 <= 2^f
    if (mpz_class(static_cast<unsigned long>(f * f)) > pow_ui(2, static_cast<unsigned long>(f))) ++fail4;
  }

  auto finish = [](VerificationReport& r, std::uint64_t checked, std::uint64_t failed, double gap) {
    r.set("checked", checked);
    r.set("failures", failed);
    if (std::isfinite(gap)) r.margin = gap;
    r.require(failed == 0 && checked > 0);
  };
  finish(part1, n12, fail1, gap1);
  finish(part2, n12, fail2, gap2);
  finish(part3, n3, fail3, gap3);
  finish(part4, n4, fail4, std::numeric_limits<double>::infinity());
  for (auto* r : {&part1, &part2, &part3, &part4}) {
    r->set("p_range", std::to_string(pr.lower) + ".." + std::to_string(pr.upper));
    r->set("f_range", std::to_string(fr.lower) + ".." + std::to_string(fr.upper));
  }
  part1.set("ab_range", std::to_string(ar.lower) + ".." + std::to_string(br.upper));
  part2.set("ab_range", std::to_string(ar.lower) + ".." + std::to_string(br.upper));

  // f = 3 must be excluded: 2 log2 3 > 3.
  VerificationReport excl("lemma.prime_power.4.f3", "2 log2 3 > 3");
  const double lhs = 2.0 * std::log2(3.0);
  excl.set("two_log2_3", lhs);
  excl.set("exclusion_needed", 9 > 8);
  excl.margin = lhs - 3.0;
  excl.require(9 > 8);

  return {part1, part2, part3, part4, excl};
}

VerificationReport verify_klog_bound(std::int64_t k_max) {
  if (k_max < 4) throw InvalidInput("k_max must be at least 4");
  VerificationReport r("lemma.klog", "(log k)^2 log log k <= k^2/2");
  std::uint64_t failures = 0;
  double margin = std::numeric_limits<double>::infinity();
  std::int64_t argmin = 4;
  for (std::int64_t k = 4; k <= k_max; ++k) {
    const double kd = static_cast<double>(k);
    const double gap = kd * kd / 2.0 - klog(kd);
    if (gap < 0) ++failures;
    if (gap < margin) {
      margin = gap;
      argmin = k;
    }
  }
  r.set("k_range", "4.." + std::to_string(k_max));
  r.set("failures", failures);
  r.set("tightest_k", argmin);
  r.margin = margin;
  r.require(failures == 0);
  return r;
}

WeightedCheck check_weighted_inequality(const WeightedCase& c, double slack) {
  if (c.n < 1 || c.k < 4) throw InvalidInput("weighted inequality needs n >= 1 and k >= 4");
  const double n = static_cast<double>(c.n);
  const double lhs = n * std::log2(n) + kC2 * n * klog(static_cast<double>(c.k));
  const long double binom = to_long_double(binomial(c.n + c.k - 1, c.k - 1));
  const long double rhs = static_cast<long double>(c.w) * kLog2Of3 * binom;
  const bool holds = static_cast<long double>(lhs) <= rhs + slack;
  const double rhs_d = rhs > std::numeric_limits<double>::max() ? std::numeric_limits<double>::infinity()
                                                                 : static_cast<double>(rhs);
  return {holds, lhs, rhs_d};
}

std::vector<VerificationReport> verify_weighted_cases(std::int64_t n_max, std::int64_t k_max) {
  if (n_max < 3 || k_max < 222) throw InvalidInput("weighted sweep needs n_max >= 3 and k_max >= 222");
  struct CaseStats {
    std::string id;
    std::string subject;
    double w;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    double margin = std::numeric_limits<double>::infinity();
    std::string tightest = {};
  };
  std::vector<CaseStats> cases = {
      {"lemma.weighted.i", "n=1, k>=222, w=1", 1.0},
      {"lemma.weighted.ii", "n=2, k>=9, w=1", 1.0},
      {"lemma.weighted.iii", "n>=3, k>=4, w=1", 1.0},
      {"lemma.weighted.iv", "n=2, 4<=k<9, w=1.17", 1.17},
      {"lemma.weighted.v", "n=1, k>=4, w=2.5", 2.5},
  };
  std::vector<double> klogs(static_cast<std::size_t>(k_max) + 1, 0.0);
  for (std::int64_t k = 4; k <= k_max; ++k) klogs[k] = klog(static_cast<double>(k));

  auto record = [&](CaseStats& cs, std::int64_t n, std::int64_t k, double lhs, long double binom) {
    const long double rhs = static_cast<long double>(cs.w) * kLog2Of3 * binom;
    ++cs.checked;
    if (static_cast<long double>(lhs) > rhs) ++cs.failures;
    // relative margin, since rhs grows astronomically with n
    const double rel = static_cast<double>((rhs - lhs) / rhs);
    if (rel < cs.margin) {
      cs.margin = rel;
      cs.tightest = "n=" + std::to_string(n) + ",k=" + std::to_string(k);
    }
  };

  // threshold[n] = least k0 such that the w=1 inequality holds for all k0 <= k <= k_max
  std::int64_t threshold1 = k_max + 1, threshold2 = k_max + 1;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const double nd = static_cast<double>(n);
    const double nlogn = nd * std::log2(nd);
    mpz_class binom = binomial(n + 3, 3);  // C(n+k-1, k-1) at k = 4
    std::vector<bool> holds_w1;
    if (n <= 2) holds_w1.assign(static_cast<std::size_t>(k_max) + 1, false);
    for (std::int64_t k = 4; k <= k_max; ++k) {
      if (k > 4) {
        // C(n+k-1, n) = C(n+k-2, n) (n+k-1) / (k-1)
        binom *= static_cast<unsigned long>(n + k - 1);
        binom /= static_cast<unsigned long>(k - 1);
      }
      const long double b = to_long_double(binom);
      const double lhs = nlogn + kC2 * nd * klogs[k];
      if (n == 1) {
        if (k >= 222) record(cases[0], n, k, lhs, b);
        record(cases[4], n, k, lhs, b);
      } else if (n == 2) {
        if (k >= 9) record(cases[1], n, k, lhs, b);
        else record(cases[3], n, k, lhs, b);
      } else {
        record(cases[2], n, k, lhs, b);
      }
      if (n <= 2) holds_w1[k] = static_cast<long double>(lhs) <= kLog2Of3 * b;
    }
    if (n <= 2) {
      std::int64_t t = k_max + 1;
      while (t > 4 && holds_w1[t - 1]) --t;
      (n == 1 ? threshold1 : threshold2) = t;
    }
  }

  std::vector<VerificationReport> out;
  for (auto& cs : cases) {
    VerificationReport r(cs.id, cs.subject);
    r.set("n_max", n_max);
    r.set("k_max", k_max);
    r.set("checked", cs.checked);
    r.set("failures", cs.failures);
    r.set("tightest", cs.tightest);
    r.set("scope", "verified on n <= " + std::to_string(n_max) + ", k <= " + std::to_string(k_max) + " only");
    r.margin = cs.margin;
    r.require(cs.failures == 0 && cs.checked > 0);
    out.push_back(std::move(r));
  }

  auto sharp = [&](std::int64_t n, std::int64_t k_fail, std::int64_t threshold) {
    VerificationReport r("lemma.weighted.sharpness", "n=" + std::to_string(n) + ", w=1");
    auto below = check_weighted_inequality({n, k_fail, 1.0});
    auto at = check_weighted_inequality({n, k_fail + 1, 1.0});
    r.set("k_fail", k_fail);
    r.set("holds_at_k_fail", below.holds);
    r.set("k_pass", k_fail + 1);
    r.set("holds_at_k_pass", at.holds);
    r.set("threshold", threshold);
    r.margin = at.margin();
    r.require(!below.holds && at.holds && threshold == k_fail + 1);
    out.push_back(std::move(r));
  };
  sharp(1, 221, threshold1);
  sharp(2, 8, threshold2);
  return out;
}

bool verify_sum_product(std::span<const std::int64_t> xs, SumProductPart part) {
  const std::int64_t minimum = part == SumProductPart::Equal ? 5 : 4;
  for (auto x : xs) {
    if (x < minimum) throw InvalidInput("sum/product lemma needs every x >= " + std::to_string(minimum));
  }
  switch (part) {
    case SumProductPart::General: {
      if (xs.size() < 3) throw InvalidInput("part (i) needs r >= 3");
      mpz_class sum = 0, prod = 1;
      for (auto x : xs) {
        sum += static_cast<long>(x);
        prod *= static_cast<long>(x);
      }
      return 5 * sum <= 2 * prod;
    }
    case SumProductPart::Mixed: {
      if (xs.size() != 2) throw InvalidInput("part (ii) needs r = 2");
      const __int128 x1 = xs[0], x2 = xs[1];
      return 250 * x1 + 117 * x2 <= 100 * x1 * x2;
    }
    case SumProductPart::Equal: {
      if (xs.size() != 2) throw InvalidInput("part (iii) needs r = 2");
      const __int128 x1 = xs[0], x2 = xs[1];
      return 5 * (x1 + x2) <= 2 * x1 * x2;
    }
  }
  return false;
}

std::vector<VerificationReport> verify_sum_product_sweep(std::int64_t r_max, std::int64_t x_max) {
  if (r_max < 3 || x_max < 5) throw InvalidInput("sum/product sweep needs r_max >= 3 and x_max >= 5");
  std::vector<VerificationReport> out;

  // (i) symmetric in the x's, so nondecreasing tuples cover every case
  VerificationReport general("lemma.sum_product.i", "2.5 sum x <= prod x, r >= 3");
  std::uint64_t checked = 0, failures = 0;
  __int128 tightest = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> tuple;
  auto recurse = [&](auto&& self, std::int64_t start, __int128 sum, __int128 prod) -> void {
    if (tuple.size() >= 3) {
      ++checked;
      const __int128 gap = 2 * prod - 5 * sum;
      if (gap < 0) ++failures;
      tightest = std::min(tightest, gap);
    }
    if (static_cast<std::int64_t>(tuple.size()) == r_max) return;
    for (std::int64_t x = start; x <= x_max; ++x) {
      tuple.push_back(x);
      self(self, x, sum + x, prod * x);
      tuple.pop_back();
    }
  };
  recurse(recurse, 4, 0, 1);
  general.set("r_range", "3.." + std::to_string(r_max));
  general.set("x_range", "4.." + std::to_string(x_max));
  general.set("checked", checked);
  general.set("failures", failures);
  general.margin = static_cast<double>(tightest) / 2.0;
  general.require(failures == 0);
  out.push_back(std::move(general));

  // induction step: 2.5 S <= P, P >= 16, x >= 4  =>  2.5 (S + x) <= P x.
  // The conclusion is monotone in S, so S = floor(2P/5) is the binding case.
  VerificationReport step("lemma.sum_product.i.step", "2.5(S+x) <= P x given 2.5 S <= P");
  failures = 0;
  checked = 0;
  const std::int64_t p_max = 1 << 16;
  for (std::int64_t p = 16; p <= p_max; ++p) {
    const std::int64_t s = 2 * p / 5;
    for (std::int64_t x = 4; x <= x_max; ++x) {
      ++checked;
      if (5 * (s + x) > 2 * p * x) ++failures;
    }
  }
  // closed form: P x - 2.5(S + x) >= P (x - 1) - 2.5 x >= 16 (x - 1) - 2.5 x > 0 for x >= 4
  const bool closed_form = 16 * 3 - 10 > 0;
  step.set("P_range", "16.." + std::to_string(p_max));
  step.set("x_range", "4.." + std::to_string(x_max));
  step.set("checked", checked);
  step.set("failures", failures);
  step.set("closed_form_base", closed_form);
  step.margin = 16.0 * 3.0 - 2.5 * 4.0;
  step.require(failures == 0 && closed_form);
  out.push_back(std::move(step));

  VerificationReport mixed("lemma.sum_product.ii", "2.5 x1 + 1.17 x2 <= x1 x2");
  VerificationReport equal("lemma.sum_product.iii", "2.5 x1 + 2.5 x2 <= x1 x2, x >= 5");
  std::uint64_t mixed_fail = 0, equal_fail = 0, mixed_n = 0, equal_n = 0;
  double mixed_gap = std::numeric_limits<double>::infinity(), equal_gap = mixed_gap;
  for (std::int64_t x1 = 4; x1 <= x_max; ++x1) {
    for (std::int64_t x2 = 4; x2 <= x_max; ++x2) {
      const std::int64_t pair[2] = {x1, x2};
      ++mixed_n;
      if (!verify_sum_product(pair, SumProductPart::Mixed)) ++mixed_fail;
      mixed_gap = std::min(mixed_gap, static_cast<double>(x1 * x2) - 2.5 * x1 - 1.17 * x2);
      if (x1 >= 5 && x2 >= 5) {
        ++equal_n;
        if (!verify_sum_product(pair, SumProductPart::Equal)) ++equal_fail;
        equal_gap = std::min(equal_gap, static_cast<double>(x1 * x2) - 2.5 * (x1 + x2));
      }
    }
  }
  mixed.set("checked", mixed_n);
  mixed.set("failures", mixed_fail);
  mixed.margin = mixed_gap;
  mixed.require(mixed_fail == 0);
  const std::int64_t boundary[2] = {5, 5};
  const bool equality_at_5 = 5 * (5 + 5) == 2 * 5 * 5;
  equal.set("checked", equal_n);
  equal.set("failures", equal_fail);
  equal.set("boundary_equality_5_5", equality_at_5);
  equal.margin = equal_gap;
  equal.require(equal_fail == 0 && equality_at_5 && verify_sum_product(boundary, SumProductPart::Equal));
  out.push_back(std::move(mixed));
  out.push_back(std::move(equal));
  return out;
}

std::vector<VerificationReport> verify_partition_bound(std::int64_t n_min, std::int64_t n_max) {
  if (n_min < 22 || n_max < n_min) throw InvalidInput("partition bound sweep needs 22 <= n_min <= n_max");
  const auto p = partition_counts_upto(n_max);
  const double ln2 = std::log(2.0);
  const double log2e = std::log2(std::exp(1.0));

  VerificationReport bound("lemma.partition", "p(n)/4 >= e^(2 sqrt n)/56");
  VerificationReport tail("lemma.partition.log", "log2 k >= 2 sqrt(n) log2 e - log2 56 >= sqrt n");
  VerificationReport gam("lemma.partition.gamma", "2n / (2 sqrt(n) log2 e - log2 56)^2 < 1.613");
  std::uint64_t fail_bound = 0, fail_tail = 0, fail_gamma = 0;
  double margin_bound = std::numeric_limits<double>::infinity(), margin_tail = margin_bound,
         margin_gamma = margin_bound;
  bool monotone = true;
  for (std::int64_t n = n_min; n <= n_max; ++n) {
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    // natural logs: ln p(n) - ln 4 >= 2 sqrt n - ln 56
    const double lhs = bounds::log2(p[n]) * ln2 - std::log(4.0);
    const double rhs = 2.0 * sqrt_n - std::log(56.0);
    if (lhs < rhs) ++fail_bound;
    margin_bound = std::min(margin_bound, lhs - rhs);
    const double log_bound = 2.0 * sqrt_n * log2e - std::log2(56.0);
    if (log_bound < sqrt_n) ++fail_tail;
    margin_tail = std::min(margin_tail, log_bound - sqrt_n);
    const double g = 2.0 * static_cast<double>(n) / (log_bound * log_bound);
    if (!(g < kGammaGeneric)) ++fail_gamma;
    margin_gamma = std::min(margin_gamma, kGammaGeneric - g);
    if (n > n_min && p[n] < p[n - 1]) monotone = false;
  }
  const std::string range = std::to_string(n_min) + ".." + std::to_string(n_max);
  bound.set("n_range", range);
  bound.set("failures", fail_bound);
  bound.margin = margin_bound;
  bound.require(fail_bound == 0);
  tail.set("n_range", range);
  tail.set("failures", fail_tail);
  tail.margin = margin_tail;
  tail.require(fail_tail == 0);
  gam.set("n_range", range);
  gam.set("failures", fail_gamma);
  gam.margin = margin_gamma;
  gam.require(fail_gamma == 0);

  // k >= p(n)/4 >= p(22)/4 = 250.5 for every n >= 22
  VerificationReport consequence("lemma.partition.k250", "n >= 22 gives k >= 250");
  const mpz_class p22 = p[22];
  const mpz_class floor_quarter = p22 / 4;
  const double at22 = std::exp(2.0 * std::sqrt(22.0)) / 56.0;
  consequence.set("p22", p22);
  consequence.set("p22_over_4", p22.get_d() / 4.0);
  consequence.set("exp_bound_22", at22);
  consequence.set("floor_p22_over_4", floor_quarter);
  consequence.set("p_nondecreasing", monotone);
  consequence.margin = p22.get_d() / 4.0 - 250.0;
  consequence.require(p22 == 1002 && floor_quarter >= 250 && monotone && p22.get_d() / 4.0 >= at22);
  return {bound, tail, gam, consequence};
}

}  // namespace kclass::lemmas
