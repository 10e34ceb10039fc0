#include "kclass/bounds.hpp"

#include <cmath>

#include "kclass/constants.hpp"
#include "kclass/errors.hpp"

namespace kclass::bounds {

std::string to_string(LieFamily family) {
  switch (family) {
    case LieFamily::Linear: return "PSL";
    case LieFamily::Unitary: return "PSU";
    case LieFamily::Symplectic: return "PSp";
    case LieFamily::OddOrthogonal: return "Omega";
    case LieFamily::PlusOrthogonal: return "POmega+";
    case LieFamily::MinusOrthogonal: return "POmega-";
    case LieFamily::Suzuki: return "2B2";
    case LieFamily::ReeG2: return "2G2";
    case LieFamily::ReeF4: return "2F4";
    case LieFamily::TrialityD4: return "3D4";
    case LieFamily::TwistedE6: return "2E6";
    case LieFamily::G2: return "G2";
    case LieFamily::F4: return "F4";
    case LieFamily::E6: return "E6";
    case LieFamily::E7: return "E7";
    case LieFamily::E8: return "E8";
    case LieFamily::Alternating: return "Alt";
    case LieFamily::Sporadic: return "Sporadic";
  }
  return "?";
}

mpz_class LieFamilySpec::q() const {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, f);
  return out;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<unsigned long, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  for (unsigned long p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    unsigned f = 0;
    while (q % p == 0) {
      q /= p;
      ++f;
    }
    if (q != 1) return std::nullopt;
    return std::pair{p, f};
  }
  return std::pair{static_cast<unsigned long>(q), 1u};
}

namespace {

mpz_class pow(const mpz_class& base, unsigned long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

std::uint64_t gcd_with(std::uint64_t m, const mpz_class& x) {
  mpz_class g;
  mpz_class mm(static_cast<unsigned long>(m));
  mpz_gcd(g.get_mpz_t(), mm.get_mpz_t(), x.get_mpz_t());
  return g.get_ui();
}

[[noreturn]] void reject(const LieFamilySpec& spec, const std::string& why) {
  throw InvalidInput(to_string(spec.family) + " with n=" + std::to_string(spec.n) + ", p=" +
                     std::to_string(spec.p) + ", f=" + std::to_string(spec.f) + ": " + why);
}

}  // namespace

void validate(const LieFamilySpec& spec) {
  if (spec.family == LieFamily::Alternating || spec.family == LieFamily::Sporadic) {
    reject(spec, "not a family of Lie type");
  }
  if (!is_prime(spec.p)) reject(spec, "p is not prime");
  if (spec.f < 1) reject(spec, "f must be positive");
  const mpz_class q = spec.q();
  switch (spec.family) {
    case LieFamily::Linear:
      if (spec.n < 2) reject(spec, "need n >= 2");
      if (spec.n == 2 && q < 4) reject(spec, "PSL_2(q) needs q >= 4");
      break;
    case LieFamily::Unitary:
      if (spec.n < 3) reject(spec, "need n >= 3");
      if (spec.n == 3 && q == 2) reject(spec, "PSU_3(2) is solvable");
      break;
    case LieFamily::Symplectic:
      if (spec.n < 2) reject(spec, "need n >= 2");
      if (spec.n == 2 && q == 2) reject(spec, "PSp_4(2) is not simple");
      break;
    case LieFamily::OddOrthogonal:
      if (spec.n < 2) reject(spec, "need n >= 2");
      if (spec.p == 2) reject(spec, "odd-dimensional orthogonal groups need odd q");
      break;
    case LieFamily::PlusOrthogonal:
    case LieFamily::MinusOrthogonal:
      if (spec.n < 4) reject(spec, "need n >= 4");
      break;
    case LieFamily::Suzuki:
      if (spec.p != 2 || spec.f % 2 == 0 || spec.f < 3) reject(spec, "Suzuki groups need q^2 = 2^(2m+1), m >= 1");
      break;
    case LieFamily::ReeG2:
      if (spec.p != 3 || spec.f % 2 == 0 || spec.f < 3) reject(spec, "Ree groups 2G2 need q^2 = 3^(2m+1), m >= 1");
      break;
    case LieFamily::ReeF4:
      if (spec.p != 2 || spec.f % 2 == 0) reject(spec, "Ree groups 2F4 need q^2 = 2^(2m+1)");
      break;
    case LieFamily::G2:
      if (q < 3) reject(spec, "G2(q) needs q >= 3");
      break;
    default:
      break;
  }
}

SimpleGroupFacts lie_facts(const LieFamilySpec& spec) {
  validate(spec);
  const mpz_class q = spec.q();
  const std::uint64_t f = spec.f;
  const unsigned n = spec.n;
  std::uint64_t d = 1;
  std::uint64_t out = f;
  std::uint64_t coeff = f;
  unsigned long exponent = 0;
  unsigned rank = 0;

  switch (spec.family) {
    case LieFamily::Linear:
      d = gcd_with(n, q - 1);
      out = n >= 3 ? 2 * d * f : d * f;
      coeff = n >= 3 ? 2 * f : f;
      exponent = n >= 3 ? n * n - 1 : 3;
      rank = n - 1;
      break;
    case LieFamily::Unitary:
      d = gcd_with(n, q + 1);
      out = 2 * d * f;
      coeff = 2 * f;
      exponent = n * n - 1;
      rank = n - 1;
      break;
    case LieFamily::Symplectic:
      d = gcd_with(2, q - 1);
      out = n >= 3 ? d * f : 2 * f;
      coeff = n >= 3 ? f : 2 * f;
      exponent = n >= 3 ? 2 * n * n + n : 10;
      rank = n;
      break;
    case LieFamily::OddOrthogonal:
      d = 2;
      out = 2 * f;
      coeff = f;
      exponent = 2 * n * n + n;
      rank = n;
      break;
    case LieFamily::PlusOrthogonal:
      if (n == 4) {
        d = gcd_with(4, pow(q, 4) - 1);
        out = 6 * d * f;
        coeff = 2 * f;
        exponent = 28;
      } else {
        d = gcd_with(4, pow(q, n) - 1);
        out = 2 * d * f;
        coeff = 2 * f;
        exponent = 2 * n * n - n;
      }
      rank = n;
      break;
    case LieFamily::MinusOrthogonal:
      d = gcd_with(4, pow(q, n) + 1);
      out = 2 * d * f;
      coeff = 2 * f;
      exponent = 2 * n * n - n;
      rank = n;
      break;
    case LieFamily::Suzuki:
      exponent = 5;
      rank = 2;
      break;
    case LieFamily::ReeG2:
      exponent = 7;
      rank = 2;
      break;
    case LieFamily::ReeF4:
      exponent = 26;
      rank = 4;
      break;
    case LieFamily::TrialityD4:
      out = 3 * f;
      coeff = 6 * f;
      exponent = 28;
      rank = 4;
      break;
    case LieFamily::TwistedE6:
      d = gcd_with(3, q + 1);
      out = 2 * d * f;
      coeff = 2 * f;
      exponent = 78;
      rank = 6;
      break;
    case LieFamily::G2:
      out = spec.p == 3 ? 2 * f : f;
      coeff = out;
      exponent = 14;
      rank = 2;
      break;
    case LieFamily::F4:
      out = (spec.p == 2 ? 2 : 1) * f;
      coeff = out;
      exponent = 52;
      rank = 4;
      break;
    case LieFamily::E6:
      d = gcd_with(3, q - 1);
      out = 2 * d * f;
      coeff = 2 * f;
      exponent = 78;
      rank = 6;
      break;
    case LieFamily::E7:
      d = gcd_with(2, q - 1);
      out = d * f;
      coeff = f;
      exponent = 133;
      rank = 7;
      break;
    case LieFamily::E8:
      exponent = 248;
      rank = 8;
      break;
    case LieFamily::Alternating:
    case LieFamily::Sporadic:
      break;
  }

  SimpleGroupFacts facts;
  facts.d = d;
  facts.out_order = out;
  facts.aut_upper = mpz_class(static_cast<unsigned long>(coeff)) * pow(q, exponent);
  facts.log2_aut_upper = std::log2(static_cast<double>(coeff)) +
                         static_cast<double>(exponent) * static_cast<double>(f) * std::log2(static_cast<double>(spec.p));
  facts.lie_rank = rank;
  if (spec.family == LieFamily::Linear && n == 2) {
    facts.exact_aut_order = q * (q * q - 1) * static_cast<unsigned long>(f);
  } else if (spec.family == LieFamily::Linear && n == 3) {
    facts.exact_aut_order = 2 * static_cast<unsigned long>(f) * q * q * q * (q * q - 1) * (q * q * q - 1);
  }
  return facts;
}

GammaValue gamma(double log2_aut, std::uint64_t k) {
  if (k <= 2) throw InvalidInput("gamma needs k >= 3 (log2 log2 k must be positive), got k = " + std::to_string(k));
  const double lk = std::log2(static_cast<double>(k));
  return {log2_aut, k, log2_aut / (lk * lk * std::log2(lk))};
}

double log2(const mpz_class& x) {
  if (x <= 0) throw InvalidInput("log2 of a non-positive integer");
  long exp = 0;
  double mantissa = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log2(mantissa) + static_cast<double>(exp);
}

mpz_class k_star_lower_bound(const LieFamilySpec& spec, std::optional<std::uint64_t> e_of_t) {
  SimpleGroupFacts facts = lie_facts(spec);
  mpz_class q_to_rank;
  if (spec.family == LieFamily::Suzuki || spec.family == LieFamily::ReeG2 || spec.family == LieFamily::ReeF4) {
    // p^f is q^2 here, so q^r = (p^f)^(r/2)
    q_to_rank = pow(spec.q(), facts.lie_rank / 2);
  } else {
    q_to_rank = pow(spec.q(), facts.lie_rank);
  }
  mpz_class generic = q_to_rank / mpz_class(static_cast<unsigned long>(facts.d * facts.out_order));
  if (e_of_t && generic < static_cast<unsigned long>(*e_of_t)) return mpz_class(static_cast<unsigned long>(*e_of_t));
  return generic;
}

std::uint64_t psl2_class_count(std::uint64_t q) {
  if (q < 4 || !prime_power(q)) throw InvalidInput("psl2_class_count needs a prime power q >= 4, got " + std::to_string(q));
  return q % 2 == 0 ? q + 1 : (q + 5) / 2;
}

std::uint64_t pgl2_class_count(std::uint64_t q) {
  if (q < 5 || q % 2 == 0 || !prime_power(q)) {
    throw InvalidInput("pgl2_class_count needs an odd prime power q >= 5, got " + std::to_string(q));
  }
  return q + 2;
}

std::vector<VerificationReport> verify_c2(const std::vector<C2Row>& rows) {
  std::vector<VerificationReport> reports;
  std::size_t failures = 0;
  double worst = 0.0;
  std::string worst_name;
  for (const auto& row : rows) {
    VerificationReport r("c2", row.name);
    GammaValue g = gamma(row.log2_aut, row.k);
    double limit = kGammaGeneric;
    if (row.exception == C2Exception::Alt5) limit = kGammaAlt5;
    if (row.exception == C2Exception::Psl34) limit = kGammaPsl34;
    r.set("log2_aut", row.log2_aut);
    r.set("k", row.k);
    r.set("gamma", g.gamma);
    r.set("limit", limit);
    // the generic bound is strict, the two exceptional ones are stated with <=
    bool ok = row.exception == C2Exception::None ? g.gamma < limit : g.gamma <= limit;
    if (row.exception != C2Exception::None) {
      // an exception must actually exceed the generic bound
      r.set("exceeds_generic", g.gamma >= kGammaGeneric);
      ok = ok && g.gamma >= kGammaGeneric;
    }
    r.margin = limit - g.gamma;
    if (row.table_bound) {
      r.set("table_bound", *row.table_bound);
      ok = ok && g.gamma < *row.table_bound;
    }
    r.require(ok);
    if (!ok) ++failures;
    if (g.gamma > worst) {
      worst = g.gamma;
      worst_name = row.name;
    }
    reports.push_back(std::move(r));
  }
  VerificationReport summary("c2.summary", "all rows");
  summary.set("rows", rows.size());
  summary.set("failures", failures);
  summary.set("max_gamma", worst);
  summary.set("argmax", worst_name);
  summary.set("c2", kC2);
  summary.margin = kC2 - worst;
  summary.require(failures == 0 && worst <= kC2);
  reports.push_back(std::move(summary));
  return reports;
}

}  // namespace kclass::bounds
