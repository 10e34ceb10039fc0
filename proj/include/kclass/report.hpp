#pragma once

#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace kclass {

enum class Verdict { Pass, Fail, Skipped };

std::string to_string(Verdict v);

/// Exact integers stay exact; reals are printed with six decimals.
using ReportValue = std::variant<mpz_class, double, bool, std::string>;

/// Outcome of one check: named values in insertion order, a verdict and an
/// optional margin (how far the asserted inequality is from failing).
struct VerificationReport {
  VerificationReport(std::string check_id, std::string check_subject)
      : id(std::move(check_id)), subject(std::move(check_subject)) {}

  std::string id;
  std::string subject;
  std::vector<std::pair<std::string, ReportValue>> values;
  Verdict verdict = Verdict::Pass;
  std::optional<double> margin;
  std::string reason;

  void set(const std::string& name, ReportValue value);
  void set(const std::string& name, bool value) { set(name, ReportValue(value)); }
  void set(const std::string& name, double value) { set(name, ReportValue(value)); }
  void set(const std::string& name, const char* value) { set(name, ReportValue(std::string(value))); }
  void set(const std::string& name, const mpz_class& value) { set(name, ReportValue(value)); }
  template <std::integral T>
    requires(!std::same_as<T, bool>)
  void set(const std::string& name, T value) {
    if constexpr (std::signed_integral<T>) {
      set(name, ReportValue(mpz_class(static_cast<long>(value))));
    } else {
      set(name, ReportValue(mpz_class(static_cast<unsigned long>(value))));
    }
  }

  const ReportValue* get(const std::string& name) const;
  mpz_class integer(const std::string& name) const;
  double real(const std::string& name) const;
  bool flag(const std::string& name) const;

  /// Marks the report skipped; skips never count as failures.
  void skip(std::string why);
  /// Downgrades to Fail when `ok` is false (never upgrades).
  void require(bool ok);

  bool passed() const noexcept { return verdict == Verdict::Pass; }
};

std::string format_decimal(double x, int places = 6);

/// JSON array of reports with fields {id, subject, values, verdict, margin[, reason]}.
/// Byte-identical for identical inputs.
std::string to_json(const std::vector<VerificationReport>& reports);

void print_reports(std::ostream& os, const std::vector<VerificationReport>& reports);

bool any_failed(const std::vector<VerificationReport>& reports);

}  // namespace kclass
