#include "kclass/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace kclass {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

void VerificationReport::set(const std::string& name, ReportValue value) {
  for (auto& [key, existing] : values) {
    if (key == name) {
      existing = std::move(value);
      return;
    }
  }
  values.emplace_back(name, std::move(value));
}

const ReportValue* VerificationReport::get(const std::string& name) const {
  for (const auto& [key, value] : values) {
    if (key == name) return &value;
  }
  return nullptr;
}

mpz_class VerificationReport::integer(const std::string& name) const {
  const auto* v = get(name);
  if (!v || !std::holds_alternative<mpz_class>(*v)) throw std::out_of_range("no integer value " + name);
  return std::get<mpz_class>(*v);
}

double VerificationReport::real(const std::string& name) const {
  const auto* v = get(name);
  if (!v) throw std::out_of_range("no value " + name);
  if (std::holds_alternative<double>(*v)) return std::get<double>(*v);
  if (std::holds_alternative<mpz_class>(*v)) return std::get<mpz_class>(*v).get_d();
  throw std::out_of_range("value " + name + " is not numeric");
}

bool VerificationReport::flag(const std::string& name) const {
  const auto* v = get(name);
  if (!v || !std::holds_alternative<bool>(*v)) throw std::out_of_range("no flag " + name);
  return std::get<bool>(*v);
}

void VerificationReport::skip(std::string why) {
  verdict = Verdict::Skipped;
  reason = std::move(why);
}

void VerificationReport::require(bool ok) {
  if (!ok && verdict == Verdict::Pass) verdict = Verdict::Fail;
}

std::string format_decimal(double x, int places) {
  if (!std::isfinite(x)) return x > 0 ? "inf" : (x < 0 ? "-inf" : "nan");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, x);
  std::string s(buf);
  // normalize "-0.000000"
  if (s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

namespace {

std::string json_string(const std::string& s) {
  std::ostringstream os;
  os << '"';
  for (unsigned char c : s) {
    switch (c) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\t': os << "\\t"; break;
      default:
        if (c < 0x20) {
          os << "\\u" << std::hex << std::setw(4) << std::setfill('0') << int(c) << std::dec;
        } else {
          os << c;
        }
    }
  }
  os << '"';
  return os.str();
}

std::string json_number(double x) {
  if (!std::isfinite(x)) return "null";
  return format_decimal(x);
}

std::string json_value(const ReportValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, mpz_class>) {
          return x.get_str();
        } else if constexpr (std::is_same_v<T, double>) {
          return json_number(x);
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else {
          return json_string(x);
        }
      },
      v);
}

std::string text_value(const ReportValue& v) {
  if (std::holds_alternative<std::string>(v)) return std::get<std::string>(v);
  if (std::holds_alternative<double>(v)) return format_decimal(std::get<double>(v));
  return json_value(v);
}

}  // namespace

std::string to_json(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "[\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    os << "  {\"id\": " << json_string(r.id) << ", \"subject\": " << json_string(r.subject) << ", \"values\": {";
    for (std::size_t j = 0; j < r.values.size(); ++j) {
      os << (j ? ", " : "") << json_string(r.values[j].first) << ": " << json_value(r.values[j].second);
    }
    os << "}, \"verdict\": " << json_string(to_string(r.verdict))
       << ", \"margin\": " << (r.margin ? json_number(*r.margin) : "null");
    if (r.verdict == Verdict::Skipped) os << ", \"reason\": " << json_string(r.reason);
    os << '}' << (i + 1 < reports.size() ? "," : "") << '\n';
  }
  os << "]\n";
  return os.str();
}

void print_reports(std::ostream& os, const std::vector<VerificationReport>& reports) {
  std::size_t id_width = 2, subject_width = 7;
  for (const auto& r : reports) {
    id_width = std::max(id_width, r.id.size());
    subject_width = std::max(subject_width, r.subject.size());
  }
  for (const auto& r : reports) {
    os << std::left << std::setw(8) << to_string(r.verdict) << std::setw(static_cast<int>(id_width) + 2) << r.id
       << std::setw(static_cast<int>(subject_width) + 2) << r.subject;
    for (std::size_t j = 0; j < r.values.size(); ++j) {
      os << (j ? " " : "") << r.values[j].first << '=' << text_value(r.values[j].second);
    }
    if (r.margin) os << " margin=" << format_decimal(*r.margin);
    if (r.verdict == Verdict::Skipped) os << " (" << r.reason << ')';
    os << '\n';
  }
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& r : reports) {
    (r.verdict == Verdict::Pass ? pass : r.verdict == Verdict::Fail ? fail : skipped)++;
  }
  os << pass << " passed, " << fail << " failed, " << skipped << " skipped\n";
}

bool any_failed(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Fail) return true;
  }
  return false;
}

}  // namespace kclass
