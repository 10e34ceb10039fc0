#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "kclass/autorbits.hpp"
#include "kclass/bounds.hpp"
#include "kclass/classes.hpp"
#include "kclass/corpus.hpp"
#include "kclass/errors.hpp"
#include "kclass/report.hpp"
#include "kclass/verifier.hpp"

namespace {

using namespace kclass;

int cmd_order(const std::string& path) {
  const GroupFile file = load_group_file(path);
  const FiniteGroup ambient = file.ambient();
  std::cout << file.name << '\n' << "order " << ambient.order().get_str() << '\n';
  if (file.find(SectionTag::Socle)) {
    const FiniteGroup socle(file.degree, file.socle_generators());
    std::cout << "socle_order " << socle.order().get_str() << '\n';
  }
  return 0;
}

int cmd_classes(const std::string& path, std::size_t cap) {
  const GroupFile file = load_group_file(path);
  const FiniteGroup group = file.ambient();
  const auto classes = conjugacy_classes(group, cap);
  std::cout << file.name << '\n' << "k " << classes.k() << '\n';
  for (std::size_t i = 0; i < classes.k(); ++i) {
    const auto& rep = classes.representatives[i];
    std::cout << classes.sizes[i] << '\t' << element_order(rep) << '\t' << rep.to_string() << '\n';
  }
  return 0;
}

int cmd_kstar(const std::string& path, std::size_t cap) {
  const GroupFile file = load_group_file(path);
  const AmbientPair pair(file.ambient(), file.socle_generators());
  const auto counts = pair_counts(pair, cap);
  std::cout << file.name << '\n'
            << "k_T " << counts.k_socle << '\n'
            << "k_star " << counts.k_star << '\n'
            << "outer_index " << pair.outer_index().get_str() << '\n';
  return 0;
}

int cmd_eorders(const std::string& path, std::size_t cap) {
  const GroupFile file = load_group_file(path);
  const FiniteGroup socle(file.degree, file.socle_generators());
  const auto orders = element_order_spectrum(socle, cap);
  std::cout << file.name << '\n' << "e " << orders.size() << '\n' << "orders";
  for (auto o : orders) std::cout << ' ' << o;
  std::cout << '\n';
  return 0;
}

int cmd_gamma(double log2aut, std::uint64_t k) {
  const auto g = bounds::gamma(log2aut, k);
  std::cout << "gamma " << format_decimal(g.gamma) << '\n';
  return 0;
}

int cmd_verify(const std::string& suite, std::size_t cap, const std::string& catalog, const std::string& json) {
  VerifyOptions options;
  options.cap = cap;
  if (!catalog.empty()) options.catalog = catalog;
  const auto reports = run_suite(suite, options);
  print_reports(std::cout, reports);
  if (!json.empty()) {
    std::ofstream out(json, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + json);
    out << to_json(reports);
  }
  return any_failed(reports) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugacy-class and automorphism-orbit counts for permutation groups"};
  app.require_subcommand(1);
  std::size_t cap = kclass::kDefaultCap;
  std::string file;

  auto* order = app.add_subcommand("order", "group order of the ambient (and socle) group");
  order->add_option("file", file, "group file")->required();
  auto* classes = app.add_subcommand("classes", "conjugacy classes of the ambient group");
  classes->add_option("file", file, "group file")->required();
  classes->add_option("--cap", cap, "enumeration cap");
  auto* kstar = app.add_subcommand("kstar", "orbits of the ambient group on the socle");
  kstar->add_option("file", file, "group file")->required();
  kstar->add_option("--cap", cap, "enumeration cap");
  auto* eorders = app.add_subcommand("eorders", "element orders of the socle");
  eorders->add_option("file", file, "group file")->required();
  eorders->add_option("--cap", cap, "enumeration cap");

  double log2aut = 0;
  std::uint64_t k = 0;
  auto* gamma = app.add_subcommand("gamma", "log2|Aut| / ((log2 k)^2 log2 log2 k)");
  gamma->add_option("--log2aut", log2aut, "log2 of |Aut(T)|")->required();
  gamma->add_option("--k", k, "k*(T)")->required();

  std::string suite, catalog, json;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "tables, c2, lemmas, bertram, almost-simple, socle or all")
      ->required()
      ->check(CLI::IsMember(kclass::suite_names()));
  verify->add_option("--cap", cap, "enumeration cap");
  verify->add_option("--catalog", catalog, "catalog directory (default: $KCLASS_CATALOG or the bundled one)");
  verify->add_option("--json", json, "write the reports as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*order) return cmd_order(file);
    if (*classes) return cmd_classes(file, cap);
    if (*kstar) return cmd_kstar(file, cap);
    if (*eorders) return cmd_eorders(file, cap);
    if (*gamma) return cmd_gamma(log2aut, k);
    if (*verify) return cmd_verify(suite, cap, catalog, json);
  } catch (const kclass::CapExceeded& e) {
    std::cerr << "kclass: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "kclass: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
