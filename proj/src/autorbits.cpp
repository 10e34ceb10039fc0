#include "kclass/autorbits.hpp"

#include "kclass/errors.hpp"
#include "kclass/report.hpp"

namespace kclass {

AmbientPair::AmbientPair(FiniteGroup ambient, std::vector<Permutation> socle_generators)
    : ambient_(std::move(ambient)), socle_(ambient_.degree(), std::move(socle_generators)) {
  if (!is_normal_subgroup(ambient_, socle_.generators())) {
    throw ValidationError("socle is not normal in the ambient group");
  }
}

mpz_class AmbientPair::outer_index() const { return ambient_.order() / socle_.order(); }

std::size_t orbit_count_on_subset(const FiniteGroup& ambient, const ElementSet& subset) {
  if (subset.degree() != ambient.degree()) throw InvalidInput("subset degree differs from ambient degree");
  return conjugation_orbits(subset, ambient.generators()).count();
}

std::size_t k_star(const AmbientPair& pair, std::size_t cap) {
  return orbit_count_on_subset(pair.ambient(), group_elements(pair.socle(), cap));
}

std::set<std::uint64_t> element_order_spectrum(const ElementSet& elements) {
  std::set<std::uint64_t> orders;
  for (std::size_t i = 0; i < elements.size(); ++i) orders.insert(element_order(elements.at(i)));
  return orders;
}

std::set<std::uint64_t> element_order_spectrum(const FiniteGroup& group, std::size_t cap) {
  return element_order_spectrum(group_elements(group, cap));
}

PairCounts pair_counts(const AmbientPair& pair, std::size_t cap) {
  ElementSet socle = group_elements(pair.socle(), cap);
  PairCounts out;
  out.k_socle = conjugacy_classes(pair.socle(), socle).k();
  out.k_star = orbit_count_on_subset(pair.ambient(), socle);
  out.orders = element_order_spectrum(socle);
  return out;
}

VerificationReport class_fusion_summary(const AmbientPair& pair, std::size_t cap) {
  VerificationReport report("fusion", "");
  const mpz_class index = pair.outer_index();
  try {
    PairCounts counts = pair_counts(pair, cap);
    std::size_t k_ambient = conjugacy_classes(pair.ambient(), cap).k();
    report.set("order_T", mpz_class(pair.socle().order()));
    report.set("order_A", mpz_class(pair.ambient().order()));
    report.set("k_T", counts.k_socle);
    report.set("k_A", k_ambient);
    report.set("k_star", counts.k_star);
    report.set("outer_index", index);
    report.set("e_T", counts.orders.size());
    // k* >= k(T) / |A:T|, checked as k* * |A:T| >= k(T)
    const mpz_class lhs = mpz_class(static_cast<unsigned long>(counts.k_star)) * index;
    const bool bound = lhs >= static_cast<unsigned long>(counts.k_socle);
    const bool ordered = counts.k_star <= counts.k_socle && counts.k_star >= counts.orders.size();
    report.set("bound_holds", bound);
    report.margin = static_cast<double>(counts.k_star) -
                    static_cast<double>(counts.k_socle) / index.get_d();
    report.verdict = bound && ordered ? Verdict::Pass : Verdict::Fail;
  } catch (const CapExceeded& e) {
    report.skip(e.what());
  }
  return report;
}

}  // namespace kclass
