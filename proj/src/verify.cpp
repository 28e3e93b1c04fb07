#include "bifib/verify.hpp"

#include <functional>
#include <future>
#include <vector>

#include "bifib/bases.hpp"
#include "bifib/coefficients.hpp"
#include "bifib/operators.hpp"
#include "bifib/sequences.hpp"
#include "bifib/specializations.hpp"

namespace bifib {

std::optional<VerifyScope> parse_scope(std::string_view name) {
  if (name == "all") return VerifyScope::All;
  if (name == "lemma1") return VerifyScope::Lemma1;
  if (name == "lemma2") return VerifyScope::Lemma2;
  if (name == "relations") return VerifyScope::Relations;
  if (name == "theorems") return VerifyScope::Theorems;
  return std::nullopt;
}

Report run_verify(std::uint32_t n_max, VerifyScope scope) {
  const bool all = scope == VerifyScope::All;
  std::vector<std::function<Report()>> jobs;
  if (all || scope == VerifyScope::Lemma1) jobs.emplace_back([=] { return check_lemma1(n_max); });
  if (all || scope == VerifyScope::Lemma2) jobs.emplace_back([=] { return check_lemma2(n_max); });
  if (all || scope == VerifyScope::Relations) {
    jobs.emplace_back([=] { return check_relations(n_max); });
    jobs.emplace_back([=] { return check_shift_law(n_max); });
  }
  if (all || scope == VerifyScope::Theorems) {
    jobs.emplace_back([=] { return check_theorems(n_max); });
    for (auto tag : {CoeffTag::a, CoeffTag::b, CoeffTag::c, CoeffTag::d, CoeffTag::e}) {
      jobs.emplace_back([=] { return cross_check(tag, n_max); });
    }
  }
  if (all) {
    jobs.emplace_back([=] { return check_chebyshev(n_max); });
    jobs.emplace_back([=] { return check_theorem_transfer(n_max); });
  }

  std::vector<std::future<Report>> pending;
  for (auto& job : jobs) pending.push_back(std::async(std::launch::async, job));
  Report report;
  for (auto& f : pending) report.merge(f.get());
  report.sort_by_name();
  return report;
}

}  // namespace bifib
