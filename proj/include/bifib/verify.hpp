#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "bifib/report.hpp"

namespace bifib {

enum class VerifyScope { All, Lemma1, Lemma2, Relations, Theorems };

std::optional<VerifyScope> parse_scope(std::string_view name);

/// Runs every check in scope for indices up to n_max. Independent groups run
/// concurrently; the returned report is ordered by check name.
Report run_verify(std::uint32_t n_max, VerifyScope scope);

}  // namespace bifib
