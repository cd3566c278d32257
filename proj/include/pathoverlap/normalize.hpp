#pragma once

#include <string>
#include <vector>

namespace pathoverlap {

/// Controls how raw species names are condensed before matching.
struct NormalizationConfig {
    std::vector<std::string> strip_prefixes;
    bool case_fold = true;
    bool collapse_whitespace = true;

    static NormalizationConfig defaults();
};

/// Case-folds, collapses whitespace and strips leading state/adjective
/// tokens repeatedly. If stripping would consume the whole name, the folded
/// and collapsed input is returned instead, so the result is empty only for
/// an empty input. Idempotent.
std::string normalize_name(const std::string& name, const NormalizationConfig& cfg);

} // namespace pathoverlap
