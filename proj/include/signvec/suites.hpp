#pragma once

// Named verification sweeps over the other modules. Each suite is deterministic
// for a given seed and returns a report; nothing is printed.

#include "signvec/report.hpp"
#include "signvec/result_cache.hpp"
#include "signvec/signed_vector.hpp"
#include "signvec/solver.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace signvec {

struct SuiteParams {
    /// lemma1 and biregular: restrict the sweep to one profile (biregular reads it over dimension n+1).
    std::optional<Profile> profile;
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    std::chrono::duration<double> budget = kDefaultBudget;
    /// Exact values found here are reused; fresh results are recorded.
    ResultCache* cache = nullptr;
};

/// theorem1, eq111, bounds, lemma1, lemma3, ratios, precedes, constructions,
/// solver-oracle, p-increment, biregular, dichotomy, coefficient, m-split.
[[nodiscard]] const std::vector<std::string>& suite_names();

/// Throws InputError for an unknown suite or parameters the suite cannot use.
[[nodiscard]] VerificationReport run_suite(const std::string& name, const SuiteParams& params = {});

/// Brute-force split value: the largest |V(X,Y)| counted by scanning every vector of the profile
/// for every prefix X = {1..x}. Independent of the binomial formula.
[[nodiscard]] std::size_t split_value_by_enumeration(const Profile& profile);

} // namespace signvec
