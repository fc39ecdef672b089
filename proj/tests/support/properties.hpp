#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sea/catalog.hpp"
#include "sea/invariants.hpp"

namespace sea::testing {

struct PropertyResult {
    int cases = 0;
    int failures = 0;
    std::string first_failure;
    std::vector<std::string> notes;

    bool ok() const { return cases > 0 && failures == 0; }
    void fail(const std::string& what) {
        if (failures++ == 0) first_failure = what;
    }
    std::string summary() const;
};

/// Named available invariants of the given system.
std::vector<std::pair<std::string, Scalar>> invariant_values(SystemKind kind, const BinaryForm& f);
/// Defined absolute invariants, degree-anomalous ones (v4, v5) excluded.
std::vector<std::pair<std::string, Scalar>> absolute_values(SystemKind kind, const BinaryForm& f);

/// Invariants unchanged under random integer unimodular substitutions.
PropertyResult invariance_under_unimodular(SystemKind kind, int degree, int forms, int matrices, std::uint64_t seed);
/// Absolute invariants unchanged under rational invertible substitution and f -> c f.
PropertyResult absolute_invariance(SystemKind kind, int degree, int forms, int matrices, std::uint64_t seed);
/// I(f^M) = det(M)^(deg(I) d / 2) I(f) for rational invertible M.
PropertyResult weight_law(SystemKind kind, int degree, int forms, std::uint64_t seed);

/// (f,g)^0 = fg, (f,f)^odd = 0, order bookkeeping, covariance.
PropertyResult transvectant_identities(int instances, std::uint64_t seed);

/// Transformed pairs must be isomorphic, independent pairs not (coincidences
/// are re-checked and reported in notes), hypothesis violations inconclusive.
PropertyResult isomorphism_soundness(int genus, int pairs, std::uint64_t seed);

// Table consistency criteria over a catalog.
PropertyResult catalog_genus_reproduction(const Catalog& cat, const std::vector<std::string>& flagged_ids);
PropertyResult catalog_dimension_identity(const Catalog& cat);
PropertyResult catalog_rh_consistency(const Catalog& cat);
PropertyResult catalog_hurwitz(const Catalog& cat);

/// Row ids listed in a FLAGS markdown file ("| <id> | ..." table rows).
std::vector<std::string> read_flag_ids(const std::string& path);

}  // namespace sea::testing
