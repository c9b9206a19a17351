#pragma once

#include <cstdint>

namespace eqc {

// Resource limits for enumeration-heavy operations.  Defaults can be
// overridden per call, via CLI flags, or via environment variables
// EQC_CAP_GROUP_ORDER / EQC_CAP_HOM_CANDIDATES / EQC_CAP_MATERIALIZE /
// EQC_CAP_QMAX.
struct Caps {
  // Largest group order accepted by subgroup-lattice enumeration.
  std::int64_t group_order = 24;
  // Candidate budget for homomorphism enumeration.
  std::int64_t hom_candidates = 1'000'000;
  // Largest group order materialized with full multiplication tables
  // (wreath products, automorphism groups, centralizers).
  std::int64_t materialize_order = 40'000;
  // Default catalog depth (symmetric-power / G-set size scans).
  int q_max = 6;
};

// Process-wide defaults, seeded from the environment on first use.
const Caps& default_caps();

// Override the process-wide defaults (CLI --cap-* flags).
void set_default_caps(const Caps& caps);

}  // namespace eqc
