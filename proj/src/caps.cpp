#include "eqc/caps.hpp"

#include <cstdlib>

namespace eqc {

namespace {

std::int64_t env_int(const char* name, std::int64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  long long parsed = std::strtoll(v, &end, 10);
  if (end == v || parsed <= 0) return fallback;
  return parsed;
}

}  // namespace

namespace {

Caps& caps_storage() {
  static Caps caps = [] {
    Caps c;
    c.group_order = env_int("EQC_CAP_GROUP_ORDER", c.group_order);
    c.hom_candidates = env_int("EQC_CAP_HOM_CANDIDATES", c.hom_candidates);
    c.materialize_order = env_int("EQC_CAP_MATERIALIZE", c.materialize_order);
    c.q_max = static_cast<int>(env_int("EQC_CAP_QMAX", c.q_max));
    return c;
  }();
  return caps;
}

}  // namespace

const Caps& default_caps() { return caps_storage(); }

void set_default_caps(const Caps& caps) { caps_storage() = caps; }

}  // namespace eqc
