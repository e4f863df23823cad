#ifndef CHEEGER_CONFIG_HPP
#define CHEEGER_CONFIG_HPP

#include <cstdint>

namespace cheeger
{

/// Size limits for the exact enumerations. Exceeding one is a hard error.
struct Caps
{
  int subset_cap = 22;        // 2^n scans
  int tripartition_cap = 14;  // 3^n scans
  int cyclic_max_size = 10;   // |V1| for k^|V1| switching scans
  int cyclic_max_k = 4;
  int transitivity_cap = 16;  // automorphism backtracking
};

enum class Execution
{
  serial,
  parallel
};

} // namespace cheeger

#endif // CHEEGER_CONFIG_HPP
