#pragma once

// Fixed from the pilot (seeds 10001..10100, see pilot.cpp) before the
// acceptance run on seeds 1..100. Pilot output:
//   classic   solved 100/100 -> threshold 96
//   valuation solved 0/100 -> threshold 0
//   valuation with rounded acceptance solved 100/100 (informational)
// The valuation walk stops only on an all-barrier satisfying state; at
// M = 20 that state was never reached within 4 n^2 M^2 moves.

namespace desk {

inline constexpr int kClassicThreshold = 96;
inline constexpr int kValuationThreshold = 0;

} // namespace desk
