#pragma once

#include <cstddef>

namespace tentlim {

// Cap on generated pattern and oracle list sizes; TENTLIM_MAX_ENTRIES overrides the 2^20 default.
std::size_t max_entries();

}  // namespace tentlim
