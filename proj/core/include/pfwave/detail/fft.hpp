#pragma once

#include <vector>

#include "pfwave/types.hpp"

namespace pfwave::detail {

// In-place iterative radix-2 transform. Forward uses phases e^{-2 pi i jk/n};
// the inverse conjugates them and divides by n. Size must be a power of two.
void fft_radix2(std::vector<Complex>& data, bool inverse);

}  // namespace pfwave::detail
