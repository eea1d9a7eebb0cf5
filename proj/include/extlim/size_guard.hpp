#pragma once
#include <cstddef>

namespace extlim {

/// Basis-size cap; EXTLIM_SIZE_GUARD overrides the default of 20000.
std::size_t size_guard_limit();

/// Throws SizeGuardError when `requested` exceeds the cap.
void check_size_guard(std::size_t requested, const char* what);

}  // namespace extlim
