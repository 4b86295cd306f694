#pragma once

#include "hennings/algebra.hpp"

namespace hennings::detail {

// Base Hopf structures for the builtins (no rho, no G attached).
HopfAlgebraSpec build_group_zn(int n);
HopfAlgebraSpec build_h4_base();
HopfAlgebraSpec build_uq_base();

}  // namespace hennings::detail
