#pragma once

#include <iosfwd>

#include "fhr/interpolant.hpp"

namespace fhr {

// Text record of an interpolant, one value per line:
//   n
//   d
//   e
//   x_0 ... x_n     (n + 1 lines)
//   y_0 ... y_n     (n + 1 lines)
// Reals use the shortest round-trip decimal, so a read-back is exact.

void write_record(std::ostream& out, const Interpolant& interp);
Interpolant read_record(std::istream& in);

}  // namespace fhr
