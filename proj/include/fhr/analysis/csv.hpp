#pragma once

#include <iosfwd>
#include <span>

#include "fhr/analysis/sweeps.hpp"

namespace fhr::analysis {

inline constexpr const char* kCsvHeader = "method,n,d,e,linf,l1,lebesgue,seed,sigma";

/// Header plus one line per row; reals in shortest round-trip form, sentinels
/// as NA.
void write_csv(std::ostream& out, std::span<const ResultRow> rows);

}  // namespace fhr::analysis
