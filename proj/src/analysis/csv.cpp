#include "fhr/analysis/csv.hpp"

#include <ostream>
#include <string>

#include "fhr/format.hpp"

namespace fhr::analysis {
namespace {

template <class T>
std::string field(const std::optional<T>& value) {
  if (!value) return "NA";
  if constexpr (std::is_floating_point_v<T>) {
    return shortest_repr(*value);
  } else {
    return std::to_string(*value);
  }
}

}  // namespace

void write_csv(std::ostream& out, std::span<const ResultRow> rows) {
  out << kCsvHeader << '\n';
  for (const ResultRow& row : rows) {
    out << row.method << ',' << row.n << ',' << field(row.d) << ',' << field(row.e) << ','
        << field(row.linf) << ',' << field(row.l1) << ',' << field(row.lebesgue) << ','
        << field(row.seed) << ',' << shortest_repr(row.sigma) << '\n';
  }
}

}  // namespace fhr::analysis
