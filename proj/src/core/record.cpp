#include "fhr/record.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "fhr/error.hpp"
#include "fhr/format.hpp"

namespace fhr {
namespace {

std::string next_line(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorKind::parse_error, "interpolant record ended early");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::size_t next_count(std::istream& in) {
  const std::string line = next_line(in);
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(line, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != line.size() || line.front() == '-') {
    throw Error(ErrorKind::parse_error, "expected a nonnegative integer, got '" + line + "'");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

void write_record(std::ostream& out, const Interpolant& interp) {
  out << interp.nodes().n() << '\n' << interp.params().d << '\n' << interp.params().e << '\n';
  for (double x : interp.nodes().xs()) out << shortest_repr(x) << '\n';
  for (double y : interp.samples().ys()) out << shortest_repr(y) << '\n';
}

Interpolant read_record(std::istream& in) {
  const std::size_t n = next_count(in);
  ExtParams params;
  params.d = next_count(in);
  params.e = next_count(in);
  std::vector<double> xs(n + 1);
  std::vector<double> ys(n + 1);
  for (double& x : xs) x = parse_double(next_line(in));
  for (double& y : ys) y = parse_double(next_line(in));
  return Interpolant(NodeSet(std::move(xs)), Samples(std::move(ys)), params);
}

}  // namespace fhr
