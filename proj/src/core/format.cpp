#include "fhr/format.hpp"

#include <array>
#include <charconv>
#include <system_error>

#include "fhr/error.hpp"

namespace fhr {

std::string shortest_repr(double value) {
  std::array<char, 32> buffer{};
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), result.ptr);
}

double parse_double(const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto result = std::from_chars(first, last, value);
  if (result.ec != std::errc{} || result.ptr != last) {
    throw Error(ErrorKind::parse_error, "cannot parse '" + text + "' as a real number");
  }
  return value;
}

}  // namespace fhr
