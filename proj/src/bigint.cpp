#include "hjx/bigint.hpp"

#include <algorithm>
#include <cctype>

#include "hjx/error.hpp"

namespace hjx {

BigInt parse_decimal(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(),
                                   [](unsigned char ch) { return std::isdigit(ch) != 0; })) {
    throw ParseError("expected a decimal integer, got '" + text + "'");
  }
  return BigInt(text);
}

}  // namespace hjx
