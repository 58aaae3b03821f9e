#include "wzb/bigfloat.hpp"

#include <cstdio>
#include <vector>

namespace wzb {

std::string BigFloat::str(int digits) const {
  if (is_nan()) return "nan";
  char fmt[32];
  std::snprintf(fmt, sizeof fmt, "%%.%dRe", digits);
  int need = mpfr_snprintf(nullptr, 0, fmt, v_);
  std::vector<char> buf(static_cast<size_t>(need) + 1);
  mpfr_snprintf(buf.data(), buf.size(), fmt, v_);
  return std::string(buf.data());
}

}  // namespace wzb
