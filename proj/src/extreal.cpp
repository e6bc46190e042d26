#include "mfn/extreal.hpp"

#include <cstdio>

namespace mfn {

std::string to_string(const ExtReal& x) {
  if (x.is_infinite()) return "inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x.value());
  return buf;
}

}  // namespace mfn
