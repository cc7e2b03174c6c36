#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace skewk {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(const BigInt& base, std::uint64_t e) {
  BigInt r = 1, b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline std::string big_str(const BigInt& v) { return v.str(); }

}  // namespace skewk
