// numeric.hpp -- exact arithmetic building blocks (big integers, rationals).
#ifndef WEYLCOH_NUMERIC_HPP
#define WEYLCOH_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <vector>

namespace weylcoh {

// Arbitrary-precision integer: partition counts inside an alternating Weyl sum
// can be individually huge even when the signed sum is tiny.
using BigInt = boost::multiprecision::cpp_int;

// Exact rational on 64-bit words.  Everything rational in this library has
// tiny denominators (they divide the index of connection of the lattice), so
// 64-bit components are ample; boost::rational throws on overflow-free
// normalization and we keep magnitudes far below the limit.
using Rat = boost::rational<std::int64_t>;

using IntVec = std::vector<std::int64_t>;
using RatVec = std::vector<Rat>;

inline bool is_integral(const Rat& r) { return r.denominator() == 1; }

inline bool all_integral(const RatVec& v) {
  for (const auto& r : v)
    if (!is_integral(r)) return false;
  return true;
}

}  // namespace weylcoh

#endif  // WEYLCOH_NUMERIC_HPP
