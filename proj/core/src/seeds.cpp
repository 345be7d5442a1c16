#include "numsg/seeds.hpp"

#include "numsg/apery_hilbert.hpp"
#include "numsg/error.hpp"
#include "numsg/ideals.hpp"

namespace numsg::seeds {

namespace {

NumericalSemigroup checked_seed(const std::vector<Int>& gens, Int expected_type,
                                const std::vector<Int>& expected_hilbert, const char* name) {
  auto s = NumericalSemigroup::from_generators(gens);
  const std::string tag = std::string("seed ") + name + ": ";
  ensure(s.min_gens() == gens, tag + "generators are not minimal");
  ensure(is_almost_symmetric(s), tag + "not almost symmetric");
  if (expected_type > 0) ensure(type(s) == expected_type, tag + "unexpected type");
  const auto hf = hilbert_until_stable(s);
  ensure(*hf.stable_from + 1 == static_cast<int>(expected_hilbert.size()),
         tag + "unexpected stabilization index");
  for (std::size_t h = 0; h < expected_hilbert.size(); ++h) {
    ensure(hf.values[h] == expected_hilbert[h], tag + "unexpected Hilbert function");
  }
  return s;
}

}  // namespace

const std::vector<Int>& level2_generators() {
  static const std::vector<Int> gens{
      68,  72,  78,  82,  107, 111, 117, 121, 158, 162, 166, 168, 170, 172,
      174, 176, 178, 180, 182, 184, 186, 188, 190, 192, 194, 196, 197, 198,
      200, 201, 202, 205, 206, 207, 209, 210, 211, 213, 215, 217, 219, 221,
      223, 225, 227, 229, 231, 233, 235, 237, 239, 241, 245, 249};
  return gens;
}

const std::vector<Int>& level3_generators() {
  static const std::vector<Int> gens{32, 33, 38, 58, 59, 60, 61, 62, 63, 67,
                                     68, 69, 72, 73, 74, 75, 77, 78, 79, 80,
                                     81, 82, 83, 84, 85, 86, 87, 88};
  return gens;
}

const NumericalSemigroup& level2_seed() {
  static const NumericalSemigroup s =
      checked_seed(level2_generators(), 53, {1, 54, 52, 50, 54, 64, 68}, "level 2");
  return s;
}

const NumericalSemigroup& level3_seed() {
  static const NumericalSemigroup s =
      checked_seed(level3_generators(), 0, {1, 28, 28, 27, 27, 29, 30, 31, 32}, "level 3");
  return s;
}

}  // namespace numsg::seeds
