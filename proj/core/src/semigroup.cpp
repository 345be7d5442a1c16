#include "numsg/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "numsg/error.hpp"

namespace numsg {

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> gens) {
  if (gens.empty()) throw Error(ErrorCode::EmptyGenerators, "no generators given");
  Int g = 0;
  for (Int x : gens) {
    if (x <= 0) {
      throw Error(ErrorCode::NonPositiveGenerator,
                  "generator " + std::to_string(x) + " is not positive");
    }
    if (x > kMaxGenerator) {
      throw Error(ErrorCode::GeneratorTooLarge,
                  "generator " + std::to_string(x) + " exceeds 2^40");
    }
    g = std::gcd(g, x);
  }
  if (g != 1) {
    throw Error(ErrorCode::Gcd, "generators have gcd " + std::to_string(g) +
                                    "; the complement would be infinite");
  }

  std::vector<Int> candidates(gens.begin(), gens.end());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  auto impl = std::make_shared<Impl>();
  const Int e = candidates.front();
  const Int largest = candidates.back();

  // Sieve upward. A candidate is kept only if the generators accepted so far
  // do not already produce it; the scan stops once a run of e consecutive
  // members starts after the largest candidate has been seen.
  std::vector<std::uint8_t> in{1};
  std::size_t next_candidate = 0;
  Int run = 1;
  Int run_start = 0;
  for (Int x = 1;; ++x) {
    if (run >= e && x > largest) break;
    std::uint8_t member = 0;
    for (Int gen : impl->min_gens) {
      if (gen > x) break;
      if (in[static_cast<std::size_t>(x - gen)] != 0) {
        member = 1;
        break;
      }
    }
    if (next_candidate < candidates.size() && candidates[next_candidate] == x) {
      if (member == 0) {
        impl->min_gens.push_back(x);
        member = 1;
      }
      ++next_candidate;
    }
    in.push_back(member);
    if (member != 0) {
      if (run == 0) run_start = x;
      ++run;
    } else {
      run = 0;
    }
  }

  impl->conductor = run_start;
  in.resize(static_cast<std::size_t>(run_start) + 1);
  in.back() = 1;
  for (Int x = 0; x < run_start; ++x) {
    if (in[static_cast<std::size_t>(x)] == 0) impl->gaps.push_back(x);
  }
  impl->membership = std::move(in);
  return NumericalSemigroup(std::move(impl));
}

Int smallest_odd_element(const NumericalSemigroup& s) {
  for (Int x = 1;; x += 2) {
    if (s.contains(x)) return x;
  }
}

}  // namespace numsg
