#pragma once

#include <span>
#include <vector>

#include "numsg/semigroup.hpp"

namespace numsg {

/// A relative ideal E of S: a subset of Z, bounded below, with E + S in E.
/// Stored as the members below `threshold` plus the half-line
/// [threshold, inf). The threshold is kept minimal, so two ideals over the
/// same semigroup are equal iff their representations are.
class RelativeIdeal {
 public:
  /// Validates closure under S and normalizes. `small` may be unsorted and may
  /// contain values >= threshold (they are absorbed by the half-line).
  RelativeIdeal(NumericalSemigroup ambient, std::vector<Int> small, Int threshold);

  /// The ideal generated by `gens`: the union of g + S.
  static RelativeIdeal generated_by(const NumericalSemigroup& ambient, std::span<const Int> gens);
  /// S itself, viewed as an ideal over S.
  static RelativeIdeal whole(const NumericalSemigroup& ambient);
  /// M(S) = S \ {0}.
  static RelativeIdeal maximal(const NumericalSemigroup& ambient);

  const NumericalSemigroup& ambient() const noexcept { return ambient_; }
  const std::vector<Int>& small() const noexcept { return small_; }
  Int threshold() const noexcept { return threshold_; }

  Int min() const noexcept { return small_.empty() ? threshold_ : small_.front(); }
  bool contains(Int x) const noexcept;
  /// E is contained in S.
  bool is_proper() const;
  bool is_subset_of(const RelativeIdeal& other) const;

  friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) {
    return a.threshold_ == b.threshold_ && a.small_ == b.small_ && a.ambient_ == b.ambient_;
  }

 private:
  struct Trusted {};
  RelativeIdeal(Trusted, NumericalSemigroup ambient, std::vector<Int> small, Int threshold);
  void normalize();

  NumericalSemigroup ambient_;
  std::vector<Int> small_;
  Int threshold_;

  friend RelativeIdeal shift(const RelativeIdeal& ideal, Int z);
  friend RelativeIdeal ideal_sum(const RelativeIdeal& a, const RelativeIdeal& b);
  friend RelativeIdeal standard_canonical_ideal(const NumericalSemigroup& s);
};

/// Split of the Apery set used by Nari's almost-symmetry criterion.
struct NariPartition {
  std::vector<Int> a;  // 0 = alpha_0 < alpha_1 < ... < alpha_m = f + e
  std::vector<Int> b;  // beta_1 < ... < beta_{t-1}, i.e. PF \ {f} shifted by e
};

enum class AlmostSymmetryMethod { Definition, Nari };

/// PF(S): the x not in S with x + M contained in S. PF(N) = {-1}.
std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s);
/// t(S) = |PF(S)|.
Int type(const NumericalSemigroup& s);

/// K(S) = {x in N : f(S) - x not in S}.
RelativeIdeal standard_canonical_ideal(const NumericalSemigroup& s);

RelativeIdeal shift(const RelativeIdeal& ideal, Int z);

/// E \ (E + M): the minimal generators of E over S.
std::vector<Int> ideal_minimal_generators(const RelativeIdeal& ideal);

/// {x + y : x in a, y in b}. Throws AmbientMismatch for different semigroups.
RelativeIdeal ideal_sum(const RelativeIdeal& a, const RelativeIdeal& b);

/// K(S) = S. Cross-checked against t(S) = 1.
bool is_symmetric(const NumericalSemigroup& s);

bool is_almost_symmetric(const NumericalSemigroup& s,
                         AlmostSymmetryMethod method = AlmostSymmetryMethod::Definition);

NariPartition nari_partition(const NumericalSemigroup& s);

/// E = K(S) + z for some integer z.
bool is_canonical_ideal(const RelativeIdeal& ideal);

}  // namespace numsg
