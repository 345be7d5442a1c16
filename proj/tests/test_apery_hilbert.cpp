#include <gtest/gtest.h>

#include <set>

#include "numsg/apery_hilbert.hpp"
#include "numsg/construction.hpp"
#include "numsg/error.hpp"
#include "support/fixture_access.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace numsg;
using testing_support::fixture;

TEST(Apery, TwoThree) {
  const auto t = apery_table(NumericalSemigroup::from_generators({2, 3}));
  EXPECT_EQ(t.elements, (std::vector<Int>{0, 3}));
  EXPECT_EQ(t.stratum(1), std::vector<Int>{3});
  EXPECT_EQ(t.max_order(), 1);
}

TEST(Apery, FamilyStrata) {
  const auto t4 = apery_table(construct_asd(4).semigroup);
  EXPECT_EQ(t4.stratum(2), (std::vector<Int>{66, 71, 76}));
  EXPECT_EQ(t4.stratum(3), std::vector<Int>{99});
  EXPECT_EQ(t4.stratum(4), std::vector<Int>{132});
  EXPECT_TRUE(t4.stratum(5).empty());
  const auto t5 = apery_table(construct_asd(5).semigroup);
  EXPECT_EQ(t5.stratum(2), (std::vector<Int>{106, 116, 126}));
  EXPECT_EQ(t5.stratum(3), std::vector<Int>{159});
  EXPECT_EQ(t5.stratum(4), std::vector<Int>{212});
  EXPECT_EQ(t5.stratum(5), std::vector<Int>{265});
}

TEST(Apery, ElementOrder) {
  const auto s = construct_asd(4).semigroup;
  EXPECT_EQ(element_order(s, 0), 0);
  EXPECT_EQ(element_order(s, 66), 2);
  EXPECT_EQ(element_order(s, 132), 4);
  EXPECT_EQ(element_order(s, 32), 1);
  EXPECT_THROW(element_order(s, 63), Error);
}

TEST(Hilbert, KnownValues) {
  const auto h23 = hilbert_until_stable(NumericalSemigroup::from_generators({2, 3}));
  EXPECT_EQ(h23.values[0], 1);
  EXPECT_EQ(h23.values[1], 2);
  EXPECT_EQ(h23.stable_from, 1);
  EXPECT_TRUE(decrease_levels(h23).empty());

  const auto h4 = hilbert_function(construct_asd(4).semigroup, 11);
  EXPECT_EQ(h4.values, (std::vector<Int>{1, 27, 27, 27, 26, 27, 29, 30, 31, 32, 32, 32}));
  EXPECT_EQ(h4.stable_from, 9);
  EXPECT_EQ(decrease_levels(h4), std::vector<int>{4});

  const auto h5 = hilbert_function(construct_asd(5).semigroup, 7);
  EXPECT_EQ(h5.values, (std::vector<Int>{1, 38, 38, 38, 38, 37, 44, 44}));
  EXPECT_EQ(decrease_levels(hilbert_until_stable(fixture("ex2_13_i"))), std::vector<int>{2});
  EXPECT_EQ(decrease_levels(hilbert_until_stable(fixture("ex2_13_iii"))), std::vector<int>{4});
  EXPECT_TRUE(decrease_levels(hilbert_until_stable(fixture("ex3_11_small"))).empty());
}

TEST(Hilbert, UnstableRefusesDecreaseLevels) {
  const auto hf = hilbert_function(construct_asd(4).semigroup, 5);
  EXPECT_FALSE(hf.stable());
  EXPECT_EQ(hf.at(5), 27);
  try {
    hf.at(6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotStabilized);
  }
  try {
    decrease_levels(hf);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotStabilized);
  }
}

TEST(Layers, FamilyPatterns) {
  const auto d = construct_asd(4);
  const auto ls = layer_sets(d.semigroup, 4);
  EXPECT_EQ(ls.c.at(2), (std::vector<Int>{66, 71, 76}));
  std::vector<Int> d4_plus_e;
  for (Int x : ls.d.at(4)) d4_plus_e.push_back(x + d.e);
  EXPECT_EQ(d4_plus_e, (std::vector<Int>{165, 170, 175, 180, 185, 190}));
  for (int h = 2; h <= 4; ++h) {
    std::vector<Int> expected;
    for (int j = 0; j <= h; ++j) expected.push_back((h - j) * d.n1 + j * d.n2);
    EXPECT_EQ(ls.c.at(h), expected) << h;
  }
}

namespace {

void check_hilbert_against_oracle(const NumericalSemigroup& s) {
  const auto hf = hilbert_until_stable(s);
  ASSERT_TRUE(hf.stable());
  const int h_max = hf.h_max();
  const std::vector<Int> gens = s.min_gens();
  const oracle::Semigroup o(gens);
  EXPECT_EQ(hf.values, oracle::hilbert(o, h_max));
  EXPECT_EQ(hilbert_by_orders(s, h_max).values, hilbert_by_sumsets(s, h_max).values);
}

void check_layers(const NumericalSemigroup& s) {
  const auto hf = hilbert_until_stable(s);
  const int k_max = std::max(*hf.stable_from + 1, 2);
  const auto ls = layer_sets(s, k_max);
  const auto ap = apery_table(s);
  const Int e = s.multiplicity();
  for (int k = 2; k <= k_max; ++k) {
    // H(k-1) - H(k) = |D_k| - |C_k|
    EXPECT_EQ(hf.at(k - 1) - hf.at(k),
              static_cast<Int>(ls.d.at(k).size()) - static_cast<Int>(ls.c.at(k).size()))
        << k;
    // C_k = Ap_k u (D_h^k + e), disjointly
    std::multiset<Int> parts;
    for (Int x : ap.stratum(k)) parts.insert(x);
    for (int h = 2; h < k; ++h) {
      const auto it = ls.d_refined.find(h);
      if (it == ls.d_refined.end()) continue;
      const auto jt = it->second.find(k);
      if (jt == it->second.end()) continue;
      for (Int x : jt->second) parts.insert(x + e);
    }
    EXPECT_EQ(std::vector<Int>(parts.begin(), parts.end()), ls.c.at(k)) << k;
    // D_k^t partition D_k over t > k
    std::multiset<Int> refined;
    if (auto it = ls.d_refined.find(k); it != ls.d_refined.end())
      for (const auto& [t, v] : it->second) {
        EXPECT_GT(t, k);
        refined.insert(v.begin(), v.end());
      }
    EXPECT_EQ(std::vector<Int>(refined.begin(), refined.end()), ls.d.at(k)) << k;
  }
}

void check_apery(const NumericalSemigroup& s) {
  const auto t = apery_table(s);
  const std::vector<Int> gens = s.min_gens();
  const oracle::Semigroup o(gens);
  EXPECT_EQ(t.elements, oracle::apery(o));
  std::set<Int> residues;
  for (Int x : t.elements) residues.insert(x % s.multiplicity());
  EXPECT_EQ(static_cast<Int>(residues.size()), s.multiplicity());
  std::size_t strata_total = 0;
  for (const auto& [k, v] : t.strata) strata_total += v.size();
  EXPECT_EQ(static_cast<Int>(strata_total), s.multiplicity() - 1);
  std::vector<Int> gens_but_e(s.min_gens().begin() + 1, s.min_gens().end());
  EXPECT_EQ(t.stratum(1), gens_but_e);
  const auto hf = hilbert_function(s, 1);
  EXPECT_EQ(hf.values[1], s.embedding_dimension());
}

void check_stabilization(const NumericalSemigroup& s) {
  const auto hf = hilbert_until_stable(s);
  const int from = *hf.stable_from;
  const auto longer = hilbert_function(s, from + 6);
  for (int h = 0; h <= from + 6; ++h) {
    EXPECT_GE(longer.values[static_cast<std::size_t>(h)], 1);
    if (h >= from) {
      EXPECT_EQ(longer.values[static_cast<std::size_t>(h)], s.multiplicity());
    }
    if (h < from) {
      EXPECT_NE(longer.values[static_cast<std::size_t>(h)], s.multiplicity());
    }
  }
  EXPECT_EQ(longer.values[0], 1);
}

}  // namespace

TEST(HilbertProperty, RandomSemigroupsMatchOracle) {
  for (const auto& gens : testing_support::random_corpus(200, 0xa11ce001)) {
    const auto s = NumericalSemigroup::from_generators(gens);
    SCOPED_TRACE(::testing::PrintToString(gens));
    check_hilbert_against_oracle(s);
    check_apery(s);
    check_stabilization(s);
    if (s.multiplicity() > 1) check_layers(s);
  }
}

TEST(HilbertProperty, FixturesMatchOracle) {
  for (const auto& name : testing_support::registry().names()) {
    SCOPED_TRACE(name);
    const auto s = fixture(name);
    check_hilbert_against_oracle(s);
    check_apery(s);
    check_stabilization(s);
    check_layers(s);
  }
}
