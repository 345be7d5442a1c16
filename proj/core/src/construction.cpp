#include "numsg/construction.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "numsg/apery_hilbert.hpp"
#include "numsg/duplication.hpp"
#include "numsg/error.hpp"
#include "numsg/ideals.hpp"

namespace numsg {

namespace {

struct Base {
  Int e, n1, n2;
};

Base base_values(Int l) {
  const Int e = l * l + 3 * l + 4;
  if (l % 2 != 0) return {e, l * l + 5 * l + 3, 2 * l * l + 3 * l - 2};
  return {e, l * l + 4 * l + 1, 2 * l * l + 2 * l - 2};
}

void check_ell(int ell) {
  if (ell < 4) {
    throw Error(ErrorCode::EllTooSmall, "ell must be at least 4, got " + std::to_string(ell));
  }
}

}  // namespace

GcdValidity gcd_validity(int ell) {
  check_ell(ell);
  const auto [e, n1, n2] = base_values(ell);
  const Int g = std::gcd(std::gcd(e, n1), n2);
  return {g == 1, g};
}

ConstructionData construct_asd(int ell) {
  check_ell(ell);
  if (is_excluded_level(ell) || !gcd_validity(ell).valid) {
    throw Error(ErrorCode::ExcludedEll,
                "ell = " + std::to_string(ell) + " lies in {14+22k, 35+46k}");
  }
  const Int l = ell;
  const auto [e, n1, n2] = base_values(l);

  ConstructionData d{.ell = ell,
                     .e = e,
                     .n1 = n1,
                     .n2 = n2,
                     .f_offset = n1 - e,
                     .g_offset = n2 - e,
                     .t1 = (l + 1) * n1 - (l - 1) * e,
                     .t2 = 0,
                     .s_family = {},
                     .r_family = {},
                     .gamma = {},
                     .semigroup = NumericalSemigroup::from_generators({1})};
  // ell n1 + e - t1 = ell e - n1.
  d.t2 = l * n1 + e - d.t1;
  ensure(l * n1 + (l - 1) * e == (l + 2) * n2, "basic relation fails");

  for (int p = 0; p <= ell; ++p) {
    for (int q = 1; q <= ell + 1; ++q) {
      if (p + q < 2 || p + q > ell + 1) continue;
      const Int s = p * n1 + q * n2 - (p + q - 2) * e;
      d.s_family[{p, q}] = s;
      if (p >= 1) d.r_family[{p, q}] = l * n1 + e - s;
    }
  }
  ensure(static_cast<Int>(d.s_family.size()) == (l * l + 3 * l) / 2, "|s_family| mismatch");
  ensure(static_cast<Int>(d.r_family.size()) == (l * l + l) / 2, "|r_family| mismatch");

  std::set<Int> gamma{e, n1, n2, d.t1, d.t2};
  for (const auto& [pq, v] : d.s_family) gamma.insert(v);
  for (const auto& [pq, v] : d.r_family) gamma.insert(v);
  gamma.erase(n1 + n2);
  gamma.erase(2 * n2);
  d.gamma.assign(gamma.begin(), gamma.end());
  ensure(static_cast<Int>(d.gamma.size()) == e - l - 1, "|Gamma| != e - ell - 1");

  d.semigroup = NumericalSemigroup::from_generators(d.gamma);
  ensure(d.semigroup.min_gens() == d.gamma, "Gamma is not the minimal generating set");
  ensure(std::binary_search(d.gamma.begin(), d.gamma.end(), d.t2), "t2 is not a generator");
  return d;
}

bool Certificate::all_pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

const Claim* Certificate::find(const std::string& name) const {
  for (const auto& c : claims) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Certificate verify_construction(int ell) {
  const auto d = construct_asd(ell);
  const auto& s = d.semigroup;
  const Int l = ell;
  const Int e = d.e;
  const Int n1 = d.n1;
  const Int n2 = d.n2;

  Certificate cert;
  cert.ell = ell;
  auto claim = [&](std::string name, nlohmann::json expected, nlohmann::json actual) {
    const bool pass = expected == actual;
    cert.claims.push_back({std::move(name), std::move(expected), std::move(actual), pass});
  };

  const auto hf = hilbert_until_stable(s);
  const Int nu = l * l + 2 * l + 3;
  claim("gcd_valid", true, gcd_validity(ell).valid);
  claim("embedding_dimension", nu, s.embedding_dimension());
  claim("minimal_generators_equal_gamma", d.gamma, s.min_gens());
  claim("gamma_size", e - l - 1, static_cast<Int>(d.gamma.size()));
  claim("type", l * l + 2 * l + 2, type(s));
  claim("frobenius", l * n1 - e, s.frobenius());
  claim("basic_relation", (l + 2) * n2, l * n1 + (l - 1) * e);

  std::vector<Int> plateau(static_cast<std::size_t>(ell - 1), nu);
  std::vector<Int> plateau_actual;
  for (int h = 1; h < ell; ++h) plateau_actual.push_back(hf.at(h));
  claim("hilbert_plateau", plateau, plateau_actual);
  claim("decrease_levels", std::vector<int>{ell}, decrease_levels(hf));
  claim("drop_at_ell", 1, hf.at(ell - 1) - hf.at(ell));
  claim("drop_two_levels", 1, hf.at(ell - 2) - hf.at(ell));
  claim("almost_symmetric_definition", true,
        is_almost_symmetric(s, AlmostSymmetryMethod::Definition));
  claim("almost_symmetric_nari", true, is_almost_symmetric(s, AlmostSymmetryMethod::Nari));

  const auto ap = apery_table(s);
  nlohmann::json strata_expected = nlohmann::json::object();
  nlohmann::json strata_actual = nlohmann::json::object();
  strata_expected["2"] = std::vector<Int>{2 * n1, n1 + n2, 2 * n2};
  for (int k = 3; k <= ell; ++k) strata_expected[std::to_string(k)] = std::vector<Int>{k * n1};
  for (const auto& [k, elems] : ap.strata) {
    if (k >= 2) strata_actual[std::to_string(k)] = elems;
  }
  claim("apery_strata", strata_expected, strata_actual);

  // Gamma' = {k n1 : 1 <= k <= ell} u {n2} u s u r u {t1, t2}.
  std::vector<Int> gamma_prime{n2, d.t1, d.t2};
  for (int k = 1; k <= ell; ++k) gamma_prime.push_back(k * n1);
  for (const auto& [pq, v] : d.s_family) gamma_prime.push_back(v);
  for (const auto& [pq, v] : d.r_family) gamma_prime.push_back(v);
  std::sort(gamma_prime.begin(), gamma_prime.end());
  std::set<Int> residues;
  for (Int x : gamma_prime) residues.insert(x % e);
  claim("gamma_prime_distinct_nonzero_residues", static_cast<Int>(gamma_prime.size()),
        static_cast<Int>(residues.size() - residues.count(0)));
  std::vector<Int> apery_expected{0};
  apery_expected.insert(apery_expected.end(), gamma_prime.begin(), gamma_prime.end());
  claim("apery_set_is_zero_and_gamma_prime", apery_expected, ap.elements);
  claim("gamma_prime_extremes",
        nlohmann::json{{"least", {e, n1, n2}}, {"greatest", l * n1}},
        nlohmann::json{{"least", {e, gamma_prime[0], gamma_prime[1]}},
                       {"greatest", gamma_prime.back()}});

  const Int s0_top = d.s_family.at({0, ell + 1});
  bool reflection_ok = true;
  for (int q = 2; q <= ell; ++q) {
    const Int v = l * n1 + e - d.s_family.at({0, q});
    reflection_ok = reflection_ok && v == d.s_family.at({0, ell + 2 - q});
  }
  claim("ell_n1_minus_n2_is_s_0_top", s0_top, l * n1 - n2);
  claim("s_0q_reflection", true, reflection_ok);

  const auto part = nari_partition(s);
  std::vector<Int> a_expected{0, n2, s0_top};
  for (int k = 1; k <= ell; ++k) a_expected.push_back(k * n1);
  std::sort(a_expected.begin(), a_expected.end());
  std::vector<Int> b_expected{d.t1, d.t2};
  for (const auto& [pq, v] : d.s_family) {
    if (pq != std::pair{0, ell + 1}) b_expected.push_back(v);
  }
  for (const auto& [pq, v] : d.r_family) b_expected.push_back(v);
  std::sort(b_expected.begin(), b_expected.end());
  claim("nari_a", a_expected, part.a);
  claim("nari_b", b_expected, part.b);

  const auto layers = layer_sets(s, ell);
  bool c_ok = true;
  for (int h = 2; h <= ell; ++h) {
    std::vector<Int> expected;
    for (int j = 0; j <= h; ++j) expected.push_back((h - j) * n1 + j * n2);
    c_ok = c_ok && layers.c.at(h) == expected;
  }
  claim("c_layers", true, c_ok);
  std::vector<Int> d_top_expected{(l + 1) * n1};
  for (int j = 1; j <= ell + 1; ++j) d_top_expected.push_back((l + 1 - j) * n1 + j * n2);
  std::sort(d_top_expected.begin(), d_top_expected.end());
  std::vector<Int> d_top_actual = layers.d.at(ell);
  for (Int& x : d_top_actual) x += e;
  claim("d_ell_plus_e", d_top_expected, d_top_actual);
  return cert;
}

}  // namespace numsg
