#include "numsg_cli/cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "numsg/apery_hilbert.hpp"
#include "numsg/construction.hpp"
#include "numsg/duplication.hpp"
#include "numsg/error.hpp"
#include "numsg/serialize.hpp"
#include "numsg_cli/fixtures.hpp"

namespace numsg::cli {

using nlohmann::json;

namespace {

std::string join(const std::vector<Int>& v) {
  return v.empty() ? std::string("(none)") : format_generators(v);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string levels_text(const std::vector<int>& levels) {
  if (levels.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < levels.size(); ++i) out += (i ? "," : "") + std::to_string(levels[i]);
  return out;
}

Int parse_int(const std::string& text, const std::string& what) {
  const auto v = parse_generators(text);
  if (v.size() != 1) throw Error(ErrorCode::Parse, what + " must be a single integer");
  return v.front();
}

int exit_code_for(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::Input: return kExitInput;
    case ErrorCategory::Domain: return kExitDomain;
    case ErrorCategory::Internal: return kExitInternal;
  }
  return kExitInternal;
}

struct Options {
  bool json = false;
  std::string gens;
  std::optional<int> hmax;
  bool layers = false;
  bool apery = false;
  std::string ideal = "canonical";
  std::optional<std::string> b;
  bool predict = false;
  int ell = 0;
  bool verify = false;
  int level = 0;
  Int drop = 1;
  bool emit_generators = false;
  int steps = 1;
  std::vector<std::string> only;
  bool serial = false;
};

// info

int cmd_info(const Options& o, std::ostream& out) {
  const auto s = resolve_semigroup(o.gens);
  const auto pf = pseudo_frobenius(s);
  const bool sym = is_symmetric(s);
  const bool as_def = is_almost_symmetric(s, AlmostSymmetryMethod::Definition);
  const bool as_nari = is_almost_symmetric(s, AlmostSymmetryMethod::Nari);
  ensure(as_def == as_nari, "almost symmetry methods disagree");
  if (o.json) {
    out << json{{"generators", s.min_gens()},
                {"multiplicity", s.multiplicity()},
                {"embedding_dimension", s.embedding_dimension()},
                {"frobenius", s.frobenius()},
                {"conductor", s.conductor()},
                {"genus", s.genus()},
                {"type", static_cast<Int>(pf.size())},
                {"pseudo_frobenius", pf},
                {"symmetric", sym},
                {"almost_symmetric", as_def}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << "generators: " << format_generators(s.min_gens()) << '\n'
      << "multiplicity: " << s.multiplicity() << '\n'
      << "embedding dimension: " << s.embedding_dimension() << '\n'
      << "frobenius: " << s.frobenius() << '\n'
      << "conductor: " << s.conductor() << '\n'
      << "genus: " << s.genus() << '\n'
      << "type: " << pf.size() << '\n'
      << "pseudo-frobenius: " << join(pf) << '\n'
      << "symmetric: " << yes_no(sym) << '\n'
      << "almost symmetric: " << yes_no(as_def) << '\n';
  return kExitOk;
}

// hilbert

int cmd_hilbert(const Options& o, std::ostream& out) {
  const auto s = resolve_semigroup(o.gens);
  if (o.hmax && *o.hmax < 1) throw Error(ErrorCode::InvalidArgument, "--hmax must be >= 1");
  const auto hf = o.hmax ? hilbert_function(s, *o.hmax) : hilbert_until_stable(s);
  std::optional<std::vector<int>> levels;
  if (hf.stable()) levels = decrease_levels(hf);
  const int k_max = hf.stable() ? std::max(*hf.stable_from, 1) : hf.h_max();
  if (o.json) {
    json j = {{"hilbert", to_json(hf)}};
    j["decrease_levels"] = levels ? json(*levels) : json(nullptr);
    if (o.layers) j["layers"] = to_json(layer_sets(s, k_max));
    if (o.apery) j["apery"] = to_json(apery_table(s));
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "hilbert: " << format_hilbert(hf) << '\n';
  out << "decrease levels: " << (levels ? levels_text(*levels) : "unknown (not stabilized)") << '\n';
  if (o.apery) {
    const auto table = apery_table(s);
    for (const auto& [k, v] : table.strata) out << "Ap_" << k << ": " << join(v) << '\n';
  }
  if (o.layers) {
    const auto ls = layer_sets(s, k_max);
    for (const auto& [k, v] : ls.c) out << "C_" << k << ": " << join(v) << '\n';
    for (const auto& [k, v] : ls.d) out << "D_" << k << ": " << join(v) << '\n';
    for (const auto& [k, by_t] : ls.d_refined)
      for (const auto& [t, v] : by_t) out << "D_" << k << "^" << t << ": " << join(v) << '\n';
  }
  return kExitOk;
}

// duplicate

int cmd_duplicate(const Options& o, std::ostream& out) {
  const auto s = resolve_semigroup(o.gens);
  const auto e = resolve_ideal(s, o.ideal);
  const Int b = o.b ? parse_int(*o.b, "--b") : smallest_odd_element(s);
  if (o.hmax && *o.hmax < 1) throw Error(ErrorCode::InvalidArgument, "--hmax must be >= 1");
  const auto d = numerical_duplication(s, e, b);
  const auto hf = o.hmax ? hilbert_function(d, *o.hmax) : hilbert_until_stable(d);
  const bool sym = is_symmetric(d);

  std::optional<HilbertFunction> predicted;
  bool applies = false;
  if (o.predict) {
    const auto hs = hilbert_function(s, hf.h_max());
    predicted = predicted_duplication_hilbert(hs, type(s), hf.h_max());
    applies = prediction_applies(s, e);
  }
  const bool matches = predicted && predicted->values == hf.values;

  if (o.json) {
    json j = {{"b", b},
              {"ideal", to_json(e)},
              {"generators", d.min_gens()},
              {"multiplicity", d.multiplicity()},
              {"embedding_dimension", d.embedding_dimension()},
              {"frobenius", d.frobenius()},
              {"type", type(d)},
              {"symmetric", sym},
              {"hilbert", to_json(hf)}};
    if (predicted) {
      j["predicted"] = to_json(*predicted);
      j["prediction_applies"] = applies;
      j["prediction_matches"] = matches;
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "b: " << b << '\n'
      << "generators: " << format_generators(d.min_gens()) << '\n'
      << "multiplicity: " << d.multiplicity() << '\n'
      << "embedding dimension: " << d.embedding_dimension() << '\n'
      << "frobenius: " << d.frobenius() << '\n'
      << "type: " << type(d) << '\n'
      << "symmetric: " << yes_no(sym) << '\n'
      << "hilbert: " << format_hilbert(hf) << '\n';
  if (predicted) {
    out << "predicted: " << format_hilbert(*predicted) << '\n'
        << "prediction applies: " << yes_no(applies) << '\n'
        << "prediction matches: " << yes_no(matches) << '\n';
  }
  return kExitOk;
}

// construct

int cmd_construct(const Options& o, std::ostream& out) {
  const auto data = construct_asd(o.ell);
  std::optional<Certificate> cert;
  if (o.verify) cert = verify_construction(o.ell);
  const int code = (cert && !cert->all_pass()) ? kExitInternal : kExitOk;
  if (o.json) {
    json j = {{"construction", to_json(data)}};
    if (cert) j["certificate"] = to_json(*cert);
    out << j.dump(2) << '\n';
    return code;
  }
  out << "ell: " << data.ell << '\n'
      << "e: " << data.e << '\n'
      << "n1: " << data.n1 << '\n'
      << "n2: " << data.n2 << '\n'
      << "t1: " << data.t1 << '\n'
      << "t2: " << data.t2 << '\n'
      << "embedding dimension: " << data.gamma.size() << '\n'
      << "frobenius: " << data.semigroup.frobenius() << '\n'
      << "generators: " << format_generators(data.gamma) << '\n';
  if (cert) {
    for (const auto& c : cert->claims) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.pass) out << " expected " << c.expected.dump() << " got " << c.actual.dump();
      out << '\n';
    }
    out << "certificate: " << (cert->all_pass() ? "PASS" : "FAIL") << '\n';
  }
  return code;
}

// witness

int cmd_witness(const Options& o, std::ostream& out) {
  const auto report = gorenstein_witness(o.level, o.drop);
  if (o.json) {
    out << to_json(report, o.emit_generators).dump(2) << '\n';
    return kExitOk;
  }
  out << "level: " << report.level << '\n'
      << "drop target: " << report.drop_target << '\n'
      << "seed: " << report.seed << '\n'
      << "seed drop: " << report.seed_drop << '\n'
      << "maximal-ideal steps: " << report.maximal_steps << '\n';
  for (std::size_t i = 0; i < report.chain.size(); ++i) {
    const auto& st = report.chain[i];
    out << "step " << i << " (" << st.kind << (st.b ? ", b = " + std::to_string(st.b) : "")
        << "): e = " << st.semigroup.multiplicity() << ", type " << st.type
        << ", H = " << format_hilbert(st.hilbert) << '\n';
    if (o.emit_generators) out << "  generators: " << format_generators(st.semigroup.min_gens()) << '\n';
  }
  out << "symmetric: " << yes_no(report.final_symmetric) << '\n'
      << "drop at level " << report.level << ": " << report.achieved_drop << '\n';
  return kExitOk;
}

// chain

int cmd_chain(const Options& o, std::ostream& out) {
  if (o.steps < 0) throw Error(ErrorCode::InvalidArgument, "--steps must be >= 0");
  const auto s = resolve_semigroup(o.gens);
  const auto chain = duplication_chain(s, o.steps);
  json steps = json::array();
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto& t = chain[i];
    const auto hf = hilbert_until_stable(t);
    if (o.json) {
      steps.push_back({{"step", i}, {"multiplicity", t.multiplicity()},
                       {"embedding_dimension", t.embedding_dimension()},
                       {"type", type(t)}, {"hilbert", to_json(hf)}});
    } else {
      out << "T" << i << ": e = " << t.multiplicity() << ", type " << type(t)
          << ", H = " << format_hilbert(hf) << '\n';
    }
  }
  if (o.json) out << json{{"chain", steps}}.dump(2) << '\n';
  return kExitOk;
}

// check-fixtures

int cmd_check_fixtures(const Options& o, std::ostream& out) {
  const auto& reg = FixtureRegistry::instance();
  std::vector<FixtureCheck> checks;
  if (o.only.empty()) {
    checks = check_all(reg, !o.serial);
  } else {
    for (const auto& n : o.only) checks.push_back(check_fixture(reg.get(n)));
  }
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass(); });
  if (o.json) {
    json arr = json::array();
    for (const auto& c : checks) arr.push_back(to_json(c));
    out << json{{"directory", reg.dir().string()}, {"all_pass", ok}, {"fixtures", arr}}.dump(2)
        << '\n';
  } else {
    for (const auto& c : checks) {
      out << (c.pass() ? "PASS " : "FAIL ") << c.name << '\n';
      if (!c.checksum_ok) out << "  checksum mismatch (" << reg.get(c.name).actual_checksum << ")\n";
      if (!c.error.empty()) out << "  error: " << c.error << '\n';
      for (const auto& f : c.fields)
        if (!f.pass)
          out << "  " << f.field << ": expected " << f.expected.dump() << " got " << f.actual.dump()
              << '\n';
    }
    out << checks.size() << " fixtures, " << (ok ? "all pass" : "FAILURES") << '\n';
  }
  return ok ? kExitOk : kExitInternal;
}

}  // namespace

NumericalSemigroup resolve_semigroup(const std::string& text) {
  if (!text.empty() && text.front() == '@') {
    return NumericalSemigroup::from_generators(
        FixtureRegistry::instance().get(text.substr(1)).generators);
  }
  if (text.rfind("asd:", 0) == 0) {
    return construct_asd(static_cast<int>(parse_int(text.substr(4), "ell"))).semigroup;
  }
  return NumericalSemigroup::from_generators(parse_generators(text));
}

RelativeIdeal resolve_ideal(const NumericalSemigroup& s, const std::string& text) {
  if (text == "maximal") return RelativeIdeal::maximal(s);
  if (text == "whole") return RelativeIdeal::whole(s);
  if (text.rfind("canonical", 0) == 0) {
    const auto k = standard_canonical_ideal(s);
    const std::string rest = text.substr(9);
    if (rest.empty()) return k;
    if (rest.front() == '+') return shift(k, parse_int(rest.substr(1), "shift"));
    if (rest.front() == '-') return shift(k, -parse_int(rest.substr(1), "shift"));
    throw Error(ErrorCode::Parse, "bad ideal '" + text + "'");
  }
  const auto gens = parse_generators(text);
  return RelativeIdeal::generated_by(s, gens);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Numerical semigroup toolkit", "numsg"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable output");

  auto* info = app.add_subcommand("info", "Basic invariants of a semigroup");
  info->add_option("gens", o.gens, "Generators, @fixture or asd:L")->required();

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function and decrease levels");
  hilbert->add_option("gens", o.gens, "Generators, @fixture or asd:L")->required();
  hilbert->add_option("--hmax", o.hmax, "Last level to compute (default: until stable)");
  hilbert->add_flag("--layers", o.layers, "Print the C_k and D_k layer sets");
  hilbert->add_flag("--apery", o.apery, "Print the Apery strata");

  auto* dup = app.add_subcommand("duplicate", "Numerical duplication S join^b E");
  dup->add_option("gens", o.gens, "Generators, @fixture or asd:L")->required();
  dup->add_option("--ideal", o.ideal,
                  "canonical, canonical+z, maximal, whole or a generator list");
  dup->add_option("--b", o.b, "Odd element of S (default: smallest odd element)");
  dup->add_flag("--predict", o.predict, "Show the predicted Hilbert function as well");
  dup->add_option("--hmax", o.hmax, "Last level to compute (default: until stable)");

  auto* con = app.add_subcommand("construct", "Almost symmetric semigroup dropping at level ell");
  con->add_option("--ell", o.ell, "Level ell >= 4")->required();
  con->add_flag("--verify", o.verify, "Run the full certificate");

  auto* wit = app.add_subcommand("witness", "Symmetric semigroup with a large drop at a level");
  wit->add_option("--level", o.level, "Level h >= 2")->required();
  wit->add_option("--drop", o.drop, "Required drop m >= 1");
  wit->add_flag("--emit-generators", o.emit_generators, "Include generator lists");

  auto* chain = app.add_subcommand("chain", "Iterated duplications by the maximal ideal");
  chain->add_option("gens", o.gens, "Generators, @fixture or asd:L")->required();
  chain->add_option("--steps", o.steps, "Number of duplications");

  auto* fx = app.add_subcommand("check-fixtures", "Re-verify every fixture");
  fx->add_option("--only", o.only, "Restrict to the named fixtures");
  fx->add_flag("--serial", o.serial, "Do not check fixtures concurrently");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*info) return cmd_info(o, out);
    if (*hilbert) return cmd_hilbert(o, out);
    if (*dup) return cmd_duplicate(o, out);
    if (*con) return cmd_construct(o, out);
    if (*wit) return cmd_witness(o, out);
    if (*chain) return cmd_chain(o, out);
    if (*fx) return cmd_check_fixtures(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (o.json) {
      out << json{{"error", {{"code", std::string(error_code_name(e.code()))},
                             {"message", e.what()}}}}
                 .dump(2)
          << '\n';
    }
    return exit_code_for(e.category());
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInput;
}

}  // namespace numsg::cli
