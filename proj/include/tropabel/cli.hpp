#pragma once

// Scenario files and the command dispatch behind the tropabel executable.

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "tropabel/io.hpp"

namespace tropabel::cli {

using io::Json;

struct Scenario {
  std::size_t g = 0;
  std::optional<NATorus> na_torus;
  TropTorus torus;
  std::optional<RationalMatrix> ns_class;
  std::map<std::string, TropVectorBundle> bundles;
  std::map<std::string, TropRepresentation> representations;
  std::map<std::string, NALineBundle> na_bundles;
  std::map<std::string, NASemisimpleRep> na_reps;
  Json parameters = Json::object();
};

inline Scenario parse_scenario(const Json& j) {
  using namespace io;
  if (!j.is_object()) invalid("$", "scenario must be a JSON object");
  Scenario s;
  const Json& torus = member(j, "torus", "$");
  s.g = decode_size(member(torus, "g", "$.torus"), "$.torus.g");
  if (s.g == 0) invalid("$.torus.g", "rank must be positive");
  if (torus.contains("generators")) {
    const Json& gens = array_at(torus["generators"], "$.torus.generators");
    if (gens.size() != s.g) invalid("$.torus.generators", "expected g generators");
    std::vector<MultiplicativePoint> points;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      points.push_back(decode_monomials(gens[i], child("$.torus.generators", i)));
      if (points.back().size() != s.g) invalid(child("$.torus.generators", i), "expected g coordinates");
    }
    try {
      s.na_torus = NATorus(std::move(points));
    } catch (const Error& e) {
      invalid("$.torus.generators", e.what());
    }
    s.torus = s.na_torus->tropicalization();
  } else {
    RationalMatrix v = decode_square(member(torus, "V", "$.torus"), s.g, "$.torus.V");
    try {
      s.torus = TropTorus(v);
    } catch (const Error& e) {
      invalid("$.torus.V", e.what());
    }
  }
  if (j.contains("ns_class")) s.ns_class = decode_square(j["ns_class"], s.g, "$.ns_class");

  auto each = [&](const char* key, auto&& fn) {
    if (!j.contains(key)) return;
    const std::string path = std::string("$.") + key;
    if (!j[key].is_object()) invalid(path, "expected an object of named entries");
    for (const auto& [name, value] : j[key].items()) fn(name, value, child(path, name));
  };
  each("bundles", [&](const std::string& name, const Json& v, const std::string& path) {
    s.bundles.emplace(name, decode_vector_bundle(v, s.g, path));
  });
  each("representations", [&](const std::string& name, const Json& v, const std::string& path) {
    s.representations.emplace(name, decode_representation(v, s.g, path));
  });
  each("na_bundles", [&](const std::string& name, const Json& v, const std::string& path) {
    if (!s.na_torus) invalid(path, "analytic bundles need a torus given by generators");
    s.na_bundles.emplace(name, decode_na_bundle(*s.na_torus, v, path));
  });
  each("na_reps", [&](const std::string& name, const Json& v, const std::string& path) {
    s.na_reps.emplace(name, decode_na_rep(v, s.g, path));
  });
  if (j.contains("parameters")) {
    if (!j["parameters"].is_object()) invalid("$.parameters", "expected an object");
    s.parameters = j["parameters"];
  }
  return s;
}

inline Scenario load_scenario(const std::string& file) {
  std::ifstream in(file);
  if (!in) fail(ErrorKind::Validation, "cannot open scenario file " + file);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::Validation, file + ": " + e.what());
  }
  return parse_scenario(j);
}

struct Invocation {
  std::string command; // ns-analyze | bundle | rep | na
  std::string op;
  std::string lhs, rhs, rep, bundle;
  std::optional<std::uint64_t> seed;
  long long bound = kDefaultEnumerationBound;
};

inline int exit_code(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::TooLarge: return 3;
  case ErrorKind::InternalInconsistency: return 4;
  default: return 2;
  }
}

namespace detail {

template <typename Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name, const std::string& what) {
  require(!name.empty(), ErrorKind::Validation, "missing --" + what + " argument");
  auto it = m.find(name);
  require(it != m.end(), ErrorKind::Validation, what + " \"" + name + "\" is not defined in the scenario");
  return it->second;
}

inline const Json& parameter(const Scenario& s, const std::string& key) {
  return io::member(s.parameters, key, "$.parameters");
}

inline const NATorus& analytic_torus(const Scenario& s) {
  require(s.na_torus.has_value(), ErrorKind::Validation, "$.torus: command needs a torus given by generators");
  return *s.na_torus;
}

inline const RationalMatrix& ns_class(const Scenario& s) {
  require(s.ns_class.has_value(), ErrorKind::Validation, "$.ns_class: command needs an NS class");
  return *s.ns_class;
}

inline Json ns_analyze(const Scenario& s, const Invocation& inv) {
  const NATorus& t = analytic_torus(s);
  const RationalMatrix& h = ns_class(s);
  require(is_R_symmetric(h, t.v()), ErrorKind::Validation, "$.ns_class: V^T H is not symmetric");
  Sublattice large = large_lattice(h);
  Sublattice small = small_lattice(t, h);
  FiniteAbelianGroup q = quotient(large, small);
  RationalMatrix table(q.num_factors(), q.num_factors());
  for (std::size_t i = 0; i < q.num_factors(); ++i)
    for (std::size_t k = 0; k < q.num_factors(); ++k)
      table(i, k) = b_pairing(t, h, q.generator_lifts()[i], q.generator_lifts()[k]).phase();
  auto admissible = admissible_lattices(t, h, inv.bound);
  Json lattices = Json::array();
  for (const auto& a : admissible) lattices.push_back(io::encode(a));
  return {
      {"g", s.g},
      {"H", io::encode(h)},
      {"V", io::encode(t.v())},
      {"R_symmetric", true},
      {"Gm_symmetric", large == Sublattice::full(s.g) && is_Gm_symmetric(t, h)},
      {"large_lattice", io::encode(large)},
      {"small_lattice", io::encode(small)},
      {"large_over_small", io::encode(q)},
      {"b_pairing_phases", io::encode(table)},
      {"m_large", io::encode(m_large(h))},
      {"m_large_index", io::encode(m_large_index(h))},
      {"n_large", io::encode(n_large(h))},
      {"n_large_index", io::encode(n_large(h).index())},
      {"admissible_lattices", lattices},
      {"rank", io::encode(admissible.front().index())},
  };
}

inline Json bundle_command(const Scenario& s, const Invocation& inv) {
  const TropTorus& t = s.torus;
  auto lhs = [&]() -> const TropVectorBundle& { return lookup(s.bundles, inv.lhs, "lhs"); };
  auto rhs = [&]() -> const TropVectorBundle& { return lookup(s.bundles, inv.rhs, "rhs"); };
  const std::string& op = inv.op;
  if (op == "sum") return {{"bundle", io::encode(direct_sum(lhs(), rhs()))}};
  if (op == "tensor") return {{"bundle", io::encode(tensor(t, lhs(), rhs()))}};
  if (op == "pullback") {
    Sublattice sub = io::decode_sublattice(parameter(s, "sublattice"), s.g, "$.parameters.sublattice");
    return {{"bundle", io::encode(pullback(t, lhs(), sub))}};
  }
  if (op == "pushforward") {
    Sublattice super = s.parameters.contains("superlattice")
                           ? io::decode_sublattice(s.parameters["superlattice"], s.g, "$.parameters.superlattice")
                           : Sublattice::full(s.g);
    return {{"bundle", io::encode(pushforward(lhs(), super))}};
  }
  if (op == "translate") {
    RationalVector x = io::decode_rational_vector(parameter(s, "point"), "$.parameters.point");
    require(x.size() == s.g, ErrorKind::Validation, "$.parameters.point: expected g entries");
    return {{"bundle", io::encode(translate(t, lhs(), x))}};
  }
  if (op == "slope") {
    const auto& e = lhs();
    return {{"slope", io::encode(slope(e))},
            {"rank", io::encode(e.rank())},
            {"homogeneous", is_homogeneous(e)},
            {"semi_homogeneous", is_semi_homogeneous(e)}};
  }
  if (op == "equiv") return {{"equivalent", equivalent(t, lhs(), rhs())}};
  if (op == "moduli-point") {
    const auto& e = lhs();
    require(!e.empty(), ErrorKind::EmptyBundle, "moduli point of the zero bundle");
    Sublattice gamma = io::decode_sublattice(parameter(s, "gamma"), s.g, "$.parameters.gamma");
    RationalMatrix h = s.ns_class ? *s.ns_class : e.summands().front().h();
    std::vector<ModuliPoint> points;
    Json each = Json::array();
    for (const auto& summand : e.summands()) {
      points.push_back(moduli_point(t, e.base(), summand, gamma, h));
      each.push_back(io::encode(points.back()));
    }
    return {{"points", each}, {"sym_point", io::encode(sym_point(points))}};
  }
  fail(ErrorKind::Validation, "unknown bundle operation \"" + op + "\"");
}

inline Json rep_command(const Scenario& s, const Invocation& inv) {
  const auto& rho = lookup(s.representations, inv.rep, "rep");
  const std::string& op = inv.op;
  if (op == "decompose") {
    Json out = Json::array();
    for (const auto& c : decompose_rep(rho)) out.push_back(io::encode(c));
    return {{"components", out}};
  }
  if (op == "canonical") return {{"canonical_form", io::encode(canonical_form(rho))}};
  if (op == "eta") return {{"bundle", io::encode(eta_trop(rho))}};
  if (op == "stratum") return {{"stratum", io::encode(stratum(rho))}};
  fail(ErrorKind::Validation, "unknown rep operation \"" + op + "\"");
}

/// Deterministic small values; the engine is fully specified by the standard.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rational small_rational(long long numerator_bound, long long max_den) {
    long long den = range(1, max_den);
    return Rational(range(-numerator_bound, numerator_bound)) / den;
  }
  ValuedMonomial monomial() {
    static const long long mags[] = {1, 2, 3};
    Rational mag = Rational(mags[range(0, 2)]);
    if (range(0, 1) == 1) mag = Rational(1) / mag;
    return {mag, Rational(range(0, 5)) / 6, small_rational(4, 4)};
  }

private:
  std::mt19937_64 engine_;
};

inline Json verify_square_json(const SquareCheck& c) {
  return {{"via_analytic", io::encode(c.via_analytic)},
          {"via_tropical", io::encode(c.via_tropical)},
          {"commutes", c.commutes}};
}

inline Json na_command(const Scenario& s, const Invocation& inv) {
  const NATorus& t = analytic_torus(s);
  const std::string& op = inv.op;
  if (op == "trop-line") return {{"bundle", io::encode(tropicalize_line_bundle(t, lookup(s.na_bundles, inv.bundle, "bundle")))}};
  if (op == "trop-simple") {
    const auto& b = lookup(s.na_bundles, inv.bundle, "bundle");
    RationalMatrix h = s.ns_class ? *s.ns_class : b.h();
    return {{"moduli_point", io::encode(tropicalize_simple(t, h, b.lattice(), b, inv.bound))}};
  }
  if (op == "trop-rep") return {{"representation", io::encode(trop_rep(lookup(s.na_reps, inv.rep, "rep")))}};
  if (op == "verify-square") {
    if (!inv.rep.empty()) return verify_square_json(verify_commuting_square(t, lookup(s.na_reps, inv.rep, "rep")));
    std::uint64_t seed = inv.seed.value_or(0);
    std::size_t cases = s.parameters.contains("cases") ? io::decode_size(s.parameters["cases"], "$.parameters.cases") : 20;
    Sampler sampler(seed);
    Json results = Json::array();
    bool all = true;
    for (std::size_t n = 0; n < cases; ++n) {
      std::vector<NACharacter> chars(static_cast<std::size_t>(sampler.range(1, 4)));
      for (auto& c : chars)
        for (std::size_t j = 0; j < s.g; ++j) c.values.push_back(sampler.monomial());
      NASemisimpleRep rho(std::move(chars));
      SquareCheck check = verify_commuting_square(t, rho);
      all = all && check.commutes;
      Json entry = verify_square_json(check);
      entry["representation"] = io::encode(rho);
      results.push_back(std::move(entry));
    }
    return {{"seed", seed}, {"cases", results}, {"all_commute", all}};
  }
  fail(ErrorKind::Validation, "unknown na operation \"" + op + "\"");
}

} // namespace detail

inline Json execute(const Scenario& s, const Invocation& inv) {
  if (inv.command == "ns-analyze") return detail::ns_analyze(s, inv);
  if (inv.command == "bundle") return detail::bundle_command(s, inv);
  if (inv.command == "rep") return detail::rep_command(s, inv);
  if (inv.command == "na") return detail::na_command(s, inv);
  fail(ErrorKind::Validation, "unknown command \"" + inv.command + "\"");
}

inline std::string render(const Json& j) { return j.dump(2) + "\n"; }

} // namespace tropabel::cli
