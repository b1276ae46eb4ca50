#pragma once

// JSON encoding of every artifact type. Rationals and integers are strings
// ("p" or "p/q"); lattices are HNF bases written row by row. Decoders report
// the JSON path of the offending value.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "tropabel/na_side.hpp"

namespace tropabel::io {

using Json = nlohmann::json;

[[noreturn]] inline void invalid(const std::string& path, const std::string& what) {
  fail(ErrorKind::Validation, path + ": " + what);
}

inline const Json& member(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) invalid(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) invalid(path, "missing key \"" + key + "\"");
  return *it;
}

inline const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) invalid(path, "expected an array");
  return j;
}

inline std::string child(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
inline std::string child(const std::string& path, const std::string& key) { return path + "." + key; }

inline Json encode(const ValuedMonomial& x);
inline Json encode(const NACharacter& c);
inline Json encode(const Sublattice& s);

// ---- scalars

inline Json encode(const Rational& q) { return to_string(q); }
inline Json encode(const Integer& n) { return to_string(n); }

inline Rational decode_rational(const Json& j, const std::string& path) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
  } catch (const Error& e) {
    invalid(path, e.what());
  }
  invalid(path, "expected a rational string \"p/q\"");
}

inline Integer decode_integer(const Json& j, const std::string& path) {
  Rational q = decode_rational(j, path);
  if (!is_integral(q)) invalid(path, "expected an integer");
  return numerator_of(q);
}

inline std::size_t decode_size(const Json& j, const std::string& path) {
  Integer n = decode_integer(j, path);
  if (n < 0 || n > 1000000) invalid(path, "expected a small non-negative integer");
  return n.convert_to<std::size_t>();
}

// ---- vectors and matrices

template <typename T>
Json encode(const std::vector<T>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(encode(x));
  return out;
}

template <typename T>
Json encode(const Matrix<T>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(encode(m.row(i)));
  return out;
}

inline RationalVector decode_rational_vector(const Json& j, const std::string& path) {
  RationalVector out;
  for (std::size_t i = 0; i < array_at(j, path).size(); ++i) out.push_back(decode_rational(j[i], child(path, i)));
  return out;
}

inline IntVector decode_int_vector(const Json& j, const std::string& path) {
  IntVector out;
  for (std::size_t i = 0; i < array_at(j, path).size(); ++i) out.push_back(decode_integer(j[i], child(path, i)));
  return out;
}

inline RationalMatrix decode_rational_matrix(const Json& j, const std::string& path) {
  const std::size_t rows = array_at(j, path).size();
  if (rows == 0) invalid(path, "empty matrix");
  std::vector<RationalVector> data;
  for (std::size_t i = 0; i < rows; ++i) {
    data.push_back(decode_rational_vector(j[i], child(path, i)));
    if (data.back().size() != data.front().size()) invalid(child(path, i), "ragged matrix row");
  }
  RationalMatrix m(rows, data.front().size());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = data[i][k];
  return m;
}

inline RationalMatrix decode_square(const Json& j, std::size_t g, const std::string& path) {
  RationalMatrix m = decode_rational_matrix(j, path);
  if (m.rows() != g || m.cols() != g) invalid(path, "expected a " + std::to_string(g) + "x" + std::to_string(g) + " matrix");
  return m;
}

inline IntMatrix decode_int_matrix(const Json& j, const std::string& path) {
  RationalMatrix m = decode_rational_matrix(j, path);
  if (!is_integral(m)) invalid(path, "expected an integer matrix");
  return to_integer(m);
}

// ---- lattices

inline Json encode(const Sublattice& s) { return encode(s.basis()); }

/// Any generating matrix of full rank is accepted and brought to HNF.
inline Sublattice decode_sublattice(const Json& j, std::size_t g, const std::string& path) {
  IntMatrix m = decode_int_matrix(j, path);
  if (m.rows() != g) invalid(path, "lattice generators must have " + std::to_string(g) + " rows");
  try {
    return Sublattice(m);
  } catch (const Error& e) {
    invalid(path, e.what());
  }
}

inline Json encode(const RationalLattice& l) { return encode(l.basis()); }

inline Json encode(const FiniteAbelianGroup& q) {
  return {{"invariant_factors", encode(q.invariant_factors())}, {"generator_lifts", encode(q.generator_lifts())}};
}

// ---- monomials and tori

inline Json encode(const ValuedMonomial& x) {
  return {{"mag", encode(x.magnitude())}, {"phase", encode(x.phase())}, {"texp", encode(x.t_exponent())}};
}

inline ValuedMonomial decode_monomial(const Json& j, const std::string& path) {
  if (!j.is_object()) invalid(path, "expected a monomial object");
  Rational mag = j.contains("mag") ? decode_rational(j["mag"], child(path, "mag")) : Rational(1);
  Rational phase = j.contains("phase") ? decode_rational(j["phase"], child(path, "phase")) : Rational(0);
  Rational texp = j.contains("texp") ? decode_rational(j["texp"], child(path, "texp")) : Rational(0);
  if (mag <= 0) invalid(child(path, "mag"), "magnitude must be positive");
  return {mag, phase, texp};
}

inline std::vector<ValuedMonomial> decode_monomials(const Json& j, const std::string& path) {
  std::vector<ValuedMonomial> out;
  for (std::size_t i = 0; i < array_at(j, path).size(); ++i) out.push_back(decode_monomial(j[i], child(path, i)));
  return out;
}

inline Json encode(const NATorus& t) {
  Json gens = Json::array();
  for (const auto& p : t.generators()) gens.push_back(encode(p));
  return {{"g", t.rank()}, {"generators", gens}};
}

inline Json encode(const TropTorus& t) { return {{"g", t.rank()}, {"V", encode(t.v())}}; }

// ---- tropical bundles

inline Json encode(const TropLineBundle& s) {
  return {{"lattice", encode(s.lattice())}, {"H", encode(s.h())}, {"l", encode(s.l())}};
}

inline TropLineBundle decode_line_bundle(const Json& j, std::size_t g, const std::string& path) {
  Sublattice lattice = decode_sublattice(member(j, "lattice", path), g, child(path, "lattice"));
  RationalMatrix h = j.contains("H") ? decode_square(j["H"], g, child(path, "H")) : RationalMatrix(g, g);
  RationalVector l = decode_rational_vector(member(j, "l", path), child(path, "l"));
  if (l.size() != g) invalid(child(path, "l"), "covector must have " + std::to_string(g) + " entries");
  try {
    return {std::move(lattice), std::move(h), std::move(l)};
  } catch (const Error& e) {
    invalid(path, e.what());
  }
}

inline Json encode(const TropVectorBundle& e) {
  Json summands = Json::array();
  for (const auto& s : e.summands()) summands.push_back(encode(s));
  return {{"base", encode(e.base())}, {"rank", encode(e.rank())}, {"summands", summands}};
}

inline TropVectorBundle decode_vector_bundle(const Json& j, std::size_t g, const std::string& path) {
  Sublattice base = j.contains("base") ? decode_sublattice(j["base"], g, child(path, "base")) : Sublattice::full(g);
  const Json& summands = array_at(member(j, "summands", path), child(path, "summands"));
  std::vector<TropLineBundle> out;
  for (std::size_t i = 0; i < summands.size(); ++i)
    out.push_back(decode_line_bundle(summands[i], g, child(child(path, "summands"), i)));
  try {
    return {std::move(base), std::move(out)};
  } catch (const Error& e) {
    invalid(path, e.what());
  }
}

inline Json encode(const ModuliPoint& p) {
  return {{"gamma", encode(p.gamma)}, {"H", encode(p.h)}, {"coords", encode(p.coords)}};
}

inline Json encode(const SymPoint& p) {
  Json coords = Json::array();
  for (const auto& c : p.coords) coords.push_back(encode(c));
  return {{"gamma", encode(p.gamma)}, {"H", encode(p.h)}, {"points", coords}};
}

// ---- representations

inline Json encode(const TropGLElement& a) {
  Json perm = Json::array();
  for (auto p : a.perm()) perm.push_back(p + 1);
  return {{"perm", perm}, {"d", encode(a.d())}};
}

inline TropGLElement decode_gl_element(const Json& j, const std::string& path) {
  const Json& perm_j = array_at(member(j, "perm", path), child(path, "perm"));
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < perm_j.size(); ++i) {
    std::size_t p = decode_size(perm_j[i], child(child(path, "perm"), i));
    if (p == 0) invalid(child(child(path, "perm"), i), "permutation entries are 1-based");
    perm.push_back(p - 1);
  }
  RationalVector d = decode_rational_vector(member(j, "d", path), child(path, "d"));
  try {
    return {std::move(perm), std::move(d)};
  } catch (const Error& e) {
    invalid(path, e.what());
  }
}

inline Json encode(const TropRepresentation& rho) {
  Json images = Json::array();
  for (const auto& a : rho.images()) images.push_back(encode(a));
  return {{"r", rho.r()}, {"images", images}};
}

inline TropRepresentation decode_representation(const Json& j, std::size_t g, const std::string& path) {
  const Json& images_j = array_at(member(j, "images", path), child(path, "images"));
  if (images_j.size() != g) invalid(child(path, "images"), "expected one image per lattice generator");
  std::vector<TropGLElement> images;
  for (std::size_t i = 0; i < images_j.size(); ++i)
    images.push_back(decode_gl_element(images_j[i], child(child(path, "images"), i)));
  std::size_t r = j.contains("r") ? decode_size(j["r"], child(path, "r")) : images.front().size();
  try {
    return {r, std::move(images)};
  } catch (const Error& e) {
    invalid(path, e.what());
  }
}

inline Json encode(const RepComponent& c) {
  Json orbit = Json::array();
  for (auto p : c.orbit) orbit.push_back(p + 1);
  return {{"orbit", orbit}, {"lattice", encode(c.lattice)}, {"l", encode(c.l)}};
}

inline Json encode(const CanonicalForm& f) {
  Json out = Json::array();
  for (const auto& [lattice, l] : f) out.push_back({{"lattice", encode(lattice)}, {"l", encode(l)}});
  return out;
}

// ---- analytic side

inline Json encode(const NACharacter& c) { return encode(c.values); }

inline Json encode(const NALineBundle& b) {
  return {{"lattice", encode(b.lattice())}, {"H", encode(b.h())}, {"r", encode(b.r_basis())}};
}

inline NALineBundle decode_na_bundle(const NATorus& t, const Json& j, const std::string& path) {
  const std::size_t g = t.rank();
  Sublattice lattice = decode_sublattice(member(j, "lattice", path), g, child(path, "lattice"));
  RationalMatrix h = j.contains("H") ? decode_square(j["H"], g, child(path, "H")) : RationalMatrix(g, g);
  auto r = decode_monomials(member(j, "r", path), child(path, "r"));
  if (r.size() != g) invalid(child(path, "r"), "expected one value per lattice basis vector");
  try {
    return {t, std::move(lattice), std::move(h), std::move(r)};
  } catch (const Error& e) {
    invalid(path, e.what());
  }
}

inline Json encode(const NASemisimpleRep& rho) {
  Json chars = Json::array();
  for (const auto& c : rho.characters()) chars.push_back(encode(c));
  return {{"r", rho.r()}, {"characters", chars}};
}

inline NASemisimpleRep decode_na_rep(const Json& j, std::size_t g, const std::string& path) {
  const Json& chars_j = array_at(member(j, "characters", path), child(path, "characters"));
  std::vector<NACharacter> chars;
  for (std::size_t i = 0; i < chars_j.size(); ++i) {
    auto values = decode_monomials(chars_j[i], child(child(path, "characters"), i));
    if (values.size() != g) invalid(child(child(path, "characters"), i), "character needs one value per generator");
    chars.push_back({std::move(values)});
  }
  if (chars.empty()) invalid(child(path, "characters"), "need at least one character");
  return NASemisimpleRep(std::move(chars));
}

} // namespace tropabel::io
