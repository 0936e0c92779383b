#include "io.hpp"

#include <fstream>
#include <sstream>

#include <openssl/evp.h>

namespace l2b::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_from(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw SchemaError(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

std::vector<Mat> mats_from(const json& j, std::size_t count, std::size_t rows, std::size_t cols,
                           const char* what) {
  if (!j.is_array() || j.size() != count)
    throw SchemaError(std::string(what) + ": expected a list of " + std::to_string(count) +
                      " matrices");
  std::vector<Mat> out;
  for (const auto& m : j) out.push_back(mat_from(m, rows, cols));
  return out;
}

json mats_json(const std::vector<Mat>& ms) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(to_json(m));
  return a;
}

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (!j.is_string()) throw SchemaError("rational must be a string \"p/q\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InvalidInput& e) {
    throw SchemaError(e.what());
  }
}

json to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw SchemaError("matrix must have " + std::to_string(rows) + " rows");
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw SchemaError("matrix row must have " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from(j[i][k]);
  }
  return m;
}

json to_json(const Vec& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_json(q));
  return a;
}

Vec vec_from(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n)
    throw SchemaError("vector must have " + std::to_string(n) + " entries");
  Vec v;
  for (const auto& q : j) v.push_back(rational_from(q));
  return v;
}

json to_json(const Tensor3& t) {
  json a = json::array();
  for (const auto& e : t.entries())
    a.push_back({{"i", e.i}, {"j", e.j}, {"k", e.k}, {"v", to_json(e.v)}});
  return a;
}

Tensor3 tensor_from(const json& j, std::size_t d1, std::size_t d2, std::size_t d3) {
  if (!j.is_array()) throw SchemaError("tensor must be a list of entries");
  Tensor3 t(d1, d2, d3);
  for (const auto& e : j) {
    const std::size_t i = size_from(e, "i"), k = size_from(e, "j"), l = size_from(e, "k");
    if (i >= d1 || k >= d2 || l >= d3) throw SchemaError("tensor index out of range");
    t(i, k, l) += rational_from(field(e, "v"));
  }
  return t;
}

json to_json(const TwoTermComplex& c) {
  return {{"n0", c.n0}, {"n1", c.n1}, {"d", to_json(c.d)}};
}

TwoTermComplex complex_from(const json& j) {
  const std::size_t n0 = size_from(j, "n0"), n1 = size_from(j, "n1");
  Mat d = j.contains("d") ? mat_from(j.at("d"), n0, n1) : Mat(n0, n1);
  return TwoTermComplex(n0, n1, d);
}

std::string kind_of(const json& j) {
  const json& k = field(j, "kind");
  if (!k.is_string()) throw SchemaError("field 'kind' must be a string");
  return k.get<std::string>();
}

void require_kind(const json& j, const std::string& kind) {
  const std::string k = kind_of(j);
  if (k != kind) throw SchemaError("expected kind '" + kind + "', found '" + k + "'");
}

json to_json(const StrictLie2Algebra& g) {
  return {{"kind", "lie2"},
          {"complex", to_json(g.cx)},
          {"L00", to_json(g.L00)},
          {"L01", to_json(g.L01)}};
}

StrictLie2Algebra lie2_from(const json& j) {
  require_kind(j, "lie2");
  TwoTermComplex c = complex_from(field(j, "complex"));
  const std::size_t n0 = c.n0, n1 = c.n1;
  return StrictLie2Algebra(c, tensor_from(field(j, "L00"), n0, n0, n0),
                           tensor_from(field(j, "L01"), n0, n1, n1));
}

json to_json(const StrictPreLie2Algebra& a) {
  return {{"kind", "prelie2"},
          {"complex", to_json(a.cx)},
          {"M00", to_json(a.M00)},
          {"M01", to_json(a.M01)},
          {"M10", to_json(a.M10)}};
}

StrictPreLie2Algebra prelie2_from(const json& j) {
  require_kind(j, "prelie2");
  TwoTermComplex c = complex_from(field(j, "complex"));
  const std::size_t n0 = c.n0, n1 = c.n1;
  return StrictPreLie2Algebra(c, tensor_from(field(j, "M00"), n0, n0, n0),
                              tensor_from(field(j, "M01"), n0, n1, n1),
                              tensor_from(field(j, "M10"), n1, n0, n1));
}

json to_json(const StrictAssoc2Algebra& a) {
  return {{"kind", "assoc2"},
          {"complex", to_json(a.cx)},
          {"A00", to_json(a.A00)},
          {"A01", to_json(a.A01)},
          {"A10", to_json(a.A10)}};
}

StrictAssoc2Algebra assoc2_from(const json& j) {
  require_kind(j, "assoc2");
  TwoTermComplex c = complex_from(field(j, "complex"));
  const std::size_t n0 = c.n0, n1 = c.n1;
  return StrictAssoc2Algebra(c, tensor_from(field(j, "A00"), n0, n0, n0),
                             tensor_from(field(j, "A01"), n0, n1, n1),
                             tensor_from(field(j, "A10"), n1, n0, n1));
}

json to_json(const PreLieAlgebra& p) {
  return {{"kind", "prelie"}, {"n", p.n}, {"M", to_json(p.M)}};
}

PreLieAlgebra prelie_from(const json& j) {
  require_kind(j, "prelie");
  const std::size_t n = size_from(j, "n");
  return PreLieAlgebra(tensor_from(field(j, "M"), n, n, n));
}

json to_json(const Rep2& r) {
  return {{"kind", "rep2"},
          {"complex", to_json(r.V)},
          {"A", mats_json(r.A)},
          {"B", mats_json(r.B)},
          {"C", mats_json(r.C)}};
}

Rep2 rep2_from(const json& j, std::size_t n0, std::size_t n1) {
  require_kind(j, "rep2");
  Rep2 r;
  r.V = complex_from(field(j, "complex"));
  r.A = mats_from(field(j, "A"), n0, r.m0(), r.m0(), "A");
  r.B = mats_from(field(j, "B"), n0, r.m1(), r.m1(), "B");
  r.C = mats_from(field(j, "C"), n1, r.m1(), r.m0(), "C");
  return r;
}

json to_json(const PreLieRep2& r) {
  return {{"kind", "prelie-rep2"}, {"rho", to_json(r.rho)}, {"mu", to_json(r.mu)}};
}

PreLieRep2 prelie_rep2_from(const json& j, std::size_t n0, std::size_t n1) {
  require_kind(j, "prelie-rep2");
  PreLieRep2 r{rep2_from(field(j, "rho"), n0, n1), rep2_from(field(j, "mu"), n0, n1)};
  if (!(r.rho.V == r.mu.V)) throw SchemaError("rho and mu must act on the same complex");
  return r;
}

json to_json(const RElement& r, const Tau& tau) {
  return {{"kind", "r-element"},
          {"r01", to_json(r.r01)},
          {"r10", to_json(r.r10)},
          {"tau", to_json(tau.t)}};
}

RElement r_from(const json& j, std::size_t n0, std::size_t n1) {
  require_kind(j, "r-element");
  return {mat_from(field(j, "r01"), n0, n1), mat_from(field(j, "r10"), n1, n0)};
}

Tau tau_from(const json& j, std::size_t n1) {
  require_kind(j, "r-element");
  if (!j.contains("tau")) return Tau{Mat(n1, n1)};
  return Tau{mat_from(j.at("tau"), n1, n1)};
}

json chain_map_json(const ChainMapPair& f) {
  return {{"kind", "chain-map"}, {"f0", to_json(f.f0)}, {"f1", to_json(f.f1)}};
}

ChainMapPair chain_map_from(const json& j, std::size_t rows0, std::size_t cols0,
                            std::size_t rows1, std::size_t cols1) {
  require_kind(j, "chain-map");
  return {mat_from(field(j, "f0"), rows0, cols0), mat_from(field(j, "f1"), rows1, cols1)};
}

json to_json(const OperatorPair& p) {
  return {{"kind", "operator"}, {"P0", to_json(p.P0)}, {"P1", to_json(p.P1)}};
}

OperatorPair operator_from(const json& j, std::size_t n0, std::size_t n1) {
  require_kind(j, "operator");
  return {mat_from(field(j, "P0"), n0, n0), mat_from(field(j, "P1"), n1, n1)};
}

json to_json(const SymplecticForm& w) {
  return {{"kind", "symplectic-form"},
          {"omega1", to_json(w.omega1)},
          {"omega2", to_json(w.omega2)}};
}

SymplecticForm symplectic_from(const json& j, std::size_t n0, std::size_t n1) {
  require_kind(j, "symplectic-form");
  return {mat_from(field(j, "omega1"), n0, n0), mat_from(field(j, "omega2"), n0, n1)};
}

GradedSubspace subspace_from(const json& j, std::size_t n0, std::size_t n1) {
  require_kind(j, "subspace");
  GradedSubspace h;
  for (const auto& v : field(j, "span0")) h.span0.push_back(vec_from(v, n0));
  for (const auto& v : field(j, "span1")) h.span1.push_back(vec_from(v, n1));
  return h;
}

json to_json(const Cobracket& cb) {
  json a0 = json::array();
  for (const auto& t : cb.alpha0)
    a0.push_back({{"block01", to_json(t.block01)}, {"block10", to_json(t.block10)}});
  return {{"kind", "cobracket"}, {"alpha0", a0}, {"alpha1", mats_json(cb.alpha1)}};
}

Cobracket cobracket_from(const json& j, std::size_t n0, std::size_t n1) {
  require_kind(j, "cobracket");
  const json& a0 = field(j, "alpha0");
  if (!a0.is_array() || a0.size() != n0) throw SchemaError("alpha0 must list n0 tensors");
  Cobracket cb;
  for (const auto& t : a0)
    cb.alpha0.push_back(
        {mat_from(field(t, "block01"), n0, n1), mat_from(field(t, "block10"), n1, n0)});
  cb.alpha1 = mats_from(field(j, "alpha1"), n1, n1, n1, "alpha1");
  return cb;
}

json to_json(const Report& r) {
  json out;
  out["status"] = r.pass() ? "pass" : "fail";
  json vs = json::array();
  for (const auto& v : r.violations) {
    json residual = v.residual.size() == 1 ? to_json(v.residual[0]) : to_json(v.residual);
    vs.push_back({{"law", v.law}, {"indices", v.indices}, {"residual", residual}});
  }
  out["violations"] = vs;
  json parts = json::object(), details = json::object();
  for (const auto& [name, p] : r.parts) parts[name] = to_json(p);
  for (const auto& [name, p] : r.details) details[name] = to_json(p);
  out["parts"] = parts;
  out["details"] = details;
  out["flags"] = r.flags;
  out["notes"] = r.notes;
  return out;
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string digest(const json& j) {
  const std::string text = dump(j);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

}  // namespace l2b::io
