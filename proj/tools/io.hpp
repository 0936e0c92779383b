#ifndef L2B_TOOLS_IO_HPP
#define L2B_TOOLS_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "l2b/bialg.hpp"
#include "l2b/errors.hpp"
#include "l2b/lie2.hpp"
#include "l2b/report.hpp"
#include "l2b/types.hpp"

namespace l2b::io {

using json = nlohmann::json;

// Malformed or mis-shaped input file; the command line maps it to exit 2.
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& what) : Error("schema", what) {}
};

// Rationals travel as canonical strings "p/q" or "p"; integers are accepted
// on input.
json to_json(const Rational& q);
Rational rational_from(const json& j);

// Row-major list of rows. rows x cols is enforced, which also fixes the
// shape of empty matrices.
json to_json(const Mat& m);
Mat mat_from(const json& j, std::size_t rows, std::size_t cols);
json to_json(const Vec& v);
Vec vec_from(const json& j, std::size_t n);

// Sparse list of {"i","j","k","v"}.
json to_json(const Tensor3& t);
Tensor3 tensor_from(const json& j, std::size_t d1, std::size_t d2, std::size_t d3);

json to_json(const TwoTermComplex& c);
TwoTermComplex complex_from(const json& j);

// Structure files carry "kind" in {"lie2", "prelie2", "assoc2", "prelie",
// "rep2", "prelie-rep2", "r-element", "chain-map", "operator",
// "symplectic-form", "subspace", "cobracket", "matrix"}.
std::string kind_of(const json& j);
void require_kind(const json& j, const std::string& kind);

json to_json(const StrictLie2Algebra& g);
StrictLie2Algebra lie2_from(const json& j);
json to_json(const StrictPreLie2Algebra& a);
StrictPreLie2Algebra prelie2_from(const json& j);
json to_json(const StrictAssoc2Algebra& a);
StrictAssoc2Algebra assoc2_from(const json& j);
json to_json(const PreLieAlgebra& p);
PreLieAlgebra prelie_from(const json& j);

// A representation of an algebra with n0 | n1 generators.
json to_json(const Rep2& r);
Rep2 rep2_from(const json& j, std::size_t n0, std::size_t n1);
json to_json(const PreLieRep2& r);
PreLieRep2 prelie_rep2_from(const json& j, std::size_t n0, std::size_t n1);

// "tau" is optional and defaults to zero.
json to_json(const RElement& r, const Tau& tau);
RElement r_from(const json& j, std::size_t n0, std::size_t n1);
Tau tau_from(const json& j, std::size_t n1);

// Maps V -> g given as (rows0 x cols0, rows1 x cols1).
json chain_map_json(const ChainMapPair& f);
ChainMapPair chain_map_from(const json& j, std::size_t rows0, std::size_t cols0,
                            std::size_t rows1, std::size_t cols1);
json to_json(const OperatorPair& p);
OperatorPair operator_from(const json& j, std::size_t n0, std::size_t n1);
json to_json(const SymplecticForm& w);
SymplecticForm symplectic_from(const json& j, std::size_t n0, std::size_t n1);
GradedSubspace subspace_from(const json& j, std::size_t n0, std::size_t n1);
json to_json(const Cobracket& cb);
Cobracket cobracket_from(const json& j, std::size_t n0, std::size_t n1);

// {"status": "pass" | "fail", "violations": [...], "parts": {...},
// "details": {...}, "flags": {...}, "notes": [...]}; scalar residuals are
// written as a single rational.
json to_json(const Report& r);

json read_file(const std::string& path);
// Sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);
// Hex SHA-256 of dump(j).
std::string digest(const json& j);

}  // namespace l2b::io

#endif
