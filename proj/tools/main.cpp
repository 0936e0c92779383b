#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "io.hpp"
#include "l2b/assoc2.hpp"
#include "l2b/bialg.hpp"
#include "l2b/fixtures.hpp"
#include "l2b/lie2.hpp"
#include "l2b/prelie2.hpp"
#include "l2b/random.hpp"

namespace {

using l2b::io::json;
using l2b::io::SchemaError;
namespace io = l2b::io;

constexpr const char* kTool = "l2b 0.1.0";

// Named input files, parsed on first use.
class Inputs {
 public:
  std::map<std::string, std::string> paths;
  std::string c = "0";
  std::string weight = "0";
  bool flip = false;

  const json& get(const std::string& role) {
    auto it = cache_.find(role);
    if (it != cache_.end()) return it->second;
    auto p = paths.find(role);
    if (p == paths.end() || p->second.empty()) throw SchemaError("missing input --" + role);
    return cache_.emplace(role, io::read_file(p->second)).first->second;
  }
  bool has(const std::string& role) const {
    auto p = paths.find(role);
    return p != paths.end() && !p->second.empty();
  }
  std::string kind(const std::string& role) { return io::kind_of(get(role)); }
  json digests() {
    json d = json::object();
    for (const auto& [role, path] : paths)
      if (!path.empty()) d[role] = io::digest(get(role));
    return d;
  }

  l2b::StrictPreLie2Algebra prelie2(const std::string& role) { return io::prelie2_from(get(role)); }
  l2b::StrictLie2Algebra lie2(const std::string& role) { return io::lie2_from(get(role)); }
  l2b::StrictAssoc2Algebra assoc2(const std::string& role) { return io::assoc2_from(get(role)); }
  // Accepts a bare r-element or any file carrying one under "r".
  const json& r_json() {
    const json& j = get("r");
    if (j.is_object() && j.contains("r") && io::kind_of(j) != "r-element") return j.at("r");
    return j;
  }

 private:
  std::map<std::string, json> cache_;
};

json with_metadata(json body, const std::string& name, json provenance) {
  body["metadata"] = {{"name", name}, {"provenance", std::move(provenance)}};
  return body;
}

json construct_provenance(const std::string& verb, Inputs& in) {
  return {{"tool", kTool}, {"verb", "construct " + verb}, {"inputs", in.digests()}};
}

l2b::Rational parse_param(const std::string& s, const char* name) {
  try {
    return l2b::parse_rational(s);
  } catch (const l2b::InvalidInput&) {
    throw SchemaError(std::string("--") + name + " must be a rational");
  }
}

json solution_json(const l2b::CybeSolution& s) {
  json body = io::to_json(s.algebra);
  body["r"] = io::to_json(s.R, l2b::Tau{l2b::Mat(s.algebra.n1(), s.algebra.n1())});
  return body;
}

using ConstructFn = std::function<json(Inputs&)>;
using CheckFn = std::function<l2b::Report(Inputs&)>;

std::map<std::string, ConstructFn> construct_verbs() {
  std::map<std::string, ConstructFn> v;
  v["subadjacent"] = [](Inputs& in) {
    if (in.kind("algebra") == "assoc2") return io::to_json(l2b::commutator_lie2(in.assoc2("algebra")));
    return io::to_json(l2b::subadjacent(in.prelie2("algebra")));
  };
  v["semidirect"] = [](Inputs& in) {
    if (in.kind("algebra") == "lie2") {
      auto g = in.lie2("algebra");
      return io::to_json(l2b::semidirect_lie2(g, io::rep2_from(in.get("rep"), g.n0(), g.n1())));
    }
    auto a = in.prelie2("algebra");
    return io::to_json(
        l2b::semidirect_prelie2(a, io::prelie_rep2_from(in.get("rep"), a.n0(), a.n1())));
  };
  v["dual"] = [](Inputs& in) {
    if (in.kind("algebra") == "lie2") {
      auto g = in.lie2("algebra");
      return io::to_json(l2b::dual_rep(g, io::rep2_from(in.get("rep"), g.n0(), g.n1())));
    }
    auto a = in.prelie2("algebra");
    return io::to_json(
        l2b::dual_prelie_rep(a, io::prelie_rep2_from(in.get("rep"), a.n0(), a.n1())));
  };
  v["collapse"] = [](Inputs& in) { return io::to_json(l2b::collapse(in.prelie2("algebra"))); };
  v["manin"] = [](Inputs& in) {
    auto m = l2b::manin_standard_assemble(in.prelie2("algebra"), in.prelie2("other"));
    json body = io::to_json(m.algebra);
    body["form"] = io::to_json(m.form);
    return body;
  };
  v["matched-assemble"] = [](Inputs& in) {
    if (in.kind("algebra") == "lie2") {
      auto g = in.lie2("algebra"), gp = in.lie2("other");
      return io::to_json(l2b::matched_pair_lie2_assemble(
          g, gp, io::rep2_from(in.get("rep"), g.n0(), g.n1()),
          io::rep2_from(in.get("other-rep"), gp.n0(), gp.n1())));
    }
    auto a = in.prelie2("algebra"), ap = in.prelie2("other");
    return io::to_json(l2b::matched_pair_prelie2_assemble(
        a, ap, io::prelie_rep2_from(in.get("rep"), a.n0(), a.n1()),
        io::prelie_rep2_from(in.get("other-rep"), ap.n0(), ap.n1())));
  };
  v["prelie-from-symplectic"] = [](Inputs& in) {
    auto g = in.lie2("algebra");
    return io::to_json(
        l2b::prelie_from_symplectic(g, io::symplectic_from(in.get("form"), g.n0(), g.n1())));
  };
  v["prelie-from-rb0"] = [](Inputs& in) {
    auto a = in.assoc2("algebra");
    return io::to_json(l2b::prelie_from_rb0(a, io::operator_from(in.get("operator"), a.n0(), a.n1())));
  };
  v["prelie-from-rb1"] = [](Inputs& in) {
    auto a = in.assoc2("algebra");
    return io::to_json(l2b::prelie_from_rb1(a, io::operator_from(in.get("operator"), a.n0(), a.n1())));
  };
  v["prelie-from-derivation"] = [](Inputs& in) {
    auto a = in.assoc2("algebra");
    return io::to_json(l2b::prelie_from_derivation(
        a, io::operator_from(in.get("operator"), a.n0(), a.n1()), parse_param(in.c, "c")));
  };
  auto oop_inputs = [](Inputs& in) {
    auto g = in.lie2("algebra");
    auto rep = io::rep2_from(in.get("rep"), g.n0(), g.n1());
    auto t = io::chain_map_from(in.get("map"), g.n0(), rep.m0(), g.n1(), rep.m1());
    return std::make_tuple(g, rep, t);
  };
  v["prelie-from-oop"] = [oop_inputs](Inputs& in) {
    auto [g, rep, t] = oop_inputs(in);
    return io::to_json(l2b::prelie_from_o_operator(g, rep, t));
  };
  v["solution-from-oop"] = [oop_inputs](Inputs& in) {
    auto [g, rep, t] = oop_inputs(in);
    return solution_json(l2b::solution_from_o_operator(g, rep, t));
  };
  v["canonical-r"] = [](Inputs& in) {
    return solution_json(l2b::canonical_solution(in.prelie2("algebra")));
  };
  // A* dual to the coboundary cobracket of (r, tau).
  v["coboundary-dual"] = [](Inputs& in) {
    auto a = in.prelie2("algebra");
    const json& r = in.r_json();
    auto cb = l2b::coboundary_cobracket(a, io::r_from(r, a.n0(), a.n1()), io::tau_from(r, a.n1()));
    return io::to_json(l2b::dual_from_cobracket(a, cb));
  };
  return v;
}

std::map<std::string, CheckFn> check_verbs() {
  std::map<std::string, CheckFn> v;
  auto r_inputs = [](Inputs& in, const l2b::StrictPreLie2Algebra& a) {
    const json& r = in.r_json();
    return std::make_pair(io::r_from(r, a.n0(), a.n1()), io::tau_from(r, a.n1()));
  };
  v["cybe"] = [r_inputs](Inputs& in) {
    auto a = in.prelie2("algebra");
    auto [r, tau] = r_inputs(in, a);
    return l2b::cybe_check(a, r, tau, in.flip);
  };
  v["coboundary-bialgebra"] = [r_inputs](Inputs& in) {
    auto a = in.prelie2("algebra");
    auto [r, tau] = r_inputs(in, a);
    return l2b::coboundary_bialgebra_check(a, r, tau, in.flip);
  };
  v["cocycle"] = [r_inputs](Inputs& in) {
    auto a = in.prelie2("algebra");
    if (in.has("cobracket"))
      return l2b::cocycle_check(a, io::cobracket_from(in.get("cobracket"), a.n0(), a.n1()));
    auto [r, tau] = r_inputs(in, a);
    return l2b::cocycle_check(a, l2b::coboundary_cobracket(a, r, tau));
  };
  v["bialgebra"] = [](Inputs& in) {
    return l2b::bialgebra_check(in.prelie2("algebra"), in.prelie2("other"));
  };
  v["matched-pair"] = [](Inputs& in) {
    if (in.kind("algebra") == "lie2") {
      auto g = in.lie2("algebra"), gp = in.lie2("other");
      return l2b::matched_pair_lie2_check(g, gp, io::rep2_from(in.get("rep"), g.n0(), g.n1()),
                                          io::rep2_from(in.get("other-rep"), gp.n0(), gp.n1()));
    }
    auto a = in.prelie2("algebra"), ap = in.prelie2("other");
    return l2b::matched_pair_prelie2_check(
        a, ap, io::prelie_rep2_from(in.get("rep"), a.n0(), a.n1()),
        io::prelie_rep2_from(in.get("other-rep"), ap.n0(), ap.n1()));
  };
  v["manin-triple"] = [](Inputs& in) {
    return l2b::manin_triple_check(in.prelie2("algebra"), in.prelie2("other"));
  };
  v["symplectic"] = [](Inputs& in) {
    auto g = in.lie2("algebra");
    return l2b::symplectic_check(g, io::symplectic_from(in.get("form"), g.n0(), g.n1()));
  };
  v["parakahler"] = [](Inputs& in) {
    auto g = in.lie2("algebra");
    return l2b::parakahler_check(g, io::symplectic_from(in.get("form"), g.n0(), g.n1()),
                                 io::subspace_from(in.get("plus"), g.n0(), g.n1()),
                                 io::subspace_from(in.get("minus"), g.n0(), g.n1()));
  };
  v["oop"] = [](Inputs& in) {
    auto g = in.lie2("algebra");
    auto rep = io::rep2_from(in.get("rep"), g.n0(), g.n1());
    return l2b::o_operator_check(
        g, rep, io::chain_map_from(in.get("map"), g.n0(), rep.m0(), g.n1(), rep.m1()));
  };
  v["rb-weight"] = [](Inputs& in) {
    auto a = in.assoc2("algebra");
    return l2b::rb_weight_check(a, io::operator_from(in.get("operator"), a.n0(), a.n1()),
                                parse_param(in.weight, "weight"));
  };
  v["derivation"] = [](Inputs& in) {
    auto a = in.assoc2("algebra");
    return l2b::derivation_check(a, io::operator_from(in.get("operator"), a.n0(), a.n1()));
  };
  v["equivalences"] = [](Inputs& in) {
    return l2b::equivalences_check(in.prelie2("algebra"), in.prelie2("other"));
  };
  v["cybe-oop-equiv"] = [r_inputs](Inputs& in) {
    auto a = in.prelie2("algebra");
    return l2b::cybe_oop_equivalence(a, r_inputs(in, a).first);
  };
  return v;
}

l2b::Report verify(const std::string& kind, const json& j) {
  if (kind == "lie2") return l2b::verify_lie2(io::lie2_from(j));
  if (kind == "prelie2") return l2b::verify_prelie2(io::prelie2_from(j));
  if (kind == "assoc2") return l2b::verify_assoc2(io::assoc2_from(j));
  if (kind == "commutative") return l2b::verify_commutative(io::assoc2_from(j));
  if (kind == "prelie") return l2b::verify_prelie(io::prelie_from(j));
  throw SchemaError("unknown kind '" + kind + "'");
}

// base names a fixture or a prelie2 file; only the semidirect family uses it.
json random_instance(const std::string& family, std::size_t n0, std::size_t n1,
                     std::uint64_t seed, const std::string& base) {
  l2b::Rng rng(seed);
  auto too_big = [&](std::size_t cap) {
    if (n0 > cap || n1 > cap)
      throw SchemaError("family '" + family + "' supports dimensions up to " +
                        std::to_string(cap));
  };
  if (family == "abelian") {
    too_big(64);
    return io::to_json(l2b::StrictPreLie2Algebra::abelian(l2b::random_complex(rng, n0, n1)));
  }
  if (family == "cone") {
    if (n0 != n1 || n0 < 1 || n0 > 2) throw SchemaError("family 'cone' needs n0 = n1 in {1, 2}");
    return io::to_json(l2b::random_cone(rng, n0));
  }
  if (family == "semidirect") {
    l2b::StrictPreLie2Algebra a;
    if (!base.empty()) {
      auto fixture = l2b::fixture_by_name(base);
      a = fixture ? *fixture : io::prelie2_from(io::read_file(base));
    } else {
      too_big(3);
      a = l2b::random_prelie2(rng, n0, n1);
    }
    return io::to_json(l2b::semidirect_prelie2(a, l2b::random_prelie_rep(rng, a)));
  }
  if (family == "matched") {
    too_big(2);
    auto b = l2b::random_coboundary_bialgebra(rng, n0, n1);
    return io::to_json(l2b::matched_pair_prelie2_assemble(
        b.a, b.astar, l2b::coregular_rep(b.a), l2b::coregular_rep(b.astar)));
  }
  if (family == "oop-induced") {
    too_big(3);
    auto o = l2b::random_o_operator(rng, n0, n1);
    return io::to_json(l2b::prelie_from_o_operator(o.g, o.rep, o.t));
  }
  throw SchemaError("unknown family '" + family + "'");
}

void emit(const json& j, const std::string& output) {
  const std::string text = io::dump(j);
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw SchemaError("cannot write '" + output + "'");
  out << text;
}

std::pair<std::size_t, std::size_t> parse_dims(const std::string& s) {
  auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(s);
    std::size_t used = 0;
    const unsigned long a = std::stoul(s.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(s);
    const std::string rest = s.substr(comma + 1);
    const unsigned long b = std::stoul(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(s);
    return {a, b};
  } catch (const std::logic_error&) {
    throw SchemaError("--dims must look like n0,n1");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification and construction for strict pre-Lie 2-algebras"};
  app.require_subcommand(1);
  std::string output, format = "json";
  Inputs in;
  const auto cverbs = construct_verbs();
  const auto kverbs = check_verbs();

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", output, "Write JSON here instead of standard output");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json"}));
  };
  auto add_inputs = [&](CLI::App* sub) {
    for (const char* role : {"algebra", "other", "rep", "other-rep", "map", "operator", "form",
                             "r", "cobracket", "plus", "minus"})
      sub->add_option(std::string("--") + role, in.paths[role], std::string(role) + " file");
  };

  std::string kind, file;
  auto* verify_cmd = app.add_subcommand("verify", "Check the axioms of a structure file");
  verify_cmd->add_option("kind", kind, "lie2 | prelie2 | assoc2 | commutative | prelie")
      ->required();
  verify_cmd->add_option("file", file, "Structure file")->required();
  add_common(verify_cmd);

  std::string verb;
  auto* construct_cmd = app.add_subcommand("construct", "Build a structure from inputs");
  construct_cmd->add_option("verb", verb)->required();
  construct_cmd->add_option("--c", in.c, "Constant of the derivation construction");
  add_inputs(construct_cmd);
  add_common(construct_cmd);

  auto* check_cmd = app.add_subcommand("check", "Evaluate a compound condition");
  check_cmd->add_option("verb", verb)->required();
  check_cmd->add_option("--weight", in.weight, "Rota-Baxter weight");
  check_cmd->add_flag("--convention-flip-dtensor", in.flip,
                      "Use the flipped sign on 1 (x) d in the tensor differential");
  add_inputs(check_cmd);
  add_common(check_cmd);

  std::string family, dims = "1,1", base;
  std::uint64_t seed = 0;
  auto* random_cmd = app.add_subcommand("random", "Generate a valid pre-Lie 2-algebra");
  random_cmd->add_option("family", family, "abelian | cone | semidirect | matched | oop-induced")
      ->required();
  random_cmd->add_option("--seed", seed);
  random_cmd->add_option("--dims", dims, "n0,n1");
  random_cmd->add_option("--base", base, "Fixture name or prelie2 file for the semidirect family");
  add_common(random_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify_cmd) {
      l2b::Report r = verify(kind, io::read_file(file));
      emit(io::to_json(r), output);
      return r.pass() ? 0 : 1;
    }
    if (*construct_cmd) {
      auto it = cverbs.find(verb);
      if (it == cverbs.end()) throw SchemaError("unknown construct verb '" + verb + "'");
      json body = it->second(in);
      emit(with_metadata(std::move(body), verb, construct_provenance(verb, in)), output);
      return 0;
    }
    if (*check_cmd) {
      auto it = kverbs.find(verb);
      if (it == kverbs.end()) throw SchemaError("unknown check verb '" + verb + "'");
      l2b::Report r = it->second(in);
      emit(io::to_json(r), output);
      return r.pass() ? 0 : 1;
    }
    auto [n0, n1] = parse_dims(dims);
    json body = random_instance(family, n0, n1, seed, base);
    json prov = {{"tool", kTool},
                 {"verb", "random"},
                 {"family", family},
                 {"seed", seed},
                 {"dims", {n0, n1}}};
    if (!base.empty()) prov["base"] = base;
    emit(with_metadata(std::move(body), family, std::move(prov)), output);
    return 0;
  } catch (const l2b::Error& e) {
    const bool shape = e.category() == "schema" || e.category() == "shape";
    std::cerr << "l2b: " << e.what() << "\n";
    std::cout << io::dump({{"status", "error"}, {"category", e.category()}, {"message", e.what()}});
    return shape ? 2 : 1;
  }
}
