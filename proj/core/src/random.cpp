#include "l2b/random.hpp"

#include <map>
#include <mutex>

#include "l2b/assoc2.hpp"
#include "l2b/errors.hpp"
#include "l2b/lie2.hpp"
#include "l2b/prelie2.hpp"

namespace l2b {

Mat random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(rng.range(lo, hi));
  return m;
}

Mat random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    Mat m = random_matrix(rng, n, n, -1, 1);
    if (rank(m) == n) return m;
  }
}

TwoTermComplex random_complex(Rng& rng, std::size_t n0, std::size_t n1) {
  return TwoTermComplex(n0, n1, random_matrix(rng, n0, n1, -1, 1));
}

ChainMapPair random_chain_iso(Rng& rng, std::size_t n0, std::size_t n1) {
  Mat g0 = random_invertible(rng, n0);
  Mat g1 = random_invertible(rng, n1);
  return {g0, g1};
}

namespace {

// Enumerates {-1,0,1}^(dim^3) and keeps the tensors accepted by keep.
std::vector<Tensor3> enumerate(std::size_t dim, const std::function<bool(const Tensor3&)>& keep) {
  std::size_t cells = dim * dim * dim, total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= 3;
  std::vector<Tensor3> out;
  for (std::size_t code = 0; code < total; ++code) {
    Tensor3 t(dim, dim, dim);
    std::size_t c = code;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) {
          t(i, j, k) = static_cast<long>(c % 3) - 1;
          c /= 3;
        }
    if (keep(t)) out.push_back(std::move(t));
  }
  return out;
}

bool is_associative(const Tensor3& m) {
  const std::size_t n = m.d1();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (m.apply(m.fiber(x, y), unit(n, z)) != m.apply(unit(n, x), m.fiber(y, z))) return false;
  return true;
}

bool is_commutative(const Tensor3& m) {
  for (std::size_t x = 0; x < m.d1(); ++x)
    for (std::size_t y = 0; y < m.d1(); ++y)
      if (m.fiber(x, y) != m.fiber(y, x)) return false;
  return true;
}

std::mutex cache_mutex;

Rational pick_lambda(Rng& rng) {
  static const long choices[] = {1, 1, 2, -1, 0};
  return Rational(choices[rng.below(5)]);
}

}  // namespace

const std::vector<Tensor3>& small_prelie_products(std::size_t dim) {
  if (dim < 1 || dim > 2) throw InvalidInput("small_prelie_products: dimension must be 1 or 2");
  static std::map<std::size_t, std::vector<Tensor3>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(dim);
  if (it == cache.end())
    it = cache
             .emplace(dim, enumerate(dim, [](const Tensor3& t) {
                        return verify_prelie(PreLieAlgebra(t)).pass();
                      }))
             .first;
  return it->second;
}

const std::vector<Tensor3>& small_assoc_products(std::size_t dim, bool commutative) {
  if (dim < 1 || dim > 2) throw InvalidInput("small_assoc_products: dimension must be 1 or 2");
  static std::map<std::pair<std::size_t, bool>, std::vector<Tensor3>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_pair(dim, commutative);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache
             .emplace(key, enumerate(dim, [commutative](const Tensor3& t) {
                        return is_associative(t) && (!commutative || is_commutative(t));
                      }))
             .first;
  return it->second;
}

StrictPreLie2Algebra cone(const Tensor3& m, const Rational& lambda) {
  const std::size_t n = m.d1();
  return StrictPreLie2Algebra(TwoTermComplex(n, n, lambda * Mat::identity(n)), m, m, m);
}

StrictPreLie2Algebra concentrated(const Tensor3& m) {
  const std::size_t n = m.d1();
  return StrictPreLie2Algebra(TwoTermComplex(n, 0), m, Tensor3(n, 0, 0), Tensor3(0, n, 0));
}

namespace {

// Block-diagonal copy of three tensors shaped like M00, M01, M10.
std::array<Tensor3, 3> sum_tensors(const std::array<const Tensor3*, 3>& a,
                                   const std::array<const Tensor3*, 3>& b, std::size_t n0,
                                   std::size_t n1, std::size_t p0, std::size_t p1) {
  const std::size_t N0 = n0 + p0, N1 = n1 + p1;
  std::array<Tensor3, 3> out{Tensor3(N0, N0, N0), Tensor3(N0, N1, N1), Tensor3(N1, N0, N1)};
  const std::array<std::array<std::size_t, 3>, 3> offa{{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}};
  const std::array<std::array<std::size_t, 3>, 3> offb{{{n0, n0, n0}, {n0, n1, n1}, {n1, n0, n1}}};
  for (int t = 0; t < 3; ++t) {
    for (const auto& e : a[t]->entries())
      out[t](e.i + offa[t][0], e.j + offa[t][1], e.k + offa[t][2]) = e.v;
    for (const auto& e : b[t]->entries())
      out[t](e.i + offb[t][0], e.j + offb[t][1], e.k + offb[t][2]) = e.v;
  }
  return out;
}

Mat block_diag(const Mat& a, const Mat& b) {
  Mat m(a.rows() + b.rows(), a.cols() + b.cols());
  put_block(m, 0, 0, a);
  put_block(m, a.rows(), a.cols(), b);
  return m;
}

std::array<Tensor3, 3> transport_tensors(const std::array<const Tensor3*, 3>& t,
                                         const ChainMapPair& g, const Mat& h0, const Mat& h1) {
  const std::size_t n0 = g.f0.rows(), n1 = g.f1.rows();
  std::array<Tensor3, 3> out{Tensor3(n0, n0, n0), Tensor3(n0, n1, n1), Tensor3(n1, n0, n1)};
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j) {
      Vec v = g.f0 * t[0]->apply(h0.col(i), h0.col(j));
      for (std::size_t k = 0; k < n0; ++k) out[0](i, j, k) = v[k];
    }
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      Vec v = g.f1 * t[1]->apply(h0.col(i), h1.col(j));
      for (std::size_t k = 0; k < n1; ++k) out[1](i, j, k) = v[k];
    }
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n0; ++j) {
      Vec v = g.f1 * t[2]->apply(h1.col(i), h0.col(j));
      for (std::size_t k = 0; k < n1; ++k) out[2](i, j, k) = v[k];
    }
  return out;
}

std::pair<Mat, Mat> inverses(const ChainMapPair& g) {
  auto h0 = inverse(g.f0), h1 = inverse(g.f1);
  if (!h0 || !h1) throw InvalidInput("transport: map is not invertible");
  return {*h0, *h1};
}

}  // namespace

StrictPreLie2Algebra direct_sum(const StrictPreLie2Algebra& a, const StrictPreLie2Algebra& b) {
  auto t = sum_tensors({&a.M00, &a.M01, &a.M10}, {&b.M00, &b.M01, &b.M10}, a.n0(), a.n1(),
                       b.n0(), b.n1());
  return StrictPreLie2Algebra(
      TwoTermComplex(a.n0() + b.n0(), a.n1() + b.n1(), block_diag(a.cx.d, b.cx.d)), t[0], t[1],
      t[2]);
}

StrictPreLie2Algebra transport(const StrictPreLie2Algebra& a, const ChainMapPair& g) {
  auto [h0, h1] = inverses(g);
  auto t = transport_tensors({&a.M00, &a.M01, &a.M10}, g, h0, h1);
  return StrictPreLie2Algebra(TwoTermComplex(a.n0(), a.n1(), g.f0 * a.cx.d * h1), t[0], t[1],
                              t[2]);
}

StrictAssoc2Algebra assoc_cone(const Tensor3& m, const Rational& lambda) {
  const std::size_t n = m.d1();
  return StrictAssoc2Algebra(TwoTermComplex(n, n, lambda * Mat::identity(n)), m, m, m);
}

StrictAssoc2Algebra assoc_direct_sum(const StrictAssoc2Algebra& a, const StrictAssoc2Algebra& b) {
  auto t = sum_tensors({&a.A00, &a.A01, &a.A10}, {&b.A00, &b.A01, &b.A10}, a.n0(), a.n1(),
                       b.n0(), b.n1());
  return StrictAssoc2Algebra(
      TwoTermComplex(a.n0() + b.n0(), a.n1() + b.n1(), block_diag(a.cx.d, b.cx.d)), t[0], t[1],
      t[2]);
}

StrictAssoc2Algebra assoc_transport(const StrictAssoc2Algebra& a, const ChainMapPair& g) {
  auto [h0, h1] = inverses(g);
  auto t = transport_tensors({&a.A00, &a.A01, &a.A10}, g, h0, h1);
  return StrictAssoc2Algebra(TwoTermComplex(a.n0(), a.n1(), g.f0 * a.cx.d * h1), t[0], t[1],
                             t[2]);
}

StrictPreLie2Algebra random_prelie2(Rng& rng, std::size_t n0, std::size_t n1) {
  if (n0 > 3 || n1 > 3) throw InvalidInput("random_prelie2: dimensions must be at most 3");
  const std::size_t c = rng.below(std::min({n0, n1, std::size_t{2}}) + 1);
  const std::size_t r0 = n0 - c;
  const std::size_t s0 = rng.below(std::min(r0, std::size_t{2}) + 1);
  StrictPreLie2Algebra out = StrictPreLie2Algebra::abelian(TwoTermComplex(0, 0));
  if (c > 0) {
    const auto& ps = small_prelie_products(c);
    out = direct_sum(out, cone(ps[rng.below(ps.size())], pick_lambda(rng)));
  }
  if (s0 > 0) {
    const auto& ps = small_prelie_products(s0);
    out = direct_sum(out, concentrated(ps[rng.below(ps.size())]));
  }
  out = direct_sum(out, StrictPreLie2Algebra::abelian(random_complex(rng, r0 - s0, n1 - c)));
  if (rng.coin()) out = transport(out, random_chain_iso(rng, n0, n1));
  return out;
}

StrictAssoc2Algebra random_assoc2(Rng& rng, std::size_t n0, std::size_t n1, bool commutative) {
  if (n0 > 3 || n1 > 3) throw InvalidInput("random_assoc2: dimensions must be at most 3");
  const std::size_t c = rng.below(std::min({n0, n1, std::size_t{2}}) + 1);
  const std::size_t r0 = n0 - c;
  const std::size_t s0 = rng.below(std::min(r0, std::size_t{2}) + 1);
  StrictAssoc2Algebra out(TwoTermComplex(0, 0), Tensor3(0, 0, 0), Tensor3(0, 0, 0),
                          Tensor3(0, 0, 0));
  if (c > 0) {
    const auto& ps = small_assoc_products(c, commutative);
    out = assoc_direct_sum(out, assoc_cone(ps[rng.below(ps.size())], pick_lambda(rng)));
  }
  if (s0 > 0) {
    const auto& ps = small_assoc_products(s0, commutative);
    const Tensor3& m = ps[rng.below(ps.size())];
    out = assoc_direct_sum(
        out, StrictAssoc2Algebra(TwoTermComplex(s0, 0), m, Tensor3(s0, 0, 0), Tensor3(0, s0, 0)));
  }
  const std::size_t a0 = r0 - s0, a1 = n1 - c;
  out = assoc_direct_sum(out, StrictAssoc2Algebra(random_complex(rng, a0, a1), Tensor3(a0, a0, a0),
                                                  Tensor3(a0, a1, a1), Tensor3(a1, a0, a1)));
  if (rng.coin()) out = assoc_transport(out, random_chain_iso(rng, n0, n1));
  return out;
}

Rep2 transport_rep(const Rep2& r, const ChainMapPair& p) {
  auto [q0, q1] = inverses(p);
  Rep2 out;
  out.V = TwoTermComplex(r.m0(), r.m1(), p.f0 * r.V.d * q1);
  for (const auto& m : r.A) out.A.push_back(p.f0 * m * q0);
  for (const auto& m : r.B) out.B.push_back(p.f1 * m * q1);
  for (const auto& m : r.C) out.C.push_back(p.f1 * m * q0);
  return out;
}

PreLieRep2 transport_rep(const PreLieRep2& r, const ChainMapPair& p) {
  return {transport_rep(r.rho, p), transport_rep(r.mu, p)};
}

Rep2 rep_direct_sum(const Rep2& a, const Rep2& b) {
  Rep2 out;
  out.V = TwoTermComplex(a.m0() + b.m0(), a.m1() + b.m1(), block_diag(a.V.d, b.V.d));
  for (std::size_t i = 0; i < a.A.size(); ++i) {
    out.A.push_back(block_diag(a.A[i], b.A[i]));
    out.B.push_back(block_diag(a.B[i], b.B[i]));
  }
  for (std::size_t j = 0; j < a.C.size(); ++j) out.C.push_back(block_diag(a.C[j], b.C[j]));
  return out;
}

PreLieRep2 random_prelie_rep(Rng& rng, const StrictPreLie2Algebra& a) {
  PreLieRep2 r;
  switch (rng.below(4)) {
    case 0: {
      TwoTermComplex V = random_complex(rng, rng.below(3), rng.below(3));
      r = {Rep2::zero(a.n0(), a.n1(), V), Rep2::zero(a.n0(), a.n1(), V)};
      break;
    }
    case 1:
      r = regular_rep(a);
      break;
    case 2:
      r = coregular_rep(a);
      break;
    default: {
      PreLieRep2 reg = regular_rep(a);
      TwoTermComplex V = random_complex(rng, rng.below(2), rng.below(2));
      Rep2 z = Rep2::zero(a.n0(), a.n1(), V);
      r = {rep_direct_sum(reg.rho, z), rep_direct_sum(reg.mu, z)};
      break;
    }
  }
  if (rng.coin()) r = transport_rep(r, random_chain_iso(rng, r.rho.m0(), r.rho.m1()));
  return r;
}

StrictPreLie2Algebra random_cone(Rng& rng, std::size_t dim) {
  const auto& ps = small_prelie_products(dim);
  return cone(ps[rng.below(ps.size())], Rational(1));
}

OOperatorInstance random_o_operator(Rng& rng, std::size_t n0, std::size_t n1) {
  static const long scales[] = {1, 1, -1, 2};
  const Rational c(scales[rng.below(4)]);
  OOperatorInstance out;
  switch (rng.below(3)) {
    case 0: {
      StrictPreLie2Algebra a = random_prelie2(rng, n0, n1);
      out.g = commutator_lie2(a);
      out.rep = left_rep(a);
      out.t = {c * Mat::identity(n0), c * Mat::identity(n1)};
      break;
    }
    case 1: {
      StrictPreLie2Algebra a = random_prelie2(rng, n0, n1);
      out.g = commutator_lie2(a);
      out.rep = rep_to_lie_rep(a, random_prelie_rep(rng, a));
      out.t = {Mat(n0, out.rep.m0()), Mat(n1, out.rep.m1())};
      break;
    }
    default: {
      const std::size_t p0 = rng.below(n0 + 1), p1 = rng.below(n1 + 1);
      StrictPreLie2Algebra a =
          direct_sum(random_prelie2(rng, p0, p1), random_prelie2(rng, n0 - p0, n1 - p1));
      out.g = commutator_lie2(a);
      out.rep = left_rep(a);
      Mat t0(n0, n0), t1(n1, n1);
      for (std::size_t i = 0; i < p0; ++i) t0(i, i) = c;
      for (std::size_t i = 0; i < p1; ++i) t1(i, i) = c;
      out.t = {t0, t1};
      break;
    }
  }
  if (rng.coin()) {
    // rho' = phi^-1 rho phi on V and T' = T phi.
    ChainMapPair phi = random_chain_iso(rng, out.rep.m0(), out.rep.m1());
    auto [h0, h1] = inverses(phi);
    out.rep = transport_rep(out.rep, ChainMapPair{h0, h1});
    out.t = {out.t.f0 * phi.f0, out.t.f1 * phi.f1};
  }
  return out;
}

namespace {

// Operators with entries in {-1, 0, 1} of the given weight on a piece,
// with R1 = R0 when the piece has a degree -1 part.
std::vector<OperatorPair> small_rb_operators(const StrictAssoc2Algebra& a, const Rational& w) {
  const std::size_t n = a.n0();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) total *= 3;
  std::vector<OperatorPair> out;
  for (std::size_t code = 0; code < total; ++code) {
    Mat r(n, n);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        r(i, j) = static_cast<long>(c % 3) - 1;
        c /= 3;
      }
    OperatorPair op{r, a.n1() == 0 ? Mat(0, 0) : r};
    if (rb_weight_check(a, op, w).pass()) out.push_back(std::move(op));
  }
  return out;
}

}  // namespace

RbInstance random_rb_operator(Rng& rng, std::size_t n0, std::size_t n1, const Rational& lambda,
                              bool commutative) {
  if (n0 > 3 || n1 > 3) throw InvalidInput("random_rb_operator: dimensions must be at most 3");
  // A weight-1 operator scaled by lambda has weight lambda.
  const Rational w = lambda == 0 ? Rational(0) : Rational(1);
  const std::size_t c = rng.below(std::min({n0, n1, std::size_t{2}}) + 1);
  const std::size_t r0 = n0 - c;
  const std::size_t s0 = rng.below(std::min(r0, std::size_t{2}) + 1);
  StrictAssoc2Algebra alg(TwoTermComplex(0, 0), Tensor3(0, 0, 0), Tensor3(0, 0, 0),
                          Tensor3(0, 0, 0));
  OperatorPair R{Mat(0, 0), Mat(0, 0)};
  auto add = [&](const StrictAssoc2Algebra& piece, const OperatorPair& op) {
    alg = assoc_direct_sum(alg, piece);
    R = {block_diag(R.P0, op.P0), block_diag(R.P1, op.P1)};
  };
  auto pick = [&](const StrictAssoc2Algebra& piece) {
    auto ops = small_rb_operators(piece, w);
    OperatorPair op = ops[rng.below(ops.size())];
    if (lambda != 0) op = {lambda * op.P0, lambda * op.P1};
    add(piece, op);
  };
  if (c > 0) {
    const auto& ps = small_assoc_products(c, commutative);
    pick(assoc_cone(ps[rng.below(ps.size())], pick_lambda(rng)));
  }
  if (s0 > 0) {
    const auto& ps = small_assoc_products(s0, commutative);
    const Tensor3& m = ps[rng.below(ps.size())];
    pick(StrictAssoc2Algebra(TwoTermComplex(s0, 0), m, Tensor3(s0, 0, 0), Tensor3(0, s0, 0)));
  }
  // Every product on the remainder vanishes, so any chain map has every weight.
  const std::size_t a0 = r0 - s0, a1 = n1 - c;
  TwoTermComplex rest = random_complex(rng, a0, a1);
  ChainMapPair f = random_chain_map(rng, rest, rest);
  add(StrictAssoc2Algebra(rest, Tensor3(a0, a0, a0), Tensor3(a0, a1, a1), Tensor3(a1, a0, a1)),
      {f.f0, f.f1});
  if (rng.coin()) {
    ChainMapPair g = random_chain_iso(rng, n0, n1);
    auto [h0, h1] = inverses(g);
    alg = assoc_transport(alg, g);
    R = {g.f0 * R.P0 * h0, g.f1 * R.P1 * h1};
  }
  return {alg, R};
}

OperatorPair random_derivation(Rng& rng, const StrictAssoc2Algebra& a) {
  const std::size_t n0 = a.n0(), n1 = a.n1(), nv = n0 * n0 + n1 * n1;
  auto split = [&](const Vec& v) {
    return OperatorPair{Mat(n0, n0, Vec(v.begin(), v.begin() + n0 * n0)),
                        Mat(n1, n1, Vec(v.begin() + n0 * n0, v.end()))};
  };
  auto basis = linear_solutions(nv, [&](const Vec& v) {
    OperatorPair D = split(v);
    Vec res = (D.P0 * a.cx.d - a.cx.d * D.P1).data();
    auto append = [&res](const Vec& x) { res.insert(res.end(), x.begin(), x.end()); };
    for (std::size_t x = 0; x < n0; ++x)
      for (std::size_t y = 0; y < n0; ++y)
        append(D.P0 * a.A00.fiber(x, y) - a.A00.apply(D.P0.col(x), unit(n0, y)) -
               a.A00.apply(unit(n0, x), D.P0.col(y)));
    for (std::size_t x = 0; x < n0; ++x)
      for (std::size_t h = 0; h < n1; ++h)
        append(D.P1 * a.A01.fiber(x, h) - a.A01.apply(D.P0.col(x), unit(n1, h)) -
               a.A01.apply(unit(n0, x), D.P1.col(h)));
    for (std::size_t h = 0; h < n1; ++h)
      for (std::size_t x = 0; x < n0; ++x)
        append(D.P1 * a.A10.fiber(h, x) - a.A10.apply(D.P1.col(h), unit(n0, x)) -
               a.A10.apply(unit(n1, h), D.P0.col(x)));
    return res;
  });
  return split(random_combination(rng, basis, nv, -1, 1));
}

BialgebraInstance random_coboundary_bialgebra(Rng& rng, std::size_t n0, std::size_t n1) {
  OOperatorInstance o = random_o_operator(rng, n0, n1);
  CybeSolution s = solution_from_o_operator(o.g, o.rep, o.t);
  const Mat& d = s.algebra.cx.d;
  Tau tau{random_matrix(rng, s.algebra.n1(), s.algebra.n1(), -1, 1)};
  RElement r{s.R.r01 + d * tau.t, s.R.r10 + tau.t * d.transpose()};
  StrictPreLie2Algebra astar =
      dual_from_cobracket(s.algebra, coboundary_cobracket(s.algebra, r, tau));
  return {s.algebra, astar, r, tau};
}

std::vector<Vec> linear_solutions(std::size_t nvars,
                                  const std::function<Vec(const Vec&)>& residual) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < nvars; ++j) cols.push_back(residual(unit(nvars, j)));
  const std::size_t rows = cols.empty() ? 0 : cols[0].size();
  if (rows == 0) {
    std::vector<Vec> all;
    for (std::size_t j = 0; j < nvars; ++j) all.push_back(unit(nvars, j));
    return all;
  }
  return kernel(Mat::from_columns(cols, rows));
}

Vec random_combination(Rng& rng, const std::vector<Vec>& basis, std::size_t nvars, long lo,
                       long hi) {
  Vec v = zeros(nvars);
  for (const auto& b : basis) v += Rational(rng.range(lo, hi)) * b;
  return v;
}

ChainMapPair random_chain_map(Rng& rng, const TwoTermComplex& c, const TwoTermComplex& cp) {
  const std::size_t s0 = cp.n0 * c.n0, s1 = cp.n1 * c.n1;
  auto split = [&](const Vec& v) {
    Mat f0(cp.n0, c.n0, Vec(v.begin(), v.begin() + s0));
    Mat f1(cp.n1, c.n1, Vec(v.begin() + s0, v.end()));
    return ChainMapPair{f0, f1};
  };
  auto basis = linear_solutions(s0 + s1, [&](const Vec& v) {
    ChainMapPair f = split(v);
    return (f.f0 * c.d - cp.d * f.f1).data();
  });
  return split(random_combination(rng, basis, s0 + s1, -1, 1));
}

}  // namespace l2b
