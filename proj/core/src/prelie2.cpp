#include "l2b/prelie2.hpp"

#include "l2b/errors.hpp"
#include "l2b/lie2.hpp"

namespace l2b {

Report verify_prelie2(const StrictPreLie2Algebra& a) {
  const std::size_t n0 = a.n0(), n1 = a.n1();
  const Mat& d = a.cx.d;
  Report r;
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t b = 0; b < n1; ++b)
      r.check("a1", {x, b}, d * a.M01.fiber(x, b) - a.mul00(unit(n0, x), d.col(b)));
  for (std::size_t b = 0; b < n1; ++b)
    for (std::size_t x = 0; x < n0; ++x)
      r.check("a2", {b, x}, d * a.M10.fiber(b, x) - a.mul00(d.col(b), unit(n0, x)));
  for (std::size_t p = 0; p < n1; ++p)
    for (std::size_t q = 0; q < n1; ++q)
      r.check("a3", {p, q}, a.mul01(d.col(p), unit(n1, q)) - a.mul10(unit(n1, p), d.col(q)));
  for (std::size_t x0 = 0; x0 < n0; ++x0)
    for (std::size_t x1 = 0; x1 < n0; ++x1)
      for (std::size_t x2 = 0; x2 < n0; ++x2) {
        Vec e0 = unit(n0, x0), e1 = unit(n0, x1), e2 = unit(n0, x2);
        r.check("b1", {x0, x1, x2},
                a.mul00(e0, a.M00.fiber(x1, x2)) - a.mul00(a.M00.fiber(x0, x1), e2) -
                    a.mul00(e1, a.M00.fiber(x0, x2)) + a.mul00(a.M00.fiber(x1, x0), e2));
      }
  for (std::size_t x0 = 0; x0 < n0; ++x0)
    for (std::size_t x1 = 0; x1 < n0; ++x1)
      for (std::size_t b = 0; b < n1; ++b) {
        Vec e0 = unit(n0, x0), e1 = unit(n0, x1), eb = unit(n1, b);
        r.check("b2", {x0, x1, b},
                a.mul01(e0, a.M01.fiber(x1, b)) - a.mul01(a.M00.fiber(x0, x1), eb) -
                    a.mul01(e1, a.M01.fiber(x0, b)) + a.mul01(a.M00.fiber(x1, x0), eb));
      }
  for (std::size_t b = 0; b < n1; ++b)
    for (std::size_t x1 = 0; x1 < n0; ++x1)
      for (std::size_t x2 = 0; x2 < n0; ++x2) {
        Vec eb = unit(n1, b), e1 = unit(n0, x1), e2 = unit(n0, x2);
        r.check("b3", {b, x1, x2},
                a.mul10(eb, a.M00.fiber(x1, x2)) - a.mul10(a.M10.fiber(b, x1), e2) -
                    a.mul01(e1, a.M10.fiber(b, x2)) + a.mul10(a.M01.fiber(x1, b), e2));
      }
  return r;
}

StrictLie2Algebra commutator_lie2(const StrictPreLie2Algebra& a) {
  const std::size_t n0 = a.n0(), n1 = a.n1();
  Tensor3 L00(n0, n0, n0), L01(n0, n1, n1);
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j)
      for (std::size_t k = 0; k < n0; ++k) L00(i, j, k) = a.M00(i, j, k) - a.M00(j, i, k);
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < n1; ++k) L01(i, j, k) = a.M01(i, j, k) - a.M10(j, i, k);
  return StrictLie2Algebra(a.cx, L00, L01);
}

StrictLie2Algebra subadjacent(const StrictPreLie2Algebra& a) {
  if (!verify_prelie2(a).pass())
    throw InvalidInput("subadjacent: not a strict pre-Lie 2-algebra");
  return commutator_lie2(a);
}

Rep2 left_rep(const StrictPreLie2Algebra& a) {
  Rep2 r;
  r.V = a.cx;
  for (std::size_t i = 0; i < a.n0(); ++i) {
    r.A.push_back(a.M00.left_mult(unit(a.n0(), i)));
    r.B.push_back(a.M01.left_mult(unit(a.n0(), i)));
  }
  for (std::size_t j = 0; j < a.n1(); ++j) r.C.push_back(a.M10.left_mult(unit(a.n1(), j)));
  return r;
}

namespace {

void check_same_complex(const PreLieRep2& r) {
  if (r.rho.V != r.mu.V) throw ShapeError("pre-Lie representation: rho and mu on different complexes");
}

Rep2 difference(const Rep2& x, const Rep2& y) {
  Rep2 out;
  out.V = x.V;
  for (std::size_t i = 0; i < x.A.size(); ++i) {
    out.A.push_back(x.A[i] - y.A[i]);
    out.B.push_back(x.B[i] - y.B[i]);
  }
  for (std::size_t j = 0; j < x.C.size(); ++j) out.C.push_back(x.C[j] - y.C[j]);
  return out;
}

// X -> -X^T blockwise onto the dual complex; degree-0 blocks swap places.
Rep2 star(const Rep2& r) {
  Rep2 out;
  out.V = dual_complex(r.V);
  for (std::size_t i = 0; i < r.A.size(); ++i) {
    out.A.push_back(-r.B[i].transpose());
    out.B.push_back(-r.A[i].transpose());
  }
  for (const auto& c : r.C) out.C.push_back(-c.transpose());
  return out;
}

Rep2 negate(const Rep2& r) {
  Rep2 out = r;
  for (auto& m : out.A) m = -m;
  for (auto& m : out.B) m = -m;
  for (auto& m : out.C) m = -m;
  return out;
}

}  // namespace

Report verify_prelie_rep2(const StrictPreLie2Algebra& a, const PreLieRep2& R) {
  check_same_complex(R);
  const std::size_t n0 = a.n0(), n1 = a.n1();
  const Rep2& rho = R.rho;
  const Rep2& mu = R.mu;
  Report out;
  // verify_rep2 throws on malformed shapes, so mu is shape-checked here.
  verify_rep2(StrictLie2Algebra::abelian(a.cx), mu);
  for (auto v : verify_rep2(commutator_lie2(a), rho).violations) {
    v.law = "rho:" + v.law;
    out.violations.push_back(std::move(v));
  }
  const Mat& D = rho.V.d;
  const Mat& d = a.cx.d;
  for (std::size_t i = 0; i < n0; ++i) out.check("mu-end-chain", {i}, mu.A[i] * D - D * mu.B[i]);
  for (std::size_t j = 0; j < n1; ++j) {
    out.check("mu-chain-v0", {j}, mu.A_of(d.col(j)) - D * mu.C[j]);
    out.check("mu-chain-v1", {j}, mu.B_of(d.col(j)) - mu.C[j] * D);
  }
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t y = 0; y < n0; ++y) {
      Vec xy = a.M00.fiber(x, y);
      out.check("rep1-v0", {x, y},
                mu.A_of(xy) + mu.A[y] * rho.A[x] - rho.A[x] * mu.A[y] - mu.A[y] * mu.A[x]);
      out.check("rep1-v1", {x, y},
                mu.B_of(xy) + mu.B[y] * rho.B[x] - rho.B[x] * mu.B[y] - mu.B[y] * mu.B[x]);
    }
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t b = 0; b < n1; ++b)
      out.check("rep2", {x, b},
                mu.C_of(a.M01.fiber(x, b)) - rho.B[x] * mu.C[b] + mu.C[b] * rho.A[x] -
                    mu.C[b] * mu.A[x]);
  for (std::size_t b = 0; b < n1; ++b)
    for (std::size_t x = 0; x < n0; ++x)
      out.check("rep3", {b, x},
                mu.C_of(a.M10.fiber(b, x)) - rho.C[b] * mu.A[x] + mu.B[x] * rho.C[b] -
                    mu.B[x] * mu.C[b]);
  return out;
}

Rep2 rep_to_lie_rep(const StrictPreLie2Algebra& a, const PreLieRep2& r) {
  if (!verify_prelie_rep2(a, r).pass())
    throw InvalidInput("rep_to_lie_rep: not a representation");
  return difference(r.rho, r.mu);
}

PreLieRep2 dual_prelie_rep(const StrictPreLie2Algebra& a, const PreLieRep2& r) {
  check_same_complex(r);
  verify_rep2(StrictLie2Algebra::abelian(a.cx), r.rho);
  verify_rep2(StrictLie2Algebra::abelian(a.cx), r.mu);
  return {star(difference(r.rho, r.mu)), negate(star(r.mu))};
}

PreLieRep2 regular_rep(const StrictPreLie2Algebra& a) {
  PreLieRep2 out;
  out.rho = left_rep(a);
  Rep2& mu = out.mu;
  mu.V = a.cx;
  for (std::size_t i = 0; i < a.n0(); ++i) {
    mu.A.push_back(a.M00.right_mult(unit(a.n0(), i)));
    mu.B.push_back(a.M10.right_mult(unit(a.n0(), i)));
  }
  for (std::size_t j = 0; j < a.n1(); ++j) mu.C.push_back(a.M01.right_mult(unit(a.n1(), j)));
  return out;
}

PreLieRep2 coregular_rep(const StrictPreLie2Algebra& a) {
  // Dual complex: degree 0 is (A1)*, degree -1 is (A0)*.
  const std::size_t n0 = a.n0(), n1 = a.n1();
  PreLieRep2 out;
  out.rho.V = out.mu.V = dual_complex(a.cx);
  for (std::size_t i = 0; i < n0; ++i) {
    Vec e = unit(n0, i);
    Mat L1 = a.M01.left_mult(e), R1 = a.M10.right_mult(e);
    Mat L0 = a.M00.left_mult(e), R0 = a.M00.right_mult(e);
    // ad* = L* - R* with X* = -X^T; -R* = R^T.
    out.rho.A.push_back(R1.transpose() - L1.transpose());
    out.rho.B.push_back(R0.transpose() - L0.transpose());
    out.mu.A.push_back(R1.transpose());
    out.mu.B.push_back(R0.transpose());
  }
  for (std::size_t j = 0; j < n1; ++j) {
    Vec f = unit(n1, j);
    Mat L = a.M10.left_mult(f), R = a.M01.right_mult(f);
    out.rho.C.push_back(R.transpose() - L.transpose());
    out.mu.C.push_back(R.transpose());
  }
  return out;
}

StrictPreLie2Algebra semidirect_prelie2(const StrictPreLie2Algebra& a, const PreLieRep2& R) {
  if (!verify_prelie_rep2(a, R).pass())
    throw InvalidInput("semidirect_prelie2: not a representation");
  const Rep2& rho = R.rho;
  const Rep2& mu = R.mu;
  const std::size_t n0 = a.n0(), n1 = a.n1(), m0 = rho.m0(), m1 = rho.m1();
  const std::size_t N0 = n0 + m0, N1 = n1 + m1;
  Mat d(N0, N1);
  put_block(d, 0, 0, a.cx.d);
  put_block(d, n0, n1, rho.V.d);
  Tensor3 M00(N0, N0, N0), M01(N0, N1, N1), M10(N1, N0, N1);
  // (x+u)*(y+v) = x.y + rho0(x)v + mu0(y)u.
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t y = 0; y < n0; ++y)
      for (std::size_t k = 0; k < n0; ++k) M00(x, y, k) = a.M00(x, y, k);
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t v = 0; v < m0; ++v)
      for (std::size_t k = 0; k < m0; ++k) {
        M00(x, n0 + v, n0 + k) = rho.A[x](k, v);
        M00(n0 + v, x, n0 + k) = mu.A[x](k, v);
      }
  // (x+u)*(b+m) = x.b + rho0(x)m + mu1(b)u.
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t b = 0; b < n1; ++b)
      for (std::size_t k = 0; k < n1; ++k) M01(x, b, k) = a.M01(x, b, k);
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t m = 0; m < m1; ++m)
      for (std::size_t k = 0; k < m1; ++k) M01(x, n1 + m, n1 + k) = rho.B[x](k, m);
  for (std::size_t u = 0; u < m0; ++u)
    for (std::size_t b = 0; b < n1; ++b)
      for (std::size_t k = 0; k < m1; ++k) M01(n0 + u, b, n1 + k) = mu.C[b](k, u);
  // (b+m)*(y+v) = b.y + rho1(b)v + mu0(y)m.
  for (std::size_t b = 0; b < n1; ++b)
    for (std::size_t y = 0; y < n0; ++y)
      for (std::size_t k = 0; k < n1; ++k) M10(b, y, k) = a.M10(b, y, k);
  for (std::size_t b = 0; b < n1; ++b)
    for (std::size_t v = 0; v < m0; ++v)
      for (std::size_t k = 0; k < m1; ++k) M10(b, n0 + v, n1 + k) = rho.C[b](k, v);
  for (std::size_t m = 0; m < m1; ++m)
    for (std::size_t y = 0; y < n0; ++y)
      for (std::size_t k = 0; k < m1; ++k) M10(n1 + m, y, n1 + k) = mu.B[y](k, m);
  StrictPreLie2Algebra out(TwoTermComplex(N0, N1, d), M00, M01, M10);
  if (!verify_prelie2(out).pass())
    throw CheckFailed("semidirect_prelie2: output is not a strict pre-Lie 2-algebra");
  return out;
}

PreLieAlgebra collapse(const StrictPreLie2Algebra& a) {
  if (!verify_prelie2(a).pass()) throw InvalidInput("collapse: not a strict pre-Lie 2-algebra");
  const std::size_t n0 = a.n0(), n1 = a.n1(), N = n0 + n1;
  Tensor3 M(N, N, N);
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j)
      for (std::size_t k = 0; k < n0; ++k) M(i, j, k) = a.M00(i, j, k);
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < n1; ++k) {
        M(i, n0 + j, n0 + k) = a.M01(i, j, k);
        M(n0 + j, i, n0 + k) = a.M10(j, i, k);
      }
  return PreLieAlgebra(M);
}

Report verify_prelie(const PreLieAlgebra& p) {
  const std::size_t n = p.n;
  Report r;
  auto assoc = [&](std::size_t x, std::size_t y, std::size_t z) {
    return p.mul(p.M.fiber(x, y), unit(n, z)) - p.mul(unit(n, x), p.M.fiber(y, z));
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        r.check("left-symmetry", {x, y, z}, assoc(x, y, z) - assoc(y, x, z));
  return r;
}

namespace {

Mat combo(const std::vector<Mat>& ms, const Vec& c, std::size_t dim) {
  Mat out(dim, dim);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) out += c[i] * ms[i];
  return out;
}

std::size_t rep_dim(const PreLieAlgebra& p, const std::vector<Mat>& rho, const std::vector<Mat>& mu) {
  if (rho.size() != p.n || mu.size() != p.n)
    throw ShapeError("pre-Lie representation: one matrix per basis element required");
  std::size_t m = p.n == 0 ? 0 : rho[0].rows();
  for (const auto* v : {&rho, &mu})
    for (const auto& a : *v)
      if (a.rows() != m || a.cols() != m) throw ShapeError("pre-Lie representation: matrix shape");
  return m;
}

}  // namespace

Report prelie_rep_check(const PreLieAlgebra& p, const std::vector<Mat>& rho,
                        const std::vector<Mat>& mu) {
  const std::size_t m = rep_dim(p, rho, mu);
  Report r;
  for (std::size_t x = 0; x < p.n; ++x)
    for (std::size_t y = 0; y < p.n; ++y) {
      Vec br = p.M.fiber(x, y) - p.M.fiber(y, x);
      r.check("rho-bracket", {x, y}, combo(rho, br, m) - commutator(rho[x], rho[y]));
      r.check("rep", {x, y},
              rho[x] * mu[y] - mu[y] * rho[x] - combo(mu, p.M.fiber(x, y), m) + mu[y] * mu[x]);
    }
  return r;
}

PreLieCochain::PreLieCochain(std::size_t n_, std::size_t m_, std::size_t arity_)
    : n(n_), m(m_), arity(arity_) {
  std::size_t s = m;
  for (std::size_t i = 0; i < arity; ++i) s *= n;
  data.assign(s, Rational(0));
}

std::size_t PreLieCochain::offset(const std::vector<std::size_t>& xs) const {
  std::size_t f = 0;
  for (auto x : xs) f = f * n + x;
  return f * m;
}

namespace {

// phi evaluated on general vectors, multilinearly.
Vec eval(const PreLieCochain& phi, const std::vector<Vec>& args) {
  Vec out = zeros(phi.m);
  std::vector<std::size_t> idx(args.size());
  auto rec = [&](auto&& self, std::size_t pos, const Rational& c) -> void {
    if (pos == args.size()) {
      std::size_t off = phi.offset(idx);
      for (std::size_t v = 0; v < phi.m; ++v) out[v] += c * phi.data[off + v];
      return;
    }
    for (std::size_t i = 0; i < phi.n; ++i) {
      if (args[pos][i] == 0) continue;
      idx[pos] = i;
      self(self, pos + 1, c * args[pos][i]);
    }
  };
  rec(rec, 0, Rational(1));
  return out;
}

Rational alt(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

PreLieCochain prelie_delta(const PreLieAlgebra& p, const std::vector<Mat>& rho,
                           const std::vector<Mat>& mu, const PreLieCochain& phi) {
  const std::size_t m = rep_dim(p, rho, mu);
  if (phi.n != p.n || phi.m != m) throw ShapeError("prelie_delta: cochain dimensions");
  if (phi.arity < 1) throw ShapeError("prelie_delta: arity must be at least 1");
  const std::size_t n = phi.arity, N = p.n;
  PreLieCochain out(N, m, n + 1);
  std::vector<std::size_t> xs(n + 1);
  const std::size_t total = out.data.size() / (m == 0 ? 1 : m);
  for (std::size_t flat = 0; flat < (m == 0 ? 0 : total); ++flat) {
    std::size_t rest = flat;
    for (std::size_t k = n + 1; k-- > 0;) {
      xs[k] = rest % N;
      rest /= N;
    }
    std::vector<Vec> e;
    for (auto x : xs) e.push_back(unit(N, x));
    Vec acc = zeros(m);
    // 0-based i here is 1-based i+1 in the sign (-1)^{i+1}.
    for (std::size_t i = 0; i < n; ++i) {
      const Rational s = alt(i);
      std::vector<Vec> drop;
      for (std::size_t k = 0; k <= n; ++k)
        if (k != i) drop.push_back(e[k]);
      acc += s * (rho[xs[i]] * eval(phi, drop));
      std::vector<Vec> moved;
      for (std::size_t k = 0; k < n; ++k)
        if (k != i) moved.push_back(e[k]);
      moved.push_back(e[i]);
      acc += s * (mu[xs[n]] * eval(phi, moved));
      moved.back() = p.M.fiber(xs[i], xs[n]);
      acc -= s * eval(phi, moved);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        std::vector<Vec> args{p.M.fiber(xs[i], xs[j]) - p.M.fiber(xs[j], xs[i])};
        for (std::size_t k = 0; k <= n; ++k)
          if (k != i && k != j) args.push_back(e[k]);
        acc += alt(i + j) * eval(phi, args);
      }
    for (std::size_t v = 0; v < m; ++v) out.data[flat * m + v] = acc[v];
  }
  return out;
}

StrictPreLie2Algebra prelie_from_o_operator(const StrictLie2Algebra& g, const Rep2& r,
                                            const ChainMapPair& t) {
  if (!o_operator_check(g, r, t).pass())
    throw CheckFailed("prelie_from_o_operator: T is not an O-operator");
  const std::size_t m0 = r.m0(), m1 = r.m1();
  Tensor3 M00(m0, m0, m0), M01(m0, m1, m1), M10(m1, m0, m1);
  for (std::size_t u = 0; u < m0; ++u) {
    Mat A = r.A_of(t.f0.col(u)), B = r.B_of(t.f0.col(u));
    for (std::size_t v = 0; v < m0; ++v)
      for (std::size_t k = 0; k < m0; ++k) M00(u, v, k) = A(k, v);
    for (std::size_t w = 0; w < m1; ++w)
      for (std::size_t k = 0; k < m1; ++k) M01(u, w, k) = B(k, w);
  }
  for (std::size_t w = 0; w < m1; ++w) {
    Mat C = r.C_of(t.f1.col(w));
    for (std::size_t u = 0; u < m0; ++u)
      for (std::size_t k = 0; k < m1; ++k) M10(w, u, k) = C(k, u);
  }
  StrictPreLie2Algebra out(r.V, M00, M01, M10);
  if (!verify_prelie2(out).pass())
    throw CheckFailed("prelie_from_o_operator: output is not a strict pre-Lie 2-algebra");
  return out;
}

}  // namespace l2b
