#include "l2b/lie2.hpp"

#include "l2b/errors.hpp"

namespace l2b {

Report verify_lie2(const StrictLie2Algebra& g) {
  const std::size_t n0 = g.n0(), n1 = g.n1();
  const Mat& d = g.cx.d;
  Report r;
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t h = 0; h < n1; ++h)
      r.check("i-a", {x, h}, d * g.L01.fiber(x, h) - g.br00(unit(n0, x), d.col(h)));
  for (std::size_t h = 0; h < n1; ++h)
    for (std::size_t k = 0; k < n1; ++k)
      r.check("i-b", {h, k}, g.br01(d.col(h), unit(n1, k)) + g.br01(d.col(k), unit(n1, h)));
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t y = 0; y < n0; ++y)
      for (std::size_t z = 0; z < n0; ++z) {
        Vec ex = unit(n0, x), ey = unit(n0, y), ez = unit(n0, z);
        r.check("jacobi", {x, y, z},
                g.br00(ex, g.L00.fiber(y, z)) + g.br00(ey, g.L00.fiber(z, x)) +
                    g.br00(ez, g.L00.fiber(x, y)));
      }
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t y = 0; y < n0; ++y)
      for (std::size_t h = 0; h < n1; ++h) {
        Vec ex = unit(n0, x), ey = unit(n0, y);
        r.check("mixed-jacobi", {x, y, h},
                g.br01(ex, g.L01.fiber(y, h)) - g.br01(ey, g.L01.fiber(x, h)) -
                    g.br01(g.L00.fiber(x, y), unit(n1, h)));
      }
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j)
      r.check("antisymmetry", {i, j}, g.L00.fiber(i, j) + g.L00.fiber(j, i));
  return r;
}

Report check_lie2_homomorphism(const StrictLie2Algebra& g, const StrictLie2Algebra& gp,
                               const ChainMapPair& f) {
  Report r = check_chain_map(g.cx, gp.cx, f);
  for (std::size_t x = 0; x < g.n0(); ++x)
    for (std::size_t y = 0; y < g.n0(); ++y)
      r.check("hom-00", {x, y}, f.f0 * g.L00.fiber(x, y) - gp.br00(f.f0.col(x), f.f0.col(y)));
  for (std::size_t x = 0; x < g.n0(); ++x)
    for (std::size_t h = 0; h < g.n1(); ++h)
      r.check("hom-01", {x, h}, f.f1 * g.L01.fiber(x, h) - gp.br01(f.f0.col(x), f.f1.col(h)));
  return r;
}

namespace {

void check_rep_shapes(const StrictLie2Algebra& g, const Rep2& r) {
  if (r.A.size() != g.n0() || r.B.size() != g.n0() || r.C.size() != g.n1())
    throw ShapeError("representation: wrong number of action matrices");
  for (const auto& a : r.A)
    if (a.rows() != r.m0() || a.cols() != r.m0()) throw ShapeError("representation: A shape");
  for (const auto& b : r.B)
    if (b.rows() != r.m1() || b.cols() != r.m1()) throw ShapeError("representation: B shape");
  for (const auto& c : r.C)
    if (c.rows() != r.m1() || c.cols() != r.m0()) throw ShapeError("representation: C shape");
}

}  // namespace

Report verify_rep2(const StrictLie2Algebra& g, const Rep2& r) {
  check_rep_shapes(g, r);
  const Mat& D = r.V.d;
  const Mat& d = g.cx.d;
  Report rep;
  for (std::size_t i = 0; i < g.n0(); ++i) rep.check("end-chain", {i}, r.A[i] * D - D * r.B[i]);
  for (std::size_t j = 0; j < g.n1(); ++j) {
    rep.check("chain-v0", {j}, r.A_of(d.col(j)) - D * r.C[j]);
    rep.check("chain-v1", {j}, r.B_of(d.col(j)) - r.C[j] * D);
  }
  for (std::size_t i = 0; i < g.n0(); ++i)
    for (std::size_t j = 0; j < g.n0(); ++j) {
      Vec br = g.L00.fiber(i, j);
      rep.check("bracket-00-v0", {i, j}, commutator(r.A[i], r.A[j]) - r.A_of(br));
      rep.check("bracket-00-v1", {i, j}, commutator(r.B[i], r.B[j]) - r.B_of(br));
    }
  for (std::size_t i = 0; i < g.n0(); ++i)
    for (std::size_t j = 0; j < g.n1(); ++j)
      rep.check("bracket-01", {i, j},
                r.C_of(g.L01.fiber(i, j)) - (r.B[i] * r.C[j] - r.C[j] * r.A[i]));
  return rep;
}

Rep2 adjoint_rep(const StrictLie2Algebra& g) {
  Rep2 r;
  r.V = g.cx;
  for (std::size_t i = 0; i < g.n0(); ++i) {
    r.A.push_back(g.L00.left_mult(unit(g.n0(), i)));
    r.B.push_back(g.L01.left_mult(unit(g.n0(), i)));
  }
  for (std::size_t j = 0; j < g.n1(); ++j) r.C.push_back(-g.L01.right_mult(unit(g.n1(), j)));
  return r;
}

Rep2 dual_rep(const StrictLie2Algebra& g, const Rep2& r) {
  check_rep_shapes(g, r);
  Rep2 out;
  out.V = dual_complex(r.V);
  for (std::size_t i = 0; i < g.n0(); ++i) {
    out.A.push_back(-r.B[i].transpose());
    out.B.push_back(-r.A[i].transpose());
  }
  for (std::size_t j = 0; j < g.n1(); ++j) out.C.push_back(-r.C[j].transpose());
  return out;
}

Rep2 coadjoint_rep(const StrictLie2Algebra& g) { return dual_rep(g, adjoint_rep(g)); }

TensorRep tensor_rep(const StrictLie2Algebra& g, const Rep2& rv, const Rep2& rw) {
  check_rep_shapes(g, rv);
  check_rep_shapes(g, rw);
  const std::size_t v0 = rv.m0(), v1 = rv.m1(), w0 = rw.m0(), w1 = rw.m1();
  TensorRep t;
  t.V = tensor_complex(rv.V, rw.V);
  const Mat Iv0 = Mat::identity(v0), Iv1 = Mat::identity(v1);
  const Mat Iw0 = Mat::identity(w0), Iw1 = Mat::identity(w1);
  const std::size_t off = v0 * w1;
  for (std::size_t i = 0; i < g.n0(); ++i) {
    std::array<Mat, 3> m;
    m[0] = kron(rv.A[i], Iw0) + kron(Iv0, rw.A[i]);
    m[1] = Mat(t.V.m1, t.V.m1);
    put_block(m[1], 0, 0, kron(rv.A[i], Iw1) + kron(Iv0, rw.B[i]));
    put_block(m[1], off, off, kron(rv.B[i], Iw0) + kron(Iv1, rw.A[i]));
    m[2] = kron(rv.B[i], Iw1) + kron(Iv1, rw.B[i]);
    t.rho0.push_back(std::move(m));
  }
  for (std::size_t j = 0; j < g.n1(); ++j) {
    std::array<Mat, 2> m;
    // v0 (x) w0 -> C v0 (x) w0 - v0 (x) C w0.
    m[0] = Mat(t.V.m1, t.V.m0);
    put_block(m[0], off, 0, kron(rv.C[j], Iw0));
    put_block(m[0], 0, 0, -kron(Iv0, rw.C[j]));
    // v0 (x) w1 -> C v0 (x) w1 ; v1 (x) w0 -> + v1 (x) C w0.
    m[1] = Mat(t.V.m2, t.V.m1);
    put_block(m[1], 0, 0, kron(rv.C[j], Iw1));
    put_block(m[1], 0, off, kron(Iv1, rw.C[j]));
    t.rho1.push_back(std::move(m));
  }
  return t;
}

Report verify_tensor_rep(const StrictLie2Algebra& g, const TensorRep& t) {
  const Mat& d1 = t.V.d1;
  const Mat& d2 = t.V.d2;
  const Mat& d = g.cx.d;
  auto rho0_of = [&](const Vec& x, int p) {
    std::size_t dim = p == 0 ? t.V.m0 : (p == 1 ? t.V.m1 : t.V.m2);
    Mat m(dim, dim);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != 0) m += x[i] * t.rho0[i][p];
    return m;
  };
  auto rho1_of = [&](const Vec& h, int p) {
    Mat m = p == 0 ? Mat(t.V.m1, t.V.m0) : Mat(t.V.m2, t.V.m1);
    for (std::size_t j = 0; j < h.size(); ++j)
      if (h[j] != 0) m += h[j] * t.rho1[j][p];
    return m;
  };
  Report r;
  for (std::size_t i = 0; i < g.n0(); ++i) {
    r.check("end-chain-1", {i}, t.rho0[i][0] * d1 - d1 * t.rho0[i][1]);
    r.check("end-chain-2", {i}, t.rho0[i][1] * d2 - d2 * t.rho0[i][2]);
  }
  for (std::size_t j = 0; j < g.n1(); ++j) {
    Vec dh = d.col(j);
    r.check("chain-p0", {j}, rho0_of(dh, 0) - d1 * t.rho1[j][0]);
    r.check("chain-p1", {j}, rho0_of(dh, 1) - (d2 * t.rho1[j][1] + t.rho1[j][0] * d1));
    r.check("chain-p2", {j}, rho0_of(dh, 2) - t.rho1[j][1] * d2);
  }
  for (std::size_t i = 0; i < g.n0(); ++i)
    for (std::size_t j = 0; j < g.n0(); ++j)
      for (int p = 0; p < 3; ++p)
        r.check("bracket-00-p" + std::to_string(p), {i, j},
                commutator(t.rho0[i][p], t.rho0[j][p]) - rho0_of(g.L00.fiber(i, j), p));
  for (std::size_t i = 0; i < g.n0(); ++i)
    for (std::size_t j = 0; j < g.n1(); ++j)
      for (int p = 0; p < 2; ++p)
        r.check("bracket-01-p" + std::to_string(p), {i, j},
                rho1_of(g.L01.fiber(i, j), p) -
                    (t.rho0[i][p + 1] * t.rho1[j][p] - t.rho1[j][p] * t.rho0[i][p]));
  for (std::size_t j = 0; j < g.n1(); ++j)
    for (std::size_t k = 0; k < g.n1(); ++k)
      r.check("odd-square", {j, k},
              t.rho1[j][1] * t.rho1[k][0] + t.rho1[k][1] * t.rho1[j][0]);
  return r;
}

StrictLie2Algebra semidirect_lie2(const StrictLie2Algebra& g, const Rep2& r) {
  Report rep = verify_rep2(g, r);
  if (!rep.pass()) throw CheckFailed("semidirect_lie2: not a representation");
  const std::size_t n0 = g.n0(), n1 = g.n1(), m0 = r.m0(), m1 = r.m1();
  Mat d(n0 + m0, n1 + m1);
  put_block(d, 0, 0, g.cx.d);
  put_block(d, n0, n1, r.V.d);
  Tensor3 L00(n0 + m0, n0 + m0, n0 + m0), L01(n0 + m0, n1 + m1, n1 + m1);
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j)
      for (std::size_t k = 0; k < n0; ++k) L00(i, j, k) = g.L00(i, j, k);
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < m0; ++j)
      for (std::size_t k = 0; k < m0; ++k) {
        L00(i, n0 + j, n0 + k) = r.A[i](k, j);
        L00(n0 + j, i, n0 + k) = -r.A[i](k, j);
      }
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < n1; ++k) L01(i, j, k) = g.L01(i, j, k);
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < m1; ++j)
      for (std::size_t k = 0; k < m1; ++k) L01(i, n1 + j, n1 + k) = r.B[i](k, j);
  for (std::size_t u = 0; u < m0; ++u)
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < m1; ++k) L01(n0 + u, j, n1 + k) = -r.C[j](k, u);
  StrictLie2Algebra out(TwoTermComplex(n0 + m0, n1 + m1, d), L00, L01);
  if (!verify_lie2(out).pass()) throw CheckFailed("semidirect_lie2: output is not a Lie 2-algebra");
  return out;
}

Report matched_pair_lie2_check(const StrictLie2Algebra& g, const StrictLie2Algebra& gp,
                               const Rep2& mu, const Rep2& mup) {
  if (mu.V != gp.cx || mup.V != g.cx) throw ShapeError("matched pair: action spaces do not match");
  Report r;
  Report rm = verify_rep2(g, mu), rmp = verify_rep2(gp, mup);
  for (auto v : rm.violations) {
    v.law = "rep-mu:" + v.law;
    r.violations.push_back(std::move(v));
  }
  for (auto v : rmp.violations) {
    v.law = "rep-mup:" + v.law;
    r.violations.push_back(std::move(v));
  }
  const std::size_t n0 = g.n0(), n1 = g.n1(), p0 = gp.n0(), p1 = gp.n1();
  // (1) and (3)/(5) are stated on g; (2), (4), (6) mirror them on g'.
  auto eq_even = [&](const std::string& law, const StrictLie2Algebra& G, const Rep2& M,
                     const Rep2& Mp, std::size_t a0, std::size_t b0) {
    // Mp acts on G; M is the action of G on the other algebra.
    for (std::size_t xp = 0; xp < b0; ++xp)
      for (std::size_t x = 0; x < a0; ++x)
        for (std::size_t y = 0; y < a0; ++y) {
          Vec ex = unit(a0, x), ey = unit(a0, y), exp = unit(b0, xp);
          const Mat& Mx = Mp.A[xp];
          Vec res = Mx * G.L00.fiber(x, y) - G.br00(ex, Mx.col(y)) - G.br00(Mx.col(x), ey) -
                    Mp.A_of(M.A[y] * exp) * ex + Mp.A_of(M.A[x] * exp) * ey;
          r.check(law, {xp, x, y}, res);
        }
  };
  auto eq_odd_h = [&](const std::string& law, const StrictLie2Algebra& G, const Rep2& M,
                      const Rep2& Mp, std::size_t a0, std::size_t b1) {
    for (std::size_t hp = 0; hp < b1; ++hp)
      for (std::size_t x = 0; x < a0; ++x)
        for (std::size_t y = 0; y < a0; ++y) {
          Vec ex = unit(a0, x), ey = unit(a0, y), ehp = unit(b1, hp);
          const Mat& Ch = Mp.C[hp];
          // [mu1'(h')x, y] = -[y, mu1'(h')x].
          Vec res = Ch * G.L00.fiber(x, y) - G.br01(ex, Ch.col(y)) + G.br01(ey, Ch.col(x)) -
                    Mp.C_of(M.B[y] * ehp) * ex + Mp.C_of(M.B[x] * ehp) * ey;
          r.check(law, {hp, x, y}, res);
        }
  };
  auto eq_mixed = [&](const std::string& law, const StrictLie2Algebra& G, const Rep2& M,
                      const Rep2& Mp, std::size_t a0, std::size_t a1, std::size_t b0) {
    for (std::size_t xp = 0; xp < b0; ++xp)
      for (std::size_t x = 0; x < a0; ++x)
        for (std::size_t h = 0; h < a1; ++h) {
          Vec ex = unit(a0, x), eh = unit(a1, h), exp = unit(b0, xp);
          Vec res = Mp.B[xp] * G.L01.fiber(x, h) - G.br01(ex, Mp.B[xp].col(h)) -
                    G.br01(Mp.A[xp].col(x), eh) - Mp.C_of(M.C[h] * exp) * ex +
                    Mp.B_of(M.A[x] * exp) * eh;
          r.check(law, {xp, x, h}, res);
        }
  };
  eq_even("mp-1", g, mu, mup, n0, p0);
  eq_even("mp-2", gp, mup, mu, p0, n0);
  eq_odd_h("mp-3", g, mu, mup, n0, p1);
  eq_odd_h("mp-4", gp, mup, mu, p0, n1);
  eq_mixed("mp-5", g, mu, mup, n0, n1, p0);
  eq_mixed("mp-6", gp, mup, mu, p0, p1, n0);
  return r;
}

StrictLie2Algebra matched_pair_lie2_assemble(const StrictLie2Algebra& g,
                                             const StrictLie2Algebra& gp, const Rep2& mu,
                                             const Rep2& mup, bool checked) {
  if (checked && !matched_pair_lie2_check(g, gp, mu, mup).pass())
    throw CheckFailed("matched_pair_lie2_assemble: not a matched pair");
  const std::size_t n0 = g.n0(), n1 = g.n1(), p0 = gp.n0(), p1 = gp.n1();
  const std::size_t N0 = n0 + p0, N1 = n1 + p1;
  Mat d(N0, N1);
  put_block(d, 0, 0, g.cx.d);
  put_block(d, n0, n1, gp.cx.d);
  Tensor3 L00(N0, N0, N0), L01(N0, N1, N1);
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j)
      for (std::size_t k = 0; k < n0; ++k) L00(i, j, k) = g.L00(i, j, k);
  for (std::size_t i = 0; i < p0; ++i)
    for (std::size_t j = 0; j < p0; ++j)
      for (std::size_t k = 0; k < p0; ++k) L00(n0 + i, n0 + j, n0 + k) = gp.L00(i, j, k);
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t yp = 0; yp < p0; ++yp) {
      // [x, y'] = mu0(x)y' - mu0'(y')x ; [y', x] is its negative.
      for (std::size_t k = 0; k < p0; ++k) {
        L00(x, n0 + yp, n0 + k) += mu.A[x](k, yp);
        L00(n0 + yp, x, n0 + k) -= mu.A[x](k, yp);
      }
      for (std::size_t k = 0; k < n0; ++k) {
        L00(x, n0 + yp, k) -= mup.A[yp](k, x);
        L00(n0 + yp, x, k) += mup.A[yp](k, x);
      }
    }
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < n1; ++k) L01(i, j, k) = g.L01(i, j, k);
  for (std::size_t i = 0; i < p0; ++i)
    for (std::size_t j = 0; j < p1; ++j)
      for (std::size_t k = 0; k < p1; ++k) L01(n0 + i, n1 + j, n1 + k) = gp.L01(i, j, k);
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t hp = 0; hp < p1; ++hp) {
      // [x, h'] = mu0(x)h' - mu1'(h')x.
      for (std::size_t k = 0; k < p1; ++k) L01(x, n1 + hp, n1 + k) += mu.B[x](k, hp);
      for (std::size_t k = 0; k < n1; ++k) L01(x, n1 + hp, k) -= mup.C[hp](k, x);
    }
  for (std::size_t xp = 0; xp < p0; ++xp)
    for (std::size_t h = 0; h < n1; ++h) {
      // [x', h] = -mu1(h)x' + mu0'(x')h.
      for (std::size_t k = 0; k < p1; ++k) L01(n0 + xp, h, n1 + k) -= mu.C[h](k, xp);
      for (std::size_t k = 0; k < n1; ++k) L01(n0 + xp, h, k) += mup.B[xp](k, h);
    }
  StrictLie2Algebra out(TwoTermComplex(N0, N1, d), L00, L01);
  if (checked && !verify_lie2(out).pass())
    throw CheckFailed("matched_pair_lie2_assemble: output is not a Lie 2-algebra");
  return out;
}

Report o_operator_check(const StrictLie2Algebra& g, const Rep2& r, const ChainMapPair& t) {
  check_rep_shapes(g, r);
  if (!is_chain_map(r.V, g.cx, t)) throw NotChainMap("O-operator: T is not a chain map");
  const std::size_t m0 = r.m0(), m1 = r.m1();
  Report rep;
  for (std::size_t u = 0; u < m0; ++u)
    for (std::size_t v = 0; v < m0; ++v) {
      Vec tu = t.f0.col(u), tv = t.f0.col(v);
      Vec inner = r.A_of(tu) * unit(m0, v) - r.A_of(tv) * unit(m0, u);
      rep.check("oop-i", {u, v}, t.f0 * inner - g.br00(tu, tv));
    }
  for (std::size_t m = 0; m < m1; ++m)
    for (std::size_t v = 0; v < m0; ++v) {
      Vec tm = t.f1.col(m), tv = t.f0.col(v);
      Vec inner = r.C_of(tm) * unit(m0, v) - r.B_of(tv) * unit(m1, m);
      // l2(T1 m, T0 v) = -[T0 v, T1 m].
      rep.check("oop-ii", {m, v}, t.f1 * inner + g.br01(tv, tm));
    }
  return rep;
}

}  // namespace l2b
