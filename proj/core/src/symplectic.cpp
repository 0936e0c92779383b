#include <algorithm>

#include "l2b/errors.hpp"
#include "l2b/lie2.hpp"
#include "l2b/prelie2.hpp"

namespace l2b {

Mat total_form(const SymplecticForm& w) {
  const std::size_t n0 = w.omega1.rows(), n1 = w.omega2.cols();
  Mat om(n0 + n1, n0 + n1);
  put_block(om, 0, 0, w.omega1);
  put_block(om, 0, n0, w.omega2);
  put_block(om, n0, 0, -w.omega2.transpose());
  return om;
}

namespace {

void check_form_shape(const StrictLie2Algebra& g, const SymplecticForm& w) {
  if (w.omega1.rows() != g.n0() || w.omega1.cols() != g.n0() || w.omega2.rows() != g.n0() ||
      w.omega2.cols() != g.n1())
    throw ShapeError("symplectic form shape does not match the algebra");
}

Rational pair(const Mat& m, const Vec& u, const Vec& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) s += u[i] * m(i, j) * v[j];
  }
  return s;
}

// Bracket on the collapsed basis [e_0..e_{n0-1}, f_0..f_{n1-1}].
Vec total_bracket(const StrictLie2Algebra& g, std::size_t a, std::size_t b) {
  const std::size_t n0 = g.n0(), n1 = g.n1();
  Vec out = zeros(n0 + n1);
  auto put1 = [&](const Vec& v, const Rational& c) {
    for (std::size_t k = 0; k < n1; ++k) out[n0 + k] += c * v[k];
  };
  if (a < n0 && b < n0) {
    Vec v = g.L00.fiber(a, b);
    std::copy(v.begin(), v.end(), out.begin());
  } else if (a < n0) {
    put1(g.L01.fiber(a, b - n0), 1);
  } else if (b < n0) {
    put1(g.L01.fiber(b, a - n0), -1);
  }
  return out;
}

}  // namespace

Report symplectic_check(const StrictLie2Algebra& g, const SymplecticForm& w) {
  check_form_shape(g, w);
  const std::size_t n0 = g.n0(), n1 = g.n1();
  const Mat& w1 = w.omega1;
  const Mat& w2 = w.omega2;
  const Mat& d = g.cx.d;
  Report r;
  r.check("skew", {}, w1 + w1.transpose());
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t y = 0; y < n0; ++y)
      for (std::size_t z = 0; z < n0; ++z) {
        Vec ex = unit(n0, x), ey = unit(n0, y), ez = unit(n0, z);
        Rational v = pair(w1, g.L00.fiber(x, y), ez) + pair(w1, g.L00.fiber(y, z), ex) +
                     pair(w1, g.L00.fiber(z, x), ey);
        r.check("closed1", {x, y, z}, Vec{v});
      }
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t y = 0; y < n0; ++y)
      for (std::size_t h = 0; h < n1; ++h) {
        Vec ex = unit(n0, x), ey = unit(n0, y), eh = unit(n1, h);
        Rational v = pair(w2, g.L00.fiber(x, y), eh) + pair(w2, ey, g.L01.fiber(x, h)) -
                     pair(w2, ex, g.L01.fiber(y, h));
        r.check("closed2", {x, y, h}, Vec{v});
      }
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t h = 0; h < n1; ++h)
      r.check("closed3a", {x, h}, Vec{pair(w1, unit(n0, x), d.col(h))});
  // omega(h, dk) - omega(dh, k) with omega(h, y) = -omega2(y, h).
  for (std::size_t h = 0; h < n1; ++h)
    for (std::size_t k = 0; k < n1; ++k)
      r.check("closed3b", {h, k},
              Vec{-pair(w2, d.col(k), unit(n1, h)) - pair(w2, d.col(h), unit(n1, k))});
  bool closed = r.violations.empty() ||
                std::all_of(r.violations.begin(), r.violations.end(),
                            [](const Violation& v) { return v.law == "skew"; });
  std::size_t rk = rank(total_form(w));
  if (rk != n0 + n1) r.fail("nondegenerate", {}, Vec{Rational(static_cast<long>(rk))});
  r.flags["closed"] = closed;
  r.flags["nondegenerate"] = rk == n0 + n1;
  return r;
}

StrictPreLie2Algebra prelie_from_symplectic(const StrictLie2Algebra& g, const SymplecticForm& w) {
  if (!symplectic_check(g, w).pass())
    throw CheckFailed("prelie_from_symplectic: form is not symplectic on this algebra");
  const std::size_t n0 = g.n0(), n1 = g.n1(), N = n0 + n1;
  const Mat om = total_form(w);
  auto deg = [&](std::size_t b) { return b < n0 ? 0 : 1; };
  StrictPreLie2Algebra out = StrictPreLie2Algebra::abelian(g.cx);
  // Unknown u*v lives in internal grade deg(u)+deg(v); its coordinates c
  // satisfy sum_l c_l Omega(b_l, w) = (-1)^{|v||w|} Omega([u,w], v).
  auto solve_product = [&](std::size_t u, std::size_t v, const char* pair_name) {
    const std::size_t gr = deg(u) + deg(v);
    const std::size_t base = gr == 0 ? 0 : n0, dim = gr == 0 ? n0 : n1;
    Mat a(N, dim);
    Vec b = zeros(N);
    for (std::size_t wi = 0; wi < N; ++wi) {
      for (std::size_t l = 0; l < dim; ++l) a(wi, l) = om(base + l, wi);
      Rational sg = (deg(v) * deg(wi)) % 2 == 0 ? 1 : -1;
      b[wi] = sg * pair(om, total_bracket(g, u, wi), unit(N, v));
    }
    SolveResult res = solve_linear(a, b);
    if (res.status == SolveStatus::inconsistent)
      throw Inconsistent(std::string("prelie_from_symplectic: no product solves the ") +
                         pair_name + " system");
    if (res.status == SolveStatus::underdetermined)
      throw Underdetermined(std::string("prelie_from_symplectic: the ") + pair_name +
                            " system is degenerate");
    return res.x;
  };
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t y = 0; y < n0; ++y) {
      Vec c = solve_product(x, y, "(0,0)");
      for (std::size_t k = 0; k < n0; ++k) out.M00(x, y, k) = c[k];
    }
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t a = 0; a < n1; ++a) {
      Vec c = solve_product(x, n0 + a, "(0,-1)");
      for (std::size_t k = 0; k < n1; ++k) out.M01(x, a, k) = c[k];
      c = solve_product(n0 + a, x, "(-1,0)");
      for (std::size_t k = 0; k < n1; ++k) out.M10(a, x, k) = c[k];
    }
  if (!verify_prelie2(out).pass())
    throw CheckFailed("prelie_from_symplectic: output is not a strict pre-Lie 2-algebra");
  return out;
}

Report lagrangian_check(const StrictLie2Algebra& g, const SymplecticForm& w,
                        const GradedSubspace& h) {
  check_form_shape(g, w);
  const std::size_t n0 = g.n0(), n1 = g.n1(), N = n0 + n1;
  for (const auto& v : h.span0)
    if (v.size() != n0) throw ShapeError("lagrangian_check: degree-0 vector length");
  for (const auto& v : h.span1)
    if (v.size() != n1) throw ShapeError("lagrangian_check: degree -1 vector length");
  const std::size_t k0 = h.span0.size(), k1 = h.span1.size();
  Mat s0 = Mat::from_columns(h.span0, n0), s1 = Mat::from_columns(h.span1, n1);
  if (rank(s0) != k0 || rank(s1) != k1)
    throw InvalidInput("lagrangian_check: spanning vectors are not independent");
  Report r;
  auto in_span = [](const Mat& s, const Vec& v) {
    Mat aug(s.rows(), s.cols() + 1);
    put_block(aug, 0, 0, s);
    for (std::size_t i = 0; i < v.size(); ++i) aug(i, s.cols()) = v[i];
    return rank(aug) == s.cols();
  };
  for (std::size_t i = 0; i < k0; ++i)
    for (std::size_t j = 0; j < k0; ++j) {
      Vec b = g.br00(h.span0[i], h.span0[j]);
      if (!in_span(s0, b)) r.fail("closed-00", {i, j}, b);
    }
  for (std::size_t i = 0; i < k0; ++i)
    for (std::size_t j = 0; j < k1; ++j) {
      Vec b = g.br01(h.span0[i], h.span1[j]);
      if (!in_span(s1, b)) r.fail("closed-01", {i, j}, b);
    }
  for (std::size_t j = 0; j < k1; ++j) {
    Vec dv = g.cx.d * h.span1[j];
    if (!in_span(s0, dv)) r.fail("closed-d", {j}, dv);
  }
  Mat V(N, k0 + k1);
  put_block(V, 0, 0, s0);
  put_block(V, n0, k0, s1);
  Mat om = total_form(w);
  r.check("isotropic", {}, V.transpose() * om * V);
  // h-perp = {w : Omega(v, w) = 0 for all v in h}.
  std::size_t perp = N - rank(V.transpose() * om);
  if (perp != k0 + k1)
    r.fail("coisotropic", {}, Vec{Rational(static_cast<long>(perp)) - static_cast<long>(k0 + k1)});
  return r;
}

Report parakahler_check(const StrictLie2Algebra& g, const SymplecticForm& w,
                        const GradedSubspace& hp, const GradedSubspace& hm) {
  Report r;
  r.add_part("symplectic", symplectic_check(g, w));
  r.add_part("h+", lagrangian_check(g, w, hp));
  r.add_part("h-", lagrangian_check(g, w, hm));
  const std::size_t n0 = g.n0(), n1 = g.n1();
  std::vector<Vec> all0 = hp.span0, all1 = hp.span1;
  all0.insert(all0.end(), hm.span0.begin(), hm.span0.end());
  all1.insert(all1.end(), hm.span1.begin(), hm.span1.end());
  std::size_t r0 = rank(Mat::from_columns(all0, n0)), r1 = rank(Mat::from_columns(all1, n1));
  if (all0.size() != n0 || r0 != n0)
    r.fail("direct-0", {}, Vec{Rational(static_cast<long>(all0.size())), Rational(static_cast<long>(r0))});
  if (all1.size() != n1 || r1 != n1)
    r.fail("direct-1", {}, Vec{Rational(static_cast<long>(all1.size())), Rational(static_cast<long>(r1))});
  r.flags["special"] = w.omega1.is_zero();
  return r;
}

}  // namespace l2b
