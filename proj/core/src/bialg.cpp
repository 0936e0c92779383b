#include "l2b/bialg.hpp"

#include <array>
#include <string>

#include "l2b/errors.hpp"
#include "l2b/lie2.hpp"
#include "l2b/prelie2.hpp"

namespace l2b {

namespace {

Vec flat(const Mat& m) { return m.data(); }

Vec flat(const MixedTensor& t) {
  Vec v = t.block01.data();
  v.insert(v.end(), t.block10.data().begin(), t.block10.data().end());
  return v;
}

MixedTensor operator-(const MixedTensor& a, const MixedTensor& b) {
  return {a.block01 - b.block01, a.block10 - b.block10};
}

void prefix_into(Report& out, const std::string& prefix, const Report& r) {
  for (auto v : r.all_violations()) {
    v.law = prefix + v.law;
    out.violations.push_back(std::move(v));
  }
}

void require_dual(const StrictPreLie2Algebra& a, const StrictPreLie2Algebra& astar,
                  const char* who) {
  if (astar.cx != dual_complex(a.cx))
    throw ShapeError(std::string(who) + ": second algebra is not on the dual complex");
}

// The action L (x) 1 + 1 (x) ad of the subadjacent algebra on A (x) A,
// restricted to the pieces a cobracket touches.
class TensorAction {
 public:
  explicit TensorAction(const StrictPreLie2Algebra& a) : a_(a), g_(commutator_lie2(a)) {}

  // rho0(x) on A0(x)A1 + A1(x)A0.
  MixedTensor on_mixed(const Vec& x, const MixedTensor& t) const {
    Mat L0 = a_.M00.left_mult(x), L1 = a_.M01.left_mult(x);
    Mat ad0 = g_.L00.left_mult(x), ad1 = g_.L01.left_mult(x);
    return {L0 * t.block01 + t.block01 * ad1.transpose(),
            L1 * t.block10 + t.block10 * ad0.transpose()};
  }
  // rho0(x) on A1(x)A1.
  Mat on_pure(const Vec& x, const Mat& t) const {
    Mat L1 = a_.M01.left_mult(x), ad1 = g_.L01.left_mult(x);
    return L1 * t + t * ad1.transpose();
  }
  // rho1(a) : A0(x)A1 + A1(x)A0 -> A1(x)A1; L1(a) and ad1(a) kill A1 slots.
  Mat lower(const Vec& h, const MixedTensor& t) const {
    Mat La = a_.M10.left_mult(h);
    Mat ada = -g_.L01.right_mult(h);  // x -> [a, x] = -[x, a]
    return La * t.block01 + t.block10 * ada.transpose();
  }
  Vec br00(const Vec& x, const Vec& y) const { return g_.br00(x, y); }
  Vec br01(const Vec& x, const Vec& h) const { return g_.br01(x, h); }

 private:
  const StrictPreLie2Algebra& a_;
  StrictLie2Algebra g_;
};

void check_cobracket_shape(const StrictPreLie2Algebra& a, const Cobracket& cb) {
  const std::size_t n0 = a.n0(), n1 = a.n1();
  bool ok = cb.alpha0.size() == n0 && cb.alpha1.size() == n1;
  for (const auto& t : cb.alpha0)
    ok = ok && t.block01.rows() == n0 && t.block01.cols() == n1 && t.block10.rows() == n1 &&
         t.block10.cols() == n0;
  for (const auto& m : cb.alpha1) ok = ok && m.rows() == n1 && m.cols() == n1;
  if (!ok) throw ShapeError("cobracket shape does not match the algebra");
}

MixedTensor alpha0_of(const Cobracket& cb, const Vec& x, std::size_t n0, std::size_t n1) {
  MixedTensor out{Mat(n0, n1), Mat(n1, n0)};
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) {
      out.block01 += x[i] * cb.alpha0[i].block01;
      out.block10 += x[i] * cb.alpha0[i].block10;
    }
  return out;
}

Mat alpha1_of(const Cobracket& cb, const Vec& h, std::size_t n1) {
  Mat out(n1, n1);
  for (std::size_t j = 0; j < h.size(); ++j)
    if (h[j] != 0) out += h[j] * cb.alpha1[j];
  return out;
}

void linear_conditions(const StrictPreLie2Algebra& a, const Cobracket& cb, Report& r) {
  const std::size_t n0 = a.n0(), n1 = a.n1();
  const Mat& d = a.cx.d;
  for (std::size_t x = 0; x < n0; ++x)
    r.check("closed-i", {x}, d * cb.alpha0[x].block10 - cb.alpha0[x].block01 * d.transpose());
  for (std::size_t b = 0; b < n1; ++b) {
    MixedTensor lhs = alpha0_of(cb, d.col(b), n0, n1);
    MixedTensor rhs{d * cb.alpha1[b], cb.alpha1[b] * d.transpose()};
    r.check("closed-ii", {b}, flat(lhs - rhs));
  }
}

// Structure tensors of the collapsed algebra with no validity gate.
Tensor3 collapsed(const StrictPreLie2Algebra& a) {
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
  return M;
}

Mat total_of(const Mat& W) {
  const std::size_t n0 = W.rows(), n1 = W.cols();
  Mat T(n0 + n1, n0 + n1);
  put_block(T, 0, n0, W);
  put_block(T, n0, 0, -W.transpose());
  return T;
}

Rational bilinear(const Mat& T, const Vec& u, const Vec& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) s += u[i] * T(i, j) * v[j];
  }
  return s;
}

}  // namespace

Report invariant_form_check(const StrictPreLie2Algebra& a, const Mat& W) {
  const std::size_t n0 = a.n0(), n1 = a.n1(), N = n0 + n1;
  if (W.rows() != n0 || W.cols() != n1) throw ShapeError("invariant_form_check: form shape");
  Report r;
  Mat dW = a.cx.d.transpose() * W;  // (a, b) -> omega(da, b)
  for (std::size_t p = 0; p < n1; ++p)
    for (std::size_t q = 0; q < n1; ++q) r.check("invariance-1", {p, q}, Vec{dW(p, q) + dW(q, p)});
  Tensor3 M = collapsed(a);
  Mat T = total_of(W);
  for (std::size_t u = 0; u < N; ++u)
    for (std::size_t v = 0; v < N; ++v)
      for (std::size_t w = 0; w < N; ++w) {
        const Rational s = (v >= n0 && w >= n0) ? -1 : 1;
        Vec uw = M.fiber(u, w) - M.fiber(w, u);
        Rational lhs = bilinear(T, M.fiber(u, v), unit(N, w));
        Rational rhs = s * bilinear(T, uw, unit(N, v));
        r.check("invariance-2", {u, v, w}, Vec{lhs - rhs});
      }
  return r;
}

Report quadratic_check(const StrictPreLie2Algebra& a, const Mat& W) {
  Report r;
  r.add_part("invariant", invariant_form_check(a, W));
  const std::size_t rk = rank(W);
  if (W.rows() != W.cols() || rk < W.rows())
    r.fail("nondegenerate", {}, Vec{Rational(static_cast<long>(W.rows() + W.cols() - 2 * rk))});
  return r;
}

Mat standard_form(std::size_t n0, std::size_t n1) {
  Mat W(n0 + n1, n1 + n0);
  for (std::size_t i = 0; i < n0; ++i) W(i, n1 + i) = -1;  // omega(x, y*) = -<x, y*>
  for (std::size_t j = 0; j < n1; ++j) W(n0 + j, j) = 1;   // omega(a*, b) = <a*, b>
  return W;
}

ManinCandidate manin_standard_assemble(const StrictPreLie2Algebra& a,
                                       const StrictPreLie2Algebra& astar) {
  require_dual(a, astar, "manin_standard_assemble");
  return {matched_pair_prelie2_assemble(a, astar, coregular_rep(a), coregular_rep(astar), false),
          standard_form(a.n0(), a.n1())};
}

Report manin_triple_check(const StrictPreLie2Algebra& a, const StrictPreLie2Algebra& astar) {
  ManinCandidate c = manin_standard_assemble(a, astar);
  const std::size_t n0 = a.n0(), n1 = a.n1();
  Report r;
  r.add_part("algebra", verify_prelie2(c.algebra));
  r.check("isotropic-A", {}, block(c.form, 0, 0, n0, n1));
  r.check("isotropic-A*", {}, block(c.form, n0, n1, n1, n0));
  r.details.emplace_back("invariance", invariant_form_check(c.algebra, c.form));
  return r;
}

Report matched_pair_prelie2_check(const StrictPreLie2Algebra& a, const StrictPreLie2Algebra& ap,
                                  const PreLieRep2& r, const PreLieRep2& rp) {
  if (r.rho.V != ap.cx || rp.rho.V != a.cx)
    throw ShapeError("matched_pair_prelie2_check: actions are not on the partner complexes");
  Report out;
  prefix_into(out, "rep:", verify_prelie_rep2(a, r));
  prefix_into(out, "rep':", verify_prelie_rep2(ap, rp));

  // One side of the compatibility system; the other side swaps roles.
  auto side = [&out](const StrictPreLie2Algebra& A, const StrictPreLie2Algebra& B,
                     const PreLieRep2& R, const PreLieRep2& Rp,
                     const std::array<const char*, 7>& tag) {
    const std::size_t n0 = A.n0(), n1 = A.n1(), p0 = B.n0(), p1 = B.n1();
    auto e = [&](std::size_t i) { return unit(n0, i); };
    auto f = [&](std::size_t j) { return unit(n1, j); };
    auto ep = [&](std::size_t i) { return unit(p0, i); };
    auto fp = [&](std::size_t j) { return unit(p1, j); };
    const Rep2 &rho = R.rho, &mu = R.mu, &rhop = Rp.rho, &mup = Rp.mu;

    for (std::size_t ap_ = 0; ap_ < p1; ++ap_)
      for (std::size_t x = 0; x < n0; ++x)
        for (std::size_t y = 0; y < n0; ++y) {
          const Mat& m = mup.C[ap_];
          Vec lhs = m * (A.M00.fiber(x, y) - A.M00.fiber(y, x));
          Vec rhs = A.mul01(e(x), m * e(y)) - A.mul01(e(y), m * e(x)) +
                    mup.C_of(rho.B[y] * fp(ap_)) * e(x) - mup.C_of(rho.B[x] * fp(ap_)) * e(y);
          out.check(tag[0], {ap_, x, y}, lhs - rhs);
        }
    for (std::size_t z = 0; z < p0; ++z)
      for (std::size_t x = 0; x < n0; ++x)
        for (std::size_t y = 0; y < n0; ++y) {
          const Mat& m = mup.A[z];
          Vec lhs = m * (A.M00.fiber(x, y) - A.M00.fiber(y, x));
          Vec rhs = A.mul00(e(x), m * e(y)) - A.mul00(e(y), m * e(x)) +
                    mup.A_of(rho.A[y] * ep(z)) * e(x) - mup.A_of(rho.A[x] * ep(z)) * e(y);
          out.check(tag[1], {z, x, y}, lhs - rhs);
        }
    for (std::size_t yp = 0; yp < p0; ++yp)
      for (std::size_t x = 0; x < n0; ++x)
        for (std::size_t b = 0; b < n1; ++b) {
          Vec lhs = mup.B[yp] * (A.M01.fiber(x, b) - A.M10.fiber(b, x));
          Vec rhs = A.mul01(e(x), mup.B[yp] * f(b)) - A.mul10(f(b), mup.A[yp] * e(x)) +
                    mup.C_of(rho.C[b] * ep(yp)) * e(x) - mup.B_of(rho.A[x] * ep(yp)) * f(b);
          out.check(tag[2], {yp, x, b}, lhs - rhs);
        }
    for (std::size_t x = 0; x < n0; ++x)
      for (std::size_t yp = 0; yp < p0; ++yp)
        for (std::size_t ap_ = 0; ap_ < p1; ++ap_) {
          Vec lhs = rho.B[x] * B.M01.fiber(yp, ap_);
          Vec rhs = B.mul01((rho.A[x] - mu.A[x]) * ep(yp), fp(ap_)) +
                    rho.B_of(mup.A[yp] * e(x) - rhop.A[yp] * e(x)) * fp(ap_) +
                    B.mul01(ep(yp), rho.B[x] * fp(ap_)) + mu.C_of(mup.C[ap_] * e(x)) * ep(yp);
          out.check(tag[3], {x, yp, ap_}, lhs - rhs);
        }
    for (std::size_t x = 0; x < n0; ++x)
      for (std::size_t ap_ = 0; ap_ < p1; ++ap_)
        for (std::size_t yp = 0; yp < p0; ++yp) {
          Vec lhs = rho.B[x] * B.M10.fiber(ap_, yp);
          Vec rhs = B.mul10((rho.B[x] - mu.B[x]) * fp(ap_), ep(yp)) +
                    rho.C_of(mup.C[ap_] * e(x) - rhop.C[ap_] * e(x)) * ep(yp) +
                    B.mul10(fp(ap_), rho.A[x] * ep(yp)) + mu.B_of(mup.A[yp] * e(x)) * fp(ap_);
          out.check(tag[4], {x, ap_, yp}, lhs - rhs);
        }
    for (std::size_t b = 0; b < n1; ++b)
      for (std::size_t xp = 0; xp < p0; ++xp)
        for (std::size_t yp = 0; yp < p0; ++yp) {
          Vec lhs = rho.C[b] * B.M00.fiber(xp, yp);
          Vec rhs = B.mul10((rho.C[b] - mu.C[b]) * ep(xp), ep(yp)) +
                    rho.C_of(mup.B[xp] * f(b) - rhop.B[xp] * f(b)) * ep(yp) +
                    B.mul01(ep(xp), rho.C[b] * ep(yp)) + mu.C_of(mup.B[yp] * f(b)) * ep(xp);
          out.check(tag[5], {b, xp, yp}, lhs - rhs);
        }
    for (std::size_t x = 0; x < n0; ++x)
      for (std::size_t yp = 0; yp < p0; ++yp)
        for (std::size_t zp = 0; zp < p0; ++zp) {
          Vec lhs = rho.A[x] * B.M00.fiber(yp, zp);
          Vec rhs = B.mul00((rho.A[x] - mu.A[x]) * ep(yp), ep(zp)) +
                    rho.A_of(mup.A[yp] * e(x) - rhop.A[yp] * e(x)) * ep(zp) +
                    B.mul00(ep(yp), rho.A[x] * ep(zp)) + mu.A_of(mup.A[zp] * e(x)) * ep(yp);
          out.check(tag[6], {x, yp, zp}, lhs - rhs);
        }
  };
  side(a, ap, r, rp, {"mp-1", "mp-3", "mp-5", "mp-7", "mp-9", "mp-11", "mp-13"});
  side(ap, a, rp, r, {"mp-2", "mp-4", "mp-6", "mp-8", "mp-10", "mp-12", "mp-14"});
  return out;
}

StrictPreLie2Algebra matched_pair_prelie2_assemble(const StrictPreLie2Algebra& a,
                                                   const StrictPreLie2Algebra& ap,
                                                   const PreLieRep2& R, const PreLieRep2& Rp,
                                                   bool checked) {
  if (checked && !matched_pair_prelie2_check(a, ap, R, Rp).pass())
    throw CheckFailed("matched_pair_prelie2_assemble: not a matched pair");
  if (R.rho.V != ap.cx || Rp.rho.V != a.cx || R.mu.V != ap.cx || Rp.mu.V != a.cx)
    throw ShapeError("matched_pair_prelie2_assemble: actions are not on the partner complexes");
  const std::size_t n0 = a.n0(), n1 = a.n1(), p0 = ap.n0(), p1 = ap.n1();
  const std::size_t N0 = n0 + p0, N1 = n1 + p1;
  const Rep2 &rho = R.rho, &mu = R.mu, &rhop = Rp.rho, &mup = Rp.mu;
  Mat d(N0, N1);
  put_block(d, 0, 0, a.cx.d);
  put_block(d, n0, n1, ap.cx.d);
  Tensor3 M00(N0, N0, N0), M01(N0, N1, N1), M10(N1, N0, N1);

  // (x+x')(y+y') = xy + x'y' + rho0(x)y' + mu0'(y')x + rho0'(x')y + mu0(y)x'.
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j)
      for (std::size_t k = 0; k < n0; ++k) M00(i, j, k) = a.M00(i, j, k);
  for (std::size_t i = 0; i < p0; ++i)
    for (std::size_t j = 0; j < p0; ++j)
      for (std::size_t k = 0; k < p0; ++k) M00(n0 + i, n0 + j, n0 + k) = ap.M00(i, j, k);
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t q = 0; q < p0; ++q) {
      for (std::size_t k = 0; k < p0; ++k) M00(x, n0 + q, n0 + k) = rho.A[x](k, q);
      for (std::size_t k = 0; k < n0; ++k) M00(x, n0 + q, k) = mup.A[q](k, x);
      for (std::size_t k = 0; k < n0; ++k) M00(n0 + q, x, k) = rhop.A[q](k, x);
      for (std::size_t k = 0; k < p0; ++k) M00(n0 + q, x, n0 + k) = mu.A[x](k, q);
    }

  // (x+x')(a+a') = xa + x'a' + rho0(x)a' + mu1'(a')x + rho0'(x')a + mu1(a)x'.
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < n1; ++k) M01(i, j, k) = a.M01(i, j, k);
  for (std::size_t i = 0; i < p0; ++i)
    for (std::size_t j = 0; j < p1; ++j)
      for (std::size_t k = 0; k < p1; ++k) M01(n0 + i, n1 + j, n1 + k) = ap.M01(i, j, k);
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t q = 0; q < p1; ++q) {
      for (std::size_t k = 0; k < p1; ++k) M01(x, n1 + q, n1 + k) = rho.B[x](k, q);
      for (std::size_t k = 0; k < n1; ++k) M01(x, n1 + q, k) = mup.C[q](k, x);
    }
  for (std::size_t p = 0; p < p0; ++p)
    for (std::size_t b = 0; b < n1; ++b) {
      for (std::size_t k = 0; k < n1; ++k) M01(n0 + p, b, k) = rhop.B[p](k, b);
      for (std::size_t k = 0; k < p1; ++k) M01(n0 + p, b, n1 + k) = mu.C[b](k, p);
    }

  // (a+a')(x+x') = ax + a'x' + rho1(a)x' + mu0'(x')a + rho1'(a')x + mu0(x)a'.
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n0; ++j)
      for (std::size_t k = 0; k < n1; ++k) M10(i, j, k) = a.M10(i, j, k);
  for (std::size_t i = 0; i < p1; ++i)
    for (std::size_t j = 0; j < p0; ++j)
      for (std::size_t k = 0; k < p1; ++k) M10(n1 + i, n0 + j, n1 + k) = ap.M10(i, j, k);
  for (std::size_t b = 0; b < n1; ++b)
    for (std::size_t q = 0; q < p0; ++q) {
      for (std::size_t k = 0; k < p1; ++k) M10(b, n0 + q, n1 + k) = rho.C[b](k, q);
      for (std::size_t k = 0; k < n1; ++k) M10(b, n0 + q, k) = mup.B[q](k, b);
    }
  for (std::size_t p = 0; p < p1; ++p)
    for (std::size_t x = 0; x < n0; ++x) {
      for (std::size_t k = 0; k < n1; ++k) M10(n1 + p, x, k) = rhop.C[p](k, x);
      for (std::size_t k = 0; k < p1; ++k) M10(n1 + p, x, n1 + k) = mu.B[x](k, p);
    }
  return StrictPreLie2Algebra(TwoTermComplex(N0, N1, d), M00, M01, M10);
}

Report cocycle_check(const StrictPreLie2Algebra& a, const Cobracket& cb) {
  check_cobracket_shape(a, cb);
  const std::size_t n0 = a.n0(), n1 = a.n1();
  TensorAction act(a);
  Report r;
  linear_conditions(a, cb, r);
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t y = 0; y < n0; ++y) {
      Vec ex = unit(n0, x), ey = unit(n0, y);
      MixedTensor res = act.on_mixed(ex, cb.alpha0[y]) - act.on_mixed(ey, cb.alpha0[x]) -
                        alpha0_of(cb, act.br00(ex, ey), n0, n1);
      r.check("leibniz-iii", {x, y}, flat(res));
    }
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t b = 0; b < n1; ++b) {
      Vec ex = unit(n0, x), fb = unit(n1, b);
      Mat res = act.on_pure(ex, cb.alpha1[b]) - act.lower(fb, cb.alpha0[x]) -
                alpha1_of(cb, act.br01(ex, fb), n1);
      r.check("leibniz-iv", {x, b}, flat(res));
    }
  return r;
}

StrictPreLie2Algebra dual_from_cobracket(const StrictPreLie2Algebra& a, const Cobracket& cb) {
  check_cobracket_shape(a, cb);
  Report closed;
  linear_conditions(a, cb, closed);
  if (!closed.pass()) throw InvalidInput("dual_from_cobracket: cobracket is not closed");
  const std::size_t n0 = a.n0(), n1 = a.n1();
  // The dual has degree 0 = (A1)* (n1) and degree -1 = (A0)* (n0).
  Tensor3 M00(n1, n1, n1), M01(n1, n0, n0), M10(n0, n1, n0);
  for (std::size_t b = 0; b < n1; ++b)
    for (std::size_t c = 0; c < n1; ++c)
      for (std::size_t h = 0; h < n1; ++h) M00(b, c, h) = cb.alpha1[h](b, c);
  for (std::size_t p = 0; p < n1; ++p)
    for (std::size_t i = 0; i < n0; ++i)
      for (std::size_t x = 0; x < n0; ++x) {
        M01(p, i, x) = cb.alpha0[x].block10(p, i);
        M10(i, p, x) = cb.alpha0[x].block01(i, p);
      }
  return StrictPreLie2Algebra(dual_complex(a.cx), M00, M01, M10);
}

Cobracket cobracket_from_dual(const StrictPreLie2Algebra& a, const StrictPreLie2Algebra& astar) {
  require_dual(a, astar, "cobracket_from_dual");
  const std::size_t n0 = a.n0(), n1 = a.n1();
  Cobracket cb;
  cb.alpha0.assign(n0, MixedTensor{Mat(n0, n1), Mat(n1, n0)});
  cb.alpha1.assign(n1, Mat(n1, n1));
  for (std::size_t b = 0; b < n1; ++b)
    for (std::size_t c = 0; c < n1; ++c)
      for (std::size_t h = 0; h < n1; ++h) cb.alpha1[h](b, c) = astar.M00(b, c, h);
  for (std::size_t p = 0; p < n1; ++p)
    for (std::size_t i = 0; i < n0; ++i)
      for (std::size_t x = 0; x < n0; ++x) {
        cb.alpha0[x].block10(p, i) = astar.M01(p, i, x);
        cb.alpha0[x].block01(i, p) = astar.M10(i, p, x);
      }
  return cb;
}

Report bialgebra_check(const StrictPreLie2Algebra& a, const StrictPreLie2Algebra& astar) {
  require_dual(a, astar, "bialgebra_check");
  Report r;
  r.add_part("A", verify_prelie2(a));
  r.add_part("A*", verify_prelie2(astar));
  r.add_part("alpha", cocycle_check(a, cobracket_from_dual(a, astar)));
  r.add_part("beta", cocycle_check(astar, cobracket_from_dual(astar, a)));
  return r;
}

Report equivalences_check(const StrictPreLie2Algebra& a, const StrictPreLie2Algebra& astar) {
  require_dual(a, astar, "equivalences_check");
  const std::size_t n0 = a.n0(), n1 = a.n1();
  StrictLie2Algebra g = commutator_lie2(a), gs = commutator_lie2(astar);
  Rep2 lstar = dual_rep(g, left_rep(a));
  Rep2 lsstar = dual_rep(gs, left_rep(astar));

  // Degree 0 = [A0, (A1)*], degree -1 = [A1, (A0)*].
  StrictLie2Algebra big = matched_pair_lie2_assemble(g, gs, lstar, lsstar, false);
  SymplecticForm w{Mat(n0 + n1, n0 + n1), standard_form(n0, n1)};
  GradedSubspace hp, hm;
  for (std::size_t i = 0; i < n0; ++i) hp.span0.push_back(unit(n0 + n1, i));
  for (std::size_t j = 0; j < n1; ++j) hp.span1.push_back(unit(n1 + n0, j));
  for (std::size_t j = 0; j < n1; ++j) hm.span0.push_back(unit(n0 + n1, n0 + j));
  for (std::size_t i = 0; i < n0; ++i) hm.span1.push_back(unit(n1 + n0, n1 + i));
  Report pk;
  pk.add_part("lie2", verify_lie2(big));
  pk.add_part("para-kahler", parakahler_check(big, w, hp, hm));

  std::array<std::pair<const char*, Report>, 4> verdicts{{
      {"para-kahler", std::move(pk)},
      {"lie2-matched-pair", matched_pair_lie2_check(g, gs, lstar, lsstar)},
      {"prelie2-matched-pair",
       matched_pair_prelie2_check(a, astar, coregular_rep(a), coregular_rep(astar))},
      {"bialgebra", bialgebra_check(a, astar)},
  }};
  Report r;
  const bool first = verdicts[0].second.pass();
  bool agree = true;
  for (auto& [name, rep] : verdicts) {
    r.flags[name] = rep.pass();
    agree = agree && rep.pass() == first;
    r.add_part(name, std::move(rep));
  }
  r.flags["agree"] = agree;
  return r;
}

RElement r_minus_dtau(const StrictPreLie2Algebra& a, const RElement& r, const Tau& tau) {
  const Mat& d = a.cx.d;
  return {r.r01 - d * tau.t, r.r10 - tau.t * d.transpose()};
}

RElement sigma(const RElement& r) { return {r.r10.transpose(), r.r01.transpose()}; }

Mat dtensor(const TwoTermComplex& cx, const RElement& r, bool flip) {
  const std::size_t n0 = cx.n0, n1 = cx.n1;
  const ThreeTermComplex t = tensor_complex(cx, cx, flip);
  Vec v(2 * n0 * n1);
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      v[i * n1 + j] = r.r01(i, j);
      v[n0 * n1 + j * n0 + i] = r.r10(j, i);
    }
  return Mat(n0, n0, t.d1 * v);
}

Mat embed(const RElement& r) {
  const std::size_t n0 = r.r01.rows(), n1 = r.r01.cols();
  Mat m(n0 + n1, n0 + n1);
  put_block(m, 0, n0, r.r01);
  put_block(m, n0, 0, r.r10);
  return m;
}

namespace {

void check_r_shape(const StrictPreLie2Algebra& a, const RElement& r, const Tau& tau) {
  const std::size_t n0 = a.n0(), n1 = a.n1();
  if (r.r01.rows() != n0 || r.r01.cols() != n1 || r.r10.rows() != n1 || r.r10.cols() != n0 ||
      tau.t.rows() != n1 || tau.t.cols() != n1)
    throw ShapeError("r or tau shape does not match the algebra");
}

}  // namespace

Cobracket coboundary_cobracket(const StrictPreLie2Algebra& a, const RElement& r, const Tau& tau) {
  check_r_shape(a, r, tau);
  const RElement R = r_minus_dtau(a, r, tau);
  const MixedTensor t{R.r01, R.r10};
  TensorAction act(a);
  Cobracket cb;
  for (std::size_t x = 0; x < a.n0(); ++x) cb.alpha0.push_back(act.on_mixed(unit(a.n0(), x), t));
  for (std::size_t b = 0; b < a.n1(); ++b) cb.alpha1.push_back(act.lower(unit(a.n1(), b), t));
  return cb;
}

namespace {

void check_square(const PreLieAlgebra& b, const Mat& r) {
  if (r.rows() != b.n || r.cols() != b.n) throw ShapeError("tensor square: r must be N x N");
}

// Calls fn(p, q, s, t, c) with c = r(p,q) r(s,t) for every nonzero pair.
template <class F>
void pairs(const Mat& r, F&& fn) {
  const std::size_t N = r.rows();
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = 0; q < N; ++q) {
      if (r(p, q) == 0) continue;
      for (std::size_t s = 0; s < N; ++s)
        for (std::size_t t = 0; t < N; ++t)
          if (r(s, t) != 0) fn(p, q, s, t, r(p, q) * r(s, t));
    }
}

}  // namespace

CubeElement double_bracket(const PreLieAlgebra& b, const Mat& r) {
  check_square(b, r);
  const std::size_t N = b.n;
  const Tensor3& M = b.M;
  CubeElement c(N);
  pairs(r, [&](std::size_t p, std::size_t q, std::size_t s, std::size_t t, const Rational& v) {
    for (std::size_t k = 0; k < N; ++k) {
      const Rational& ps = M(p, s, k);
      const Rational pt = M(p, t, k) - M(t, p, k);
      const Rational qt = M(q, t, k) - M(t, q, k);
      if (ps != 0) {
        c(k, t, q) += v * ps;  // r13.r12: (b_p b_s) (x) b_t (x) b_q
        c(t, k, q) -= v * ps;  // r23.r21: b_t (x) (b_p b_s) (x) b_q
      }
      if (pt != 0) {
        c(s, k, q) += v * pt;  // [r23,r12]: b_s (x) [b_p,b_t] (x) b_q
        c(k, s, q) -= v * pt;  // [r13,r21]: [b_p,b_t] (x) b_s (x) b_q
      }
      if (qt != 0) c(p, s, k) -= v * qt;  // [r13,r23]: b_p (x) b_s (x) [b_q,b_t]
    }
  });
  return c;
}

CubeElement s_form_double_bracket(const PreLieAlgebra& b, const Mat& r) {
  check_square(b, r);
  const std::size_t N = b.n;
  const Tensor3& M = b.M;
  CubeElement c(N);
  pairs(r, [&](std::size_t p, std::size_t q, std::size_t s, std::size_t t, const Rational& v) {
    for (std::size_t k = 0; k < N; ++k) {
      if (M(p, s, k) != 0) c(k, q, t) -= v * M(p, s, k);  // R12.R13
      if (M(q, s, k) != 0) c(p, k, t) += v * M(q, s, k);  // R12.R23
      const Rational qt = M(q, t, k) - M(t, q, k);
      if (qt != 0) c(p, s, k) += v * qt;  // [R13,R23]
    }
  });
  return c;
}

Report cybe_check(const StrictPreLie2Algebra& a, const RElement& r, const Tau& tau, bool flip) {
  check_r_shape(a, r, tau);
  const RElement R = r_minus_dtau(a, r, tau);
  PreLieAlgebra B = collapse(a);
  const Mat E = embed(R);
  const std::size_t N = B.n;
  Report pa, pb, pc;
  pa.check("symmetric", {}, R.r01 - R.r10.transpose());
  CubeElement s = s_form_double_bracket(B, E);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k)
        if (s(i, j, k) != 0) pb.fail("s-equation", {i, j, k}, Vec{s(i, j, k)});
  pc.check("dtensor", {}, dtensor(a.cx, r, flip));
  Report out;
  out.add_part("a", std::move(pa));
  out.add_part("b", std::move(pb));
  out.add_part("c", std::move(pc));
  const bool db = double_bracket(B, E).is_zero();
  out.flags["double-bracket-zero"] = db;
  out.flags["s-form-zero"] = s.is_zero();
  out.flags["forms-agree"] = db == s.is_zero();
  return out;
}

Report coboundary_bialgebra_check(const StrictPreLie2Algebra& a, const RElement& r,
                                  const Tau& tau, bool flip) {
  check_r_shape(a, r, tau);
  const RElement R = r_minus_dtau(a, r, tau);
  PreLieAlgebra B = collapse(a);
  const std::size_t N = B.n;
  const Mat S = embed(R) - embed(sigma(R));
  auto P = [](const Mat& L, const Mat& X) { return L * X + X * L.transpose(); };
  std::vector<Mat> L(N), ad(N);
  for (std::size_t u = 0; u < N; ++u) {
    L[u] = B.M.left_mult(unit(N, u));
    ad[u] = L[u] - B.M.right_mult(unit(N, u));
  }
  Report pa, pb, pc;
  for (std::size_t u = 0; u < N; ++u)
    for (std::size_t v = 0; v < N; ++v)
      pa.check("a", {u, v}, P(B.M.left_mult(B.M.fiber(u, v)), S) - P(L[u], P(L[v], S)));
  CubeElement c = s_form_double_bracket(B, embed(R));
  for (std::size_t x = 0; x < N; ++x) {
    Vec q(N * N * N, Rational(0));
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        for (std::size_t k = 0; k < N; ++k) {
          Rational acc = 0;
          for (std::size_t m = 0; m < N; ++m) {
            if (L[x](i, m) != 0) acc += L[x](i, m) * c(m, j, k);
            if (L[x](j, m) != 0) acc += L[x](j, m) * c(i, m, k);
            if (ad[x](k, m) != 0) acc += ad[x](k, m) * c(i, j, m);
          }
          q[(i * N + j) * N + k] = acc;
        }
    pb.check("b", {x}, q);
  }
  pc.check("dtensor", {}, dtensor(a.cx, r, flip));
  Report out;
  out.add_part("a", std::move(pa));
  out.add_part("b", std::move(pb));
  out.add_part("c", std::move(pc));
  return out;
}

OperatorFromR r_to_operator(const StrictPreLie2Algebra&, const RElement& r) {
  return {r.r01, r.r10};
}

Report cybe_oop_equivalence(const StrictPreLie2Algebra& a, const RElement& r) {
  if (r.r10 != r.r01.transpose()) throw NotSymmetric("cybe_oop_equivalence: R is not symmetric");
  Report full = cybe_check(a, r, Tau{Mat(a.n1(), a.n1())});
  Report cy;
  for (auto& [name, part] : full.parts)
    if (name != "a") cy.add_part(name, part);
  StrictLie2Algebra g = commutator_lie2(a);
  Rep2 rep = dual_rep(g, left_rep(a));
  OperatorFromR op = r_to_operator(a, r);
  Report oo;
  try {
    oo = o_operator_check(g, rep, {op.R0, op.R1});
  } catch (const NotChainMap&) {
    oo.fail("chain", {}, flat(op.R0 * rep.V.d - g.cx.d * op.R1));
  }
  Report out;
  out.flags["cybe"] = cy.pass();
  out.flags["o-operator"] = oo.pass();
  if (cy.pass() != oo.pass()) out.fail("agree", {}, Vec{Rational(1)});
  out.details.emplace_back("cybe", std::move(cy));
  out.details.emplace_back("o-operator", std::move(oo));
  return out;
}

CybeSolution solution_from_o_operator(const StrictLie2Algebra& g, const Rep2& rep,
                                      const ChainMapPair& t) {
  if (!o_operator_check(g, rep, t).pass())
    throw CheckFailed("solution_from_o_operator: T is not an O-operator");
  const std::size_t n0 = g.n0(), n1 = g.n1(), m0 = rep.m0(), m1 = rep.m1();
  std::vector<std::size_t> piv0, piv1;
  rref(t.f0, &piv0);
  rref(t.f1, &piv1);
  const std::size_t k0 = piv0.size(), k1 = piv1.size();
  std::vector<Vec> img0, img1;
  for (auto p : piv0) img0.push_back(t.f0.col(p));
  for (auto p : piv1) img1.push_back(t.f1.col(p));
  const Mat B0 = Mat::from_columns(img0, n0), B1 = Mat::from_columns(img1, n1);
  // Coordinates in the image basis; the vectors are always in the image.
  auto coord = [](const Mat& basis, std::size_t k, const Vec& v) {
    if (k == 0) return Vec{};
    return solve_linear(basis, v).x;
  };

  Tensor3 M00(k0, k0, k0), M01(k0, k1, k1), M10(k1, k0, k1);
  for (std::size_t p = 0; p < k0; ++p) {
    Mat A = rep.A_of(img0[p]), B = rep.B_of(img0[p]);
    for (std::size_t q = 0; q < k0; ++q) {
      Vec c = coord(B0, k0, t.f0 * (A * unit(m0, piv0[q])));
      for (std::size_t k = 0; k < k0; ++k) M00(p, q, k) = c[k];
    }
    for (std::size_t q = 0; q < k1; ++q) {
      Vec c = coord(B1, k1, t.f1 * (B * unit(m1, piv1[q])));
      for (std::size_t k = 0; k < k1; ++k) M01(p, q, k) = c[k];
    }
  }
  for (std::size_t q = 0; q < k1; ++q) {
    Mat C = rep.C_of(img1[q]);
    for (std::size_t p = 0; p < k0; ++p) {
      Vec c = coord(B1, k1, t.f1 * (C * unit(m0, piv0[p])));
      for (std::size_t k = 0; k < k1; ++k) M10(q, p, k) = c[k];
    }
  }
  Mat dP(k0, k1);
  for (std::size_t q = 0; q < k1; ++q) {
    Vec c = coord(B0, k0, g.cx.d * img1[q]);
    for (std::size_t k = 0; k < k0; ++k) dP(k, q) = c[k];
  }
  StrictPreLie2Algebra P(TwoTermComplex(k0, k1, dP), M00, M01, M10);

  Rep2 restricted;
  restricted.V = rep.V;
  for (std::size_t p = 0; p < k0; ++p) {
    restricted.A.push_back(rep.A_of(img0[p]));
    restricted.B.push_back(rep.B_of(img0[p]));
  }
  for (std::size_t q = 0; q < k1; ++q) restricted.C.push_back(rep.C_of(img1[q]));
  Rep2 dual = dual_rep(commutator_lie2(P), restricted);
  StrictPreLie2Algebra big =
      semidirect_prelie2(P, {dual, Rep2::zero(k0, k1, dual.V)});

  // Degree 0 = [P0, V1*], degree -1 = [P1, V0*].
  RElement T = RElement::zero(k0 + m1, k1 + m0);
  for (std::size_t m = 0; m < m1; ++m) {
    Vec c = coord(B1, k1, t.f1.col(m));
    for (std::size_t q = 0; q < k1; ++q) T.r01(k0 + m, q) = c[q];
  }
  for (std::size_t u = 0; u < m0; ++u) {
    Vec c = coord(B0, k0, t.f0.col(u));
    for (std::size_t p = 0; p < k0; ++p) T.r10(k1 + u, p) = c[p];
  }
  RElement S = sigma(T);
  return {std::move(big), {T.r01 + S.r01, T.r10 + S.r10}};
}

CybeSolution canonical_solution(const StrictPreLie2Algebra& a) {
  const std::size_t n0 = a.n0(), n1 = a.n1();
  Rep2 lstar = dual_rep(commutator_lie2(a), left_rep(a));
  StrictPreLie2Algebra big = semidirect_prelie2(a, {lstar, Rep2::zero(n0, n1, lstar.V)});
  // Degree 0 = [A0, A1*], degree -1 = [A1, A0*].
  RElement R = RElement::zero(n0 + n1, n1 + n0);
  for (std::size_t i = 0; i < n0; ++i) {
    R.r01(i, n1 + i) = 1;  // e_i (x) e_i*
    R.r10(n1 + i, i) = 1;  // e_i* (x) e_i
  }
  for (std::size_t j = 0; j < n1; ++j) {
    R.r01(n0 + j, j) = 1;  // f_j* (x) f_j
    R.r10(j, n0 + j) = 1;  // f_j (x) f_j*
  }
  return {std::move(big), R};
}

}  // namespace l2b
