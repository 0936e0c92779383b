#include <functional>

#include "l2b/errors.hpp"
#include "l2b/lie2.hpp"

namespace l2b {

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Evaluates one component on general (non-basis) arguments by
// multilinear expansion, skipping zero coefficients.
class Evaluator {
 public:
  Evaluator(const Cochain& c, int p, int q, int s, const Vec& data)
      : c_(c), p_(p), q_(q), ms_(s == 0 ? c.m0 : c.m1), data_(data) {}

  Vec operator()(const std::vector<Vec>& xs, const std::vector<Vec>& hs) const {
    Vec out = zeros(ms_);
    recurse(xs, hs, 0, 0, Rational(1), out);
    return out;
  }

 private:
  void recurse(const std::vector<Vec>& xs, const std::vector<Vec>& hs, std::size_t pos,
               std::size_t flat, const Rational& coef, Vec& out) const {
    const std::size_t nargs = static_cast<std::size_t>(p_ + q_);
    if (pos == nargs) {
      for (std::size_t v = 0; v < ms_; ++v) out[v] += coef * data_[flat * ms_ + v];
      return;
    }
    const bool is_x = pos < static_cast<std::size_t>(p_);
    const Vec& arg = is_x ? xs[pos] : hs[pos - p_];
    const std::size_t dim = is_x ? c_.n0 : c_.n1;
    for (std::size_t i = 0; i < dim; ++i) {
      if (arg[i] == 0) continue;
      recurse(xs, hs, pos + 1, flat * dim + i, coef * arg[i], out);
    }
  }

  const Cochain& c_;
  int p_, q_;
  std::size_t ms_;
  const Vec& data_;
};

// Calls fn(xs, hs, flat) for every basis tuple of shape (p, q).
void for_each_tuple(std::size_t n0, std::size_t n1, int p, int q,
                    const std::function<void(const std::vector<std::size_t>&,
                                             const std::vector<std::size_t>&, std::size_t)>& fn) {
  std::size_t total = ipow(n0, p) * ipow(n1, q);
  std::vector<std::size_t> xs(p), hs(q);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (int i = q - 1; i >= 0; --i) {
      hs[i] = rest % n1;
      rest /= n1;
    }
    for (int i = p - 1; i >= 0; --i) {
      xs[i] = rest % n0;
      rest /= n0;
    }
    fn(xs, hs, flat);
  }
}

std::vector<Vec> units(std::size_t n, const std::vector<std::size_t>& idx) {
  std::vector<Vec> out;
  for (auto i : idx) out.push_back(unit(n, i));
  return out;
}

Rational sign(int e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

std::size_t Cochain::size(int p, int q, int s) const {
  return ipow(n0, p) * ipow(n1, q) * (s == 0 ? m0 : m1);
}

bool Cochain::is_zero() const {
  for (const auto& [k, v] : comp)
    if (!l2b::is_zero(v)) return false;
  return true;
}

Vec& Cochain::at(int p, int q, int s) {
  auto it = comp.find({p, q, s});
  if (it == comp.end()) it = comp.emplace(std::array<int, 3>{p, q, s}, zeros(size(p, q, s))).first;
  return it->second;
}

Cochain ce_differential(const StrictLie2Algebra& g, const Rep2& r, const Cochain& f) {
  if (f.n0 != g.n0() || f.n1 != g.n1() || f.m0 != r.m0() || f.m1 != r.m1())
    throw ShapeError("ce_differential: cochain dimensions do not match");
  const std::size_t n0 = g.n0(), n1 = g.n1();
  const Mat& d = g.cx.d;
  Cochain out;
  out.n0 = f.n0;
  out.n1 = f.n1;
  out.m0 = f.m0;
  out.m1 = f.m1;
  int deg = -1000;
  for (const auto& [key, data] : f.comp) {
    auto [p, q, s] = key;
    if (p < 0 || q < 0 || (s != 0 && s != 1) || data.size() != f.size(p, q, s))
      throw InvalidInput("ce_differential: malformed component");
    int dk = Cochain::degree(p, q, s);
    if (deg != -1000 && dk != deg) throw InvalidInput("ce_differential: mixed total degree");
    deg = dk;
  }
  for (const auto& [key, data] : f.comp) {
    auto [p, q, s] = key;
    Evaluator F(f, p, q, s, data);
    const std::size_t ms = s == 0 ? f.m0 : f.m1;

    // d-hat: (p, q, s) -> (p-1, q+1, s).
    if (p >= 1) {
      Vec& o = out.at(p - 1, q + 1, s);
      for_each_tuple(n0, n1, p - 1, q + 1, [&](const auto& xi, const auto& hi, std::size_t flat) {
        std::vector<Vec> xs = units(n0, xi);
        Vec acc = zeros(ms);
        for (int c = 0; c <= q; ++c) {
          std::vector<Vec> x2 = xs;
          x2.push_back(d.col(hi[c]));
          std::vector<Vec> hs;
          for (int k = 1; k <= q; ++k) hs.push_back(unit(n1, hi[(c + k) % (q + 1)]));
          acc += F(x2, hs);
        }
        acc = sign(p) * acc;
        for (std::size_t v = 0; v < ms; ++v) o[flat * ms + v] += acc[v];
      });
    }

    // partial-hat: (p, q, 1) -> (p, q, 0).
    if (s == 1) {
      Vec& o = out.at(p, q, 0);
      for_each_tuple(n0, n1, p, q, [&](const auto& xi, const auto& hi, std::size_t flat) {
        Vec val = F(units(n0, xi), units(n1, hi));
        Vec img = sign(p + 2 * q) * (r.V.d * val);
        for (std::size_t v = 0; v < f.m0; ++v) o[flat * f.m0 + v] += img[v];
      });
    }

    // d-bar (1,0): (p, q, s) -> (p+1, q, s).
    {
      Vec& o = out.at(p + 1, q, s);
      for_each_tuple(n0, n1, p + 1, q, [&](const auto& xi, const auto& hi, std::size_t flat) {
        std::vector<Vec> xs = units(n0, xi), hs = units(n1, hi);
        Vec acc = zeros(ms);
        for (int i = 0; i <= p; ++i) {
          std::vector<Vec> rest;
          for (int k = 0; k <= p; ++k)
            if (k != i) rest.push_back(xs[k]);
          Vec val = F(rest, hs);
          const Mat& act = s == 0 ? r.A[xi[i]] : r.B[xi[i]];
          // (-1)^{i+1} with 1-based i.
          acc += sign(i) * (act * val);
          for (int j = 0; j < q; ++j) {
            std::vector<Vec> h2 = hs;
            h2[j] = g.L01.fiber(xi[i], hi[j]);
            acc += sign(i + 1) * F(rest, h2);
          }
        }
        for (int i = 0; i <= p; ++i)
          for (int j = i + 1; j <= p; ++j) {
            std::vector<Vec> args{g.L00.fiber(xi[i], xi[j])};
            for (int k = 0; k <= p; ++k)
              if (k != i && k != j) args.push_back(xs[k]);
            acc += sign(i + j) * F(args, hs);
          }
        for (std::size_t v = 0; v < ms; ++v) o[flat * ms + v] += acc[v];
      });
    }

    // d-bar (0,1): (p, q, 0) -> (p, q+1, 1).
    if (s == 0) {
      Vec& o = out.at(p, q + 1, 1);
      for_each_tuple(n0, n1, p, q + 1, [&](const auto& xi, const auto& hi, std::size_t flat) {
        std::vector<Vec> xs = units(n0, xi);
        Vec acc = zeros(f.m1);
        for (int i = 0; i <= q; ++i) {
          std::vector<Vec> hs;
          for (int k = 0; k <= q; ++k)
            if (k != i) hs.push_back(unit(n1, hi[k]));
          acc += r.C[hi[i]] * F(xs, hs);
        }
        acc = sign(p) * acc;
        for (std::size_t v = 0; v < f.m1; ++v) o[flat * f.m1 + v] += acc[v];
      });
    }
  }
  return out;
}

}  // namespace l2b
