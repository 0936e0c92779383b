#ifndef L2B_TESTS_SUPPORT_HPP
#define L2B_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "l2b/bialg.hpp"
#include "l2b/fixtures.hpp"
#include "l2b/lie2.hpp"
#include "l2b/prelie2.hpp"
#include "l2b/random.hpp"

namespace support {

using namespace l2b;

// The three fixtures, their canonical doubles, then count random algebras.
inline std::vector<StrictPreLie2Algebra> prelie_corpus(Rng& rng, int count,
                                                       std::size_t max_dim = 3) {
  std::vector<StrictPreLie2Algebra> out = {fix_a(), fix_b(), fix_c()};
  out.push_back(canonical_solution(fix_b()).algebra);
  out.push_back(canonical_solution(fix_c()).algebra);
  for (int i = 0; i < count; ++i)
    out.push_back(random_prelie2(rng, rng.below(max_dim + 1), rng.below(max_dim + 1)));
  return out;
}

inline Tau zero_tau(std::size_t n1) { return Tau{Mat(n1, n1)}; }

// r10 = r01^T, so sigma(R) = R.
inline RElement random_symmetric_r(Rng& rng, std::size_t n0, std::size_t n1, long lo, long hi) {
  RElement r;
  r.r01 = random_matrix(rng, n0, n1, lo, hi);
  r.r10 = r.r01.transpose();
  return r;
}

// Adds delta to one uniformly chosen entry; no-op on an empty tensor.
inline bool perturb(Rng& rng, Tensor3& t, const Rational& delta = 1) {
  const std::size_t n = t.d1() * t.d2() * t.d3();
  if (n == 0) return false;
  std::size_t f = rng.below(n);
  t(f / (t.d2() * t.d3()), (f / t.d3()) % t.d2(), f % t.d3()) += delta;
  return true;
}

// Projects component data onto cochains antisymmetric in the degree 0
// arguments and symmetric in the degree -1 arguments (layout [x..][h..][v]).
inline Vec project_cochain(const Cochain& c, int p, int q, int s, const Vec& d) {
  const std::size_t ms = s == 0 ? c.m0 : c.m1;
  if (ms == 0) return d;
  const std::size_t total = d.size() / ms;
  Vec out = zeros(d.size());
  std::vector<int> px(p), ph(q);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::vector<std::size_t> xs(p), hs(q);
    std::size_t rest = flat;
    for (int i = q - 1; i >= 0; --i) {
      hs[i] = rest % c.n1;
      rest /= c.n1;
    }
    for (int i = p - 1; i >= 0; --i) {
      xs[i] = rest % c.n0;
      rest /= c.n0;
    }
    for (int i = 0; i < p; ++i) px[i] = i;
    do {
      int inversions = 0;
      for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b)
          if (px[a] > px[b]) ++inversions;
      const Rational sign = inversions % 2 ? -1 : 1;
      for (int i = 0; i < q; ++i) ph[i] = i;
      do {
        std::size_t src = 0;
        for (int i = 0; i < p; ++i) src = src * c.n0 + xs[px[i]];
        for (int i = 0; i < q; ++i) src = src * c.n1 + hs[ph[i]];
        for (std::size_t v = 0; v < ms; ++v) out[flat * ms + v] += sign * d[src * ms + v];
      } while (std::next_permutation(ph.begin(), ph.end()));
    } while (std::next_permutation(px.begin(), px.end()));
  }
  return out;
}

// Random cochain of total degree deg with every component p, q <= 2 filled.
inline Cochain random_cochain(Rng& rng, const StrictLie2Algebra& g, const Rep2& rep, int deg) {
  Cochain c;
  c.n0 = g.n0();
  c.n1 = g.n1();
  c.m0 = rep.m0();
  c.m1 = rep.m1();
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q)
      for (int s = 0; s <= 1; ++s)
        if (Cochain::degree(p, q, s) == deg) {
          Vec& d = c.at(p, q, s);
          for (auto& x : d) x = rng.range(-2, 2);
          d = project_cochain(c, p, q, s, d);
        }
  return c;
}

// The representation families used for cochain tests.
inline Rep2 pick_rep(int which, const StrictPreLie2Algebra& a, const StrictLie2Algebra& g) {
  switch (which % 4) {
    case 0: return adjoint_rep(g);
    case 1: return coadjoint_rep(g);
    case 2: return left_rep(a);
    default: return dual_rep(g, left_rep(a));
  }
}

inline std::vector<std::string> laws(const Report& r) { return r.failed_laws(); }

inline bool has_law(const Report& r, const std::string& law) {
  auto ls = r.failed_laws();
  return std::find(ls.begin(), ls.end(), law) != ls.end();
}

}  // namespace support

#endif
