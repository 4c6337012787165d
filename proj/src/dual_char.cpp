#include "moebius/dual_char.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "moebius/errors.hpp"
#include "moebius/oracle.hpp"

namespace moebius {

namespace {

// Flag f = 2h + s. Involutions: s0 crosses the edge, s1 moves to the
// neighbouring half-edge at the vertex, s2 switches side.
struct FlagMaps {
  std::vector<int> s0, s1, s2;
};

FlagMaps flag_maps(const MoebiusGraph& g) {
  const int n = 2 * g.num_half_edges();
  FlagMaps m{std::vector<int>(n), std::vector<int>(n), std::vector<int>(n)};
  for (int h = 0; h < g.num_half_edges(); ++h) {
    const int o = g.mate(h);
    const bool tw = g.twisted(g.edge_of(h));
    for (int s = 0; s < 2; ++s) {
      m.s0[2 * h + s] = 2 * o + (tw ? s : 1 - s);
      m.s2[2 * h + s] = 2 * h + 1 - s;
    }
    m.s1[2 * h + 1] = 2 * g.succ(h);
    m.s1[2 * h] = 2 * g.pred(h) + 1;
  }
  return m;
}

// Rotation system whose vertices are the orbits of <s1, s2>. Even flags are
// preferred as starting points.
MoebiusGraph graph_from_flags(const FlagMaps& m, int isolated) {
  const int n = static_cast<int>(m.s0.size());
  std::vector<int> half(n, -1), side(n, -1);
  std::vector<std::vector<int>> rotations;
  int next = 0;
  for (int pass = 0; pass < 2; ++pass)
    for (int x = pass; x < n; x += 2) {
      if (half[x] >= 0) continue;
      std::vector<int> rot;
      int y = x;
      do {
        half[y] = half[m.s2[y]] = next;
        side[y] = 0;
        side[m.s2[y]] = 1;
        rot.push_back(next++);
        y = m.s1[m.s2[y]];
      } while (y != x);
      rotations.push_back(std::move(rot));
    }
  for (int i = 0; i < isolated; ++i) rotations.emplace_back();
  std::vector<int> flag_of(next);
  for (int f = 0; f < n; ++f)
    if (side[f] == 0) flag_of[half[f]] = f;
  std::vector<std::array<int, 2>> edges;
  std::vector<bool> twists;
  std::vector<bool> done(next, false);
  for (int h = 0; h < next; ++h) {
    if (done[h]) continue;
    const int z = m.s0[flag_of[h]];
    const int o = half[z];
    done[h] = done[o] = true;
    edges.push_back({h, o});
    twists.push_back(side[z] == 0);
  }
  return MoebiusGraph(std::move(rotations), std::move(edges), std::move(twists));
}

}  // namespace

MoebiusGraph poincare_dual(const MoebiusGraph& g) {
  FlagMaps m = flag_maps(g);
  int isolated = 0;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.valence(v) == 0) ++isolated;
  std::swap(m.s0, m.s2);
  return graph_from_flags(m, isolated);
}

std::string to_string(Ensemble e) {
  switch (e) {
    case Ensemble::goe: return "goe";
    case Ensemble::gue: return "gue";
    case Ensemble::gse: return "gse";
  }
  return "?";
}

Ensemble parse_ensemble(const std::string& name) {
  if (name == "goe" || name == "GOE") return Ensemble::goe;
  if (name == "gue" || name == "GUE") return Ensemble::gue;
  if (name == "gse" || name == "GSE") return Ensemble::gse;
  throw UsageError("unknown ensemble '" + name + "' (expected goe, gue or gse)");
}

namespace {

int sign_pow(int m) { return m % 2 == 0 ? 1 : -1; }

Monomial monomial_from_counts(const std::map<int, int>& counts) {
  Monomial m;
  for (auto [j, c] : counts)
    for (int i = 0; i < c; ++i) m.push_back(j);
  return m;
}

template <class Term>
LambdaSeries charpoly_series(Family family, int max_degree, Term term) {
  if (max_degree < 0) throw PreconditionError("degree must be non-negative");
  LambdaSeries s(max_degree);
  for (const auto& p : profiles_up_to(max_degree, 1)) {
    for (const auto& e : enumerate_graphs(p, true, family)) {
      const long aut = family == Family::ribbon ? e.aut_ribbon.value() : e.aut_moebius;
      auto [m, c] = term(e.topology);
      s.add_term(m, c * BigRational(1, aut));
    }
  }
  return s;
}

}  // namespace

LambdaSeries charpoly_lhs(Ensemble ensemble, int max_degree) {
  if (ensemble == Ensemble::gse)
    throw PreconditionError("the N x N side is defined for goe and gue");
  const bool gue = ensemble == Ensemble::gue;
  return charpoly_series(gue ? Family::ribbon : Family::moebius, max_degree,
                         [gue](const TopologyProfile& t) {
                           BigRational c = sign_pow(t.v);
                           if (!gue) c *= pow(BigRational(2), t.v - t.e);
                           return std::pair{monomial_from_counts(t.v_profile),
                                            NPolynomial::monomial(t.f - t.e, c)};
                         });
}

LambdaSeries charpoly_rhs(Ensemble ensemble, int max_degree) {
  if (ensemble == Ensemble::goe)
    throw PreconditionError("the k x k side is defined for gue and gse");
  const bool gue = ensemble == Ensemble::gue;
  return charpoly_series(gue ? Family::ribbon : Family::moebius, max_degree,
                         [gue](const TopologyProfile& t) {
                           BigRational c = sign_pow(t.f);
                           if (!gue) c *= pow(BigRational(2), t.f - t.e);
                           return std::pair{monomial_from_counts(t.f_profile),
                                            NPolynomial::monomial(t.v - t.e, c)};
                         });
}

std::vector<std::pair<Monomial, BigRational>> charpoly_lhs_oracle(Ensemble ensemble, int n,
                                                                  int max_degree) {
  if (ensemble == Ensemble::gse)
    throw PreconditionError("the N x N side is defined for goe and gue");
  TagDictionary dict;
  dict.c = ratio(n, 2);
  dict.coupling.assign(max_degree + 1, BigRational(0));
  for (int j = 1; j <= max_degree; ++j) dict.coupling[j] = BigRational(-1, j);
  ExpansionOptions opts;
  opts.max_degree = max_degree;
  return oracle_log_z(ensemble == Ensemble::gue ? 2 : 1, n, dict, opts);
}

std::string to_string(const LambdaPolynomial& p) {
  if (p.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest total degree first.
  std::vector<std::pair<std::vector<int>, BigRational>> terms(p.begin(), p.end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int x : a.first) da += x;
    for (int x : b.first) db += x;
    return da > db;
  });
  for (const auto& [e, c] : terms) {
    BigRational a = abs(c);
    out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    std::string vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "lambda_" + std::to_string(i + 1);
      if (e[i] > 1) vars += "^" + std::to_string(e[i]);
    }
    if (vars.empty())
      out << (a.get_den() == 1 ? a.get_num().get_str() : to_string(a));
    else if (a == 1)
      out << vars;
    else
      out << to_string(a) << "*" << vars;
  }
  return out.str();
}

std::string to_string(CharpolyIdentity which) {
  return which == CharpolyIdentity::bhc ? "BHC" : "BHQ";
}

CharpolyIdentity parse_identity(const std::string& name) {
  if (name == "BHC" || name == "bhc") return CharpolyIdentity::bhc;
  if (name == "BHQ" || name == "bhq") return CharpolyIdentity::bhq;
  throw UsageError("unknown identity '" + name + "' (expected BHC or BHQ)");
}

namespace {

// Gaussian rationals and polynomials over them.
struct CRat {
  BigRational re, im;
  bool is_zero() const { return re == 0 && im == 0; }
};
CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
CRat operator*(const CRat& a, const CRat& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

class CPoly {
 public:
  explicit CPoly(int nvars = 0) : nvars_(nvars) {}
  static CPoly constant(int nvars, const CRat& c) {
    CPoly p(nvars);
    p.add(std::vector<int>(nvars, 0), c);
    return p;
  }
  static CPoly variable(int nvars, int i, const CRat& c) {
    CPoly p(nvars);
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    p.add(e, c);
    return p;
  }
  void add(const std::vector<int>& e, const CRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  const std::map<std::vector<int>, CRat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  friend CPoly operator+(CPoly a, const CPoly& b) {
    for (const auto& [e, c] : b.terms_) a.add(e, c);
    return a;
  }
  friend CPoly operator-(const CPoly& a) {
    CPoly r(a.nvars_);
    for (const auto& [e, c] : a.terms_) r.add(e, {-c.re, -c.im});
    return r;
  }
  friend CPoly operator*(const CPoly& a, const CPoly& b) {
    CPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        std::vector<int> e(ea);
        for (int i = 0; i < a.nvars_; ++i) e[i] += eb[i];
        r.add(e, ca * cb);
      }
    return r;
  }

 private:
  int nvars_;
  std::map<std::vector<int>, CRat> terms_;
};

CPoly power(const CPoly& p, int n, int nvars) {
  CPoly r = CPoly::constant(nvars, {1, 0});
  for (int i = 0; i < n; ++i) r = r * p;
  return r;
}

using CMatrix = std::vector<std::vector<CPoly>>;

CPoly determinant(const CMatrix& a, int nvars) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return CPoly::constant(nvars, {1, 0});
  CPoly r(nvars);
  for (int j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    CMatrix minor;
    for (int i = 1; i < n; ++i) {
      std::vector<CPoly> row;
      for (int c = 0; c < n; ++c)
        if (c != j) row.push_back(a[i][c]);
      minor.push_back(std::move(row));
    }
    CPoly term = a[0][j] * determinant(minor, nvars);
    r = r + (j % 2 == 0 ? term : -term);
  }
  return r;
}

CPoly pfaffian(const CMatrix& a, int nvars) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return CPoly::constant(nvars, {1, 0});
  CPoly r(nvars);
  for (int j = 1; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    std::vector<int> keep;
    for (int i = 1; i < n; ++i)
      if (i != j) keep.push_back(i);
    CMatrix minor;
    for (int i : keep) {
      std::vector<CPoly> row;
      for (int c : keep) row.push_back(a[i][c]);
      minor.push_back(std::move(row));
    }
    CPoly term = a[0][j] * pfaffian(minor, nvars);
    r = r + (j % 2 == 1 ? term : -term);
  }
  return r;
}

// Replaces every Gaussian variable (indices >= k) by its moments; the
// result lives on the lambda variables only.
LambdaPolynomial gaussian_expectation(const CPoly& p, int k,
                                      const std::vector<BigRational>& variance) {
  std::map<std::vector<int>, CRat> acc;
  for (const auto& [e, c] : p.terms()) {
    BigRational w = 1;
    for (std::size_t i = 0; i < variance.size(); ++i) {
      const int d = e[k + i];
      if (d % 2 != 0) {
        w = 0;
        break;
      }
      w *= BigRational(double_factorial_odd(d / 2)) * pow(variance[i], d / 2);
    }
    if (w == 0) continue;
    std::vector<int> lam(e.begin(), e.begin() + k);
    auto& slot = acc[lam];
    slot = slot + CRat{c.re * w, c.im * w};
  }
  LambdaPolynomial out;
  for (const auto& [e, c] : acc) {
    if (c.im != 0)
      throw VerificationFailure("k x k side has a non-real coefficient at " +
                                to_string(LambdaPolynomial{{e, 1}}));
    if (c.re != 0) out[e] = c.re;
  }
  return out;
}

LambdaPolynomial kbyk_unitary(int n, int k) {
  // Variables: lambda_1..k, then y_aa, then (u_ab, w_ab) for a < b.
  std::vector<BigRational> variance;
  std::vector<std::vector<int>> diag(k, std::vector<int>(1)), off_u(k, std::vector<int>(k)),
      off_w(k, std::vector<int>(k));
  int next = k;
  for (int a = 0; a < k; ++a) {
    diag[a][0] = next++;
    variance.push_back(BigRational(1, n));
  }
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      off_u[a][b] = next++;
      off_w[a][b] = next++;
      variance.push_back(BigRational(1, 2 * n));
      variance.push_back(BigRational(1, 2 * n));
    }
  const int nv = next;
  // M = Lambda - i Y with Y_ab = u + i w, Y_ba = u - i w.
  CMatrix m(k, std::vector<CPoly>(k, CPoly(nv)));
  for (int a = 0; a < k; ++a) {
    m[a][a] = CPoly::variable(nv, a, {1, 0}) + CPoly::variable(nv, diag[a][0], {0, -1});
    for (int b = a + 1; b < k; ++b) {
      m[a][b] = CPoly::variable(nv, off_w[a][b], {1, 0}) +
                CPoly::variable(nv, off_u[a][b], {0, -1});
      m[b][a] = CPoly::variable(nv, off_w[a][b], {-1, 0}) +
                CPoly::variable(nv, off_u[a][b], {0, -1});
    }
  }
  return gaussian_expectation(power(determinant(m, nv), n, nv), k, variance);
}

LambdaPolynomial kbyk_quaternion(int n, int k) {
  // Variables: lambda_1..k, then x_aa, then q0..q3 of X_ab for a < b.
  std::vector<BigRational> variance;
  std::vector<int> diag(k);
  std::vector<std::vector<std::array<int, 4>>> off(k, std::vector<std::array<int, 4>>(k));
  int next = k;
  for (int a = 0; a < k; ++a) {
    diag[a] = next++;
    variance.push_back(BigRational(1, 2 * n));
  }
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int i = 0; i < 4; ++i) {
        off[a][b][i] = next++;
        variance.push_back(BigRational(1, 4 * n));
      }
  const int nv = next;
  const int d = 2 * k;
  // C(M) for M = Lambda - i X, with q -> [[q0 + i q1, q2 + i q3], [-q2 + i q3, q0 - i q1]].
  CMatrix c(d, std::vector<CPoly>(d, CPoly(nv)));
  auto var = [&](int idx, const CRat& coeff) { return CPoly::variable(nv, idx, coeff); };
  // -i times (re + i im) = im - i re
  auto times_minus_i = [](const CRat& z) { return CRat{z.im, -z.re}; };
  for (int a = 0; a < k; ++a) {
    for (int s = 0; s < 2; ++s)
      c[2 * a + s][2 * a + s] =
          var(a, {1, 0}) + var(diag[a], times_minus_i({1, 0}));
    for (int b = a + 1; b < k; ++b) {
      const auto& q = off[a][b];
      for (int conj = 0; conj < 2; ++conj) {
        // conj = 1 builds the (b, a) block from the conjugate quaternion.
        const BigRational sg = conj ? -1 : 1;
        const int r0 = 2 * (conj ? b : a), c0 = 2 * (conj ? a : b);
        const std::array<std::array<std::vector<std::pair<int, CRat>>, 2>, 2> block{{
            {{{{q[0], {1, 0}}, {q[1], {0, sg}}}, {{q[2], {sg, 0}}, {q[3], {0, sg}}}}},
            {{{{q[2], {-sg, 0}}, {q[3], {0, sg}}}, {{q[0], {1, 0}}, {q[1], {0, -sg}}}}},
        }};
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            for (const auto& [idx, z] : block[i][j])
              c[r0 + i][c0 + j] = c[r0 + i][c0 + j] + var(idx, times_minus_i(z));
      }
    }
  }
  // J C(M) with J = diag([[0, 1], [-1, 0]]) is antisymmetric for self-dual X,
  // and its Pfaffian squares to det C(M).
  CMatrix jc(d, std::vector<CPoly>(d, CPoly(nv)));
  for (int a = 0; a < k; ++a)
    for (int col = 0; col < d; ++col) {
      jc[2 * a][col] = c[2 * a + 1][col];
      jc[2 * a + 1][col] = -c[2 * a][col];
    }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (!(jc[i][j] + jc[j][i]).is_zero())
        throw ConsistencyError("quaternion block matrix is not antisymmetric after J");
  const CPoly hdet = pfaffian(jc, nv);
  return gaussian_expectation(power(hdet, n, nv), k, variance);
}

// Products of power sums, keyed by sorted exponent lists.
using PPoly = std::map<Monomial, BigRational>;

PPoly ppoly_mul(const PPoly& a, const PPoly& b) {
  PPoly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m = monomial_product(ma, mb);
      r[m] += ca * cb;
    }
  return r;
}

// Elementary symmetric polynomials e_0..e_n in power sums (Newton).
std::vector<PPoly> elementary_in_power_sums(int n) {
  std::vector<PPoly> e(n + 1);
  e[0][{}] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int i = 1; i <= m; ++i)
      for (const auto& [mono, c] : e[m - i]) {
        Monomial t = monomial_product(mono, {i});
        e[m][t] += c * BigRational(sign_pow(i - 1), m);
      }
  }
  return e;
}

LambdaPolynomial nbyn_side(int n, int k, int beta) {
  const auto e = elementary_in_power_sums(n);
  std::map<Monomial, BigRational> moments;
  auto moment = [&](const Monomial& m) {
    if (m.empty()) return BigRational(1);
    auto it = moments.find(m);
    if (it != moments.end()) return it->second;
    BigRational v = eigenvalue_moment(MomentQuery{beta, n, m, ratio(n, 2)});
    moments.emplace(m, v);
    return v;
  };
  LambdaPolynomial out;
  std::vector<int> ms(k, 0);
  std::function<void(int, PPoly, int)> rec = [&](int l, PPoly acc, int sign) {
    if (l == k) {
      BigRational v = 0;
      for (const auto& [m, c] : acc) v += c * moment(m);
      if (v == 0) return;
      std::vector<int> ex(k);
      for (int i = 0; i < k; ++i) ex[i] = n - ms[i];
      out[ex] += v * sign;
      return;
    }
    for (int m = 0; m <= n; ++m) {
      ms[l] = m;
      rec(l + 1, ppoly_mul(acc, e[m]), sign * sign_pow(m));
    }
  };
  rec(0, PPoly{{{}, BigRational(1)}}, 1);
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : ++it;
  return out;
}

}  // namespace

IdentityReport verify_polynomial_identity(int n, int k, CharpolyIdentity which) {
  if (n < 1 || n > 3 || k < 1 || k > 2)
    throw PreconditionError("polynomial identity check needs 1 <= N <= 3 and 1 <= k <= 2");
  IdentityReport r;
  r.which = which;
  r.n = n;
  r.k = k;
  if (which == CharpolyIdentity::bhc) {
    r.lhs = nbyn_side(n, k, 2);
    r.rhs = kbyk_unitary(n, k);
  } else {
    r.lhs = nbyn_side(n, k, 1);
    r.rhs = kbyk_quaternion(n, k);
  }
  r.equal = r.lhs == r.rhs;
  if (!r.equal) {
    std::vector<int> where;
    BigRational a, b;
    for (const auto* side : {&r.lhs, &r.rhs})
      for (const auto& [e, c] : *side) {
        auto lc = r.lhs.count(e) ? r.lhs.at(e) : BigRational(0);
        auto rc = r.rhs.count(e) ? r.rhs.at(e) : BigRational(0);
        if (lc != rc && where.empty()) {
          where = e;
          a = lc;
          b = rc;
        }
      }
    throw VerificationFailure(to_string(which) + " at N=" + std::to_string(n) +
                              ", k=" + std::to_string(k) + ": coefficient of " +
                              to_string(LambdaPolynomial{{where, 1}}) + " is " +
                              to_string(a) + " on the N x N side and " + to_string(b) +
                              " on the k x k side");
  }
  return r;
}

}  // namespace moebius
