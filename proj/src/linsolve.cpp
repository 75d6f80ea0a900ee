#include "markov/linsolve.hpp"

#include <stdexcept>

namespace markov {

std::optional<AffineSolution> solve_affine(const RMat& A, const RVec& b) {
  std::size_t m = A.size(), n = m ? A[0].size() : 0;
  RMat M = A;
  RVec rhs = b;
  std::vector<std::size_t> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && M[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(M[p], M[r]);
    std::swap(rhs[p], rhs[r]);
    Rational inv = 1 / M[r][c];
    for (auto& v : M[r]) v *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || M[i][c] == 0) continue;
      Rational f = M[i][c];
      for (std::size_t j = c; j < n; ++j) M[i][j] -= f * M[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivcol.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (rhs[i] != 0) return std::nullopt;
  AffineSolution s;
  s.particular.assign(n, 0);
  std::vector<bool> is_piv(n, false);
  for (std::size_t i = 0; i < r; ++i) {
    s.particular[pivcol[i]] = rhs[i];
    is_piv[pivcol[i]] = true;
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    RVec d(n, 0);
    d[f] = 1;
    for (std::size_t i = 0; i < r; ++i) d[pivcol[i]] = -M[i][f];
    s.directions.push_back(std::move(d));
  }
  return s;
}

namespace {

struct Tableau {
  RMat T;                      // m rows of [coefficients | rhs]
  std::vector<std::size_t> basis;
  std::size_t ncols;

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / T[r][c];
    for (auto& v : T[r]) v *= inv;
    for (std::size_t i = 0; i < T.size(); ++i) {
      if (i == r || T[i][c] == 0) continue;
      Rational f = T[i][c];
      for (std::size_t j = 0; j <= ncols; ++j) T[i][j] -= f * T[r][j];
    }
    basis[r] = c;
  }

  // minimise cost over columns [0, active); returns false when unbounded
  bool run(const RVec& cost, std::size_t active) {
    while (true) {
      std::size_t enter = active;
      for (std::size_t j = 0; j < active; ++j) {
        Rational rc = cost[j];
        for (std::size_t i = 0; i < T.size(); ++i) rc -= cost[basis[i]] * T[i][j];
        if (rc < 0) {
          enter = j;
          break;
        }
      }
      if (enter == active) return true;
      std::size_t leave = T.size();
      Rational best;
      for (std::size_t i = 0; i < T.size(); ++i) {
        if (T[i][enter] <= 0) continue;
        Rational ratio = T[i][ncols] / T[i][enter];
        if (leave == T.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == T.size()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult minimize(const RMat& A, const RVec& b, const RVec& c) {
  std::size_t m = A.size(), n = c.size();
  for (auto& row : A)
    if (row.size() != n) throw std::invalid_argument("lp: ragged matrix");
  Tableau tb;
  tb.ncols = n + m;
  tb.basis.resize(m);
  tb.T.assign(m, RVec(n + m + 1, 0));
  for (std::size_t i = 0; i < m; ++i) {
    bool neg = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) tb.T[i][j] = neg ? Rational(-A[i][j]) : A[i][j];
    tb.T[i][n + i] = 1;
    tb.T[i][n + m] = neg ? Rational(-b[i]) : b[i];
    tb.basis[i] = n + i;
  }
  RVec phase1(n + m, 0);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  tb.run(phase1, n + m);
  Rational art = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (tb.basis[i] >= n) art += tb.T[i][n + m];
  LpResult res;
  if (art != 0) return res;
  // drive artificials out of the basis, dropping redundant rows
  for (std::size_t i = 0; i < tb.T.size();) {
    if (tb.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t j = 0;
    while (j < n && tb.T[i][j] == 0) ++j;
    if (j < n) {
      tb.pivot(i, j);
      ++i;
    } else {
      tb.T.erase(tb.T.begin() + static_cast<long>(i));
      tb.basis.erase(tb.basis.begin() + static_cast<long>(i));
    }
  }
  RVec cost(n + m, 0);
  for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
  if (!tb.run(cost, n)) {
    res.status = LpResult::Status::Unbounded;
    return res;
  }
  res.status = LpResult::Status::Optimal;
  res.x.assign(n, 0);
  for (std::size_t i = 0; i < tb.T.size(); ++i) res.x[tb.basis[i]] = tb.T[i][n + m];
  res.value = 0;
  for (std::size_t j = 0; j < n; ++j) res.value += c[j] * res.x[j];
  return res;
}

std::optional<RVec> nonneg_solution(const RMat& A, const RVec& b) {
  std::size_t n = A.empty() ? 0 : A[0].size();
  auto r = minimize(A, b, RVec(n, 0));
  if (r.status != LpResult::Status::Optimal) return std::nullopt;
  return r.x;
}

}  // namespace markov
