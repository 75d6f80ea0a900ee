#include "markov/solve.hpp"

#include "markov/errors.hpp"

namespace markov {

namespace {

std::vector<LinearEq> with_normalisation(const KernelSystem& s) {
  std::vector<LinearEq> eqs = s.eqs;
  const Semiring& R = *s.R;
  for (std::size_t a = 0; a < s.dom.size(); ++a) {
    LinearEq e{{}, R.one()};
    for (std::size_t x = 0; x < s.cod.size(); ++x) e.terms.push_back({s.var(x, a), R.one()});
    eqs.push_back(std::move(e));
  }
  return eqs;
}

void to_matrix(const KernelSystem& s, RMat& A, RVec& b) {
  const Semiring& R = *s.R;
  std::size_t n = s.dom.size() * s.cod.size();
  for (auto& e : with_normalisation(s)) {
    RVec row(n, 0);
    for (auto& t : e.terms) row.at(t.var) += R.as_rational(t.coeff);
    A.push_back(std::move(row));
    b.push_back(R.as_rational(e.rhs));
  }
}

bool satisfies(const Semiring& R, const std::vector<LinearEq>& eqs, const std::vector<Value>& x) {
  for (auto& e : eqs) {
    Value s = R.zero();
    for (auto& t : e.terms) s = R.add(s, R.mul(t.coeff, x[t.var]));
    if (s != e.rhs) return false;
  }
  return true;
}

}  // namespace

Kernel kernel_from_rationals(const KernelSystem& sys, const RVec& x) {
  const Semiring& R = *sys.R;
  return Kernel::build(sys.R, sys.dom, sys.cod,
                       [&](std::size_t c, std::size_t a) { return R.from_rational(x[sys.var(c, a)]); });
}

SystemSolution solve(const KernelSystem& sys, std::size_t enum_cap) {
  const Semiring& R = *sys.R;
  SystemSolution out;
  std::size_t nd = sys.dom.size(), nc = sys.cod.size();
  if (auto elems = R.elements()) {
    out.method = "enumeration";
    // normalised columns first, then their product
    std::vector<std::vector<Value>> cols;
    std::vector<std::size_t> idx(nc, 0);
    std::size_t budget = enum_cap;
    while (true) {
      if (budget-- == 0) return out;
      std::vector<Value> col(nc);
      for (std::size_t k = 0; k < nc; ++k) col[k] = (*elems)[idx[k]];
      if (R.sum(col) == R.one()) cols.push_back(col);
      std::size_t k = nc;
      while (k > 0) {
        if (++idx[k - 1] < elems->size()) break;
        idx[k - 1] = 0;
        --k;
      }
      if (k == 0) break;
    }
    double total = 1;
    for (std::size_t a = 0; a < nd; ++a) total *= static_cast<double>(cols.size());
    if (total > static_cast<double>(enum_cap)) return out;
    std::vector<std::size_t> pick(nd, 0);
    std::vector<Value> x(nd * nc);
    while (true) {
      for (std::size_t a = 0; a < nd; ++a)
        for (std::size_t c = 0; c < nc; ++c) x[sys.var(c, a)] = cols[pick[a]][c];
      if (satisfies(R, sys.eqs, x)) out.solutions.push_back(Kernel(sys.R, sys.dom, sys.cod, x));
      std::size_t a = nd;
      while (a > 0) {
        if (++pick[a - 1] < cols.size()) break;
        pick[a - 1] = 0;
        --a;
      }
      if (a == 0) break;
    }
    out.exhaustive = true;
    out.status = out.solutions.empty() ? SystemSolution::Status::None : SystemSolution::Status::Found;
    return out;
  }
  if (!R.rational_kind()) {
    out.method = "unsupported for " + R.name();
    return out;
  }
  RMat A;
  RVec b;
  to_matrix(sys, A, b);
  out.affine = solve_affine(A, b);
  out.exhaustive = true;
  if (!out.affine) {
    out.method = "linear solve: inconsistent";
    out.status = SystemSolution::Status::None;
    return out;
  }
  if (R.kind() == Kind::Rational) {
    out.method = "linear solve";
    out.status = SystemSolution::Status::Found;
    out.solutions.push_back(kernel_from_rationals(sys, out.affine->particular));
    return out;
  }
  out.method = "simplex";
  auto x = nonneg_solution(A, b);
  if (!x) {
    out.status = SystemSolution::Status::None;
    return out;
  }
  out.status = SystemSolution::Status::Found;
  out.solutions.push_back(kernel_from_rationals(sys, *x));
  return out;
}

std::optional<VarRange> variable_range(const KernelSystem& sys, std::size_t var) {
  const Semiring& R = *sys.R;
  if (!R.rational_kind()) throw UnsupportedError("variable_range needs a rational semiring");
  RMat A;
  RVec b;
  to_matrix(sys, A, b);
  std::size_t n = sys.dom.size() * sys.cod.size();
  if (R.kind() == Kind::Rational) {
    auto s = solve_affine(A, b);
    if (!s) return std::nullopt;
    for (auto& d : s->directions)
      if (d[var] != 0) throw UnsupportedError("variable is unbounded over the signed rationals");
    return VarRange{s->particular[var], s->particular[var], s->particular, s->particular};
  }
  RVec c(n, 0);
  c[var] = 1;
  auto lo = minimize(A, b, c);
  if (lo.status != LpResult::Status::Optimal) return std::nullopt;
  c[var] = -1;
  auto hi = minimize(A, b, c);
  return VarRange{lo.value, Rational(-hi.value), lo.x, hi.x};
}

std::vector<bool> affinely_free(const KernelSystem& sys) {
  if (!sys.R->rational_kind()) throw UnsupportedError("affinely_free needs a rational semiring");
  RMat A;
  RVec b;
  to_matrix(sys, A, b);
  std::vector<bool> out(sys.dom.size() * sys.cod.size(), false);
  auto s = solve_affine(A, b);
  if (!s) return out;
  for (auto& d : s->directions)
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d[i] != 0) out[i] = true;
  return out;
}

}  // namespace markov
