#include "markov/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include "markov/errors.hpp"

namespace markov {

namespace {

using I64 = std::int64_t;

I64 cmul(I64 a, I64 b) {
  I64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("ideal coordinate overflow");
  return r;
}
I64 cadd(I64 a, I64 b) {
  I64 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("ideal coordinate overflow");
  return r;
}
I64 csub(I64 a, I64 b) {
  I64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("ideal coordinate overflow");
  return r;
}

I64 floor_div(I64 a, I64 b) {
  I64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

I64 gcd64(I64 a, I64 b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b) {
    I64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::vector<Ideal::Vec> close_under_2i(std::vector<Ideal::Vec> rows) {
  // span(G) + T span(G) is already T-stable since T^2 = -4, but iterate to a fixed point anyway
  for (int guard = 0; guard < 16; ++guard) {
    std::vector<Ideal::Vec> ext = rows;
    for (auto& r : rows) ext.push_back(times_2i(r));
    auto next = hnf(ext);
    if (next == rows) return next;
    rows = std::move(next);
  }
  throw std::logic_error("ideal closure did not stabilise");
}

}  // namespace

Ideal::Vec times_2i(Ideal::Vec v) { return {cmul(-4, v[1]), v[0]}; }

Ideal::Vec mul_elements(Ideal::Vec x, Ideal::Vec y) {
  // (a1 + 2i b1)(a2 + 2i b2) = (a1 a2 - 4 b1 b2) + 2i (a1 b2 + a2 b1)
  return {csub(cmul(x[0], y[0]), cmul(4, cmul(x[1], y[1]))),
          cadd(cmul(x[0], y[1]), cmul(y[0], x[1]))};
}

std::vector<Ideal::Vec> hnf(std::vector<Ideal::Vec> vs) {
  std::vector<Ideal::Vec> rows;
  for (auto& v : vs)
    if (v[0] != 0 || v[1] != 0) rows.push_back(v);
  // Euclid on the first column
  while (true) {
    std::size_t piv = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i][0] != 0 && (piv == rows.size() || std::llabs(rows[i][0]) < std::llabs(rows[piv][0])))
        piv = i;
    if (piv == rows.size()) break;
    bool changed = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == piv || rows[i][0] == 0) continue;
      I64 q = rows[i][0] / rows[piv][0];
      rows[i][0] = csub(rows[i][0], cmul(q, rows[piv][0]));
      rows[i][1] = csub(rows[i][1], cmul(q, rows[piv][1]));
      changed = true;
    }
    if (!changed) break;
  }
  std::vector<Ideal::Vec> lead;
  I64 g = 0;
  for (auto& r : rows) {
    if (r[0] != 0)
      lead.push_back(r);
    else
      g = gcd64(g, r[1]);
  }
  if (lead.size() > 1) throw std::logic_error("hnf: first column not reduced");
  std::vector<Ideal::Vec> out;
  if (!lead.empty()) {
    Ideal::Vec p = lead[0];
    if (p[0] < 0) p = {-p[0], -p[1]};
    if (g > 0) p[1] = csub(p[1], cmul(floor_div(p[1], g), g));
    out.push_back(p);
  }
  if (g > 0) out.push_back({0, g});
  return out;
}

Ideal Ideal::generated(const std::vector<Vec>& gens) {
  Ideal I;
  I.rows_ = close_under_2i(hnf(gens));
  return I;
}

bool Ideal::contains(Vec v) const {
  if (rows_.empty()) return v[0] == 0 && v[1] == 0;
  if (rows_.size() == 1) {
    auto& r = rows_[0];
    if (r[0] == 0) return v[0] == 0 && v[1] % r[1] == 0;
    if (v[0] % r[0] != 0) return false;
    return cmul(v[0] / r[0], r[1]) == v[1];
  }
  auto& r0 = rows_[0];
  auto& r1 = rows_[1];
  if (v[0] % r0[0] != 0) return false;
  I64 rest = csub(v[1], cmul(v[0] / r0[0], r0[1]));
  return rest % r1[1] == 0;
}

Ideal Ideal::operator+(const Ideal& o) const {
  std::vector<Vec> g = rows_;
  g.insert(g.end(), o.rows_.begin(), o.rows_.end());
  return generated(g);
}

Ideal Ideal::operator*(const Ideal& o) const {
  std::vector<Vec> g;
  for (auto& x : rows_)
    for (auto& y : o.rows_) g.push_back(mul_elements(x, y));
  return generated(g);
}

std::string Ideal::str() const {
  if (rows_.empty()) return "(0)";
  if (rows_.size() == 2 && rows_[0][1] == 0)
    return "(" + std::to_string(rows_[0][0]) + "," + std::to_string(2 * rows_[1][1]) + "i)";
  std::string s = "[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ",";
    s += "[" + std::to_string(rows_[i][0]) + "," + std::to_string(rows_[i][1]) + "]";
  }
  return s + "]";
}

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::vector<I64> ints_in(const std::string& s) {
  std::vector<I64> v;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '-' || std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      v.push_back(std::stoll(s.substr(i, j - i)));
      i = j;
    } else {
      ++i;
    }
  }
  return v;
}

}  // namespace

Ideal Ideal::parse(const std::string& raw) {
  std::string s = strip(raw);
  Ideal I;
  std::vector<Vec> rows;
  if (s == "(0)" || s == "0") return I;
  if (s.size() >= 4 && s.front() == '(' && s.back() == ')' && s[s.size() - 2] == 'i') {
    auto v = ints_in(s);
    if (v.size() != 2 || v[1] % 2 != 0) throw UsageError("bad ideal literal '" + raw + "'");
    rows = {{v[0], 0}, {0, v[1] / 2}};
  } else if (s.size() >= 4 && s.substr(0, 2) == "[[") {
    auto v = ints_in(s);
    if (v.size() != 4 && v.size() != 2) throw UsageError("bad ideal literal '" + raw + "'");
    for (std::size_t k = 0; k + 1 < v.size(); k += 2) rows.push_back({v[k], v[k + 1]});
  } else {
    throw UsageError("bad ideal literal '" + raw + "'");
  }
  I.rows_ = hnf(rows);
  if (close_under_2i(I.rows_) != I.rows_)
    throw UsageError("'" + raw + "' is a subgroup but not an ideal of Z[2i]");
  return I;
}

}  // namespace markov
