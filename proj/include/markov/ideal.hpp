#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace markov {

// Ideals of Z[2i] = { a + 2ib : a, b in Z }, stored as a subgroup of Z^2 in
// coordinates (a, b). Rows are in Hermite normal form:
//   rank 2: [[p, q], [0, r]] with p, r > 0 and 0 <= q < r
//   rank 0: no rows (the zero ideal)
class Ideal {
 public:
  using Vec = std::array<std::int64_t, 2>;

  Ideal() = default;  // zero ideal

  static Ideal generated(const std::vector<Vec>& gens);
  static Ideal principal(Vec alpha) { return generated({alpha}); }
  static Ideal unit() { return generated({Vec{1, 0}}); }

  const std::vector<Vec>& basis() const { return rows_; }
  bool is_zero() const { return rows_.empty(); }
  bool contains(Vec v) const;

  Ideal operator+(const Ideal& o) const;
  Ideal operator*(const Ideal& o) const;
  bool operator==(const Ideal& o) const { return rows_ == o.rows_; }
  bool operator!=(const Ideal& o) const { return !(*this == o); }

  // "(m,ki)" when the basis is diagonal, "[[p,q],[0,r]]" otherwise, "(0)" for zero
  std::string str() const;
  static Ideal parse(const std::string& s);

 private:
  std::vector<Vec> rows_;
};

// multiplication by 2i: (a, b) -> (-4b, a)
Ideal::Vec times_2i(Ideal::Vec v);
Ideal::Vec mul_elements(Ideal::Vec x, Ideal::Vec y);

// Hermite normal form of the row lattice spanned by vs (any rank)
std::vector<Ideal::Vec> hnf(std::vector<Ideal::Vec> vs);

}  // namespace markov
