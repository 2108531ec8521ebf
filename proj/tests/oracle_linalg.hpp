// Test-only independent oracle: ideal membership and lengths by exhaustive low-degree
// linear algebra over the field (Macaulay matrices + exact Gaussian elimination).
// Deliberately shares no code path with the Gröbner engine it is used to check.
#ifndef SEQCM_TESTS_ORACLE_LINALG_HPP
#define SEQCM_TESTS_ORACLE_LINALG_HPP

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "seqcm/groebner.hpp"

namespace seqcm::oracle {

using Row = std::vector<Coeff>;

inline int gauss_rank(std::vector<Row>& rows, const FieldSpec& F) {
  if (rows.empty()) return 0;
  const size_t cols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    Coeff inv = fld_inv(F, rows[r][c]);
    for (size_t k = c; k < cols; ++k) rows[r][k] = fld_mul(F, rows[r][k], inv);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Coeff factor = rows[i][c];
      for (size_t k = c; k < cols; ++k)
        rows[i][k] = fld_sub(F, rows[i][k], fld_mul(F, factor, rows[r][k]));
    }
    ++r;
  }
  return static_cast<int>(r);
}

inline void enumerate_monomials(int nvars, int deg, std::vector<Expo>& out) {
  Expo cur;
  std::function<void(int, int)> rec = [&](int v, int remaining) {
    if (v == nvars - 1) {
      cur.e[v] = static_cast<uint16_t>(remaining);
      cur.deg = static_cast<uint32_t>(deg);
      out.push_back(cur);
      cur.e[v] = 0;
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur.e[v] = static_cast<uint16_t>(e);
      rec(v + 1, remaining - e);
    }
    cur.e[v] = 0;
  };
  if (nvars == 0) {
    if (deg == 0) out.push_back(Expo{});
    return;
  }
  rec(0, deg);
}

inline std::vector<Expo> monomials_up_to(int nvars, int deg) {
  std::vector<Expo> out;
  for (int e = 0; e <= deg; ++e) enumerate_monomials(nvars, e, out);
  return out;
}

inline Row poly_to_row(const Polynomial& f, const std::map<Expo, size_t, bool (*)(const Expo&, const Expo&)>& index,
                       size_t cols) {
  Row row(cols, Coeff(0));
  for (const auto& t : f.terms()) {
    auto it = index.find(t.m);
    if (it == index.end()) return {};  // exceeds the window
    row[it->second] = t.c;
  }
  return row;
}

inline bool expo_less(const Expo& a, const Expo& b) {
  if (a.deg != b.deg) return a.deg < b.deg;
  return a.e < b.e;
}

// Does f admit a representation sum h_i g_i with deg h_i <= mult_deg? A "yes" is a
// definitive membership certificate; a "no" only rules out that window.
inline bool member_up_to(const Polynomial& f, const std::vector<Polynomial>& gens, int mult_deg) {
  const auto& ring = f.ring();
  const auto& F = ring->field;
  int max_total = f.total_degree();
  for (const auto& g : gens) max_total = std::max(max_total, g.total_degree() + mult_deg);
  auto basis = monomials_up_to(ring->nvars(), max_total);
  std::map<Expo, size_t, bool (*)(const Expo&, const Expo&)> index(expo_less);
  for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

  std::vector<Row> rows;
  auto mults = monomials_up_to(ring->nvars(), mult_deg);
  for (const auto& g : gens)
    for (const auto& m : mults) {
      Row r = poly_to_row(g.mul_term(m, Coeff(1)), index, basis.size());
      if (!r.empty()) rows.push_back(std::move(r));
    }
  int rank_without = gauss_rank(rows, F);
  Row fr = poly_to_row(f, index, basis.size());
  if (fr.empty()) return false;
  rows.push_back(std::move(fr));
  int rank_with = gauss_rank(rows, F);
  return rank_with == rank_without;
}

// Vector-space dimension of the degree-e slice of R/I for homogeneous I.
inline int quotient_slice_dim(const Ideal& I, int e) {
  const auto& ring = I.ring();
  const auto& F = ring->field;
  std::vector<Expo> basis;
  enumerate_monomials(ring->nvars(), e, basis);
  std::map<Expo, size_t, bool (*)(const Expo&, const Expo&)> index(expo_less);
  for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  std::vector<Row> rows;
  for (const auto& g : I.gens()) {
    int dg = g.total_degree();
    if (dg > e) continue;
    std::vector<Expo> mults;
    enumerate_monomials(ring->nvars(), e - dg, mults);
    for (const auto& m : mults) rows.push_back(poly_to_row(g.mul_term(m, Coeff(1)), index, basis.size()));
  }
  return static_cast<int>(basis.size()) - gauss_rank(rows, F);
}

// Exact colength of a homogeneous ideal; nullopt if slices stay nonzero past the cap.
inline std::optional<unsigned long long> colength_homogeneous(const Ideal& I, int degree_cap = 40) {
  for (const auto& g : I.gens())
    if (!g.is_homogeneous()) throw std::logic_error("oracle needs homogeneous generators");
  unsigned long long total = 0;
  for (int e = 0; e <= degree_cap; ++e) {
    int d = quotient_slice_dim(I, e);
    if (d == 0) return total;
    total += static_cast<unsigned long long>(d);
  }
  return std::nullopt;
}

// Length of (U/J)_e slices summed: l(U/J) for homogeneous U containing homogeneous J.
inline std::optional<unsigned long long> subquotient_length_homogeneous(const Ideal& U, const Ideal& J,
                                                                        int degree_cap = 40) {
  unsigned long long total = 0;
  int zero_run = 0;
  for (int e = 0; e <= degree_cap; ++e) {
    int dU = quotient_slice_dim(U, e);
    int dJ = quotient_slice_dim(J, e);
    int diff = dJ - dU;  // dim U_e - dim J_e = (mon - rank U) flipped
    if (diff < 0) throw std::logic_error("containment violated in oracle");
    total += static_cast<unsigned long long>(diff);
    // U/J has finite length iff slices eventually vanish; require a run to be safe.
    if (diff == 0)
      ++zero_run;
    else
      zero_run = 0;
    if (zero_run >= 8 && e >= 8) return total;
  }
  return std::nullopt;
}

}  // namespace seqcm::oracle

#endif
