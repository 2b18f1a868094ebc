#include <lcext/resolve.hpp>

namespace lcext {

namespace {

std::optional<std::pair<std::size_t, std::size_t>> first_unit(const GradedMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a.at(i, j).is_zero() && a.at(i, j).is_constant()) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

template <class T>
std::vector<T> erase_index(std::vector<T> v, std::size_t k) {
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(k));
  return v;
}

GradedMatrix drop_row(const GradedMatrix& a, std::size_t r) {
  GradedMatrix out(a.nvars(), erase_index(a.row_degrees(), r), a.col_degrees());
  for (std::size_t i = 0, ii = 0; i < a.rows(); ++i) {
    if (i == r) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(ii, j, a.at(i, j));
    ++ii;
  }
  return out;
}

GradedMatrix drop_col(const GradedMatrix& a, std::size_t c) {
  GradedMatrix out(a.nvars(), a.row_degrees(), erase_index(a.col_degrees(), c));
  for (std::size_t j = 0, jj = 0; j < a.cols(); ++j) {
    if (j == c) continue;
    for (std::size_t i = 0; i < a.rows(); ++i) out.set(i, jj, a.at(i, j));
    ++jj;
  }
  return out;
}

// Column operations clearing row r outside column c, then removal of row r
// and column c: the split summand spanned by e_c -> f_r.
GradedMatrix eliminate_unit(const GradedMatrix& a, std::size_t r, std::size_t c, const Field& field) {
  const Rational inv = 1 / a.at(r, c).constant_term();
  GradedMatrix b = a;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (j == c || a.at(r, j).is_zero()) continue;
    const MultiPoly factor = a.at(r, j) * inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (a.at(i, c).is_zero()) continue;
      b.set(i, j, (b.at(i, j) - a.at(i, c) * factor).normalized(field));
    }
  }
  return drop_col(drop_row(b, r), c);
}

}  // namespace

GradedMatrix minimal_presentation(const RingPresentation& ring, const GradedMatrix& a) {
  const Field& field = ring.ambient().field();
  GradedMatrix p = reduce_modulo(ring, a);
  while (auto u = first_unit(p)) p = reduce_modulo(ring, eliminate_unit(p, u->first, u->second, field));
  const std::vector<std::size_t> keep = minimal_columns(ring, p);
  std::vector<int> col_degrees;
  for (std::size_t j : keep) col_degrees.push_back(p.col_degrees()[j]);
  GradedMatrix out(p.nvars(), p.row_degrees(), col_degrees);
  for (std::size_t jj = 0; jj < keep.size(); ++jj) {
    for (std::size_t i = 0; i < p.rows(); ++i) out.set(i, jj, p.at(i, keep[jj]));
  }
  return out;
}

FreeResolution minimalize(FreeResolution res) {
  const Field& field = res.ring.ambient().field();
  for (auto& d : res.differentials) d = reduce_modulo(res.ring, d);
  for (;;) {
    bool changed = false;
    for (std::size_t i = 1; i <= res.length() && !changed; ++i) {
      const auto u = first_unit(res.d(i));
      if (!u) continue;
      const auto [r, c] = *u;
      GradedMatrix& di = res.differentials[i - 1];
      di = reduce_modulo(res.ring, eliminate_unit(di, r, c, field));
      // The new basis vector d_i(e_c) of F_{i-1} maps to zero, and the e_c
      // coordinate of anything in ker d_i vanishes.
      if (i >= 2) res.differentials[i - 2] = drop_col(res.differentials[i - 2], r);
      if (i < res.length()) res.differentials[i] = drop_row(res.differentials[i], c);
      res.modules[i - 1] = GradedFreeModule{erase_index(res.modules[i - 1].degrees, r)};
      res.modules[i] = GradedFreeModule{erase_index(res.modules[i].degrees, c)};
      changed = true;
    }
    if (!changed) break;
  }
  if (res.truncated && res.length() > 0) {
    // No later differential exposes redundant columns of the last one.
    GradedMatrix& last = res.differentials.back();
    const std::vector<std::size_t> keep = minimal_columns(res.ring, last);
    std::vector<int> degrees;
    for (std::size_t j : keep) degrees.push_back(last.col_degrees()[j]);
    GradedMatrix trimmed(last.nvars(), last.row_degrees(), degrees);
    for (std::size_t jj = 0; jj < keep.size(); ++jj) {
      for (std::size_t i = 0; i < last.rows(); ++i) trimmed.set(i, jj, last.at(i, keep[jj]));
    }
    last = std::move(trimmed);
    res.modules.back() = last.source();
  } else {
    while (!res.differentials.empty() && res.modules.back().rank() == 0) {
      res.differentials.pop_back();
      res.modules.pop_back();
    }
  }
  res.minimal = true;
  return res;
}

}  // namespace lcext
