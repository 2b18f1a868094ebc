#include <lcext/groebner.hpp>

#include <algorithm>
#include <map>

namespace lcext {

GroebnerBasis image_basis(const RingPresentation& ring, const GradedMatrix& a, std::optional<int> max_degree) {
  BuchbergerInput in;
  in.order = MonomialOrder(ring.ambient().weights(), a.row_degrees());
  in.field = ring.ambient().field();
  for (std::size_t j = 0; j < a.cols(); ++j) in.sparse_generators.push_back(sparse_column(a, j, in.order));
  in.relations = ring.relations();
  in.max_degree = max_degree;
  return buchberger(in);
}

std::vector<std::size_t> minimal_columns(const RingPresentation& ring, const GradedMatrix& a) {
  std::vector<std::size_t> idx = image_basis(ring, a).minimal_generators();
  std::sort(idx.begin(), idx.end());
  return idx;
}

GradedMatrix syzygy_matrix(const RingPresentation& ring, const GradedMatrix& a, std::optional<int> max_degree,
                           bool minimal) {
  const std::size_t r = a.rows(), m = a.cols(), n = ring.nvars();
  if (a.nvars() != n) throw std::invalid_argument("matrix lives over a different ring");
  if (m == 0) return GradedMatrix(n, {}, {});
  if (auto bad = a.inhomogeneous_entry(ring.ambient())) {
    throw std::invalid_argument("syzygies of an inhomogeneous matrix");
  }

  // Elimination module F + Q^m with F dominating: its basis meets 0 + Q^m in
  // a basis of the lifted syzygies.
  std::vector<int> degrees = a.row_degrees();
  degrees.insert(degrees.end(), a.col_degrees().begin(), a.col_degrees().end());
  BuchbergerInput elim;
  elim.order = MonomialOrder(ring.ambient().weights(), degrees, r);
  elim.field = ring.ambient().field();
  elim.relations = ring.relations();
  elim.max_degree = max_degree;
  for (std::size_t j = 0; j < m; ++j) {
    SparseVector v = sparse_column(a, j, elim.order);
    // The unit tag e_{r+j} lies in the lower block, below every term of the column.
    v.push_back(elim.order.make_term(Monomial(n), r + j, Rational(1)));
    elim.sparse_generators.push_back(std::move(v));
  }
  const GroebnerBasis gb = buchberger(elim);

  BuchbergerInput syz;
  syz.order = MonomialOrder(ring.ambient().weights(), a.col_degrees());
  syz.field = elim.field;
  syz.relations = ring.relations();
  syz.max_degree = max_degree;
  for (const auto& e : gb.elements()) {
    if (e.front().component < r) continue;
    SparseVector v;
    for (const auto& t : e) v.push_back(syz.order.make_term(t.monomial, t.component - r, t.coeff));
    std::sort(v.begin(), v.end(), [&](const ModuleTerm& x, const ModuleTerm& y) { return syz.order.compare(x, y) > 0; });
    syz.sparse_generators.push_back(std::move(v));
  }
  std::vector<std::size_t> chosen;
  if (minimal) {
    chosen = buchberger(syz).minimal_generators();
  } else {
    for (std::size_t i = 0; i < syz.sparse_generators.size(); ++i) chosen.push_back(i);
  }

  // Representatives reduced modulo I.
  BuchbergerInput rel;
  rel.order = syz.order;
  rel.field = syz.field;
  rel.relations = ring.relations();
  const GroebnerBasis rel_gb = buchberger(rel);

  std::vector<int> col_degrees;
  std::vector<SparseVector> cols;
  for (std::size_t idx : chosen) {
    SparseVector v = rel_gb.reduce(syz.sparse_generators[idx]);
    if (v.empty()) continue;
    col_degrees.push_back(*vector_degree(v));
    cols.push_back(std::move(v));
  }
  GradedMatrix out(n, a.col_degrees(), col_degrees);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::map<std::size_t, MultiPoly> entries;
    for (const auto& t : cols[j]) entries.try_emplace(t.component, n).first->second.add_term(t.monomial, t.coeff);
    for (auto& [i, p] : entries) out.set(i, j, std::move(p));
  }
  return out;
}

}  // namespace lcext
