#include <lcext/polyring.hpp>

#include <sstream>

namespace lcext {

GradedFreeModule direct_sum(const GradedFreeModule& a, const GradedFreeModule& b) {
  GradedFreeModule out = a;
  out.degrees.insert(out.degrees.end(), b.degrees.begin(), b.degrees.end());
  return out;
}

HilbertRational free_hilbert(const GradedFreeModule& f, const WeightedRingSpec& spec) {
  LaurentPolynomial num;
  for (int a : f.degrees) num += LaurentPolynomial::t_power(a);
  return HilbertRational(std::move(num), spec.weights()).canonical();
}

GradedMatrix::GradedMatrix(std::size_t nvars, std::vector<int> row_degrees, std::vector<int> col_degrees)
    : nvars_(nvars), row_degrees_(std::move(row_degrees)), col_degrees_(std::move(col_degrees)), zero_(nvars) {}

GradedMatrix::GradedMatrix(std::size_t nvars, std::vector<int> row_degrees, std::vector<int> col_degrees,
                           const std::vector<std::vector<MultiPoly>>& rows)
    : GradedMatrix(nvars, std::move(row_degrees), std::move(col_degrees)) {
  if (rows.size() != this->rows()) throw std::invalid_argument("matrix row count does not match its row degrees");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols()) {
      throw std::invalid_argument("matrix row " + std::to_string(i) + " does not match the column degrees");
    }
    for (std::size_t j = 0; j < cols(); ++j) set(i, j, rows[i][j]);
  }
}

const MultiPoly& GradedMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows() || j >= cols()) throw std::out_of_range("matrix index out of range");
  const auto it = entries_.find({j, i});
  return it == entries_.end() ? zero_ : it->second;
}

void GradedMatrix::set(std::size_t i, std::size_t j, MultiPoly p) {
  if (i >= rows() || j >= cols()) throw std::out_of_range("matrix index out of range");
  if (p.is_zero()) {
    entries_.erase({j, i});
    return;
  }
  if (p.nvars() != nvars_) throw std::invalid_argument("matrix entry has the wrong number of variables");
  entries_.insert_or_assign({j, i}, std::move(p));
}

std::vector<MultiPoly> GradedMatrix::column(std::size_t j) const {
  std::vector<MultiPoly> out(rows(), zero_);
  for (auto it = entries_.lower_bound({j, 0}); it != entries_.end() && it->first.first == j; ++it) {
    out[it->first.second] = it->second;
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> GradedMatrix::inhomogeneous_entry(
    const WeightedRingSpec& spec) const {
  std::optional<std::pair<std::size_t, std::size_t>> first;
  for (const auto& [jc, p] : entries_) {
    const auto [j, i] = jc;
    const auto d = weighted_degree(p, spec);
    if (d && *d == col_degrees_[j] - row_degrees_[i]) continue;
    if (!first || std::make_pair(i, j) < *first) first = std::make_pair(i, j);
  }
  return first;
}

bool GradedMatrix::is_zero() const { return entries_.empty(); }

bool GradedMatrix::has_unit_entry() const {
  for (const auto& [ij, p] : entries_) {
    if (p.is_constant()) return true;
  }
  return false;
}

GradedMatrix GradedMatrix::with_degrees(std::vector<int> row_degrees, std::vector<int> col_degrees) const {
  if (row_degrees.size() != rows() || col_degrees.size() != cols()) {
    throw std::invalid_argument("degree lists do not match the matrix shape");
  }
  GradedMatrix out = *this;
  out.row_degrees_ = std::move(row_degrees);
  out.col_degrees_ = std::move(col_degrees);
  return out;
}

GradedMatrix GradedMatrix::shifted(int a) const {
  GradedMatrix out = *this;
  for (int& d : out.row_degrees_) d += a;
  for (int& d : out.col_degrees_) d += a;
  return out;
}

GradedMatrix GradedMatrix::transpose() const {
  std::vector<int> rows_t, cols_t;
  for (int d : col_degrees_) rows_t.push_back(-d);
  for (int d : row_degrees_) cols_t.push_back(-d);
  GradedMatrix out(nvars_, std::move(rows_t), std::move(cols_t));
  for (const auto& [ji, p] : entries_) out.entries_.emplace(std::make_pair(ji.second, ji.first), p);
  return out;
}

GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.cols() != b.rows() || a.col_degrees_ != b.row_degrees_) {
    throw std::invalid_argument("matrices are not composable as graded maps");
  }
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("matrices live over different rings");
  GradedMatrix out(a.nvars_, a.row_degrees_, b.col_degrees_);
  // Column j of a*b is the sum of b(k, j) times column k of a.
  std::map<std::pair<std::size_t, std::size_t>, MultiPoly> acc;
  for (const auto& [jk, q] : b.entries_) {
    const auto [j, k] = jk;
    for (auto it = a.entries_.lower_bound({k, 0}); it != a.entries_.end() && it->first.first == k; ++it) {
      auto [pos, fresh] = acc.try_emplace({j, it->first.second}, a.nvars_);
      pos->second += it->second * q;
    }
  }
  for (auto& [ji, p] : acc) {
    if (!p.is_zero()) out.entries_.emplace(ji, std::move(p));
  }
  return out;
}

std::string GradedMatrix::to_string(const WeightedRingSpec& spec) const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols(); ++j) out << (j ? ", " : "") << at(i, j).to_string(spec);
    out << "]";
  }
  out << "]";
  return out.str();
}

RingPresentation::RingPresentation(WeightedRingSpec ambient, std::vector<MultiPoly> relations)
    : ambient_(std::move(ambient)) {
  for (const auto& r : relations) {
    if (r.nvars() != ambient_.size()) throw std::invalid_argument("relation has the wrong number of variables");
    MultiPoly p = r.normalized(ambient_.field());
    if (p.is_zero()) continue;
    const auto d = weighted_degree(p, ambient_);
    if (!d) throw std::invalid_argument("relation " + p.to_string(ambient_) + " is not homogeneous");
    if (*d <= 0) throw std::invalid_argument("relation " + p.to_string(ambient_) + " must have positive degree");
    relations_.push_back(std::move(p));
  }
}

ModulePresentation::ModulePresentation(RingPresentation ring, GradedMatrix presentation)
    : ring_(std::move(ring)), presentation_(std::move(presentation)) {
  if (presentation_.nvars() != ring_.nvars()) {
    throw std::invalid_argument("presentation matrix lives over a different ring");
  }
  const Field& field = ring_.ambient().field();
  if (!field.is_rationals()) {
    for (std::size_t i = 0; i < presentation_.rows(); ++i) {
      for (std::size_t j = 0; j < presentation_.cols(); ++j) {
        presentation_.set(i, j, presentation_.at(i, j).normalized(field));
      }
    }
  }
  if (auto bad = presentation_.inhomogeneous_entry(ring_.ambient())) {
    throw std::invalid_argument("presentation entry (" + std::to_string(bad->first) + ", " +
                                std::to_string(bad->second) + ") is not homogeneous of degree colDegree - rowDegree");
  }
}

ModulePresentation ModulePresentation::free(const RingPresentation& ring, std::vector<int> degrees) {
  return ModulePresentation(ring, GradedMatrix(ring.nvars(), std::move(degrees), {}));
}

ModulePresentation ModulePresentation::residue_field(const RingPresentation& ring) {
  std::vector<MultiPoly> vars;
  for (std::size_t i = 0; i < ring.nvars(); ++i) vars.push_back(MultiPoly::variable(ring.nvars(), i));
  return cyclic_quotient(ring, vars);
}

ModulePresentation ModulePresentation::cyclic_quotient(const RingPresentation& ring,
                                                       const std::vector<MultiPoly>& generators) {
  std::vector<int> cols;
  std::vector<MultiPoly> row;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    const auto d = weighted_degree(g, ring.ambient());
    if (!d) throw std::invalid_argument("ideal generator " + g.to_string(ring.ambient()) + " is not homogeneous");
    cols.push_back(*d);
    row.push_back(g);
  }
  return ModulePresentation(ring, GradedMatrix(ring.nvars(), {0}, std::move(cols), {row}));
}

ModulePresentation twist(const ModulePresentation& m, int a) {
  return ModulePresentation(m.ring(), m.presentation().shifted(-a));
}

ModulePresentation direct_sum(const ModulePresentation& a, const ModulePresentation& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("direct sum of modules over different rings");
  const GradedMatrix& pa = a.presentation();
  const GradedMatrix& pb = b.presentation();
  std::vector<int> rows = pa.row_degrees(), cols = pa.col_degrees();
  rows.insert(rows.end(), pb.row_degrees().begin(), pb.row_degrees().end());
  cols.insert(cols.end(), pb.col_degrees().begin(), pb.col_degrees().end());
  GradedMatrix out(pa.nvars(), std::move(rows), std::move(cols));
  for (std::size_t i = 0; i < pa.rows(); ++i) {
    for (std::size_t j = 0; j < pa.cols(); ++j) out.set(i, j, pa.at(i, j));
  }
  for (std::size_t i = 0; i < pb.rows(); ++i) {
    for (std::size_t j = 0; j < pb.cols(); ++j) out.set(pa.rows() + i, pa.cols() + j, pb.at(i, j));
  }
  return ModulePresentation(a.ring(), std::move(out));
}

}  // namespace lcext
