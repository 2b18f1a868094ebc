#include <lcext/resolve.hpp>

namespace lcext {

namespace {

GradedMatrix scalar_identity(std::size_t nvars, std::size_t n, const MultiPoly& f) {
  GradedMatrix out(nvars, std::vector<int>(n, 0), std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) out.set(i, i, f);
  return out;
}

bool same_entries(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!(a.at(i, j) == b.at(i, j))) return false;
    }
  }
  return true;
}

// Source degrees making `entries` homogeneous over the given target degrees.
GradedMatrix graded_step(const GradedMatrix& entries, const std::vector<int>& target, const WeightedRingSpec& spec) {
  std::vector<int> source(entries.cols());
  for (std::size_t j = 0; j < entries.cols(); ++j) {
    std::optional<int> deg;
    for (std::size_t i = 0; i < entries.rows() && !deg; ++i) {
      if (entries.at(i, j).is_zero()) continue;
      const auto d = weighted_degree(entries.at(i, j), spec);
      if (!d) throw std::invalid_argument("matrix factorization entry is not homogeneous");
      deg = target[i] + *d;
    }
    if (!deg) throw std::invalid_argument("matrix factorization has a zero column");
    source[j] = *deg;
  }
  GradedMatrix out = entries.with_degrees(target, source);
  if (!out.is_homogeneous(spec)) throw std::invalid_argument("matrix factorization is not graded");
  return out;
}

}  // namespace

FreeResolution mf_resolution(const MatrixFactorizationPair& pair, const ModulePresentation& m0, int periods) {
  if (periods < 0) throw std::invalid_argument("number of periods must be non-negative");
  const std::size_t n = pair.a.rows();
  const std::size_t nv = m0.ring().nvars();
  if (pair.a.cols() != n || pair.b.rows() != n || pair.b.cols() != n) {
    throw std::invalid_argument("matrix factorization needs square matrices of equal size");
  }
  // Compare entries only: the pair is given without gradings.
  const GradedMatrix flat_a = pair.a.with_degrees(std::vector<int>(n, 0), std::vector<int>(n, 0));
  const GradedMatrix flat_b = pair.b.with_degrees(std::vector<int>(n, 0), std::vector<int>(n, 0));
  const GradedMatrix target = scalar_identity(nv, n, pair.f);
  if (!same_entries(flat_a * flat_b, target) || !same_entries(flat_b * flat_a, target)) {
    throw std::invalid_argument("A B = B A = f Id fails for the matrix factorization");
  }

  FreeResolution res;
  res.ring = m0.ring();
  const GradedMatrix& d1 = m0.presentation();
  res.modules.push_back(d1.target());
  res.modules.push_back(d1.source());
  res.differentials.push_back(d1);
  const WeightedRingSpec& spec = m0.ring().ambient();
  for (int step = 0; step < 2 * periods; ++step) {
    const GradedMatrix& entries = step % 2 == 0 ? pair.a : pair.b;
    if (res.modules.back().rank() != n) throw std::invalid_argument("first module does not match the factorization");
    GradedMatrix d = graded_step(entries, res.modules.back().degrees, spec);
    if (step == 0 && !reduce_modulo(res.ring, d1 * d).is_zero()) {
      throw std::invalid_argument("the presentation composed with A is not zero modulo the relations");
    }
    res.modules.push_back(d.source());
    res.differentials.push_back(std::move(d));
  }
  res.truncated = true;
  res.minimal = !has_unit_entries(res);
  return res;
}

}  // namespace lcext
