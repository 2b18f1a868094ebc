#include <lcext/resolve.hpp>

#include <map>
#include <sstream>

namespace lcext {

namespace {

std::string module_string(const GradedFreeModule& f, const std::string& ring) {
  if (f.rank() == 0) return "0";
  std::map<int, int> counts;
  for (int a : f.degrees) ++counts[a];
  std::string out;
  for (const auto& [a, n] : counts) {
    if (!out.empty()) out += " + ";
    out += ring;
    if (a != 0) out += "(" + std::to_string(-a) + ")";
    if (n > 1) out += "^" + std::to_string(n);
  }
  return out;
}

FreeResolution resolve(const ModulePresentation& m, int max_step, bool minimal) {
  if (max_step < 0) throw std::invalid_argument("resolution length must be non-negative");
  FreeResolution res;
  res.ring = m.ring();
  res.minimal = minimal;
  GradedMatrix d = minimal ? minimal_presentation(m.ring(), m.presentation()) : m.presentation();
  res.modules.push_back(d.target());
  for (int step = 1; step <= max_step; ++step) {
    if (d.cols() == 0) {
      res.truncated = false;
      return res;
    }
    res.modules.push_back(d.source());
    res.differentials.push_back(d);
    if (step < max_step) d = syzygy_matrix(m.ring(), d, std::nullopt, minimal);
  }
  if (d.cols() == 0) res.truncated = false;
  return res;
}

}  // namespace

std::string FreeResolution::to_string(const std::string& ring_name, bool with_matrices) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < modules.size(); ++i) {
    out << "F_" << i << " = " << module_string(modules[i], ring_name) << "\n";
    if (with_matrices && i >= 1) out << "d_" << i << " = " << d(i).to_string(ring.ambient()) << "\n";
  }
  if (truncated) out << "(truncated after F_" << modules.size() - 1 << ")\n";
  return out.str();
}

FreeResolution minimal_resolution(const ModulePresentation& m, int max_step) { return resolve(m, max_step, true); }

FreeResolution nonminimal_resolution(const ModulePresentation& m, int max_step) {
  FreeResolution res = resolve(m, max_step, false);
  res.minimal = !has_unit_entries(res);
  return res;
}

GradedMatrix reduce_modulo(const RingPresentation& ring, const GradedMatrix& a) {
  if (ring.is_polynomial_ring()) return a;
  const GroebnerBasis gb = image_basis(ring, GradedMatrix(ring.nvars(), {0}, {}));
  GradedMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a.at(i, j).is_zero()) out.set(i, j, gb.normal_form({a.at(i, j)})[0]);
    }
  }
  return out;
}

bool is_complex(const FreeResolution& res) {
  for (std::size_t i = 2; i <= res.length(); ++i) {
    if (!reduce_modulo(res.ring, res.d(i - 1) * res.d(i)).is_zero()) return false;
  }
  return true;
}

bool has_unit_entries(const FreeResolution& res) {
  for (const auto& d : res.differentials) {
    if (d.has_unit_entry()) return true;
  }
  return false;
}

LaurentPolynomial betti_polynomial(const FreeResolution& res) {
  LaurentPolynomial out;
  for (std::size_t i = 0; i < res.modules.size(); ++i) {
    for (int a : res.modules[i].degrees) out += LaurentPolynomial::term(i % 2 ? -1 : 1, a);
  }
  return out;
}

}  // namespace lcext
