#include "minkq/iwasawa.hpp"

#include <stdexcept>

namespace minkq {

std::vector<Mat> standard_cartan(const LieAlg& g) {
  const int p = g.p();
  const int n = g.ambient_dim();
  if (p < 1 || n < 2 * p) throw std::invalid_argument("standard_cartan: need p <= q");
  std::vector<Mat> a;
  a.reserve(p);
  for (int i = 0; i < p; ++i) {
    Mat m(n, n);
    m.at(i, p + i) = 1;
    m.at(p + i, i) = 1;
    a.push_back(std::move(m));
  }
  return a;
}

IwasawaData iwasawa(const LieAlg& g) {
  if (g.p() != 1 && g.p() != 2)
    throw std::invalid_argument("iwasawa: only so(1,n) and so(2,n) are supported");
  if (g.q() <= g.p()) throw std::invalid_argument("iwasawa: need q > p");

  IwasawaData iw;
  iw.a_basis = standard_cartan(g);

  // theta(X) = -X^T: the standard basis splits into the antisymmetric part k
  // and the symmetric part p
  for (int i = 0; i < g.dim(); ++i) {
    const Mat& b = g.basis_element(i);
    if (b.transpose() == -b) iw.k_basis.push_back(b);
  }

  RootDecomp rd = root_decomposition(g, iw.a_basis);
  Mat n_coords = rd.nilradical();
  for (int j = 0; j < n_coords.cols(); ++j) iw.n_basis.push_back(g.from_coords(n_coords.col(j)));

  // m = centralizer of a inside k = g_0 intersected with k
  Mat k_coords(g.dim(), static_cast<int>(iw.k_basis.size()));
  for (std::size_t j = 0; j < iw.k_basis.size(); ++j)
    k_coords.set_col(static_cast<int>(j), g.coords(iw.k_basis[j]));
  Subspace m_space = Subspace::span(rd.zero_space()).intersect(Subspace::span(k_coords));
  for (int j = 0; j < m_space.dim(); ++j) iw.m_basis.push_back(g.from_coords(m_space.basis().col(j)));

  // structural invariants
  {
    Mat stacked = hcat(hcat(k_coords, Mat(g.dim(), 0)), n_coords);
    Mat a_coords(g.dim(), static_cast<int>(iw.a_basis.size()));
    for (std::size_t j = 0; j < iw.a_basis.size(); ++j)
      a_coords.set_col(static_cast<int>(j), g.coords(iw.a_basis[j]));
    stacked = hcat(stacked, a_coords);
    if (rank(stacked) != g.dim() ||
        static_cast<int>(iw.k_basis.size() + iw.a_basis.size() + iw.n_basis.size()) != g.dim())
      throw std::logic_error("iwasawa: k + a + n is not a direct sum decomposition");

    for (const auto& x : iw.a_basis) {
      if (!(x.transpose() == x)) throw std::logic_error("iwasawa: a not in the -1 eigenspace of theta");
      for (const auto& y : iw.a_basis)
        if (!g.bracket(x, y).is_zero()) throw std::logic_error("iwasawa: a not abelian");
    }

    ClosureCheck nc = is_subalgebra(g, iw.n_basis);
    if (!nc.ok) throw std::logic_error("iwasawa: n not closed: " + nc.reason);
    Subspace n_space = Subspace::span(n_coords);
    for (const auto& a : iw.a_basis)
      for (const auto& x : iw.n_basis)
        if (!n_space.contains(g.coords(g.bracket(a, x))))
          throw std::logic_error("iwasawa: n not normalized by a");

    for (const auto& m : iw.m_basis)
      for (const auto& a : iw.a_basis)
        if (!g.bracket(m, a).is_zero()) throw std::logic_error("iwasawa: m does not centralize a");
  }
  return iw;
}

}  // namespace minkq
