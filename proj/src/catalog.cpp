#include "minkq/catalog.hpp"

#include <sstream>
#include <stdexcept>

#include "minkq/elements.hpp"
#include "minkq/structure.hpp"

namespace minkq {

namespace {

std::string so_name(int p, int q) {
  std::ostringstream os;
  os << "so(" << p << "," << q << ")";
  return os.str();
}

std::string su_name(int k) {
  std::ostringstream os;
  os << "su(1," << k << ")";
  return os.str();
}

// transport a matrix through an injective coordinate map
Mat embed_matrix(const Mat& small, const std::vector<int>& index_map, int big_n) {
  Mat big(big_n, big_n);
  for (int i = 0; i < small.rows(); ++i)
    for (int j = 0; j < small.cols(); ++j)
      if (!small.at(i, j).is_zero()) big.at(index_map[i], index_map[j]) = small.at(i, j);
  return big;
}

std::vector<Mat> embedded_so_basis(const LieAlg& small, const std::vector<int>& index_map, int big_n) {
  std::vector<Mat> out;
  out.reserve(small.dim());
  for (const auto& b : small.basis()) out.push_back(embed_matrix(b, index_map, big_n));
  return out;
}

// Realification of su(1,k) acting on C^{k+1} identified with R^{2k+2} in the
// interleaved order (Re z0, Im z0, Re z1, Im z1, ...); the Hermitian form
// -|z0|^2 + sum |zj|^2 then lands exactly on diag(-1,-1,+1,...,+1).
Mat realify(const Mat& re, const Mat& im, int big_n) {
  Mat out(big_n, big_n);
  for (int a = 0; a < re.rows(); ++a)
    for (int b = 0; b < re.cols(); ++b) {
      if (!re.at(a, b).is_zero()) {
        out.at(2 * a, 2 * b) = re.at(a, b);
        out.at(2 * a + 1, 2 * b + 1) = re.at(a, b);
      }
      if (!im.at(a, b).is_zero()) {
        out.at(2 * a, 2 * b + 1) = -im.at(a, b);
        out.at(2 * a + 1, 2 * b) = im.at(a, b);
      }
    }
  return out;
}

std::vector<Mat> su_basis(int k, int big_n) {
  // su(1,k) = { Jc * M : M anti-Hermitian, tr(Jc M) = 0 }, Jc = diag(-1,1,..,1)
  const int s = k + 1;
  auto jc_row_sign = [&](int a) { return a == 0 ? Rat(-1) : Rat(1); };
  std::vector<Mat> out;
  auto push = [&](const Mat& m_re, const Mat& m_im) {
    Mat z_re(s, s), z_im(s, s);
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b) {
        z_re.at(a, b) = jc_row_sign(a) * m_re.at(a, b);
        z_im.at(a, b) = jc_row_sign(a) * m_im.at(a, b);
      }
    out.push_back(realify(z_re, z_im, big_n));
  };
  Mat zero(s, s);
  for (int a = 0; a < s; ++a)
    for (int b = a + 1; b < s; ++b) {
      Mat m(s, s);
      m.at(a, b) = 1;
      m.at(b, a) = -1;
      push(m, zero);  // M = E_ab - E_ba
      Mat mi(s, s);
      mi.at(a, b) = 1;
      mi.at(b, a) = 1;
      push(zero, mi);  // M = i (E_ab + E_ba)
    }
  for (int l = 1; l <= k; ++l) {
    Mat mi(s, s);
    mi.at(0, 0) = 1;
    mi.at(l, l) = 1;
    push(zero, mi);  // M = i (E_00 + E_ll), traceless against Jc
  }
  return out;
}

struct Families {
  int p, q, n, k;
  bool so1 = false, so2 = false;
};

Families families_of(const LieAlg& g) {
  Families f{g.p(), g.q(), g.q(), g.q() / 2};
  f.so1 = (g.p() == 1 && g.q() >= 2);
  f.so2 = (g.p() == 2 && g.q() >= 3);
  return f;
}

}  // namespace

std::vector<CatalogEntry> list_catalog(const LieAlg& g) {
  std::vector<CatalogEntry> out;
  Families f = families_of(g);
  Mat id = Mat::identity(g.ambient_dim());
  const int n = f.n;
  if (f.so1) {
    out.push_back({so_name(1, n - 1), "so(1,n-1)<so(1,n)", n * (n - 1) / 2, id});
    out.push_back({"a", "a", 1, id});
    out.push_back({"n", "n", n - 1, id});
    if (n >= 3) out.push_back({"m", "m", (n - 1) * (n - 2) / 2, id});
  } else if (f.so2) {
    const int k = f.k;
    int dim_m = (n - 2) * (n - 3) / 2;
    int dim_min = dim_m + 2 + (2 * n - 2);
    out.push_back({so_name(1, n), "so(1,n)<so(2,n)", (n + 1) * n / 2, id});
    out.push_back({su_name(k), n % 2 == 0 ? "su(1,k)<so(2,2k)" : "su(1,k)<so(2,2k+1)",
                   (k + 1) * (k + 1) - 1, id});
    out.push_back({"min_parabolic", "min_parabolic", dim_min, id});
    out.push_back({"p_alpha", "p_alpha", dim_min + 1, id});
    out.push_back({"p_beta", "p_beta", dim_min + (n - 2), id});
    out.push_back({"a", "a", 2, id});
    out.push_back({"n", "n", 2 * n - 2, id});
    if (n >= 4) out.push_back({"m", "m", dim_m, id});
  }
  return out;
}

Subalg standard_subalgebra(std::shared_ptr<const LieAlg> g, std::string_view name) {
  Families f = families_of(*g);
  if (!f.so1 && !f.so2)
    throw std::invalid_argument("standard_subalgebra: no catalog for " + g->name());
  const int n = f.n;
  const int big = g->ambient_dim();
  std::string nm(name);

  auto build_vecs = [&](const std::string& label, std::vector<Mat> basis) {
    return make_subalgebra(g, label, std::move(basis));
  };
  auto from_cols = [&](const std::string& label, const Mat& coords) {
    std::vector<Mat> basis;
    basis.reserve(coords.cols());
    for (int j = 0; j < coords.cols(); ++j) basis.push_back(g->from_coords(coords.col(j)));
    return make_subalgebra(g, label, std::move(basis));
  };

  if (f.so1) {
    if (nm == so_name(1, n - 1) || nm == "so(1,n-1)<so(1,n)") {
      if (n < 2) throw std::invalid_argument("standard_subalgebra: need n >= 2");
      LieAlg small = make_so(1, n - 1);
      std::vector<int> idx(n);
      for (int i = 0; i < n; ++i) idx[i] = i;  // fix the last coordinate
      return build_vecs(so_name(1, n - 1), embedded_so_basis(small, idx, big));
    }
  } else {
    if (nm == so_name(1, n) || nm == "so(1,n)<so(2,n)") {
      LieAlg small = make_so(1, n);
      std::vector<int> idx(n + 1);
      idx[0] = 0;  // omit coordinate 2 (index 1), the second negative one
      for (int i = 1; i <= n; ++i) idx[i] = i + 1;
      return build_vecs(so_name(1, n), embedded_so_basis(small, idx, big));
    }
    const int k = f.k;
    if (nm == su_name(k) || nm == "su(1,k)<so(2,2k)" || nm == "su(1,k)<so(2,2k+1)") {
      if (k < 1) throw std::invalid_argument("standard_subalgebra: su(1,k) needs n >= 2");
      return build_vecs(su_name(k), su_basis(k, big));
    }
    auto data = so_data(2, n);
    if (nm == "min_parabolic" || nm == "p_alpha" || nm == "p_beta") {
      Mat cols;
      for (const auto& b : data->iw.m_basis) cols = hcat(cols, g->coords(b));
      for (const auto& b : data->iw.a_basis) cols = hcat(cols, g->coords(b));
      cols = hcat(cols, data->roots.nilradical());
      if (nm == "p_alpha") {
        RootVec neg = data->roots.alpha();
        for (auto& c : neg) c = -c;
        cols = hcat(cols, data->roots.space(neg));
      } else if (nm == "p_beta") {
        RootVec neg = data->roots.beta();
        for (auto& c : neg) c = -c;
        cols = hcat(cols, data->roots.space(neg));
      }
      return from_cols(nm, cols);
    }
  }

  // common Iwasawa pieces
  auto data = so_data(g->p(), g->q());
  if (nm == "a") return build_vecs("a", data->iw.a_basis);
  if (nm == "n") return build_vecs("n", data->iw.n_basis);
  if (nm == "m") {
    if (data->iw.m_basis.empty())
      throw std::invalid_argument("standard_subalgebra: m is trivial for " + g->name());
    return build_vecs("m", data->iw.m_basis);
  }
  throw std::invalid_argument("standard_subalgebra: unknown entry '" + nm + "' for " + g->name());
}

Mat rank_one_cartan_element(const LieAlg& g, std::string_view name) {
  Families f = families_of(g);
  const int big = g.ambient_dim();
  std::string nm(name);
  if (f.so2 && (nm == so_name(1, f.n) || nm == "so(1,n)<so(2,n)")) {
    Mat t(big, big);
    t.at(0, 2) = 1;
    t.at(2, 0) = 1;  // the embedded boost of so(1,n), = a_1 of the ambient
    return t;
  }
  if (f.so2 && (nm == su_name(f.k) || nm == "su(1,k)<so(2,2k)" || nm == "su(1,k)<so(2,2k+1)")) {
    Mat t(big, big);
    t.at(0, 2) = t.at(2, 0) = 1;
    t.at(1, 3) = t.at(3, 1) = 1;  // realified E_01 + E_10, = a_1 + a_2
    return t;
  }
  if (f.so1 && (nm == so_name(1, f.n - 1) || nm == "so(1,n-1)<so(1,n)")) {
    Mat t(big, big);
    t.at(0, 1) = 1;
    t.at(1, 0) = 1;
    return t;
  }
  throw std::invalid_argument("rank_one_cartan_element: no cataloged element for '" + nm + "'");
}

Subalg maximal_unipotent_subalgebra(const Subalg& h, const Mat& t) {
  const LieAlg& g = *h.ambient;
  const int k = h.dim();
  Mat tc = g.coords(t);

  // ad t restricted to h on the h-basis coordinates
  Mat brackets(g.dim(), k);
  for (int i = 0; i < k; ++i) brackets.set_col(i, g.bracket_coords(tc, h.basis_coords.col(i)));
  auto restricted = solve_linear(h.basis_coords, brackets);
  if (!restricted) throw std::invalid_argument("maximal_unipotent_subalgebra: t does not normalize h");

  Mat positive;  // columns: h-coordinates of the positive eigenspaces
  int covered = 0;
  for (int lam = -4; lam <= 4; ++lam) {
    Mat m = *restricted;
    for (int i = 0; i < k; ++i) m.at(i, i) -= Rat(lam);
    Mat ker = kernel_matrix(m);
    covered += ker.cols();
    if (lam > 0) positive = hcat(positive, ker);
  }
  if (covered != k)
    throw std::invalid_argument("maximal_unipotent_subalgebra: t is not ad-diagonalizable on h "
                                "with small integer spectrum");

  Mat canon = Subspace::span(h.basis_coords * positive).basis();
  std::vector<Mat> basis;
  basis.reserve(canon.cols());
  for (int j = 0; j < canon.cols(); ++j) basis.push_back(g.from_coords(canon.col(j)));
  Subalg u = make_subalgebra(h.ambient, h.name + ".n", std::move(basis));
  for (const auto& b : u.basis)
    if (classify_element(g, b) != ElementClass::nilpotent)
      throw std::logic_error("maximal_unipotent_subalgebra: non-nilpotent element in the result");
  return u;
}

}  // namespace minkq
