#include "minkq/lie_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace minkq {

LieAlg LieAlg::make_so(int p, int q) {
  if (p < 0 || q < 0 || p + q < 2) throw std::invalid_argument("make_so: need p,q >= 0 and p+q >= 2");
  LieAlg g;
  g.p_ = p;
  g.q_ = q;
  const int n = p + q;
  g.j_ = Mat(n, n);
  for (int i = 0; i < n; ++i) g.j_.at(i, i) = (i < p) ? Rat(-1) : Rat(1);

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat b(n, n);
      bool crossing = (i < p) && (j >= p);
      b.at(i, j) = 1;
      b.at(j, i) = crossing ? Rat(1) : Rat(-1);
      g.basis_.push_back(std::move(b));
      g.pairs_.emplace_back(i, j);
    }

  // ad matrices = structure constants; verified against the commutators
  const int d = g.dim();
  g.ad_.reserve(d);
  for (int i = 0; i < d; ++i) {
    Mat adm(d, d);
    for (int k = 0; k < d; ++k) {
      Mat br = g.bracket(g.basis_[i], g.basis_[k]);
      Mat c = g.coords(br);
      adm.set_col(k, c);
      if (g.from_coords(c) != br) throw std::logic_error("make_so: structure constants inconsistent");
    }
    g.ad_.push_back(std::move(adm));
  }
  return g;
}

std::string LieAlg::name() const {
  std::ostringstream os;
  os << "so(" << p_ << "," << q_ << ")";
  return os.str();
}

bool LieAlg::contains(const Mat& x) const {
  if (x.rows() != ambient_dim() || x.cols() != ambient_dim()) return false;
  return (x.transpose() * j_ + j_ * x).is_zero();
}

Mat LieAlg::coords(const Mat& x) const {
  auto c = try_coords(x);
  if (!c) throw std::invalid_argument("element is not in " + name());
  return *c;
}

std::optional<Mat> LieAlg::try_coords(const Mat& x) const {
  if (!contains(x)) return std::nullopt;
  Mat c(dim(), 1);
  for (int k = 0; k < dim(); ++k) c.at(k, 0) = x.at(pairs_[k].first, pairs_[k].second);
  return c;
}

Mat LieAlg::from_coords(const Mat& c) const {
  if (c.rows() != dim() || c.cols() != 1) throw std::invalid_argument("from_coords: shape");
  Mat x(ambient_dim(), ambient_dim());
  for (int k = 0; k < dim(); ++k) {
    const Rat& v = c.at(k, 0);
    if (v.is_zero()) continue;
    auto [i, j] = pairs_[k];
    bool crossing = (i < p_) && (j >= p_);
    x.at(i, j) += v;
    x.at(j, i) += crossing ? v : -v;
  }
  return x;
}

Mat LieAlg::ad(const Mat& x) const { return ad_of_coords(coords(x)); }

Mat LieAlg::ad_of_coords(const Mat& xc) const {
  Mat m(dim(), dim());
  for (int i = 0; i < dim(); ++i) {
    const Rat& v = xc.at(i, 0);
    if (v.is_zero()) continue;
    for (int r = 0; r < dim(); ++r)
      for (int k = 0; k < dim(); ++k) {
        const Rat& a = ad_[i].at(r, k);
        if (!a.is_zero()) m.at(r, k) += v * a;
      }
  }
  return m;
}

Mat LieAlg::bracket_coords(const Mat& xc, const Mat& yc) const {
  Mat out(dim(), 1);
  for (int i = 0; i < dim(); ++i) {
    const Rat& v = xc.at(i, 0);
    if (v.is_zero()) continue;
    for (int k = 0; k < dim(); ++k) {
      const Rat& w = yc.at(k, 0);
      if (w.is_zero()) continue;
      const Mat& adm = ad_[i];
      for (int r = 0; r < dim(); ++r) {
        const Rat& a = adm.at(r, k);
        if (!a.is_zero()) out.at(r, 0) += v * w * a;
      }
    }
  }
  return out;
}

Mat killing_form(const LieAlg& g) {
  const int d = g.dim();
  Mat b(d, d);
  const auto& ads = g.ad_basis();
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Rat tr(0);
      for (int r = 0; r < d; ++r)
        for (int k = 0; k < d; ++k) {
          const Rat& x = ads[i].at(r, k);
          if (x.is_zero()) continue;
          const Rat& y = ads[j].at(k, r);
          if (!y.is_zero()) tr += x * y;
        }
      b.at(i, j) = tr;
      if (j != i) b.at(j, i) = std::move(tr);
    }
  return b;
}

Rat killing_eval(const Mat& killing, const Mat& xc, const Mat& yc) {
  Rat out(0);
  for (int i = 0; i < killing.rows(); ++i) {
    const Rat& xi = xc.at(i, 0);
    if (xi.is_zero()) continue;
    for (int j = 0; j < killing.cols(); ++j) {
      const Rat& yj = yc.at(j, 0);
      if (yj.is_zero()) continue;
      const Rat& k = killing.at(i, j);
      if (!k.is_zero()) out += xi * yj * k;
    }
  }
  return out;
}

ClosureCheck is_subalgebra(const LieAlg& g, const std::vector<Mat>& basis) {
  ClosureCheck res;
  const int k = static_cast<int>(basis.size());
  Mat coords(g.dim(), k);
  for (int i = 0; i < k; ++i) {
    auto c = g.try_coords(basis[i]);
    if (!c) {
      res.bad_i = i;
      res.reason = "basis element " + std::to_string(i) + " is not in " + g.name();
      return res;
    }
    coords.set_col(i, *c);
  }
  if (rank(coords) != k) {
    res.reason = "basis is linearly dependent";
    return res;
  }
  res.coeffs.assign(k, std::vector<std::vector<Rat>>(k));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Mat br = g.coords(g.bracket(basis[i], basis[j]));
      auto x = solve_linear(coords, br);
      if (!x) {
        res.bad_i = i;
        res.bad_j = j;
        res.reason = "bracket of basis elements " + std::to_string(i) + "," + std::to_string(j) +
                     " leaves the span";
        return res;
      }
      std::vector<Rat> cf(k);
      for (int t = 0; t < k; ++t) cf[t] = x->at(t, 0);
      std::vector<Rat> neg(k);
      for (int t = 0; t < k; ++t) neg[t] = -cf[t];
      res.coeffs[i][j] = std::move(cf);
      res.coeffs[j][i] = std::move(neg);
    }
  for (int i = 0; i < k; ++i) res.coeffs[i][i] = std::vector<Rat>(k, Rat(0));
  res.ok = true;
  return res;
}

Subalg make_subalgebra(std::shared_ptr<const LieAlg> g, std::string name, std::vector<Mat> basis) {
  ClosureCheck c = is_subalgebra(*g, basis);
  if (!c.ok) throw std::invalid_argument("make_subalgebra(" + name + "): " + c.reason);
  Subalg h;
  h.ambient = std::move(g);
  h.name = std::move(name);
  h.basis = std::move(basis);
  h.basis_coords = Mat(h.ambient->dim(), h.dim());
  for (int i = 0; i < h.dim(); ++i) h.basis_coords.set_col(i, h.ambient->coords(h.basis[i]));
  h.closure = std::move(c.coeffs);
  return h;
}

Subalg conjugate_subalgebra(const Subalg& h, const Mat& r, const std::string& new_name) {
  const LieAlg& g = *h.ambient;
  if (!(r.transpose() * g.J() * r == g.J()))
    throw std::invalid_argument("conjugate_subalgebra: matrix does not preserve the form");
  auto rinv = solve_linear(r, Mat::identity(g.ambient_dim()));
  if (!rinv) throw std::invalid_argument("conjugate_subalgebra: matrix not invertible");
  std::vector<Mat> basis;
  basis.reserve(h.basis.size());
  for (const auto& b : h.basis) basis.push_back(r * b * (*rinv));
  return make_subalgebra(h.ambient, new_name, std::move(basis));
}

}  // namespace minkq
