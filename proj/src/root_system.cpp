#include "minkq/root_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace minkq {

namespace {

bool lex_positive(const RootVec& r) {
  for (int c : r) {
    if (c > 0) return true;
    if (c < 0) return false;
  }
  return false;
}

RootVec add(const RootVec& a, const RootVec& b) {
  RootVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

std::vector<RootVec> RootDecomp::positive_roots() const {
  std::vector<RootVec> out;
  for (const auto& r : roots_)
    if (lex_positive(r)) out.push_back(r);
  return out;
}

const Mat& RootDecomp::space(const RootVec& r) const {
  auto it = spaces_.find(r);
  if (it == spaces_.end()) throw std::invalid_argument("not a root of this decomposition");
  return it->second;
}

Mat RootDecomp::sum_of_spaces(const std::vector<RootVec>& rs) const {
  Mat out;
  for (const auto& r : rs) out = hcat(out, space(r));
  return out;
}

Mat RootDecomp::project(const RootVec& r, const Mat& xc) const {
  auto it = slots_.find(r);
  if (it == slots_.end()) throw std::invalid_argument("not a root of this decomposition");
  Mat adapted_coords = adapted_inv_ * xc;
  Mat comp(xc.rows(), 1);
  for (int i = it->second.first; i < it->second.second; ++i)
    if (!adapted_coords.at(i, 0).is_zero())
      for (int j = 0; j < xc.rows(); ++j) comp.at(j, 0) += adapted_coords.at(i, 0) * adapted_.at(j, i);
  return comp;
}

Mat RootDecomp::project_zero(const Mat& xc) const {
  Mat adapted_coords = adapted_inv_ * xc;
  Mat comp(xc.rows(), 1);
  for (int i = zero_slot_.first; i < zero_slot_.second; ++i)
    if (!adapted_coords.at(i, 0).is_zero())
      for (int j = 0; j < xc.rows(); ++j) comp.at(j, 0) += adapted_coords.at(i, 0) * adapted_.at(j, i);
  return comp;
}

const RootVec& RootDecomp::alpha() const {
  if (alpha_.empty()) throw std::logic_error("alpha/beta are only defined for the rank-2 case");
  return alpha_;
}

const RootVec& RootDecomp::beta() const {
  if (beta_.empty()) throw std::logic_error("alpha/beta are only defined for the rank-2 case");
  return beta_;
}

RootDecomp root_decomposition(const LieAlg& g, const std::vector<Mat>& a_basis) {
  if (a_basis.empty()) throw std::invalid_argument("root_decomposition: empty a_basis");
  RootDecomp rd;
  rd.a_basis_ = a_basis;
  const int d = g.dim();
  const int rk = static_cast<int>(a_basis.size());

  std::vector<Mat> ads;
  ads.reserve(rk);
  for (const auto& a : a_basis) ads.push_back(g.ad(a));

  // enumerate the integer box |c_i| <= 2 in lex order
  std::vector<RootVec> box;
  RootVec cur(rk, -2);
  while (true) {
    box.push_back(cur);
    int i = rk - 1;
    while (i >= 0 && cur[i] == 2) cur[i--] = -2;
    if (i < 0) break;
    ++cur[i];
  }

  int total = 0;
  for (const auto& cand : box) {
    Mat stacked;
    for (int i = 0; i < rk; ++i) {
      Mat m = ads[i];
      if (cand[i] != 0)
        for (int t = 0; t < d; ++t) m.at(t, t) -= Rat(cand[i]);
      stacked = vcat(stacked, m);
    }
    Mat k = kernel_matrix(stacked);
    if (k.cols() == 0) continue;
    Mat canon = Subspace::span(k).basis();
    total += canon.cols();
    bool is_zero_vec = std::all_of(cand.begin(), cand.end(), [](int c) { return c == 0; });
    if (is_zero_vec) {
      rd.zero_space_ = canon;
    } else {
      rd.roots_.push_back(cand);
      rd.spaces_.emplace(cand, std::move(canon));
    }
  }
  if (total != d)
    throw std::invalid_argument(
        "root_decomposition: eigenspaces do not exhaust the algebra (bad Cartan basis)");

  std::sort(rd.roots_.begin(), rd.roots_.end());

  // adapted basis: g_0 first, then the root spaces in lex order
  Mat adapted = rd.zero_space_;
  rd.zero_slot_ = {0, rd.zero_space_.cols()};
  int ofs = rd.zero_space_.cols();
  for (const auto& r : rd.roots_) {
    const Mat& sp = rd.spaces_.at(r);
    rd.slots_[r] = {ofs, ofs + sp.cols()};
    ofs += sp.cols();
    adapted = hcat(adapted, sp);
  }
  auto inv = solve_linear(adapted, Mat::identity(d));
  if (!inv) throw std::logic_error("root_decomposition: adapted basis not invertible");
  rd.adapted_ = std::move(adapted);
  rd.adapted_inv_ = std::move(*inv);

  // simple-root labels for the rank-2 (so(2,n)) case: the ordered pair of
  // lex-positive simple roots with alpha + 2 beta again a root
  if (rk == 2) {
    auto positives = rd.positive_roots();
    std::vector<RootVec> simples;
    for (const auto& r : positives) {
      bool decomposable = false;
      for (const auto& s : positives)
        for (const auto& t : positives)
          if (add(s, t) == r) decomposable = true;
      if (!decomposable) simples.push_back(r);
    }
    if (simples.size() == 2) {
      for (int pick = 0; pick < 2; ++pick) {
        const RootVec& a = simples[pick];
        const RootVec& b = simples[1 - pick];
        if (rd.is_root(add(a, add(b, b)))) {
          rd.alpha_ = a;
          rd.beta_ = b;
          break;
        }
      }
    }
  }
  return rd;
}

Mat weyl_reflection(const LieAlg& g, SimpleRoot which) {
  if (g.p() != 2 || g.q() < 3)
    throw std::invalid_argument("weyl_reflection: only the so(2,n) setup is cataloged");
  const int n = g.ambient_dim();
  Mat r(n, n);
  if (which == SimpleRoot::alpha) {
    // swap the two hyperbolic coordinate pairs (1,3) <-> (2,4): exchanges the
    // Cartan generators, i.e. e1 <-> e2
    for (int i = 4; i < n; ++i) r.at(i, i) = 1;
    r.at(0, 1) = r.at(1, 0) = 1;
    r.at(2, 3) = r.at(3, 2) = 1;
  } else {
    // negate coordinate 4: fixes the first Cartan generator, flips the second,
    // i.e. e2 -> -e2
    for (int i = 0; i < n; ++i) r.at(i, i) = (i == 3) ? Rat(-1) : Rat(1);
  }
  return r;
}

}  // namespace minkq
