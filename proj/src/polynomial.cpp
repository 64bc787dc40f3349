#include "minkq/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace minkq {

namespace {
const Rat kZero(0);
}

const Rat& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (int i = degree(); i >= 0; --i) {
    acc *= x;
    acc += c_[i];
  }
  return acc;
}

Poly Poly::derivative() const {
  if (degree() <= 0) return Poly();
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<int>(i));
  return Poly(std::move(d));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
  return Poly(std::move(r));
}

Poly Poly::operator-() const {
  std::vector<Rat> r = c_;
  for (auto& x : r) x = -x;
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (!o.c_[j].is_zero()) r[i + j] += c_[i] * o.c_[j];
  }
  return Poly(std::move(r));
}

Poly Poly::operator*(const Rat& s) const {
  if (s.is_zero()) return Poly();
  std::vector<Rat> r = c_;
  for (auto& x : r) x *= s;
  return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::invalid_argument("Poly::divmod by zero");
  Poly q;
  std::vector<Rat> r = num.c_;
  std::vector<Rat> qc(num.degree() >= den.degree() ? num.degree() - den.degree() + 1 : 0);
  const Rat& dl = den.lead();
  for (int k = num.degree() - den.degree(); k >= 0; --k) {
    Rat f = r[k + den.degree()] / dl;
    qc[k] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= den.degree(); ++j)
      if (!den.c_[j].is_zero()) r[k + j] -= f * den.c_[j];
  }
  return {Poly(std::move(qc)), Poly(std::move(r))};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second.primitive_scaled();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly Poly::primitive_scaled() const {
  if (is_zero()) return *this;
  Int num_gcd = 0;
  Int den_lcm = 1;
  for (const auto& x : c_) {
    if (x.is_zero()) continue;
    num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(numerator(x)));
    den_lcm = boost::multiprecision::lcm(den_lcm, denominator(x));
  }
  Rat scale(den_lcm, num_gcd);
  return (*this) * scale;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return (*this) * (Rat(1) / lead());
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << rat_to_string(c_[i]);
    if (i > 0) os << "*t^" << i;
    first = false;
  }
  return os.str();
}

Poly squarefree_part(const Poly& f) {
  if (f.degree() <= 0) return f;
  Poly g = Poly::gcd(f, f.derivative());
  return Poly::divmod(f, g).first.primitive_scaled();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  // Yun's algorithm over Q
  std::vector<std::pair<Poly, int>> out;
  if (f.degree() <= 0) return out;
  Poly a = Poly::gcd(f, f.derivative());
  Poly b = Poly::divmod(f, a).first;
  Poly c = Poly::divmod(f.derivative(), a).first;
  Poly d = c - b.derivative();
  int mult = 1;
  while (b.degree() > 0) {
    Poly p = Poly::gcd(b, d);
    if (p.degree() > 0) out.emplace_back(p, mult);
    b = Poly::divmod(b, p).first;
    c = Poly::divmod(d, p).first;
    d = c - b.derivative();
    ++mult;
  }
  return out;
}

std::vector<Poly> sturm_chain(const Poly& f) {
  std::vector<Poly> chain;
  Poly s0 = squarefree_part(f).primitive_scaled();
  if (s0.degree() <= 0) return chain;
  chain.push_back(s0);
  chain.push_back(s0.derivative().primitive_scaled());
  while (chain.back().degree() > 0) {
    Poly r = Poly::divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back((-r).primitive_scaled());
  }
  return chain;
}

namespace {

int variations(const std::vector<int>& signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int variations_at(const std::vector<Poly>& chain, const Rat& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(p.eval(x).sign());
  return variations(signs);
}

// dir = +1 for +infinity, -1 for -infinity
int variations_at_inf(const std::vector<Poly>& chain, int dir) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) {
    int s = p.lead().sign();
    if (dir < 0 && (p.degree() % 2 == 1)) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

}  // namespace

int count_real_roots(const Poly& f) {
  auto chain = sturm_chain(f);
  if (chain.empty()) return 0;
  return variations_at_inf(chain, -1) - variations_at_inf(chain, +1);
}

int count_real_roots_in(const Poly& f, const Rat& a, const Rat& b) {
  auto chain = sturm_chain(f);
  if (chain.empty()) return 0;
  return variations_at(chain, a) - variations_at(chain, b);
}

int count_real_roots_left_of(const Poly& f, const Rat& b) {
  auto chain = sturm_chain(f);
  if (chain.empty()) return 0;
  return variations_at_inf(chain, -1) - variations_at(chain, b);
}

int count_real_roots_right_of(const Poly& f, const Rat& a) {
  auto chain = sturm_chain(f);
  if (chain.empty()) return 0;
  return variations_at(chain, a) - variations_at_inf(chain, +1);
}

bool all_roots_real(const Poly& f) {
  Poly s = squarefree_part(f);
  if (s.degree() <= 0) return true;
  return count_real_roots(s) == s.degree();
}

Int root_bound(const Poly& f) {
  // Cauchy bound: 1 + max |a_i| / |a_n|
  if (f.degree() <= 0) return 1;
  Rat m(0);
  for (int i = 0; i < f.degree(); ++i) {
    Rat q = boost::multiprecision::abs(f.coeff(i) / f.lead());
    if (q > m) m = q;
  }
  Int b = numerator(m) / denominator(m);
  return b + 2;
}

std::vector<RootInterval> isolate_real_roots(const Poly& f) {
  std::vector<RootInterval> exact;
  Poly g = squarefree_part(f).primitive_scaled();

  // deflate any rational root the bisection stumbles on, so all remaining
  // interval endpoints are guaranteed non-roots
  auto deflate_at = [&](const Rat& r) {
    Poly lin({-r, Rat(1)});
    while (true) {
      auto [q, rem] = Poly::divmod(g, lin);
      if (!rem.is_zero()) break;
      g = q;
    }
    exact.push_back({r, r, true});
  };

  std::vector<RootInterval> open;
  bool restarted = true;
  while (restarted) {
    restarted = false;
    open.clear();
    if (g.degree() <= 0) break;
    auto chain = sturm_chain(g);
    Int b = root_bound(g);
    Rat lo = Rat(-b), hi = Rat(b);
    int total = variations_at(chain, lo) - variations_at(chain, hi);
    std::vector<std::tuple<Rat, Rat, int>> stack;
    if (total > 0) stack.emplace_back(lo, hi, total);
    auto bisect = [&](Rat& a, Rat& c) {
      // shrink (a, c] keeping its single root; false when a deflation restart
      // is required
      Rat mid = (a + c) / 2;
      if (g.eval(mid).is_zero()) {
        deflate_at(mid);
        return false;
      }
      if (variations_at(chain, a) - variations_at(chain, mid) == 1)
        c = mid;
      else
        a = mid;
      return true;
    };
    while (!stack.empty() && !restarted) {
      auto [a, c, cnt] = stack.back();
      stack.pop_back();
      if (cnt == 1) {
        // refine until no previously found exact root touches [a, c]
        bool clean = false;
        while (!clean && !restarted) {
          clean = true;
          for (const auto& e : exact)
            if (a <= e.lo && e.lo <= c) {
              clean = false;
              if (!bisect(a, c)) restarted = true;
              break;
            }
        }
        if (!restarted) open.push_back({a, c, false});
        continue;
      }
      Rat mid = (a + c) / 2;
      if (g.eval(mid).is_zero()) {
        deflate_at(mid);
        restarted = true;
        break;
      }
      int left = variations_at(chain, a) - variations_at(chain, mid);
      if (left > 0) stack.emplace_back(a, mid, left);
      if (cnt - left > 0) stack.emplace_back(mid, c, cnt - left);
    }
  }

  std::vector<RootInterval> all = exact;
  all.insert(all.end(), open.begin(), open.end());
  std::sort(all.begin(), all.end(), [](const RootInterval& x, const RootInterval& y) {
    return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
  });
  return all;
}

Poly char_poly(const Mat& a) {
  if (!a.is_square()) throw std::invalid_argument("char_poly: non-square");
  const int n = a.rows();
  std::vector<Rat> c(n + 1);
  c[n] = 1;
  Mat m = Mat::identity(n);  // running M_k
  for (int k = 1; k <= n; ++k) {
    m = a * m;
    Rat tr(0);
    for (int i = 0; i < n; ++i) tr += m.at(i, i);
    c[n - k] = -tr / Rat(k);
    for (int i = 0; i < n; ++i) m.at(i, i) += c[n - k];
  }
  return Poly(std::move(c));
}

Poly min_poly(const Mat& a) {
  if (!a.is_square()) throw std::invalid_argument("min_poly: non-square");
  const int n = a.rows();
  const int nn = n * n;
  auto flatten = [&](const Mat& m) {
    Mat v(nn, 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v.at(i * n + j, 0) = m.at(i, j);
    return v;
  };
  Mat powers = flatten(Mat::identity(n));  // columns: vec(a^0), vec(a^1), ...
  Mat cur = Mat::identity(n);
  for (int k = 1; k <= n; ++k) {
    cur = cur * a;
    Mat v = flatten(cur);
    if (auto x = solve_linear(powers, v)) {
      std::vector<Rat> c(k + 1);
      for (int i = 0; i < k; ++i) c[i] = -x->at(i, 0);
      c[k] = 1;
      return Poly(std::move(c));
    }
    powers = hcat(powers, v);
  }
  throw std::logic_error("min_poly: no dependence up to the dimension");
}

SignatureTriple eigen_sign_count(const Poly& cp) {
  SignatureTriple t;
  if (cp.is_zero()) throw std::invalid_argument("eigen_sign_count: zero polynomial");
  // multiplicity of the root 0 = number of trailing zero coefficients
  int z = 0;
  while (cp.coeff(z).is_zero()) ++z;
  t.n_zero = z;
  std::vector<Rat> shifted(cp.coeffs().begin() + z, cp.coeffs().end());
  Poly rest{std::move(shifted)};
  for (const auto& [factor, mult] : squarefree_decomposition(rest)) {
    t.n_pos += mult * count_real_roots_right_of(factor, Rat(0));
    t.n_neg += mult * count_real_roots_left_of(factor, Rat(0));
  }
  return t;
}

}  // namespace minkq
