#include "minkq/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace minkq {

std::string SignatureTriple::to_string() const {
  std::ostringstream os;
  os << "(" << n_pos << "," << n_neg << "," << n_zero << ")";
  return os.str();
}

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  e_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      throw std::invalid_argument("ragged initializer for Mat");
    for (const auto& x : r) e_.push_back(x);
  }
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::col_vector(const std::vector<Rat>& entries) {
  Mat m(static_cast<int>(entries.size()), 1);
  for (int i = 0; i < m.rows(); ++i) m.at(i, 0) = entries[i];
  return m;
}

Mat Mat::diag(const std::vector<Rat>& entries) {
  int n = static_cast<int>(entries.size());
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = entries[i];
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::col(int j) const {
  Mat v(rows_, 1);
  for (int i = 0; i < rows_; ++i) v.at(i, 0) = at(i, j);
  return v;
}

void Mat::set_col(int j, const Mat& v) {
  for (int i = 0; i < rows_; ++i) at(i, j) = v.at(i, 0);
}

Mat Mat::operator+(const Mat& o) const {
  Mat r = *this;
  r += o;
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r = *this;
  r -= o;
  return r;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& x : r.e_) x = -x;
  return r;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat shape mismatch in +");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (!o.e_[i].is_zero()) e_[i] += o.e_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat shape mismatch in -");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (!o.e_[i].is_zero()) e_[i] -= o.e_[i];
  return *this;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Mat shape mismatch in *");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rat& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

Mat Mat::operator*(const Rat& s) const {
  Mat r = *this;
  for (auto& x : r.e_)
    if (!x.is_zero()) x *= s;
  return r;
}

Mat hcat(const Mat& a, const Mat& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat row mismatch");
  Mat r(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

Mat vcat(const Mat& a, const Mat& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.cols() != b.cols()) throw std::invalid_argument("vcat col mismatch");
  Mat r(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

Mat rref(Mat m, std::vector<int>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  int pr = 0;
  for (int pc = 0; pc < m.cols() && pr < m.rows(); ++pc) {
    int piv = -1;
    for (int i = pr; i < m.rows(); ++i)
      if (!m.at(i, pc).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != pr)
      for (int j = pc; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(piv, j));
    // normalize the pivot row
    if (m.at(pr, pc) != 1) {
      Rat inv = Rat(1) / m.at(pr, pc);
      m.at(pr, pc) = 1;
      for (int j = pc + 1; j < m.cols(); ++j)
        if (!m.at(pr, j).is_zero()) m.at(pr, j) *= inv;
    }
    for (int i = 0; i < m.rows(); ++i) {
      if (i == pr) continue;
      const Rat f = m.at(i, pc);
      if (f.is_zero()) continue;
      m.at(i, pc) = 0;
      for (int j = pc + 1; j < m.cols(); ++j)
        if (!m.at(pr, j).is_zero()) m.at(i, j) -= f * m.at(pr, j);
    }
    if (pivot_cols) pivot_cols->push_back(pc);
    ++pr;
  }
  return m;
}

int rank(const Mat& m) {
  std::vector<int> piv;
  rref(m, &piv);
  return static_cast<int>(piv.size());
}

Mat kernel_matrix(const Mat& m) {
  std::vector<int> piv;
  Mat r = rref(m, &piv);
  std::vector<bool> is_piv(m.cols(), false);
  for (int c : piv) is_piv[c] = true;
  int nullity = m.cols() - static_cast<int>(piv.size());
  Mat k(m.cols(), nullity);
  int idx = 0;
  for (int fc = 0; fc < m.cols(); ++fc) {
    if (is_piv[fc]) continue;
    k.at(fc, idx) = 1;
    for (std::size_t pi = 0; pi < piv.size(); ++pi)
      k.at(piv[pi], idx) = -r.at(static_cast<int>(pi), fc);
    ++idx;
  }
  return k;
}

std::vector<Mat> kernel(const Mat& m) {
  Mat k = kernel_matrix(m);
  std::vector<Mat> out;
  out.reserve(k.cols());
  for (int j = 0; j < k.cols(); ++j) out.push_back(k.col(j));
  return out;
}

std::optional<Mat> solve_linear(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_linear: row mismatch");
  std::vector<int> piv;
  Mat r = rref(hcat(a, b), &piv);
  // any pivot in the b-block means that column is not in the span of a
  for (int c : piv)
    if (c >= a.cols()) return std::nullopt;
  Mat x(a.cols(), b.cols());
  for (std::size_t pi = 0; pi < piv.size(); ++pi)
    for (int j = 0; j < b.cols(); ++j) x.at(piv[pi], j) = r.at(static_cast<int>(pi), a.cols() + j);
  return x;
}

Rat det(Mat m) {
  if (!m.is_square()) throw std::invalid_argument("det: non-square");
  Rat d = 1;
  for (int pc = 0; pc < m.cols(); ++pc) {
    int piv = -1;
    for (int i = pc; i < m.rows(); ++i)
      if (!m.at(i, pc).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != pc) {
      for (int j = pc; j < m.cols(); ++j) std::swap(m.at(pc, j), m.at(piv, j));
      d = -d;
    }
    const Rat& pv = m.at(pc, pc);
    d *= pv;
    for (int i = pc + 1; i < m.rows(); ++i) {
      Rat f = m.at(i, pc);
      if (f.is_zero()) continue;
      f /= pv;
      m.at(i, pc) = 0;
      for (int j = pc + 1; j < m.cols(); ++j)
        if (!m.at(pc, j).is_zero()) m.at(i, j) -= f * m.at(pc, j);
    }
  }
  return d;
}

CongruenceResult congruent_diagonalize(const Mat& s) {
  if (!s.is_symmetric()) throw std::invalid_argument("congruent_diagonalize: input not symmetric");
  const int n = s.rows();
  Mat d = s;
  Mat p = Mat::identity(n);

  // elementary congruences: apply column op to d and p, matching row op to d
  auto add_col = [&](Mat& m, int dst, int src, const Rat& f) {
    for (int i = 0; i < m.rows(); ++i)
      if (!m.at(i, src).is_zero()) m.at(i, dst) += f * m.at(i, src);
  };
  auto add_row = [&](Mat& m, int dst, int src, const Rat& f) {
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(src, j).is_zero()) m.at(dst, j) += f * m.at(src, j);
  };
  auto swap_cols = [&](Mat& m, int a, int b) {
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
  };
  auto swap_rows = [&](Mat& m, int a, int b) {
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
  };

  for (int i = 0; i < n; ++i) {
    if (d.at(i, i).is_zero()) {
      // prefer bringing a nonzero diagonal entry forward
      int jd = -1;
      for (int j = i + 1; j < n; ++j)
        if (!d.at(j, j).is_zero()) {
          jd = j;
          break;
        }
      if (jd >= 0) {
        swap_cols(d, i, jd);
        swap_rows(d, i, jd);
        swap_cols(p, i, jd);
      } else {
        int jo = -1;
        for (int j = i + 1; j < n; ++j)
          if (!d.at(i, j).is_zero()) {
            jo = j;
            break;
          }
        if (jo < 0) continue;  // row/column i already clear
        // d[i][i] becomes 2*d[i][jo] since both diagonals vanish
        add_col(d, i, jo, 1);
        add_row(d, i, jo, 1);
        add_col(p, i, jo, 1);
      }
    }
    const Rat pivot = d.at(i, i);
    for (int j = i + 1; j < n; ++j) {
      if (d.at(i, j).is_zero()) continue;
      Rat f = -d.at(i, j) / pivot;
      add_col(d, j, i, f);
      add_row(d, j, i, f);
      add_col(p, j, i, f);
    }
  }
  return {d, p};
}

SignatureTriple signature(const Mat& s) {
  CongruenceResult c = congruent_diagonalize(s);
  SignatureTriple t;
  for (int i = 0; i < c.d.rows(); ++i) {
    int sg = c.d.at(i, i).sign();
    if (sg > 0)
      ++t.n_pos;
    else if (sg < 0)
      ++t.n_neg;
    else
      ++t.n_zero;
  }
  return t;
}

std::string to_text(const Mat& m) {
  std::ostringstream os;
  os << m.rows() << " " << m.cols() << "\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << rat_to_string(m.at(i, j));
    }
    os << "\n";
  }
  return os.str();
}

MatParseError::MatParseError(int line_, int col_, const std::string& what_)
    : std::runtime_error("matrix parse error at line " + std::to_string(line_) + ", column " +
                         std::to_string(col_) + ": " + what_),
      line(line_),
      col(col_) {}

namespace {

// whitespace-separated tokenizer that tracks line/column for error reports
struct Tokenizer {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  void skip_ws() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '\n') {
        ++line;
        col = 1;
        ++pos;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++col;
        ++pos;
      } else {
        break;
      }
    }
  }

  // returns empty string at end of input; reports the token start position
  std::string next(int& tline, int& tcol) {
    skip_ws();
    tline = line;
    tcol = col;
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != '\n' &&
           text[pos] != '\r') {
      ++pos;
      ++col;
    }
    return text.substr(start, pos - start);
  }
};

int parse_count(Tokenizer& tk, const char* what) {
  int l, c;
  std::string t = tk.next(l, c);
  if (t.empty()) throw MatParseError(l, c, std::string("missing ") + what);
  try {
    std::size_t used = 0;
    int v = std::stoi(t, &used);
    if (used != t.size() || v < 0) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw MatParseError(l, c, std::string("bad ") + what + " '" + t + "'");
  }
}

}  // namespace

Mat mat_from_text(const std::string& text) {
  Tokenizer tk{text};
  int rows = parse_count(tk, "row count");
  int cols = parse_count(tk, "column count");
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      int l, c;
      std::string t = tk.next(l, c);
      if (t.empty()) throw MatParseError(l, c, "unexpected end of input");
      try {
        m.at(i, j) = rat_from_string(t);
      } catch (const std::invalid_argument& e) {
        throw MatParseError(l, c, e.what());
      }
    }
  int l, c;
  std::string extra = tk.next(l, c);
  if (!extra.empty()) throw MatParseError(l, c, "trailing data '" + extra + "'");
  return m;
}

Mat mat_from_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return mat_from_text(buf.str());
}

}  // namespace minkq
