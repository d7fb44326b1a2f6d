#include "ribbons/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace ribbons {

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::vector<Scalar> ExactMatrix::apply(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

std::string ExactMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[";
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
    os << "]\n";
  }
  return os.str();
}

namespace {

void swap_rows(ExactMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

int find_pivot(const ExactMatrix& m, int from_row, int col) {
  for (int i = from_row; i < m.rows(); ++i)
    if (!m.at(i, col).is_zero()) return i;
  return -1;
}

// Fraction-free forward pass (Bareiss one-step update). Each intermediate
// entry is a minor of the input, so integer input stays integer and rational
// numerators/denominators stay bounded. Valid over any field.
std::vector<int> bareiss_forward(ExactMatrix& m, int* swaps) {
  std::vector<int> pivots;
  Scalar prev = Scalar::one(m.field());
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    const int pr = find_pivot(m, r, c);
    if (pr < 0) continue;
    if (pr != r && swaps) ++*swaps;
    swap_rows(m, pr, r);
    const Scalar pivot = m.at(r, c);
    for (int i = r + 1; i < m.rows(); ++i) {
      const Scalar head = m.at(i, c);
      for (int j = c + 1; j < m.cols(); ++j)
        m.at(i, j) = (pivot * m.at(i, j) - head * m.at(r, j)) / prev;
      m.at(i, c) = Scalar::zero(m.field());
    }
    prev = pivot;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Plain elimination for prime fields: scale pivot rows to 1, clear below.
std::vector<int> gauss_forward(ExactMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    const int pr = find_pivot(m, r, c);
    if (pr < 0) continue;
    swap_rows(m, pr, r);
    const Scalar inv = m.at(r, c).inverse();
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = r + 1; i < m.rows(); ++i) {
      const Scalar f = m.at(i, c);
      if (f.is_zero()) continue;
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Row echelon -> reduced row echelon; returns pivot columns.
std::vector<int> to_rref(ExactMatrix& m) {
  std::vector<int> pivots = m.field().is_rationals() ? bareiss_forward(m, nullptr) : gauss_forward(m);
  for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
    const int c = pivots[k];
    const Scalar inv = m.at(k, c).inverse();
    for (int j = c; j < m.cols(); ++j) m.at(k, j) *= inv;
    for (int i = 0; i < k; ++i) {
      const Scalar f = m.at(i, c);
      if (f.is_zero()) continue;
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return pivots;
}

}  // namespace

RankKernel rank_and_kernel(const ExactMatrix& m) {
  ExactMatrix w = m;
  const std::vector<int> pivots = to_rref(w);
  RankKernel out;
  out.rank = static_cast<int>(pivots.size());

  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols(), Scalar::zero(m.field()));
    v[f] = Scalar::one(m.field());
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -w.at(static_cast<int>(k), f);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

int rank_of(const ExactMatrix& m) {
  ExactMatrix w = m;
  if (w.field().is_rationals()) return static_cast<int>(bareiss_forward(w, nullptr).size());
  return static_cast<int>(gauss_forward(w).size());
}

Scalar determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() == 0) return Scalar::one(m.field());
  ExactMatrix w = m;
  int swaps = 0;
  const std::vector<int> pivots = bareiss_forward(w, &swaps);
  if (static_cast<int>(pivots.size()) < m.rows()) return Scalar::zero(m.field());
  // after a full fraction-free pass the last pivot is det up to swap sign
  const Scalar d = w.at(m.rows() - 1, m.cols() - 1);
  return (swaps % 2) ? -d : d;
}

std::optional<std::vector<Scalar>> solve(const ExactMatrix& a, const std::vector<Scalar>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("rhs length mismatch");
  ExactMatrix aug(a.field(), a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  const std::vector<int> pivots = to_rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<Scalar> x(a.cols(), Scalar::zero(a.field()));
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(static_cast<int>(k), a.cols());
  return x;
}

}  // namespace ribbons
