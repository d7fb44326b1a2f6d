#ifndef RIBBONS_MATRIX_HPP
#define RIBBONS_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "ribbons/field.hpp"

namespace ribbons {

// Dense exact matrix over one field; row-major storage.
class ExactMatrix {
 public:
  ExactMatrix(Field f, int rows, int cols)
      : field_(f), rows_(rows), cols_(cols),
        e_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {}

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  ExactMatrix transposed() const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // M v
  bool operator==(const ExactMatrix& o) const;

  std::string str() const;

 private:
  Field field_;
  int rows_, cols_;
  std::vector<Scalar> e_;
};

struct RankKernel {
  int rank = 0;
  std::vector<std::vector<Scalar>> kernel;  // right null space basis, column vectors
};

// Exact rank and null-space basis. Over Q the forward pass is fraction-free
// (Bareiss update) to control coefficient growth; over F_p plain elimination.
RankKernel rank_and_kernel(const ExactMatrix& m);
int rank_of(const ExactMatrix& m);

Scalar determinant(const ExactMatrix& m);  // square matrices only

// One solution of A x = b, free variables set to zero; nullopt when
// inconsistent.
std::optional<std::vector<Scalar>> solve(const ExactMatrix& a, const std::vector<Scalar>& b);

}  // namespace ribbons

#endif
