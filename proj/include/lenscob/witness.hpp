#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lenscob/bigint.hpp"
#include "lenscob/lens.hpp"
#include "lenscob/trace.hpp"

namespace lenscob {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Exact determinant of a square matrix. Cofactor expansion up to 4x4,
/// fraction-free (Bareiss) elimination with row pivoting beyond.
Int exact_determinant(const IntMatrix& m);

/// Fraction-free Gaussian elimination; every intermediate division is exact.
Int bareiss_determinant(IntMatrix m);

/// Laplace expansion along the first row. Exponential; for small matrices
/// and cross-checks only.
Int cofactor_determinant(const IntMatrix& m);

/// Integer data (a_1..a_n; t_1..t_n; l_ij) of the determinant criterion for
/// a planar surface with n holes. The constructor enforces the shape: n >= 1,
/// |a| = |t| = n, l an n x n symmetric matrix with zero diagonal. A Witness
/// object is therefore always well-formed.
class Witness {
 public:
  Witness(std::vector<Int> a, std::vector<Int> t, IntMatrix linking);

  static Witness one_hole(Int a, Int t);
  static Witness two_holes(Int a1, Int a2, Int t1, Int t2, Int l12);

  std::size_t holes() const { return a_.size(); }
  const std::vector<Int>& a() const { return a_; }
  const std::vector<Int>& t() const { return t_; }
  const IntMatrix& linking() const { return l_; }

  friend bool operator==(const Witness&, const Witness&) = default;

 private:
  std::vector<Int> a_;
  std::vector<Int> t_;
  IntMatrix l_;
};

/// (n+1) x (n+1) matrix: row 0 is (p, -q a_1, ..., -q a_n); row i is
/// (a_i, l_i1, ..., t_i, ..., l_in).
IntMatrix assemble_matrix(const LensSpace& lens, const Witness& witness);

struct Certificate {
  LensSpace lens;
  Witness witness;
  Int det;
  bool valid = false;
  std::optional<ConstructionTrace> trace;
};

/// Exact determinant and verdict (valid iff det = +-1). Never throws for a
/// wrong witness; that is reported through `valid`.
Certificate verify(const LensSpace& lens, const Witness& witness);

/// Appends a hole with a = 0, t = 1 and no linking. Leaves the determinant unchanged.
Witness pad(const Witness& witness);

}  // namespace lenscob
