#include "lenscob/witness.hpp"

#include <utility>

#include "lenscob/errors.hpp"

namespace lenscob {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw DomainError("IntMatrix: ragged initializer");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

namespace {

void require_square(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DomainError("determinant of a non-square matrix");
  }
}

}  // namespace

Int bareiss_determinant(IntMatrix m) {
  require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) {
    return 1;
  }
  int sign = 1;
  Int previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) {
        ++swap_row;
      }
      if (swap_row == n) {
        return 0;
      }
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(k, j), m(swap_row, j));
      }
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
    }
    previous = m(k, k);
  }
  return sign < 0 ? Int(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

Int cofactor_determinant(const IntMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) {
    return 1;
  }
  if (n == 1) {
    return m(0, 0);
  }
  if (n == 2) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  }
  Int total = 0;
  IntMatrix minor(n - 1, n - 1);
  for (std::size_t col = 0; col < n; ++col) {
    if (m(0, col) == 0) {
      continue;
    }
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0, mj = 0; j < n; ++j) {
        if (j != col) {
          minor(i - 1, mj++) = m(i, j);
        }
      }
    }
    const Int term = m(0, col) * cofactor_determinant(minor);
    total += (col % 2 == 0) ? term : Int(-term);
  }
  return total;
}

Int exact_determinant(const IntMatrix& m) {
  require_square(m);
  return m.rows() <= 4 ? cofactor_determinant(m) : bareiss_determinant(m);
}

Witness::Witness(std::vector<Int> a, std::vector<Int> t, IntMatrix linking)
    : a_(std::move(a)), t_(std::move(t)), l_(std::move(linking)) {
  const std::size_t n = a_.size();
  if (n == 0) {
    throw DomainError("witness needs at least one hole");
  }
  if (t_.size() != n || l_.rows() != n || l_.cols() != n) {
    throw DomainError("witness dimensions disagree: |a| = " + std::to_string(n) +
                      ", |t| = " + std::to_string(t_.size()) + ", l is " +
                      std::to_string(l_.rows()) + "x" + std::to_string(l_.cols()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (l_(i, i) != 0) {
      throw DomainError("witness linking matrix must have zero diagonal");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (l_(i, j) != l_(j, i)) {
        throw DomainError("witness linking matrix must be symmetric");
      }
    }
  }
}

Witness Witness::one_hole(Int a, Int t) {
  return Witness({std::move(a)}, {std::move(t)}, IntMatrix(1, 1));
}

Witness Witness::two_holes(Int a1, Int a2, Int t1, Int t2, Int l12) {
  IntMatrix l(2, 2);
  l(0, 1) = l12;
  l(1, 0) = l12;
  return Witness({std::move(a1), std::move(a2)}, {std::move(t1), std::move(t2)}, std::move(l));
}

IntMatrix assemble_matrix(const LensSpace& lens, const Witness& witness) {
  const std::size_t n = witness.holes();
  IntMatrix m(n + 1, n + 1);
  m(0, 0) = lens.p();
  for (std::size_t i = 1; i <= n; ++i) {
    m(0, i) = -lens.q() * witness.a()[i - 1];
    m(i, 0) = witness.a()[i - 1];
    for (std::size_t j = 1; j <= n; ++j) {
      m(i, j) = (i == j) ? witness.t()[i - 1] : witness.linking()(i - 1, j - 1);
    }
  }
  return m;
}

Certificate verify(const LensSpace& lens, const Witness& witness) {
  Int det = exact_determinant(assemble_matrix(lens, witness));
  const bool valid = det == 1 || det == -1;
  return Certificate{lens, witness, std::move(det), valid, std::nullopt};
}

Witness pad(const Witness& witness) {
  const std::size_t n = witness.holes();
  std::vector<Int> a = witness.a();
  std::vector<Int> t = witness.t();
  a.emplace_back(0);
  t.emplace_back(1);
  IntMatrix l(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      l(i, j) = witness.linking()(i, j);
    }
  }
  return Witness(std::move(a), std::move(t), std::move(l));
}

}  // namespace lenscob
