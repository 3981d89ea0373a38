#ifndef DOMW_LINALG_HPP
#define DOMW_LINALG_HPP

// Dense exact linear algebra: fraction-free determinants and a tableau
// simplex, both templated on the scalar type.

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace domw {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Bareiss elimination with row pivoting. Every intermediate value is a minor
/// of the input, so integer scalars stay exact.
template <typename Scalar, typename Derived>
Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  eigen_assert(input.rows() == input.cols());
  MatrixX<Scalar> m = input.template cast<Scalar>();
  const Eigen::Index n = m.rows();
  Scalar sign = 1;
  Scalar previous = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != k) {
      m.row(pivot).swap(m.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
    }
    previous = m(k, k);
  }
  return n == 0 ? Scalar(1) : Scalar(sign * m(n - 1, n - 1));
}

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <typename Scalar>
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Scalar value = 0;
  VectorX<Scalar> x;
};

/// maximize c'x subject to A x <= b, x >= 0.
///
/// Two-phase dense tableau simplex with Bland's rule (smallest eligible
/// index enters and leaves), which cannot cycle. Rows with negative b start
/// on an artificial variable; phase one drives their sum to zero.
template <typename Scalar>
LpSolution<Scalar> maximize(const MatrixX<Scalar>& A, const VectorX<Scalar>& b,
                            const VectorX<Scalar>& c) {
  const Eigen::Index m = A.rows();
  const Eigen::Index n = A.cols();
  eigen_assert(b.size() == m && c.size() == n);

  std::vector<Eigen::Index> artificial_rows;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (b(i) < 0) artificial_rows.push_back(i);
  }
  const Eigen::Index k = static_cast<Eigen::Index>(artificial_rows.size());
  const Eigen::Index cols = n + m + k;  // structural, slack, artificial
  const Eigen::Index rhs = cols;

  MatrixX<Scalar> T = MatrixX<Scalar>::Zero(m, cols + 1);
  std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
  Eigen::Index next_artificial = n + m;
  for (Eigen::Index i = 0; i < m; ++i) {
    T.block(i, 0, 1, n) = A.row(i);
    T(i, n + i) = 1;
    T(i, rhs) = b(i);
    if (b(i) < 0) {
      T.row(i) = -T.row(i);
      T(i, next_artificial) = 1;
      basis[static_cast<std::size_t>(i)] = next_artificial++;
    } else {
      basis[static_cast<std::size_t>(i)] = n + i;
    }
  }

  auto pivot = [&](Eigen::Index row, Eigen::Index col) {
    const Scalar p = T(row, col);
    T.row(row) /= p;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i != row && T(i, col) != 0) {
        const Scalar factor = T(i, col);
        T.row(i) -= factor * T.row(row);
      }
    }
    basis[static_cast<std::size_t>(row)] = col;
  };

  // Runs simplex iterations for objective `cost` over columns [0, allowed).
  auto optimize = [&](const VectorX<Scalar>& cost, Eigen::Index allowed) -> bool {
    for (;;) {
      std::optional<Eigen::Index> entering;
      for (Eigen::Index j = 0; j < allowed && !entering; ++j) {
        Scalar reduced = cost(j);
        for (Eigen::Index i = 0; i < m; ++i) {
          reduced -= cost(basis[static_cast<std::size_t>(i)]) * T(i, j);
        }
        if (reduced > 0) entering = j;
      }
      if (!entering) return true;
      std::optional<Eigen::Index> leaving;
      Scalar best_ratio = 0;
      for (Eigen::Index i = 0; i < m; ++i) {
        if (T(i, *entering) <= 0) continue;
        const Scalar ratio = T(i, rhs) / T(i, *entering);
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio &&
             basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(*leaving)])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  };

  LpSolution<Scalar> out;
  if (k > 0) {
    VectorX<Scalar> phase_one = VectorX<Scalar>::Zero(cols);
    phase_one.tail(k).setConstant(Scalar(-1));
    optimize(phase_one, cols);
    Scalar infeasibility = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (basis[static_cast<std::size_t>(i)] >= n + m) infeasibility += T(i, rhs);
    }
    if (infeasibility != 0) return out;
    // Pivot remaining zero-level artificials out where a real column allows.
    for (Eigen::Index i = 0; i < m; ++i) {
      if (basis[static_cast<std::size_t>(i)] < n + m) continue;
      for (Eigen::Index j = 0; j < n + m; ++j) {
        if (T(i, j) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  VectorX<Scalar> phase_two = VectorX<Scalar>::Zero(cols);
  phase_two.head(n) = c;
  if (!optimize(phase_two, n + m)) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.x = VectorX<Scalar>::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto var = basis[static_cast<std::size_t>(i)];
    if (var < n) out.x(var) = T(i, rhs);
  }
  out.value = c.dot(out.x);
  return out;
}

}  // namespace domw

#endif  // DOMW_LINALG_HPP
