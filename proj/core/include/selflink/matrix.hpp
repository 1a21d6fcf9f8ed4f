#pragma once

#include <optional>
#include <string>
#include <vector>

#include "selflink/polynomial.hpp"

namespace selflink {

/// Rectangular matrix of polynomials over one ring.
class PolyMatrix {
public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static PolyMatrix from_rows(RingPtr ring, std::vector<std::vector<Polynomial>> rows);
  static PolyMatrix identity(RingPtr ring, std::size_t n);

  /// Parses the CLI literal: rows separated by ';', entries by ',',
  /// optionally wrapped in [ ].  e.g.  [0, x, 0; x, 0, y; 0, y, -x]
  static PolyMatrix parse(const RingPtr& ring, const std::string& text);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Polynomial& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Polynomial p);

  bool is_symmetric() const;
  PolyMatrix transpose() const;
  PolyMatrix mul(const PolyMatrix& o) const;
  bool is_zero() const;

  bool operator==(const PolyMatrix& o) const;

  std::string str() const;

private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> entries_;
};

/// Exact determinant. Cofactor expansion with memoization over column
/// subsets up to size 6, fraction-free elimination beyond.
Polynomial det(const PolyMatrix& m);

/// Fraction-free (Bareiss) determinant; independent of det()'s cofactor
/// path for cross-checking.
Polynomial det_bareiss(const PolyMatrix& m);

/// adj(M) with M * adj(M) = adj(M) * M = det(M) * Id.
PolyMatrix adjugate(const PolyMatrix& m);

/// The r+1 maximal minors of an r x (r+1) matrix, f_i = (-1)^(i+1) * det
/// of the matrix with column i deleted (columns 1-based).
std::vector<Polynomial> maximal_minors(const PolyMatrix& m);

/// The symmetric bordered matrix [[corner, column^t], [column, block]].
/// `column` is r x 1 and `block` r x r symmetric.
PolyMatrix border(const Polynomial& corner, const PolyMatrix& column, const PolyMatrix& block);

/// Twists a_1..a_r of a split sheaf plus the two hypersurface degrees.
struct GradedProfile {
  std::vector<int> twists;
  int d = 0;
  int m = 0;
};

struct GradedReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Checks every entry-degree condition of the split symmetric layout:
/// deg column_i = d - a_i, deg block_ij = d + m - a_i - a_j, deg corner =
/// d - m (zero entries exempt), and 2 * sum(a_i) = r(d+m) - m.
GradedReport check_graded(const GradedProfile& profile, const PolyMatrix& column,
                          const PolyMatrix& block, const Polynomial* corner = nullptr);

/// A near-uniform twist vector with the required sum, or nullopt when
/// r(d+m) - m is odd (no integer twist vector exists).
std::optional<std::vector<int>> balanced_twists(std::size_t r, int d, int m);

} // namespace selflink
