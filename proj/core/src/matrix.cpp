#include "selflink/matrix.hpp"

#include <bit>
#include <sstream>
#include <unordered_map>

namespace selflink {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (rows_ == 0 || cols_ == 0) throw InputError("matrix dimensions must be positive");
  entries_.assign(rows_ * cols_, Polynomial::zero(ring_));
}

PolyMatrix PolyMatrix::from_rows(RingPtr ring, std::vector<std::vector<Polynomial>> rows) {
  if (rows.empty() || rows[0].empty()) throw InputError("matrix dimensions must be positive");
  PolyMatrix m(ring, rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, std::move(rows[i][j]));
  }
  return m;
}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Polynomial::constant(ring, Coeff(1)));
  return m;
}

PolyMatrix PolyMatrix::parse(const RingPtr& ring, const std::string& text) {
  std::string body = text;
  // trim whitespace, then optional brackets
  auto trim = [](std::string s) {
    std::size_t b = s.find_first_not_of(" \t\n\r");
    std::size_t e = s.find_last_not_of(" \t\n\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  body = trim(body);
  if (!body.empty() && body.front() == '[' && body.back() == ']')
    body = body.substr(1, body.size() - 2);
  std::vector<std::vector<Polynomial>> rows;
  std::string rowtext;
  for (char c : body + ";") {
    if (c == ';') {
      std::vector<Polynomial> row;
      std::string cell;
      for (char d : rowtext + ",") {
        if (d == ',') {
          row.push_back(Polynomial::parse(ring, cell));
          cell.clear();
        } else {
          cell += d;
        }
      }
      rows.push_back(std::move(row));
      rowtext.clear();
    } else {
      rowtext += c;
    }
  }
  return from_rows(ring, std::move(rows));
}

void PolyMatrix::set(std::size_t i, std::size_t j, Polynomial p) {
  require_same_ring(ring_, p.ring());
  entries_[i * cols_ + j] = std::move(p);
}

bool PolyMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

PolyMatrix PolyMatrix::mul(const PolyMatrix& o) const {
  require_same_ring(ring_, o.ring_);
  if (cols_ != o.rows_) throw InputError("matrix shape mismatch in product");
  PolyMatrix r(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) {
      Polynomial s = Polynomial::zero(ring_);
      for (std::size_t k = 0; k < cols_; ++k) s = s + at(i, k) * o.at(k, j);
      r.set(i, j, std::move(s));
    }
  return r;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (entries_[k] != o.entries_[k]) return false;
  return true;
}

std::string PolyMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).str();
    }
  }
  os << "]";
  return os.str();
}

namespace {

// determinant of the submatrix using the bottom `popcount(mask)` rows and
// the columns in `mask`, by expansion along its first row, memoized
Polynomial det_masked(const PolyMatrix& m, unsigned mask,
                      std::unordered_map<unsigned, Polynomial>& memo) {
  const RingPtr& ring = m.ring();
  if (mask == 0) return Polynomial::constant(ring, Coeff(1));
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  const std::size_t size = static_cast<std::size_t>(std::popcount(mask));
  const std::size_t row = m.rows() - size;
  Polynomial acc = Polynomial::zero(ring);
  int sign = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!(mask & (1u << j))) continue;
    if (!m.at(row, j).is_zero()) {
      Polynomial sub = det_masked(m, mask & ~(1u << j), memo);
      Polynomial term = m.at(row, j) * sub;
      acc = sign > 0 ? acc + term : acc - term;
    }
    sign = -sign;
  }
  memo.emplace(mask, acc);
  return acc;
}

} // namespace

Polynomial det_bareiss(const PolyMatrix& m) {
  if (!m.is_square()) throw InputError("determinant of a non-square matrix");
  const RingPtr& ring = m.ring();
  const std::size_t n = m.rows();
  std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n, Polynomial::zero(ring)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

  bool negate = false;
  Polynomial prev = Polynomial::constant(ring, Coeff(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t pivot = k;
      while (pivot < n && a[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return Polynomial::zero(ring);
      std::swap(a[k], a[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        auto q = num.try_divide_exact(prev);
        if (!q) throw Error("internal: fraction-free elimination division failed");
        a[i][j] = std::move(*q);
      }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

Polynomial det(const PolyMatrix& m) {
  if (!m.is_square()) throw InputError("determinant of a non-square matrix");
  if (m.rows() > 6) return det_bareiss(m);
  std::unordered_map<unsigned, Polynomial> memo;
  return det_masked(m, (1u << m.rows()) - 1u, memo);
}

PolyMatrix adjugate(const PolyMatrix& m) {
  if (!m.is_square()) throw InputError("adjugate of a non-square matrix");
  const RingPtr& ring = m.ring();
  const std::size_t n = m.rows();
  if (n == 1) return PolyMatrix::identity(ring, 1);
  PolyMatrix adj(ring, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      PolyMatrix minor(ring, n - 1, n - 1);
      std::size_t r = 0;
      for (std::size_t a = 0; a < n; ++a) {
        if (a == i) continue;
        std::size_t c = 0;
        for (std::size_t b = 0; b < n; ++b) {
          if (b == j) continue;
          minor.set(r, c, m.at(a, b));
          ++c;
        }
        ++r;
      }
      Polynomial cof = det(minor);
      if ((i + j) % 2) cof = -cof;
      adj.set(j, i, std::move(cof));
    }
  return adj;
}

std::vector<Polynomial> maximal_minors(const PolyMatrix& m) {
  if (m.rows() + 1 != m.cols())
    throw InputError("maximal minors expect an r x (r+1) matrix");
  const RingPtr& ring = m.ring();
  const std::size_t r = m.rows();
  std::vector<Polynomial> minors;
  for (std::size_t skip = 0; skip < m.cols(); ++skip) {
    PolyMatrix sq(ring, r, r);
    for (std::size_t i = 0; i < r; ++i) {
      std::size_t c = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j == skip) continue;
        sq.set(i, c, m.at(i, j));
        ++c;
      }
    }
    Polynomial d = det(sq);
    if (skip % 2) d = -d; // (-1)^(i+1), i = skip+1
    minors.push_back(std::move(d));
  }
  return minors;
}

PolyMatrix border(const Polynomial& corner, const PolyMatrix& column, const PolyMatrix& block) {
  require_same_ring(column.ring(), block.ring());
  require_same_ring(corner.ring(), block.ring());
  const std::size_t r = block.rows();
  if (!block.is_square()) throw InputError("border block must be square");
  if (!block.is_symmetric()) throw InputError("border block must be symmetric");
  if (column.rows() != r || column.cols() != 1)
    throw InputError("border column must be r x 1");
  PolyMatrix b(block.ring(), r + 1, r + 1);
  b.set(0, 0, corner);
  for (std::size_t i = 0; i < r; ++i) {
    b.set(0, i + 1, column.at(i, 0));
    b.set(i + 1, 0, column.at(i, 0));
    for (std::size_t j = 0; j < r; ++j) b.set(i + 1, j + 1, block.at(i, j));
  }
  return b;
}

namespace {

void check_entry_degree(GradedReport& report, const Polynomial& p, int expected,
                        const std::string& what) {
  if (p.is_zero()) return; // the zero section exists in every twist
  std::ostringstream os;
  if (!p.is_homogeneous()) {
    os << what << " is not homogeneous: " << p.str();
    report.ok = false;
    report.violations.push_back(os.str());
    return;
  }
  if (p.degree() != expected) {
    os << what << " has degree " << p.degree() << ", expected " << expected;
    report.ok = false;
    report.violations.push_back(os.str());
  }
}

} // namespace

GradedReport check_graded(const GradedProfile& profile, const PolyMatrix& column,
                          const PolyMatrix& block, const Polynomial* corner) {
  GradedReport report;
  const std::size_t r = profile.twists.size();
  const int d = profile.d, m = profile.m;

  const long needed = static_cast<long>(r) * (d + m) - m;
  if (needed % 2 != 0) {
    report.ok = false;
    std::ostringstream os;
    os << "no integer twist vector exists for r=" << r << ", d=" << d << ", m=" << m
       << " (r(d+m)-m = " << needed << " is odd)";
    report.violations.push_back(os.str());
    return report;
  }
  long sum = 0;
  for (int a : profile.twists) sum += a;
  if (2 * sum != needed) {
    report.ok = false;
    std::ostringstream os;
    os << "twist sum " << sum << " violates 2*sum(a) = r(d+m)-m = " << needed;
    report.violations.push_back(os.str());
  }

  if (column.rows() != r || column.cols() != 1) {
    report.ok = false;
    report.violations.push_back("column must be r x 1");
    return report;
  }
  if (block.rows() != r || block.cols() != r) {
    report.ok = false;
    report.violations.push_back("block must be r x r");
    return report;
  }
  if (!block.is_symmetric()) {
    report.ok = false;
    report.violations.push_back("block is not symmetric");
  }

  for (std::size_t i = 0; i < r; ++i) {
    std::ostringstream what;
    what << "lambda[" << i + 1 << "]";
    check_entry_degree(report, column.at(i, 0), d - profile.twists[i], what.str());
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      std::ostringstream what;
      what << "alpha[" << i + 1 << "][" << j + 1 << "]";
      check_entry_degree(report, block.at(i, j),
                         d + m - profile.twists[i] - profile.twists[j], what.str());
    }
  if (corner && !corner->is_zero()) {
    if (d < m) {
      report.ok = false;
      report.violations.push_back("gamma must vanish when d < m (its degree d-m is negative)");
    } else {
      check_entry_degree(report, *corner, d - m, "gamma");
    }
  }
  return report;
}

std::optional<std::vector<int>> balanced_twists(std::size_t r, int d, int m) {
  const long needed = static_cast<long>(r) * (d + m) - m;
  if (needed % 2 != 0) return std::nullopt;
  long sum = needed / 2;
  // near-uniform: base value everywhere, +1 on the first `extra` entries
  long base = sum / static_cast<long>(r);
  long extra = sum - base * static_cast<long>(r);
  if (extra < 0) {
    base -= 1;
    extra += static_cast<long>(r);
  }
  std::vector<int> twists(r, static_cast<int>(base));
  for (long i = 0; i < extra; ++i) twists[static_cast<std::size_t>(i)] += 1;
  return twists;
}

} // namespace selflink
