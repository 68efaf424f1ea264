#include "mgw/field.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "mgw/error.hpp"

namespace mgw {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1U << 16) || !is_prime(p)) {
    throw InputError("field modulus must be a prime below 65536, got " + std::to_string(p));
  }
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw InputError("zero has no inverse");
  // Fermat: a^(p-2).
  Residue result = 1;
  Residue base = a % p_;
  for (std::uint32_t e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

FieldMatrix::FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FieldMatrix::FieldMatrix(PrimeField field, const std::vector<std::vector<Residue>>& rows)
    : field_(field), rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("matrix rows have different lengths");
    for (Residue x : r) {
      if (x >= field_.modulus()) {
        throw InputError("matrix entry " + std::to_string(x) + " is not a residue mod " +
                         std::to_string(field_.modulus()));
      }
      data_.push_back(x);
    }
  }
}

FieldMatrix FieldMatrix::identity(PrimeField field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void FieldMatrix::set(std::size_t r, std::size_t c, std::uint64_t value) {
  data_[r * cols_ + c] = static_cast<Residue>(value % field_.modulus());
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = at(r, c);
  }
  return t;
}

FieldVector FieldMatrix::apply(std::span<const Residue> v) const {
  if (v.size() != cols_) throw InputError("vector length does not match matrix columns");
  FieldVector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    Residue acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = field_.add(acc, field_.mul(at(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

FieldVector FieldMatrix::left_apply(std::span<const Residue> u) const {
  if (u.size() != rows_) throw InputError("vector length does not match matrix rows");
  FieldVector out(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (u[r] == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) {
      out[c] = field_.add(out[c], field_.mul(u[r], at(r, c)));
    }
  }
  return out;
}

namespace {

// In-place Gauss-Jordan elimination on a row-major buffer. Returns the pivot
// columns in order; rows beyond the rank are left zero.
std::vector<std::size_t> reduce(const PrimeField& f, std::vector<Residue>& a, std::size_t rows,
                                std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pr = lead;
    while (pr < rows && a[pr * cols + c] == 0) ++pr;
    if (pr == rows) continue;
    if (pr != lead) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[pr * cols + k], a[lead * cols + k]);
    }
    const Residue s = f.inv(a[lead * cols + c]);
    for (std::size_t k = c; k < cols; ++k) a[lead * cols + k] = f.mul(a[lead * cols + k], s);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead) continue;
      const Residue factor = a[r * cols + c];
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k) {
        a[r * cols + k] = f.sub(a[r * cols + k], f.mul(factor, a[lead * cols + k]));
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const FieldMatrix& m) {
  std::vector<Residue> buf(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    std::copy(row.begin(), row.end(), buf.begin() + static_cast<std::ptrdiff_t>(r * m.cols()));
  }
  return reduce(m.field(), buf, m.rows(), m.cols()).size();
}

std::size_t column_rank(const FieldMatrix& m, SubsetMask columns) {
  if (!columns.fits(static_cast<int>(m.cols()))) {
    throw InputError("column subset " + columns.to_string() + " exceeds " +
                     std::to_string(m.cols()) + " columns");
  }
  const auto labels = columns.labels();
  const std::size_t cols = labels.size();
  if (cols == 0 || m.rows() == 0) return 0;
  std::vector<Residue> buf(m.rows() * cols);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t j = 0; j < cols; ++j) {
      buf[r * cols + j] = m.at(r, static_cast<std::size_t>(labels[j] - 1));
    }
  }
  return reduce(m.field(), buf, m.rows(), cols).size();
}

FieldMatrix row_echelon(const FieldMatrix& m) {
  std::vector<Residue> buf(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    std::copy(row.begin(), row.end(), buf.begin() + static_cast<std::ptrdiff_t>(r * m.cols()));
  }
  const auto pivots = reduce(m.field(), buf, m.rows(), m.cols());
  FieldMatrix out(m.field(), pivots.size(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, buf[r * m.cols() + c]);
  }
  return out;
}

std::vector<FieldVector> kernel_basis(const FieldMatrix& m) {
  const PrimeField& f = m.field();
  const FieldMatrix ech = row_echelon(m);
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t r = 0; r < ech.rows(); ++r) {
    std::size_t c = 0;
    while (ech.at(r, c) == 0) ++c;
    pivot_of_row.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<FieldVector> raw;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    FieldVector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < ech.rows(); ++r) v[pivot_of_row[r]] = f.neg(ech.at(r, free));
    raw.push_back(std::move(v));
  }
  if (raw.empty()) return {};
  const FieldMatrix basis = row_echelon(from_rows(f, m.cols(), raw));
  std::vector<FieldVector> out;
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    auto row = basis.row(r);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

FieldMatrix column_submatrix(const FieldMatrix& m, SubsetMask columns) {
  if (!columns.fits(static_cast<int>(m.cols()))) {
    throw InputError("column subset " + columns.to_string() + " exceeds " +
                     std::to_string(m.cols()) + " columns");
  }
  const auto labels = columns.labels();
  FieldMatrix out(m.field(), m.rows(), labels.size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      out.set(r, j, m.at(r, static_cast<std::size_t>(labels[j] - 1)));
    }
  }
  return out;
}

FieldMatrix from_rows(PrimeField field, std::size_t cols, const std::vector<FieldVector>& rows) {
  FieldMatrix out(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("vector length mismatch");
    for (std::size_t c = 0; c < cols; ++c) out.set(r, c, rows[r][c]);
  }
  return out;
}

FieldMatrix read_matrix(std::istream& in) {
  long long p = 0;
  long long rows = -1;
  long long cols = -1;
  if (!(in >> p >> rows >> cols) || rows < 0 || cols < 0) {
    throw InputError("matrix header must be \"p rows cols\"");
  }
  if (p < 2 || p >= (1 << 16)) throw InputError("bad modulus " + std::to_string(p));
  PrimeField field(static_cast<std::uint32_t>(p));
  FieldMatrix m(field, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (long long r = 0; r < rows; ++r) {
    for (long long c = 0; c < cols; ++c) {
      long long x = 0;
      if (!(in >> x)) throw InputError("matrix body is truncated");
      if (x < 0 || x >= p) {
        throw InputError("matrix entry " + std::to_string(x) + " is not a residue mod " +
                         std::to_string(p));
      }
      m.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c),
            static_cast<std::uint64_t>(x));
    }
  }
  return m;
}

void write_matrix(std::ostream& out, const FieldMatrix& m) {
  out << m.modulus() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ' ';
      out << m.at(r, c);
    }
    out << '\n';
  }
}

FieldMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  FieldMatrix m = read_matrix(in);
  std::string trailing;
  if (in >> trailing) throw InputError("unexpected trailing data after matrix: " + trailing);
  return m;
}

std::string format_matrix(const FieldMatrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

}  // namespace mgw
