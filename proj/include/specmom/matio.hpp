#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace specmom {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

struct DenseMatrix {
  int n = 0;
  std::vector<Complex> values;  // row-major, n * n
};

struct CsrMatrix {
  int n = 0;
  std::vector<int> row_offsets;  // n + 1 entries
  std::vector<int> columns;
  std::vector<Complex> values;

  friend bool operator==(const CsrMatrix&, const CsrMatrix&) = default;
};

struct DiagonalMatrix {
  std::vector<Complex> values;
};

/// Square linear operator; immutable after construction and safe to share
/// between threads.
class MatrixOperator {
 public:
  using Storage = std::variant<DenseMatrix, CsrMatrix, DiagonalMatrix>;

  explicit MatrixOperator(DenseMatrix m);
  explicit MatrixOperator(CsrMatrix m);
  explicit MatrixOperator(DiagonalMatrix m);

  int dim() const noexcept { return dim_; }
  const Storage& storage() const noexcept { return storage_; }

  /// y = A x into caller storage (resized as needed).
  void apply(const Vector& x, Vector& y) const;

 private:
  Storage storage_;
  int dim_ = 0;
};

Vector matvec(const MatrixOperator& a, const Vector& x);

struct Triplet {
  int row;
  int col;
  Complex value;
};

/// Sorts triplets into CSR, summing duplicates. Duplicate count is reported
/// through `duplicates` when non-null.
CsrMatrix assemble_csr(int n, std::vector<Triplet> triplets, std::size_t* duplicates = nullptr);

CsrMatrix to_csr(const MatrixOperator& a);
DenseMatrix to_dense(const MatrixOperator& a);

struct MatrixMarketFile {
  CsrMatrix matrix;
  std::vector<std::string> warnings;
};

/// Coordinate-format Matrix Market reader (real, complex, integer and pattern
/// fields; general or symmetric storage). Duplicate entries are summed and
/// reported as a warning.
MatrixMarketFile parse_matrix_market(std::istream& in);
MatrixMarketFile read_matrix_market(const std::string& path);

/// Writes `coordinate real general` when every value is real, otherwise
/// `coordinate complex general`. Values round-trip exactly.
void write_matrix_market(std::ostream& out, const CsrMatrix& a);

/// 4x4 test problem with eigenvalues 1.01, 1, i/2, -i/2.
MatrixOperator toy_matrix();

/// Two directed G(N, p) halves (no self-loops) joined by the single edge 0 -> N.
/// A(u, v) = 1 for an edge u -> v. Deterministic for a given seed.
CsrMatrix barbell(int half_size, double edge_prob, std::uint64_t seed);

}  // namespace specmom
