#include "specmom/matio.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include "specmom/error.hpp"

namespace specmom {

MatrixOperator::MatrixOperator(DenseMatrix m) : storage_(std::move(m)) {
  const auto& d = std::get<DenseMatrix>(storage_);
  if (d.n < 0 || d.values.size() != static_cast<std::size_t>(d.n) * d.n) {
    throw Error(Errc::NonSquare, "dense matrix storage is not n x n");
  }
  dim_ = d.n;
}

MatrixOperator::MatrixOperator(CsrMatrix m) : storage_(std::move(m)) {
  const auto& a = std::get<CsrMatrix>(storage_);
  if (a.row_offsets.size() != static_cast<std::size_t>(a.n) + 1 || a.row_offsets.front() != 0 ||
      a.row_offsets.back() != static_cast<int>(a.columns.size()) ||
      a.columns.size() != a.values.size()) {
    throw Error(Errc::InvalidArgument, "malformed CSR arrays");
  }
  for (int i = 0; i < a.n; ++i) {
    if (a.row_offsets[i] > a.row_offsets[i + 1]) {
      throw Error(Errc::InvalidArgument, "CSR row offsets are not monotone");
    }
    for (int k = a.row_offsets[i]; k < a.row_offsets[i + 1]; ++k) {
      if (a.columns[k] < 0 || a.columns[k] >= a.n) {
        throw Error(Errc::IndexOutOfRange, "CSR column index out of range");
      }
      if (k > a.row_offsets[i] && a.columns[k] <= a.columns[k - 1]) {
        throw Error(Errc::InvalidArgument, "CSR columns must be strictly increasing per row");
      }
    }
  }
  dim_ = a.n;
}

MatrixOperator::MatrixOperator(DiagonalMatrix m) : storage_(std::move(m)) {
  dim_ = static_cast<int>(std::get<DiagonalMatrix>(storage_).values.size());
}

void MatrixOperator::apply(const Vector& x, Vector& y) const {
  if (static_cast<int>(x.size()) != dim_) {
    throw Error(Errc::DimensionMismatch, "operator is " + std::to_string(dim_) + "-dimensional, vector has " +
                                             std::to_string(x.size()) + " entries");
  }
  y.assign(x.size(), Complex{});
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, DenseMatrix>) {
          for (int i = 0; i < m.n; ++i) {
            Complex acc = 0.0;
            const Complex* row = m.values.data() + static_cast<std::size_t>(i) * m.n;
            for (int j = 0; j < m.n; ++j) acc += row[j] * x[j];
            y[i] = acc;
          }
        } else if constexpr (std::is_same_v<T, CsrMatrix>) {
          for (int i = 0; i < m.n; ++i) {
            Complex acc = 0.0;
            for (int k = m.row_offsets[i]; k < m.row_offsets[i + 1]; ++k) {
              acc += m.values[k] * x[m.columns[k]];
            }
            y[i] = acc;
          }
        } else {
          for (std::size_t i = 0; i < m.values.size(); ++i) y[i] = m.values[i] * x[i];
        }
      },
      storage_);
}

Vector matvec(const MatrixOperator& a, const Vector& x) {
  Vector y;
  a.apply(x, y);
  return y;
}

CsrMatrix assemble_csr(int n, std::vector<Triplet> triplets, std::size_t* duplicates) {
  for (const auto& t : triplets) {
    if (t.row < 0 || t.row >= n || t.col < 0 || t.col >= n) {
      throw Error(Errc::IndexOutOfRange, "entry (" + std::to_string(t.row + 1) + ", " +
                                             std::to_string(t.col + 1) + ") outside " + std::to_string(n) +
                                             " x " + std::to_string(n));
    }
  }
  std::stable_sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  CsrMatrix out;
  out.n = n;
  out.row_offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  std::size_t dup = 0;
  for (std::size_t i = 0; i < triplets.size(); ++i) {
    const auto& t = triplets[i];
    if (i > 0 && triplets[i - 1].row == t.row && triplets[i - 1].col == t.col) {
      out.values.back() += t.value;
      ++dup;
      continue;
    }
    out.columns.push_back(t.col);
    out.values.push_back(t.value);
    ++out.row_offsets[t.row + 1];
  }
  for (int i = 0; i < n; ++i) out.row_offsets[i + 1] += out.row_offsets[i];
  if (duplicates != nullptr) *duplicates = dup;
  return out;
}

CsrMatrix to_csr(const MatrixOperator& a) {
  return std::visit(
      [](const auto& m) -> CsrMatrix {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, CsrMatrix>) {
          return m;
        } else if constexpr (std::is_same_v<T, DenseMatrix>) {
          std::vector<Triplet> t;
          for (int i = 0; i < m.n; ++i) {
            for (int j = 0; j < m.n; ++j) {
              const Complex v = m.values[static_cast<std::size_t>(i) * m.n + j];
              if (v != 0.0) t.push_back({i, j, v});
            }
          }
          return assemble_csr(m.n, std::move(t));
        } else {
          std::vector<Triplet> t;
          const int n = static_cast<int>(m.values.size());
          for (int i = 0; i < n; ++i) {
            if (m.values[i] != 0.0) t.push_back({i, i, m.values[i]});
          }
          return assemble_csr(n, std::move(t));
        }
      },
      a.storage());
}

DenseMatrix to_dense(const MatrixOperator& a) {
  const CsrMatrix c = to_csr(a);
  DenseMatrix d{c.n, std::vector<Complex>(static_cast<std::size_t>(c.n) * c.n)};
  for (int i = 0; i < c.n; ++i) {
    for (int k = c.row_offsets[i]; k < c.row_offsets[i + 1]; ++k) {
      d.values[static_cast<std::size_t>(i) * c.n + c.columns[k]] = c.values[k];
    }
  }
  return d;
}

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

MatrixMarketFile parse_matrix_market(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::BadHeader, "empty input");
  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  banner = lower(banner);
  object = lower(object);
  format = lower(format);
  field = lower(field);
  symmetry = lower(symmetry);
  if (banner != "%%matrixmarket" || object != "matrix") {
    throw Error(Errc::BadHeader, "expected '%%MatrixMarket matrix ...'");
  }
  if (format != "coordinate") {
    throw Error(Errc::BadHeader, "only the coordinate format is supported, got '" + format + "'");
  }
  if (field != "real" && field != "complex" && field != "integer" && field != "pattern") {
    throw Error(Errc::BadHeader, "unsupported field '" + field + "'");
  }
  if (symmetry != "general" && symmetry != "symmetric") {
    throw Error(Errc::BadHeader, "unsupported symmetry '" + symmetry + "'");
  }

  // Skip comments to the size line.
  while (std::getline(in, line)) {
    if (!line.empty() && line.front() == '%') continue;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    break;
  }
  long long rows = 0, cols = 0, nnz = 0;
  {
    std::istringstream size_line(line);
    if (!(size_line >> rows >> cols >> nnz) || rows < 0 || cols < 0 || nnz < 0) {
      throw Error(Errc::BadHeader, "malformed size line '" + line + "'");
    }
  }
  if (rows != cols) {
    throw Error(Errc::NonSquare, std::to_string(rows) + " x " + std::to_string(cols) + " matrix");
  }
  if (rows > std::numeric_limits<int>::max()) throw Error(Errc::BadHeader, "dimension too large");
  const int n = static_cast<int>(rows);

  std::vector<Triplet> triplets;
  triplets.reserve(static_cast<std::size_t>(symmetry == "symmetric" ? 2 * nnz : nnz));
  long long read = 0;
  while (read < nnz && std::getline(in, line)) {
    if (line.empty() || line.front() == '%' || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream entry(line);
    long long i = 0, j = 0;
    double re = 1.0, im = 0.0;
    if (!(entry >> i >> j)) throw Error(Errc::BadHeader, "malformed entry '" + line + "'");
    if (field == "complex") {
      if (!(entry >> re >> im)) throw Error(Errc::BadHeader, "malformed complex entry '" + line + "'");
    } else if (field != "pattern") {
      if (!(entry >> re)) throw Error(Errc::BadHeader, "malformed entry '" + line + "'");
    }
    if (i < 1 || i > n || j < 1 || j > n) {
      throw Error(Errc::IndexOutOfRange,
                  "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") outside " + std::to_string(n));
    }
    const int r = static_cast<int>(i - 1);
    const int c = static_cast<int>(j - 1);
    triplets.push_back({r, c, Complex(re, im)});
    if (symmetry == "symmetric" && r != c) triplets.push_back({c, r, Complex(re, im)});
    ++read;
  }
  if (read < nnz) {
    throw Error(Errc::BadHeader, "expected " + std::to_string(nnz) + " entries, found " + std::to_string(read));
  }

  MatrixMarketFile file;
  std::size_t duplicates = 0;
  file.matrix = assemble_csr(n, std::move(triplets), &duplicates);
  if (duplicates > 0) {
    file.warnings.push_back("DuplicateEntry: " + std::to_string(duplicates) + " duplicate entries summed");
  }
  return file;
}

MatrixMarketFile read_matrix_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open '" + path + "'");
  return parse_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const CsrMatrix& a) {
  const bool real = std::all_of(a.values.begin(), a.values.end(), [](const Complex& v) { return v.imag() == 0.0; });
  out << "%%MatrixMarket matrix coordinate " << (real ? "real" : "complex") << " general\n";
  out << a.n << ' ' << a.n << ' ' << a.values.size() << '\n';
  const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
  for (int i = 0; i < a.n; ++i) {
    for (int k = a.row_offsets[i]; k < a.row_offsets[i + 1]; ++k) {
      out << i + 1 << ' ' << a.columns[k] + 1 << ' ' << a.values[k].real();
      if (!real) out << ' ' << a.values[k].imag();
      out << '\n';
    }
  }
  out.precision(old_precision);
}

MatrixOperator toy_matrix() {
  return MatrixOperator(assemble_csr(4, {{0, 0, 1.01}, {1, 1, 1.0}, {2, 3, -0.5}, {3, 2, 0.5}}));
}

CsrMatrix barbell(int half_size, double edge_prob, std::uint64_t seed) {
  if (half_size < 2) throw Error(Errc::InvalidArgument, "barbell half size must be >= 2");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw Error(Errc::InvalidArgument, "edge probability must lie in [0, 1]");
  }
  std::mt19937_64 engine(seed);
  // Uniform on (0, 1] from the top 53 bits; engine output is portable.
  const auto uniform = [&engine] { return (static_cast<double>(engine() >> 11) + 1.0) * 0x1.0p-53; };

  const long long n = half_size;
  const long long pairs = n * (n - 1);
  std::vector<Triplet> edges;
  edges.push_back({0, half_size, 1.0});
  if (edge_prob > 0.0) {
    edges.reserve(static_cast<std::size_t>(2.0 * pairs * edge_prob * 1.1) + 16);
    const double log_q = std::log1p(-edge_prob);
    for (int half = 0; half < 2; ++half) {
      const int offset = half * half_size;
      long long idx = -1;
      while (true) {
        // Geometric skip to the next present edge among the ordered pairs.
        if (edge_prob >= 1.0) {
          ++idx;
        } else {
          idx += 1 + static_cast<long long>(std::floor(std::log(uniform()) / log_q));
        }
        if (idx >= pairs) break;
        const long long u = idx / (n - 1);
        const long long c = idx % (n - 1);
        const long long v = c < u ? c : c + 1;
        edges.push_back({static_cast<int>(u) + offset, static_cast<int>(v) + offset, 1.0});
      }
    }
  }
  return assemble_csr(2 * half_size, std::move(edges));
}

}  // namespace specmom
