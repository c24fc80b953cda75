#include "rigid/lattice.hpp"

#include <cstdlib>

namespace rigid {

std::int64_t dot(const IntVec& a, const IntVec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

IntVec scale(std::int64_t k, const IntVec& a) {
  IntVec r(a);
  for (auto& x : r) x *= k;
  return r;
}

IntVec neg(const IntVec& a) { return scale(-1, a); }

bool is_zero(const IntVec& a) {
  for (auto x : a) {
    if (x != 0) return false;
  }
  return true;
}

IntVec apply(const IntMat& m, const IntVec& v) {
  IntVec r(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  const std::size_t n = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  IntMat r(n, IntVec(cols, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  }
  return r;
}

IntMat identity_mat(std::size_t n) {
  IntMat r(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

IntMat transpose(const IntMat& m, std::size_t cols_if_empty) {
  const std::size_t cols = m.empty() ? cols_if_empty : m[0].size();
  IntMat t(cols, IntVec(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  }
  return t;
}

IntMat columns_matrix(const std::vector<IntVec>& cols, std::size_t m) {
  IntMat r(m, IntVec(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < m; ++i) r[i][j] = cols[j][i];
  }
  return r;
}

SmithForm smith_normal_form(const IntMat& a, std::size_t rows, std::size_t cols) {
  SmithForm f;
  f.D = a;
  if (f.D.size() != rows) f.D.assign(rows, IntVec(cols, 0));
  f.U = identity_mat(rows);
  f.V = identity_mat(cols);
  IntMat& D = f.D;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(D[i], D[j]);
    std::swap(f.U[i], f.U[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : D) std::swap(row[i], row[j]);
    for (auto& row : f.V) std::swap(row[i], row[j]);
  };
  auto row_axpy = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t j = 0; j < cols; ++j) D[dst][j] -= q * D[src][j];
    for (std::size_t j = 0; j < rows; ++j) f.U[dst][j] -= q * f.U[src][j];
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t i = 0; i < rows; ++i) D[i][dst] -= q * D[i][src];
    for (std::size_t i = 0; i < cols; ++i) f.V[i][dst] -= q * f.V[i][src];
  };

  std::size_t t = 0;
  while (t < std::min(rows, cols)) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (D[i][j] != 0 && (pi == rows || std::llabs(D[i][j]) < std::llabs(D[pi][pj]))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D[i][t] != 0) row_axpy(i, t, D[i][t] / D[t][t]);
        if (D[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D[t][j] != 0) col_axpy(j, t, D[t][j] / D[t][t]);
        if (D[t][j] != 0) clean = false;
      }
      if (!clean) {
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (D[i][t] != 0 && std::llabs(D[i][t]) < std::llabs(D[t][t])) swap_rows(t, i);
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (D[t][j] != 0 && std::llabs(D[t][j]) < std::llabs(D[t][t])) swap_cols(t, j);
        }
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (D[i][j] % D[t][t] != 0) {
            for (std::size_t k = 0; k < cols; ++k) D[t][k] += D[i][k];
            for (std::size_t k = 0; k < rows; ++k) f.U[t][k] += f.U[i][k];
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    if (D[t][t] < 0) {
      for (auto& x : D[t]) x = -x;
      for (auto& x : f.U[t]) x = -x;
    }
    f.diag.push_back(D[t][t]);
    ++t;
  }
  f.rank = t;
  return f;
}

std::optional<IntVec> solve_integer(const IntMat& a, std::size_t cols, const IntVec& b) {
  const std::size_t rows = b.size();
  SmithForm f = smith_normal_form(a, rows, cols);
  IntVec ub = rigid::apply(f.U, b);
  IntVec y(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    if (i < f.rank) {
      if (ub[i] % f.diag[i] != 0) return std::nullopt;
      y[i] = ub[i] / f.diag[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return rigid::apply(f.V, y);
}

std::optional<RatVec> solve_rational(const IntMat& a, std::size_t cols, const IntVec& b) {
  const std::size_t rows = b.size();
  SmithForm f = smith_normal_form(a, rows, cols);
  IntVec ub = rigid::apply(f.U, b);
  RatVec y(cols, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (i < f.rank) {
      y[i] = Rational(ub[i], f.diag[i]);
      y[i].canonicalize();
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  RatVec x(cols, Rational(0));
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < cols; ++j) x[i] += Rational(f.V[i][j]) * y[j];
  }
  return x;
}

std::size_t rank_int(const IntMat& a) {
  if (a.empty()) return 0;
  return smith_normal_form(a, a.size(), a[0].size()).rank;
}

std::string to_string(const IntVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

}  // namespace rigid
