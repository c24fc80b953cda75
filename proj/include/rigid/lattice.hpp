#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rigid/poly.hpp"

namespace rigid {

using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>;  // row-major, rows x cols
using RatVec = std::vector<Rational>;

std::int64_t dot(const IntVec& a, const IntVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(std::int64_t k, const IntVec& a);
IntVec neg(const IntVec& a);
bool is_zero(const IntVec& a);
IntVec apply(const IntMat& m, const IntVec& v);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat identity_mat(std::size_t n);
IntMat transpose(const IntMat& m, std::size_t cols_if_empty = 0);
/// Matrix with the given vectors as columns (m rows).
IntMat columns_matrix(const std::vector<IntVec>& cols, std::size_t m);

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... >= 0.
struct SmithForm {
  IntMat U, D, V;
  std::size_t rank = 0;
  std::vector<std::int64_t> diag;  // first `rank` diagonal entries, positive
};
SmithForm smith_normal_form(const IntMat& a, std::size_t rows, std::size_t cols);

/// Integer solution of A x = b, if one exists.
std::optional<IntVec> solve_integer(const IntMat& a, std::size_t cols, const IntVec& b);
/// Rational solution of A x = b (A of full column rank), if one exists.
std::optional<RatVec> solve_rational(const IntMat& a, std::size_t cols, const IntVec& b);

std::size_t rank_int(const IntMat& a);

std::string to_string(const IntVec& v);

}  // namespace rigid
