#pragma once

// Exact rank of integer matrices by fraction-free (Bareiss) elimination.

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace lexlab {

/// Dense row-major integer matrix.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

namespace detail {

struct BareissOverflow {};

inline std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw BareissOverflow{};
  return static_cast<std::int64_t>(v);
}

// Every intermediate entry is a minor of the input, so the division by the previous
// pivot is exact.
template <class T, class Combine>
std::size_t bareiss_rank(std::vector<T>& a, std::size_t rows, std::size_t cols, Combine combine) {
  std::size_t rank = 0;
  T prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + col] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = col; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
    const T p = a[rank * cols + col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const T f = a[i * cols + col];
      for (std::size_t j = col + 1; j < cols; ++j)
        a[i * cols + j] = combine(p, a[i * cols + j], f, a[rank * cols + j], prev);
      a[i * cols + col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Rank over Q. Runs in 64-bit arithmetic and restarts with GMP integers if an
/// intermediate minor overflows.
inline std::size_t rank(const IntMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  // Eliminate along the smaller dimension.
  IntMatrix w = m;
  if (m.cols > m.rows) {
    w = IntMatrix(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
      for (std::size_t j = 0; j < m.cols; ++j) w(j, i) = m(i, j);
  }
  try {
    auto a = w.data;
    return detail::bareiss_rank(a, w.rows, w.cols,
                                [](std::int64_t p, std::int64_t x, std::int64_t f, std::int64_t y, std::int64_t prev) {
                                  if (f == 0 && prev == p) return x;
                                  __int128 v;
                                  if (__builtin_sub_overflow(static_cast<__int128>(p) * x, static_cast<__int128>(f) * y, &v))
                                    throw detail::BareissOverflow{};
                                  return detail::narrow(v / prev);
                                });
  } catch (const detail::BareissOverflow&) {
    std::vector<mpz_class> a(w.data.begin(), w.data.end());
    return detail::bareiss_rank(a, w.rows, w.cols,
                                [](const mpz_class& p, const mpz_class& x, const mpz_class& f, const mpz_class& y,
                                   const mpz_class& prev) -> mpz_class {
                                  mpz_class v = p * x - f * y;
                                  mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                                  return v;
                                });
  }
}

/// Rank over Q of a matrix with arbitrary-precision integer entries.
inline std::size_t rank(std::vector<std::vector<mpz_class>> rows) {
  if (rows.empty() || rows[0].empty()) return 0;
  const std::size_t r = rows.size();
  const std::size_t c = rows[0].size();
  std::vector<mpz_class> a;
  a.reserve(r * c);
  for (auto& row : rows)
    for (auto& x : row) a.push_back(std::move(x));
  return detail::bareiss_rank(a, r, c,
                              [](const mpz_class& p, const mpz_class& x, const mpz_class& f, const mpz_class& y,
                                 const mpz_class& prev) -> mpz_class {
                                mpz_class v = p * x - f * y;
                                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                                return v;
                              });
}

}  // namespace lexlab
