#include "forge/lattice.hpp"

#include <algorithm>
#include <utility>

namespace forge {

ExponentVec exp_add(const ExponentVec& a, const ExponentVec& b) {
  ExponentVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

ExponentVec exp_sub(const ExponentVec& a, const ExponentVec& b) {
  ExponentVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Rat rat_pow(const Rat& q, std::int64_t e) {
  if (e == 0) return Rat(1);
  if (sgn(q) == 0) {
    if (e < 0) raise(Errc::bad_input, "zero to a negative power");
    return Rat(0);
  }
  Rat base = e > 0 ? q : Rat(1) / q;
  std::uint64_t k = e > 0 ? static_cast<std::uint64_t>(e) : static_cast<std::uint64_t>(-e);
  Rat acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return IntMatrix(0, 0);
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols())
      raise(Errc::bad_input, "ragged matrix rows");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = Int(static_cast<long>(rows[i][j]));
  }
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& e : a_)
    if (sgn(e) != 0) return false;
  return true;
}

bool IntMatrix::is_skew_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j <= i; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::row_axpy(int dst, int src, const Int& c) {
  for (int k = 0; k < cols_; ++k) at(dst, k) += c * at(src, k);
}

void IntMatrix::col_axpy(int dst, int src, const Int& c) {
  for (int k = 0; k < rows_; ++k) at(k, dst) += c * at(k, src);
}

void IntMatrix::negate_row(int i) {
  for (int k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(int j) {
  for (int k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) raise(Errc::bad_input, "matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (sgn(aik) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != b.at(i, j)) return false;
  return true;
}

namespace {

std::optional<std::pair<int, int>> smallest_nonzero(const IntMatrix& d, int t) {
  std::optional<std::pair<int, int>> best;
  for (int i = t; i < d.rows(); ++i)
    for (int j = t; j < d.cols(); ++j) {
      if (sgn(d.at(i, j)) == 0) continue;
      if (!best || cmp(abs(d.at(i, j)), abs(d.at(best->first, best->second))) < 0)
        best = std::make_pair(i, j);
    }
  return best;
}

// Clear row t and column t outside the pivot using gcd steps.
void clear_cross(IntMatrix& d, IntMatrix& u, IntMatrix& v, int t) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = t + 1; i < d.rows(); ++i) {
      while (sgn(d.at(i, t)) != 0) {
        Int q = d.at(i, t) / d.at(t, t);  // truncated quotient
        if (sgn(q) != 0) {
          d.row_axpy(i, t, -q);
          u.row_axpy(i, t, -q);
        }
        if (sgn(d.at(i, t)) != 0) {
          d.swap_rows(i, t);
          u.swap_rows(i, t);
          progress = true;
        }
      }
    }
    for (int j = t + 1; j < d.cols(); ++j) {
      while (sgn(d.at(t, j)) != 0) {
        Int q = d.at(t, j) / d.at(t, t);
        if (sgn(q) != 0) {
          d.col_axpy(j, t, -q);
          v.col_axpy(j, t, -q);
        }
        if (sgn(d.at(t, j)) != 0) {
          d.swap_cols(j, t);
          v.swap_cols(j, t);
          progress = true;
        }
      }
    }
  }
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const int r = m.rows(), c = m.cols();
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(r);
  IntMatrix v = IntMatrix::identity(c);
  const int lim = std::min(r, c);
  for (int t = 0; t < lim; ++t) {
    auto piv = smallest_nonzero(d, t);
    if (!piv) break;  // remaining block is zero
    d.swap_rows(t, piv->first);
    u.swap_rows(t, piv->first);
    d.swap_cols(t, piv->second);
    v.swap_cols(t, piv->second);

    clear_cross(d, u, v, t);

    // Invariant-factor fix: the pivot must divide every remaining entry.
    bool fixed = false;
    while (!fixed) {
      fixed = true;
      for (int i = t + 1; i < r && fixed; ++i)
        for (int j = t + 1; j < c && fixed; ++j)
          if (sgn(d.at(i, j) % d.at(t, t)) != 0) {
            d.row_axpy(t, i, Int(1));
            u.row_axpy(t, i, Int(1));
            clear_cross(d, u, v, t);
            fixed = false;
          }
    }
    if (sgn(d.at(t, t)) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }

  if (!(u * m * v == d)) raise(Errc::internal_assertion, "SNF recomposition failed");
  for (int t = 0; t + 1 < lim; ++t) {
    if (sgn(d.at(t, t)) == 0 && sgn(d.at(t + 1, t + 1)) != 0)
      raise(Errc::internal_assertion, "SNF zero ordering violated");
    if (sgn(d.at(t, t)) != 0 && sgn(d.at(t + 1, t + 1) % d.at(t, t)) != 0)
      raise(Errc::internal_assertion, "SNF divisibility chain violated");
  }
  return {std::move(u), std::move(d), std::move(v)};
}

namespace {

ExponentVec to_exponent_vec(const IntMatrix& u, int row) {
  ExponentVec a(static_cast<size_t>(u.cols()));
  for (int k = 0; k < u.cols(); ++k) {
    const Int& e = u.at(row, k);
    if (!e.fits_slong_p()) raise(Errc::guard_exceeded, "kernel vector entry exceeds int64");
    a[static_cast<size_t>(k)] = e.get_si();
  }
  return a;
}

void normalize_primitive(ExponentVec& a) {
  Int g(0);
  for (auto x : a) g = gcd(g, Int(static_cast<long>(x)));
  if (sgn(g) > 0 && g != 1)
    for (auto& x : a) x /= g.get_si();
  for (auto x : a) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : a) y = -y;
    break;
  }
}

}  // namespace

std::vector<ExponentVec> integer_nullspace(const IntMatrix& m) {
  auto snf = smith_normal_form(m);
  const int r = m.rows();
  const int lim = std::min(m.rows(), m.cols());
  std::vector<ExponentVec> basis;
  for (int i = 0; i < r; ++i) {
    bool free_row = i >= lim || sgn(snf.d.at(i, i)) == 0;
    if (!free_row) continue;
    ExponentVec a = to_exponent_vec(snf.u, i);
    normalize_primitive(a);
    basis.push_back(std::move(a));
  }
  std::sort(basis.begin(), basis.end());
  // each basis vector must satisfy a*M = 0 exactly
  for (const auto& a : basis)
    for (int j = 0; j < m.cols(); ++j) {
      Int s(0);
      for (int i = 0; i < r; ++i) s += Int(static_cast<long>(a[static_cast<size_t>(i)])) * m.at(i, j);
      if (sgn(s) != 0) raise(Errc::internal_assertion, "nullspace vector fails a*M=0");
    }
  return basis;
}

Int det_int(const IntMatrix& m) {
  if (!m.is_square()) raise(Errc::non_square, "determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return Int(1);
  IntMatrix a = m;
  Int sign(1), prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (sgn(a.at(k, k)) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (sgn(a.at(i, k)) != 0) {
          p = i;
          break;
        }
      if (p < 0) return Int(0);
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

Int rank_int(const IntMatrix& m) {
  auto snf = smith_normal_form(m);
  int r = 0;
  for (int t = 0; t < std::min(m.rows(), m.cols()); ++t)
    if (sgn(snf.d.at(t, t)) != 0) ++r;
  return Int(r);
}

IntMatrix unimodular_inverse(const IntMatrix& b) {
  if (!b.is_square()) raise(Errc::non_square, "inverse of non-square matrix");
  Int det = det_int(b);
  if (det != 1 && det != -1)
    raise(Errc::not_unimodular, "matrix determinant is not +-1: " + det.get_str());
  // U*B*V = I, hence B^{-1} = V*U.
  auto snf = smith_normal_form(b);
  IntMatrix inv = snf.v * snf.u;
  if (!(b * inv == IntMatrix::identity(b.rows())))
    raise(Errc::internal_assertion, "unimodular inverse verification failed");
  return inv;
}

IntMatrix hermite_column_form(const IntMatrix& m) {
  if (!m.is_square()) raise(Errc::non_square, "Hermite column form needs a square matrix");
  IntMatrix h = m;
  const int n = m.rows();
  int t = 0;
  for (int i = 0; i < n && t < n; ++i) {
    int nz = -1;
    for (int j = t; j < n; ++j)
      if (sgn(h.at(i, j)) != 0) {
        nz = j;
        break;
      }
    if (nz < 0) continue;
    h.swap_cols(t, nz);
    for (int j = t + 1; j < n; ++j) {
      while (sgn(h.at(i, j)) != 0) {
        Int q = h.at(i, j) / h.at(i, t);
        if (sgn(q) != 0) h.col_axpy(j, t, -q);
        if (sgn(h.at(i, j)) != 0) h.swap_cols(j, t);
      }
    }
    if (sgn(h.at(i, t)) < 0) h.negate_col(t);
    for (int j = 0; j < t; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, j).get_mpz_t(), h.at(i, t).get_mpz_t());
      if (sgn(q) != 0) h.col_axpy(j, t, -q);
    }
    ++t;
  }
  return h;
}

bool column_lattice_contains(const IntMatrix& hermite, const std::vector<Int>& v) {
  const int n = hermite.rows();
  std::vector<Int> rem = v;
  for (int i = 0, col = 0; i < n && col < n; ++i) {
    if (sgn(hermite.at(i, col)) == 0) continue;  // skip structural zeros (singular input)
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[static_cast<size_t>(i)].get_mpz_t(),
                hermite.at(i, col).get_mpz_t());
    if (sgn(r) != 0) return false;
    for (int k = i; k < n; ++k) rem[static_cast<size_t>(k)] -= q * hermite.at(k, col);
    ++col;
  }
  for (const auto& x : rem)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace forge
