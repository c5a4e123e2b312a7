#include "forge/analysis.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace forge {

namespace {

// One integer-cleared n x n coefficient matrix per parameter slot (constant
// slot first), stacked side by side into an n x (n*k) matrix.
IntMatrix stacked_coefficient_matrix(const SkewParamMatrix& lambda) {
  const int n = lambda.size();
  auto names = lambda.parameter_names();
  const int slots = 1 + static_cast<int>(names.size());
  IntMatrix stacked(n, n * slots);
  for (int slot = 0; slot < slots; ++slot) {
    // collect rational components for this slot
    std::vector<Rat> comp(static_cast<size_t>(n) * n, Rat(0));
    Int den_lcm(1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Scalar& e = lambda.at(i, j);
        Rat c(0);
        if (slot == 0) {
          c = e.constant_part();
        } else {
          for (const auto& [name, coeff] : e.parameter_parts())
            if (name == names[static_cast<size_t>(slot - 1)]) c = coeff;
        }
        comp[static_cast<size_t>(i) * n + j] = c;
        den_lcm = lcm(den_lcm, c.get_den());
      }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Rat& c = comp[static_cast<size_t>(i) * n + j];
        stacked.at(i, slot * n + j) = c.get_num() * (den_lcm / c.get_den());
      }
  }
  return stacked;
}

}  // namespace

std::vector<ExponentVec> monomial_center_basis(const SkewParamMatrix& lambda) {
  return integer_nullspace(stacked_coefficient_matrix(lambda));
}

SimplicityReport is_poisson_simple_torus(const SkewParamMatrix& lambda) {
  SimplicityReport rep;
  rep.method = lambda.parameter_names().empty() ? "rank" : "stacked-rank";
  auto basis = monomial_center_basis(lambda);
  if (!basis.empty()) {
    rep.simple = false;
    rep.witness = basis.front();
  }
  return rep;
}

std::vector<ExponentVec> monomials_up_to_degree(int arity, int bound) {
  std::vector<ExponentVec> out;
  ExponentVec e(static_cast<size_t>(arity), 0);
  // depth-first enumeration, then canonical descending sort
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == arity) {
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      e[static_cast<size_t>(var)] = k;
      self(self, var + 1, remaining - k);
    }
    e[static_cast<size_t>(var)] = 0;
  };
  rec(rec, 0, bound);
  std::sort(out.begin(), out.end(), grevlex_greater);
  return out;
}

namespace {

// Exact kernel of a rational matrix (rows = constraints): returns a basis of
// {v : A v = 0} in reduced row echelon normalization.
std::vector<std::vector<Rat>> rational_kernel(std::vector<std::vector<Rat>> a, size_t ncols) {
  size_t nrows = a.size();
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < nrows; ++col) {
    size_t sel = row;
    while (sel < nrows && sgn(a[sel][col]) == 0) ++sel;
    if (sel == nrows) continue;
    std::swap(a[sel], a[row]);
    Rat inv = Rat(1) / a[row][col];
    for (size_t j = col; j < ncols; ++j) a[row][j] *= inv;
    for (size_t i = 0; i < nrows; ++i) {
      if (i == row || sgn(a[i][col]) == 0) continue;
      Rat f = a[i][col];
      for (size_t j = col; j < ncols; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (size_t free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rat> v(ncols, Rat(0));
    v[free_col] = Rat(1);
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<LaurentPoly> truncated_center(const PoissonStructure& s, int degree_bound) {
  if (!s.polynomial_type())
    raise(Errc::context_mismatch, "truncated_center needs a polynomial-type structure");
  if (degree_bound < 0) raise(Errc::bad_input, "degree bound must be nonnegative");
  const int n = s.arity();
  // quotient structures keep only reduced (standard-monomial) representatives
  std::vector<ExponentVec> monos;
  for (auto& e : monomials_up_to_degree(n, degree_bound))
    if (element_valid(s, LaurentPoly::monomial(e, Scalar(Rat(1))))) monos.push_back(std::move(e));
  const size_t R = monos.size();

  // constraint columns are (generator, monomial, parameter) triples
  std::map<std::tuple<int, ExponentVec, std::string>, size_t> col_index;
  std::vector<std::vector<Rat>> columns;  // columns[c][r]
  for (size_t r = 0; r < R; ++r) {
    LaurentPoly m = LaurentPoly::monomial(monos[r], Scalar(Rat(1)));
    for (int i = 0; i < n; ++i) {
      LaurentPoly b = bracket(s, m, LaurentPoly::variable(n, i));
      for (const auto& [e, c] : b.terms()) {
        auto record = [&](const std::string& param, const Rat& value) {
          if (sgn(value) == 0) return;
          auto key = std::make_tuple(i, e, param);
          auto [it, inserted] = col_index.try_emplace(key, columns.size());
          if (inserted) columns.emplace_back(R, Rat(0));
          columns[it->second][r] += value;
        };
        record("", c.constant_part());
        for (const auto& [name, coeff] : c.parameter_parts()) record(name, coeff);
      }
    }
  }

  // rows of the solve are the constraints, unknowns are monomial coefficients
  std::vector<std::vector<Rat>> a(columns.size(), std::vector<Rat>(R, Rat(0)));
  for (size_t c = 0; c < columns.size(); ++c)
    for (size_t r = 0; r < R; ++r) a[c][r] = columns[c][r];
  auto kernel = rational_kernel(std::move(a), R);

  std::vector<LaurentPoly> out;
  for (auto& v : kernel) {
    // clear denominators, make primitive, leading coefficient positive
    Int den_lcm(1), num_gcd(0);
    for (const auto& q : v) den_lcm = lcm(den_lcm, q.get_den());
    for (const auto& q : v) num_gcd = gcd(num_gcd, Int(q.get_num() * (den_lcm / q.get_den())));
    LaurentPoly p(n);
    for (size_t r = 0; r < R; ++r) {
      if (sgn(v[r]) == 0) continue;
      Rat c = v[r] * Rat(den_lcm) / Rat(num_gcd);
      p.add_term(monos[r], Scalar(c));
    }
    if (!p.is_zero() && scalar_prints_negative(p.terms().begin()->second)) p = -p;
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const LaurentPoly& x, const LaurentPoly& y) {
    return grevlex_greater(x.terms().begin()->first, y.terms().begin()->first);
  });
  return out;
}

}  // namespace forge
