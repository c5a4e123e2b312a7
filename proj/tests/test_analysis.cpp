#include <doctest.h>

#include "forge/analysis.hpp"
#include "forge/poly_text.hpp"

using namespace forge;

namespace {

SkewParamMatrix all_ones(int n) {
  SkewParamMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m.set(i, j, Scalar(Rat(1)));
  return m;
}

// exhaustive central-monomial search over |a_i| <= mag
std::optional<ExponentVec> central_monomial_search(const SkewParamMatrix& lambda, int mag) {
  const int n = lambda.size();
  ExponentVec a(static_cast<size_t>(n), 0);
  std::optional<ExponentVec> found;
  auto rec = [&](auto&& self, int var) -> void {
    if (found) return;
    if (var == n) {
      bool zero = true;
      for (auto v : a) zero = zero && v == 0;
      if (zero) return;
      for (int j = 0; j < n; ++j) {
        Scalar s;
        for (int i = 0; i < n; ++i)
          s += lambda.at(i, j).scaled(Rat(static_cast<long>(a[static_cast<size_t>(i)])));
        if (!s.is_zero()) return;
      }
      found = a;
      return;
    }
    for (int v = -mag; v <= mag; ++v) {
      a[static_cast<size_t>(var)] = v;
      self(self, var + 1);
    }
    a[static_cast<size_t>(var)] = 0;
  };
  rec(rec, 0);
  return found;
}

// dense rank over Q, used as the independent oracle for the center dimension
size_t rank_of(std::vector<std::vector<Rat>> rows) {
  size_t rank = 0;
  if (rows.empty()) return 0;
  size_t cols = rows[0].size();
  for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
    size_t sel = rank;
    while (sel < rows.size() && sgn(rows[sel][c]) == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || sgn(rows[i][c]) == 0) continue;
      Rat f = rows[i][c] / rows[rank][c];
      for (size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

bool in_span(const std::vector<LaurentPoly>& basis, const LaurentPoly& target) {
  std::vector<ExponentVec> monos;
  auto collect = [&](const LaurentPoly& p) {
    for (const auto& [e, c] : p.terms())
      if (std::find(monos.begin(), monos.end(), e) == monos.end()) monos.push_back(e);
  };
  for (const auto& b : basis) collect(b);
  collect(target);
  auto to_row = [&](const LaurentPoly& p) {
    std::vector<Rat> row(monos.size(), Rat(0));
    for (const auto& [e, c] : p.terms())
      row[static_cast<size_t>(std::find(monos.begin(), monos.end(), e) - monos.begin())] =
          c.rational();
    return row;
  };
  std::vector<std::vector<Rat>> rows;
  for (const auto& b : basis) rows.push_back(to_row(b));
  size_t r1 = rank_of(rows);
  rows.push_back(to_row(target));
  return rank_of(rows) == r1;
}

}  // namespace

TEST_CASE("two-variable torus with generic parameter is simple") {
  SkewParamMatrix m(2);
  m.set(0, 1, Scalar::parameter("q"));
  auto rep = is_poisson_simple_torus(m);
  CHECK(rep.simple);
  CHECK(rep.method == "stacked-rank");
  CHECK_FALSE(rep.witness.has_value());
  CHECK(monomial_center_basis(m).empty());
}

TEST_CASE("all-ones three-torus has the central monomial x1*x2^-1*x3") {
  auto rep = is_poisson_simple_torus(all_ones(3));
  CHECK_FALSE(rep.simple);
  REQUIRE(rep.witness.has_value());
  CHECK(*rep.witness == ExponentVec{1, -1, 1});
  auto basis = monomial_center_basis(all_ones(3));
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == ExponentVec{1, -1, 1});
}

TEST_CASE("odd uniparameter tori are never simple") {
  Rng rng(51);
  for (int t = 0; t < 20; ++t) {
    int n = rng.uniform(0, 1) ? 3 : 5;
    SkewParamMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        m.set(i, j, Scalar::parameter("q", Rat(static_cast<long>(rng.uniform(-3, 3)))));
    CHECK_FALSE(is_poisson_simple_torus(m).simple);
  }
}

TEST_CASE("zero bracket leaves the whole lattice central") {
  auto basis = monomial_center_basis(SkewParamMatrix(3));
  CHECK(basis.size() == 3);
}

TEST_CASE("simplicity verdicts cross-validate") {
  Rng rng(53);
  for (int t = 0; t < 60; ++t) {
    int n = rng.uniform(0, 1) ? 3 : 4;
    SkewParamMatrix m(n);
    IntMatrix mi(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        long v = static_cast<long>(rng.uniform(-2, 2));
        m.set(i, j, Scalar(Rat(v)));
        mi.at(i, j) = v;
        mi.at(j, i) = -v;
      }
    auto rep = is_poisson_simple_torus(m);
    // uniparameter criterion: simple iff det M != 0
    CHECK(rep.simple == (sgn(det_int(mi)) != 0));
    auto search = central_monomial_search(m, 3);
    if (search) CHECK_FALSE(rep.simple);
    if (rep.witness) {
      auto torus = PoissonStructure::torus(m);
      LaurentPoly xw = LaurentPoly::monomial(*rep.witness, Scalar(Rat(1)));
      for (int j = 0; j < n; ++j)
        CHECK(bracket(torus, xw, LaurentPoly::variable(n, j)).is_zero());
    }
  }
}

TEST_CASE("truncated center of the Fermat quintic contains the potential") {
  LaurentPoly omega = parse_poly("x^5+y^5+z^5", 3);
  auto s = PoissonStructure::potential_affine(omega);
  auto basis = truncated_center(s, 5);
  CHECK(in_span(basis, omega));
  CHECK(in_span(basis, LaurentPoly::constant(3, Scalar(Rat(1)))));
  for (const auto& f : basis)
    for (int i = 0; i < 3; ++i)
      CHECK(bracket(s, f, LaurentPoly::variable(3, i)).is_zero());
}

TEST_CASE("Weyl center is trivial at low degree") {
  auto s = PoissonStructure::weyl(1);
  auto basis = truncated_center(s, 3);
  // independent oracle: rank of the full constraint system
  auto monos = monomials_up_to_degree(2, 3);
  std::vector<std::vector<Rat>> rows;  // one row per (monomial), columns = constraints
  std::vector<ExponentVec> constraint_monos;
  for (const auto& e : monos) {
    LaurentPoly m = LaurentPoly::monomial(e, Scalar(Rat(1)));
    for (int i = 0; i < 2; ++i) {
      LaurentPoly b = bracket(s, m, LaurentPoly::variable(2, i));
      for (const auto& [be, bc] : b.terms())
        if (std::find(constraint_monos.begin(), constraint_monos.end(),
                      be) == constraint_monos.end())
          constraint_monos.push_back(be);
    }
  }
  for (const auto& e : monos) {
    LaurentPoly m = LaurentPoly::monomial(e, Scalar(Rat(1)));
    std::vector<Rat> row(2 * constraint_monos.size(), Rat(0));
    for (int i = 0; i < 2; ++i) {
      LaurentPoly b = bracket(s, m, LaurentPoly::variable(2, i));
      for (const auto& [be, bc] : b.terms()) {
        size_t k = static_cast<size_t>(
            std::find(constraint_monos.begin(), constraint_monos.end(), be) -
            constraint_monos.begin());
        row[static_cast<size_t>(i) * constraint_monos.size() + k] = bc.rational();
      }
    }
    rows.push_back(std::move(row));
  }
  size_t expected_dim = monos.size() - rank_of(rows);
  CHECK(basis.size() == expected_dim);
  CHECK(basis.size() == 1);  // constants only
  CHECK(to_string(basis[0]) == "1");
}

TEST_CASE("skew polynomial center at low degree is constants") {
  SkewParamMatrix m(2);
  m.set(0, 1, Scalar(Rat(1)));
  auto s = PoissonStructure::skew_poly(m);
  auto basis = truncated_center(s, 2);
  REQUIRE(basis.size() == 1);
  CHECK(to_string(basis[0]) == "1");
}

TEST_CASE("quotient centers run on standard-monomial representatives") {
  auto q = PoissonStructure::potential_quotient(parse_poly("x^5+y^5+z^5", 3), Rat(1));
  auto basis = truncated_center(q, 5);
  CHECK(in_span(basis, LaurentPoly::constant(3, Scalar(Rat(1)))));
  for (const auto& f : basis)
    for (int i = 0; i < 3; ++i)
      CHECK(bracket(q, f, LaurentPoly::variable(3, i)).is_zero());
}

TEST_CASE("center basis is closed under in-range products") {
  auto s = PoissonStructure::potential_affine(parse_poly("x^3+y^3+z^3", 3));
  int bound = 6;
  auto basis = truncated_center(s, bound);
  for (const auto& f : basis)
    for (const auto& g : basis) {
      LaurentPoly p = f * g;
      if (p.is_zero()) continue;
      if (top_adams_degree(p) > bound) continue;
      CHECK(in_span(basis, p));
    }
}
