#include "fatpoints/oracle.hpp"

#include <functional>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace fatpoints {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

Integer falling(int e, int b) {
  Integer r = 1;
  for (int t = 0; t < b; ++t) r *= (e - t);
  return r;
}

Integer factorial(int b) { return falling(b, b); }

void compositions(int nvars, int total, std::vector<int>& cur, int pos,
                  const std::function<void(const std::vector<int>&)>& emit) {
  if (pos == nvars - 1) {
    cur[pos] = total;
    emit(cur);
    return;
  }
  for (int e = total; e >= 0; --e) {
    cur[pos] = e;
    compositions(nvars, total - e, cur, pos + 1, emit);
  }
}

void for_each_index(int nvars, int total, const std::function<void(const std::vector<int>&)>& emit) {
  if (nvars == 0) {
    if (total == 0) emit({});
    return;
  }
  std::vector<int> cur(nvars, 0);
  compositions(nvars, total, cur, 0, emit);
}

std::size_t rank_q(std::vector<std::vector<Rational>> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::int64_t exact_rank_oracle(const MultiProjectiveSpace& space, const Multidegree& deg,
                               const FatPointScheme& scheme) {
  require_match(space, deg);
  scheme.validate(space);
  const auto basis = scheme.contained.empty() ? monomial_basis(space, deg)
                                              : ideal_basis(space, deg, scheme.contained);
  const std::size_t C = basis.size();
  const int K = space.point_coordinate_count();
  std::vector<std::vector<Rational>> rows;

  // Flattened homogeneous exponents.
  std::vector<std::vector<int>> flat(C);
  for (std::size_t col = 0; col < C; ++col)
    for (const auto& fe : basis[col].exponents) flat[col].insert(flat[col].end(), fe.begin(), fe.end());

  for (std::size_t i = 0; i < scheme.points.size(); ++i) {
    const auto& pt = scheme.points[i];
    if (!pt.spec.coords) throw std::invalid_argument("oracle requires every point to be pinned");
    std::vector<Integer> x;
    for (const auto& fc : *pt.spec.coords)
      for (auto c : fc) x.emplace_back(c);
    for (int order = 0; order < pt.multiplicity; ++order) {
      for_each_index(K, order, [&](const std::vector<int>& g) {
        std::vector<Rational> row(C);
        for (std::size_t col = 0; col < C; ++col) {
          Integer val = 1;
          for (int v = 0; v < K && val != 0; ++v) {
            const int e = flat[col][v];
            if (g[v] > e) {
              val = 0;
              break;
            }
            val *= falling(e, g[v]) * boost::multiprecision::pow(x[v], static_cast<unsigned>(e - g[v]));
          }
          row[col] = Rational(val);
        }
        rows.push_back(std::move(row));
      });
    }
  }

  for (const auto& jet : scheme.jets) {
    const auto& fc = *scheme.points.at(jet.point).spec.coords;
    // Chart: first nonzero coordinate of each factor becomes 1.
    std::vector<Rational> q;
    std::vector<int> flat_index;
    int offset = 0;
    for (int f = 0; f < space.factors(); ++f) {
      int c = 0;
      while (c <= space.factor_dims[f] && fc[f][c] == 0) ++c;
      if (c > space.factor_dims[f]) throw std::domain_error("coordinate normalization failure");
      for (int j = 0; j <= space.factor_dims[f]; ++j) {
        if (j == c) continue;
        q.push_back(Rational(fc[f][j]) / Rational(fc[f][c]));
        flat_index.push_back(offset + j);
      }
      offset += space.factor_dims[f] + 1;
    }
    const int N = static_cast<int>(q.size());
    std::vector<Rational> row(C, Rational(0));
    for_each_index(N, jet.order, [&](const std::vector<int>& b) {
      for (std::size_t col = 0; col < C; ++col) {
        Rational val = 1;
        for (int v = 0; v < N && val != 0; ++v) {
          const int e = flat[col][flat_index[v]];
          if (b[v] > e) {
            val = 0;
            break;
          }
          Rational qp = 1, tp = 1;
          for (int t = 0; t < e - b[v]; ++t) qp *= q[v];
          for (int t = 0; t < b[v]; ++t) tp *= Rational(jet.direction[v]);
          val *= Rational(falling(e, b[v]), factorial(b[v])) * qp * tp;
        }
        row[col] += val;
      }
    });
    rows.push_back(std::move(row));
  }
  return static_cast<std::int64_t>(rank_q(std::move(rows), C));
}

std::int64_t exact_dimension(const MultiProjectiveSpace& space, const Multidegree& deg,
                             const FatPointScheme& scheme) {
  const auto C = scheme.contained.empty() ? basis_size(space, deg)
                                          : static_cast<std::int64_t>(ideal_basis(space, deg, scheme.contained).size());
  return C - exact_rank_oracle(space, deg, scheme);
}

}  // namespace fatpoints
