#include "fatpoints/engine.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

namespace fatpoints {

void PrimeFieldConfig::validate() const {
  auto check = [](std::uint64_t p) {
    if (!is_probable_prime(p) || p < 3 || p >= (1ULL << 31))
      throw std::invalid_argument("not an odd prime below 2^31: " + std::to_string(p));
  };
  check(prime);
  for (auto p : alternate_primes) check(p);
  if (retries < 0) throw std::invalid_argument("retries must be nonnegative");
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Regular: return "Regular";
    case Status::Zero: return "Zero";
    case Status::SpecialCandidate: return "SpecialCandidate";
    case Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Status status_from_string(const std::string& s) {
  if (s == "Regular") return Status::Regular;
  if (s == "Zero") return Status::Zero;
  if (s == "SpecialCandidate") return Status::SpecialCandidate;
  if (s == "Inconclusive") return Status::Inconclusive;
  throw std::invalid_argument("unknown status '" + s + "'");
}

bool DimensionVerdict::certifies(Status expected) const {
  switch (expected) {
    case Status::Regular: return virtual_dim >= 0 && computed_dim == virtual_dim;
    case Status::Zero: return computed_dim == 0;
    default: return status == expected;
  }
}

std::uint64_t attempt_seed(std::uint64_t seed, int attempt) {
  if (attempt == 0) return seed;
  // splitmix64 step
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(attempt);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // Rejection sampling keeps the draw identical on every standard library.
  const std::uint64_t limit = (~0ULL) - ((~0ULL) % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

namespace {

constexpr int kMaxRedraws = 64;

}  // namespace

std::vector<PointCoords> point_coordinates(const MultiProjectiveSpace& space, const FatPointScheme& scheme,
                                           const PrimeField& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t p = field.prime();
  std::vector<PointCoords> out;
  out.reserve(scheme.points.size());
  for (std::size_t i = 0; i < scheme.points.size(); ++i) {
    const auto& spec = scheme.points[i].spec;
    PointCoords pc(space.factors());
    for (int f = 0; f < space.factors(); ++f) {
      const int len = space.factor_dims[f] + 1;
      auto& v = pc[f];
      v.assign(len, 0);
      if (spec.coords) {
        for (int j = 0; j < len; ++j) v[j] = field.from_signed((*spec.coords)[f][j]);
        int c = 0;
        while (c < len && v[c] == 0) ++c;
        if (c == len)
          throw std::domain_error("point " + std::to_string(i) + " has a zero coordinate vector mod " +
                                  std::to_string(p));
        const std::uint64_t inv = field.inv(v[c]);
        for (int j = 0; j < len; ++j) v[j] = field.mul(v[j], inv);
        continue;
      }
      bool chart_set = false;
      for (int j = 0; j < len; ++j) {
        if (spec.stratum && spec.stratum->vanishes(f, j)) continue;
        if (!chart_set) {
          v[j] = 1;
          chart_set = true;
          continue;
        }
        std::uint64_t x = 0;
        for (int t = 0; t < kMaxRedraws && x == 0; ++t) x = uniform_below(rng, p);
        if (x == 0) throw std::runtime_error("could not draw a nonzero coordinate");
        v[j] = x;
      }
    }
    out.push_back(std::move(pc));
  }
  return out;
}

FatPointScheme concretize(const MultiProjectiveSpace& space, const FatPointScheme& scheme, std::uint64_t prime,
                          std::uint64_t seed) {
  scheme.validate(space);
  PrimeField field(prime);
  auto coords = point_coordinates(space, scheme, field, seed);
  FatPointScheme out = scheme;
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    std::vector<std::vector<std::int64_t>> c(space.factors());
    for (int f = 0; f < space.factors(); ++f)
      for (auto x : coords[i][f]) c[f].push_back(static_cast<std::int64_t>(x));
    out.points[i].spec.coords = std::move(c);
  }
  return out;
}

std::vector<Monomial> system_basis(const MultiProjectiveSpace& space, const Multidegree& deg,
                                   const FatPointScheme& scheme) {
  std::int64_t full = basis_size(space, deg);
  if (full > 64 * kMaxColumns && scheme.contained.empty())
    throw std::invalid_argument("system has " + std::to_string(full) + " monomials; at most " +
                                std::to_string(kMaxColumns) + " columns are supported");
  auto basis = scheme.contained.empty() ? monomial_basis(space, deg) : ideal_basis(space, deg, scheme.contained);
  if (static_cast<int>(basis.size()) > kMaxColumns)
    throw std::invalid_argument("system has " + std::to_string(basis.size()) + " columns; at most " +
                                std::to_string(kMaxColumns) + " are supported");
  return basis;
}

namespace {

// Multi-indices over nvars with total degree < a, graded, x_0 exponent largest first within a degree.
std::vector<std::vector<int>> derivative_indices(int nvars, int a) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(nvars, 0);
  for (int t = 0; t < a; ++t) {
    auto rec = [&](auto&& self, int pos, int left) -> void {
      if (pos == nvars - 1) {
        cur[pos] = left;
        out.push_back(cur);
        return;
      }
      for (int e = left; e >= 0; --e) {
        cur[pos] = e;
        self(self, pos + 1, left - e);
      }
    };
    if (nvars == 0) {
      if (t == 0) out.emplace_back();
      continue;
    }
    rec(rec, 0, t);
  }
  return out;
}

struct Chart {
  std::vector<std::uint64_t> values;      // affine coordinate values, factor-major
  std::vector<std::pair<int, int>> vars;  // (factor, coordinate) of each affine variable
};

Chart chart_of(const MultiProjectiveSpace& space, const PointCoords& pc) {
  Chart ch;
  for (int f = 0; f < space.factors(); ++f) {
    int c = 0;
    while (pc[f][c] == 0) ++c;  // coordinates are normalized, so pc[f][c] == 1
    for (int j = 0; j <= space.factor_dims[f]; ++j) {
      if (j == c) continue;
      ch.values.push_back(pc[f][j]);
      ch.vars.emplace_back(f, j);
    }
  }
  return ch;
}

}  // namespace

InterpolationMatrix build_matrix(const MultiProjectiveSpace& space, const Multidegree& deg,
                                 const FatPointScheme& scheme, std::uint64_t prime, std::uint64_t seed) {
  require_match(space, deg);
  scheme.validate(space);
  PrimeField field(prime);
  int total_degree = 0;
  for (int d : deg.degrees) total_degree += d;
  if (static_cast<std::uint64_t>(total_degree) >= prime)
    throw std::invalid_argument("prime too small for the total degree");

  const auto basis = system_basis(space, deg, scheme);
  const int C = static_cast<int>(basis.size());
  const int N = space.ambient_dim();
  std::int64_t rows = static_cast<std::int64_t>(scheme.jets.size());
  for (const auto& pt : scheme.points) rows += conditions_of_fat_point(pt.multiplicity, N);
  if (rows > 16 * static_cast<std::int64_t>(kMaxColumns) * 4)
    throw std::invalid_argument("too many condition rows: " + std::to_string(rows));

  InterpolationMatrix out;
  out.prime = prime;
  out.seed = seed;
  out.matrix = ModMatrix(static_cast<int>(rows), C);
  out.provenance.reserve(static_cast<std::size_t>(rows));

  const auto coords = point_coordinates(space, scheme, field, seed);
  const int maxdeg = *std::max_element(deg.degrees.begin(), deg.degrees.end());

  // falling[e][b] = e (e-1) ... (e-b+1), binom[e][b]
  std::vector<std::vector<std::uint64_t>> falling(maxdeg + 1, std::vector<std::uint64_t>(maxdeg + 1, 0));
  std::vector<std::vector<std::uint64_t>> binom(maxdeg + 1, std::vector<std::uint64_t>(maxdeg + 1, 0));
  for (int e = 0; e <= maxdeg; ++e)
    for (int b = 0; b <= e; ++b) {
      std::uint64_t v = 1;
      for (int t = 0; t < b; ++t) v = field.mul(v, static_cast<std::uint64_t>(e - t));
      falling[e][b] = v;
      binom[e][b] = static_cast<std::uint64_t>(binomial(e, b)) % prime;
    }

  std::vector<Chart> charts;
  charts.reserve(coords.size());
  for (const auto& pc : coords) charts.push_back(chart_of(space, pc));

  // Exponent of each affine variable in each basis monomial, per chart.
  auto affine_exponents = [&](const Chart& ch, std::vector<int>& e) {
    e.assign(static_cast<std::size_t>(C) * N, 0);
    for (int col = 0; col < C; ++col)
      for (int v = 0; v < N; ++v) e[static_cast<std::size_t>(col) * N + v] =
          basis[col].exponents[ch.vars[v].first][ch.vars[v].second];
  };
  auto powers = [&](const std::vector<std::uint64_t>& vals) {
    std::vector<std::vector<std::uint64_t>> pw(vals.size(), std::vector<std::uint64_t>(maxdeg + 1, 1));
    for (std::size_t v = 0; v < vals.size(); ++v)
      for (int e = 1; e <= maxdeg; ++e) pw[v][e] = field.mul(pw[v][e - 1], vals[v]);
    return pw;
  };

  int r = 0;
  std::vector<int> exps;
  for (std::size_t i = 0; i < scheme.points.size(); ++i) {
    const Chart& ch = charts[i];
    affine_exponents(ch, exps);
    const auto pw = powers(ch.values);
    for (const auto& beta : derivative_indices(N, scheme.points[i].multiplicity)) {
      std::uint32_t* row = out.matrix.row(r);
      for (int col = 0; col < C; ++col) {
        const int* e = &exps[static_cast<std::size_t>(col) * N];
        std::uint64_t val = 1;
        for (int v = 0; v < N && val != 0; ++v) {
          if (beta[v] > e[v]) {
            val = 0;
            break;
          }
          if (beta[v]) val = field.mul(val, falling[e[v]][beta[v]]);
          val = field.mul(val, pw[v][e[v] - beta[v]]);
        }
        row[col] = static_cast<std::uint32_t>(val);
      }
      out.provenance.push_back({static_cast<int>(i), beta, -1});
      ++r;
    }
  }

  for (std::size_t jdx = 0; jdx < scheme.jets.size(); ++jdx) {
    const auto& jet = scheme.jets[jdx];
    const Chart& ch = charts[jet.point];
    affine_exponents(ch, exps);
    const auto pw = powers(ch.values);
    std::vector<std::uint64_t> t(N);
    for (int v = 0; v < N; ++v) t[v] = field.from_signed(jet.direction[v]);
    const auto tw = powers(t);
    const int k = jet.order;
    std::uint32_t* row = out.matrix.row(r);
    std::vector<std::uint64_t> poly(k + 1), next(k + 1);
    for (int col = 0; col < C; ++col) {
      // Coefficient of s^k in prod_v (x_v + s t_v)^{e_v}.
      std::fill(poly.begin(), poly.end(), 0);
      poly[0] = 1;
      const int* e = &exps[static_cast<std::size_t>(col) * N];
      for (int v = 0; v < N; ++v) {
        if (e[v] == 0) continue;
        std::fill(next.begin(), next.end(), 0);
        for (int a = 0; a <= k; ++a) {
          if (poly[a] == 0) continue;
          for (int b = 0; b <= e[v] && a + b <= k; ++b) {
            std::uint64_t term = field.mul(binom[e[v]][b], field.mul(pw[v][e[v] - b], tw[v][b]));
            next[a + b] = field.add(next[a + b], field.mul(poly[a], term));
          }
        }
        poly.swap(next);
      }
      row[col] = static_cast<std::uint32_t>(poly[k]);
    }
    out.provenance.push_back({-1, {}, static_cast<int>(jdx)});
    ++r;
  }
  return out;
}

InterpolationMatrix build_matrix(const MultiProjectiveSpace& space, const Multidegree& deg,
                                 const FatPointScheme& scheme, const PrimeFieldConfig& config) {
  config.validate();
  return build_matrix(space, deg, scheme, config.prime, config.seed);
}

int rank_fp(const InterpolationMatrix& m) { return rank_fp(m.matrix, PrimeField(m.prime)); }

DimensionVerdict dimension(const MultiProjectiveSpace& space, const Multidegree& deg,
                           const FatPointScheme& scheme, const PrimeFieldConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  DimensionVerdict v;
  v.virtual_dim = virtual_dim(space, deg, scheme);
  v.expected_dim = std::max<std::int64_t>(0, v.virtual_dim);

  std::vector<std::pair<std::uint64_t, std::uint64_t>> attempts;
  for (int a = 0; a <= config.retries; ++a) attempts.emplace_back(config.prime, attempt_seed(config.seed, a));
  for (std::size_t i = 0; i < config.alternate_primes.size(); ++i)
    attempts.emplace_back(config.alternate_primes[i],
                          attempt_seed(config.seed, config.retries + 1 + static_cast<int>(i)));

  bool have = false;
  for (const auto& [prime, seed] : attempts) {
    auto m = build_matrix(space, deg, scheme, prime, seed);
    const int rank = rank_fp(m);
    const std::int64_t dim = m.cols() - rank;
    v.run_dims.push_back(dim);
    if (!have || dim < v.computed_dim) {
      have = true;
      v.computed_dim = dim;
      v.certificate.prime = prime;
      v.certificate.seed = seed;
      v.certificate.rows = m.rows();
      v.certificate.cols = m.cols();
      v.certificate.rank = rank;
    }
    if (dim == v.expected_dim) break;
  }
  v.certificate.retry_count = static_cast<int>(v.run_dims.size()) - 1;

  if (v.computed_dim == v.expected_dim) {
    v.status = v.virtual_dim > 0 ? Status::Regular : Status::Zero;
  } else {
    bool agree = std::all_of(v.run_dims.begin(), v.run_dims.end(),
                             [&](std::int64_t d) { return d == v.run_dims.front(); });
    v.status = agree ? Status::SpecialCandidate : Status::Inconclusive;
  }
  v.certificate.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

Json verdict_json(const MultiProjectiveSpace& space, const Multidegree& deg, const FatPointScheme& scheme,
                  const DimensionVerdict& v, bool include_timing) {
  Json j;
  j["space"] = space.label();
  j["degree"] = deg.label();
  j["scheme_type"] = scheme_type(scheme).to_string();
  Json strata = Json::array();
  const FatPoint* prev = nullptr;
  for (const auto& p : scheme.points) {
    bool same = prev && prev->multiplicity == p.multiplicity && prev->spec.stratum == p.spec.stratum;
    if (!same) strata.push_back(p.spec.stratum ? p.spec.stratum->label() : std::string("general"));
    prev = &p;
  }
  j["strata"] = std::move(strata);
  if (!scheme.contained.empty()) {
    Json c = Json::array();
    for (const auto& s : scheme.contained) c.push_back(s.label());
    j["contained"] = std::move(c);
  }
  if (!scheme.jets.empty()) j["jets"] = scheme.jets.size();
  j["computed_dim"] = v.computed_dim;
  j["vdim"] = v.virtual_dim;
  j["expected_dim"] = v.expected_dim;
  j["status"] = to_string(v.status);
  j["prime"] = v.certificate.prime;
  j["seed"] = v.certificate.seed;
  j["rank"] = v.certificate.rank;
  j["rows"] = v.certificate.rows;
  j["cols"] = v.certificate.cols;
  j["retry_count"] = v.certificate.retry_count;
  if (include_timing) j["elapsed_ms"] = v.certificate.elapsed_ms;
  return j;
}

}  // namespace fatpoints
