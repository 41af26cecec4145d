#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fatpoints/degeneration.hpp"
#include "fatpoints/oracle.hpp"
#include "support/gen.hpp"

using namespace fatpoints;
using fatpoints::testing::Gen;

namespace {

std::int64_t choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t basis_count(const std::vector<int>& dims, const std::vector<int>& degs) {
  std::int64_t b = 1;
  for (std::size_t i = 0; i < dims.size(); ++i) b *= degs[i] < 0 ? 0 : choose(dims[i] + degs[i], dims[i]);
  return b;
}

int ambient(const std::vector<int>& dims) { return std::accumulate(dims.begin(), dims.end(), 0); }

std::int64_t fat_conditions(int a, int N) { return a <= 0 ? 0 : choose(a + N - 1, N); }

PrimeFieldConfig cfg(std::uint64_t seed) {
  PrimeFieldConfig c;
  c.seed = seed;
  return c;
}

// Random type whose naive condition count stays near the basis size.
FatPointScheme random_scheme(Gen& g, const MultiProjectiveSpace& s, const Multidegree& d, bool strata) {
  const std::int64_t B = basis_size(s, d);
  const int N = s.ambient_dim();
  FatPointScheme sch;
  std::int64_t used = 0;
  const std::int64_t budget = B + g.range(-3, 6);
  while (used < budget) {
    const int a = g.range(1, 3);
    const std::int64_t c = fat_conditions(a, N);
    if (used + c > budget + 2) break;
    FatPoint p;
    p.multiplicity = a;
    if (strata && g.range(0, 3) == 0) p.spec.stratum = g.stratum(s, 2);
    sch.points.push_back(p);
    used += c;
  }
  return sch;
}

MultiProjectiveSpace small_space(Gen& g) { return g.space(3, 3, 4); }

// A document with some points declared on D and the rest general or on strata avoiding D's coordinate.
SchemeDocument split_document(Gen& g, DivisorSpec& D, int max_basis) {
  while (true) {
    const auto s = small_space(g);
    if (s.factors() == 1 && s.factor_dims[0] == 1) continue;
    const auto d = g.degree(s, 1, 4);
    if (basis_size(s, d) > max_basis) continue;
    D.factor = g.range(0, s.factors() - 1);
    D.coord = g.range(0, s.factor_dims[D.factor]);
    SchemeDocument doc{s, d, {}};
    const int npts = g.range(1, 8);
    for (int i = 0; i < npts; ++i) {
      FatPoint p;
      p.multiplicity = g.range(1, 4);
      const int kind = g.range(0, 2);
      if (kind == 0) {
        p.spec.stratum = D.as_subvariety(s);
      } else if (kind == 1) {
        auto st = g.stratum(s, 1);
        if (st.vanishes(D.factor, D.coord)) st = D.as_subvariety(s);
        p.spec.stratum = st;
      }
      doc.scheme.points.push_back(p);
    }
    doc.scheme.validate(s);
    return doc;
  }
}

bool on_d(const FatPoint& p, const DivisorSpec& D) { return p.spec.stratum && p.spec.stratum->vanishes(D.factor, D.coord); }

// Row-echelon rank over F_p, written independently of the engine.
int rank_mod(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  auto pw = [&](std::uint64_t b, std::uint64_t e) {
    unsigned __int128 r = 1, x = b % p;
    for (; e; e >>= 1, x = x * x % p)
      if (e & 1) r = r * x % p;
    return static_cast<std::uint64_t>(r);
  };
  int rank = 0;
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if (m[r][c] % p) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    const std::uint64_t inv = pw(m[rank][c], p - 2);
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == rank || m[r][c] % p == 0) continue;
      const std::uint64_t f = static_cast<std::uint64_t>(static_cast<unsigned __int128>(m[r][c]) * inv % p);
      for (int k = 0; k < cols; ++k)
        m[r][k] = static_cast<std::uint64_t>((m[r][k] + static_cast<unsigned __int128>(p - f) * m[rank][k]) % p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("(a) computed dimension never falls below the virtual dimension") {
  Gen g(0xa11ce);
  int checked = 0, failures = 0;
  while (checked < 500) {
    const auto s = small_space(g);
    const auto d = g.degree(s, 1, 4);
    if (basis_size(s, d) > 120) continue;
    const auto sch = random_scheme(g, s, d, true);
    std::int64_t vd = basis_count(s.factor_dims, d.degrees);
    for (const auto& p : sch.points) vd -= fat_conditions(p.multiplicity, ambient(s.factor_dims));
    const auto v = dimension(s, d, sch, cfg(g.next()));
    failures += v.virtual_dim != vd;
    failures += v.computed_dim < vd;
    failures += v.computed_dim < 0 || v.computed_dim > basis_size(s, d);
    ++checked;
  }
  CHECK(checked == 500);
  CHECK(failures == 0);
}

TEST_CASE("(b) virtual dimension is additive over residue and trace") {
  Gen g(0xb0b);
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    DivisorSpec D;
    const auto doc = split_document(g, D, 400);
    const int N = doc.space.ambient_dim();
    std::int64_t original = basis_count(doc.space.factor_dims, doc.degree.degrees);
    auto res_degs = doc.degree.degrees;
    res_degs[D.factor] -= 1;
    std::int64_t residue = basis_count(doc.space.factor_dims, res_degs);
    auto tr_dims = doc.space.factor_dims;
    tr_dims[D.factor] -= 1;
    std::int64_t trace = basis_count(tr_dims, doc.degree.degrees);
    for (const auto& p : doc.scheme.points) {
      original -= fat_conditions(p.multiplicity, N);
      if (on_d(p, D)) {
        residue -= fat_conditions(p.multiplicity - 1, N);
        trace -= fat_conditions(p.multiplicity, N - 1);
      } else {
        residue -= fat_conditions(p.multiplicity, N);
      }
    }
    const auto rep = vdim_additivity_check(doc, D);
    const bool ok = rep.holds() && rep.original == original && rep.residue == residue && rep.trace == trace &&
                    residue + trace == original;
    if (!ok) {
      ++failures;
      MESSAGE("split " << i << ": " << to_json(doc).dump() << " D=" << D.label());
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("(c) Castelnuovo upper bound on random splits") {
  Gen g(0xca57e1);
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    DivisorSpec D;
    const auto doc = split_document(g, D, 150);
    const auto rep = castelnuovo_bound_check(doc, D, cfg(g.next()));
    if (!rep.holds()) {
      ++failures;
      MESSAGE("split " << i << ": " << to_json(doc).dump() << " D=" << D.label());
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("(d) dimension is symmetric under swapping factors") {
  Gen g(0xd5);
  int checked = 0, failures = 0;
  while (checked < 50) {
    auto s = g.space(3, 3, 4);
    if (s.factors() < 2) continue;
    const auto d = g.degree(s, 1, 4);
    if (basis_size(s, d) > 150) continue;
    const bool pin = checked % 2 == 0;
    auto sch = random_scheme(g, s, d, true);
    if (pin)
      for (auto& p : sch.points) p.spec.coords = g.coords(s, p.spec.stratum, 6);
    const int a = g.range(0, s.factors() - 1);
    int b = g.range(0, s.factors() - 2);
    if (b >= a) ++b;
    auto swap_vec = [&](auto v) {
      std::swap(v[a], v[b]);
      return v;
    };
    MultiProjectiveSpace s2(swap_vec(s.factor_dims));
    Multidegree d2(swap_vec(d.degrees));
    FatPointScheme sch2 = sch;
    for (auto& p : sch2.points) {
      if (p.spec.stratum) p.spec.stratum = CoordinateSubvariety(swap_vec(p.spec.stratum->vanishing));
      if (p.spec.coords) p.spec.coords = swap_vec(*p.spec.coords);
    }
    sch2.validate(s2);
    const auto seed = g.next();
    const auto v1 = dimension(s, d, sch, cfg(seed));
    const auto v2 = dimension(s2, d2, sch2, cfg(seed));
    failures += v1.computed_dim != v2.computed_dim || v1.virtual_dim != v2.virtual_dim;
    if (pin) failures += exact_dimension(s, d, sch) != exact_dimension(s2, d2, sch2);
    ++checked;
  }
  CHECK(failures == 0);
}

TEST_CASE("(e) modular rank equals the exact rational rank on pinned instances") {
  Gen g(0xe0e);
  int checked = 0, failures = 0, with_jets = 0;
  while (checked < 100) {
    const auto s = g.space(2, 2, 3);
    const auto d = g.degree(s, 1, 3);
    if (basis_size(s, d) > 60) continue;
    auto sch = random_scheme(g, s, d, true);
    for (auto& p : sch.points) p.spec.coords = g.coords(s, p.spec.stratum, 4);
    if (checked % 4 == 0) {
      FatPoint q;
      q.multiplicity = 3;
      q.spec.coords = g.coords(s, std::nullopt, 4);
      sch.points.push_back(q);
      const int jets = g.range(1, 3);
      for (int k = 0; k < jets; ++k) {
        JetCondition j;
        j.point = sch.points.size() - 1;
        j.direction.assign(s.ambient_dim(), 0);
        while (std::all_of(j.direction.begin(), j.direction.end(), [](auto x) { return x == 0; }))
          for (auto& x : j.direction) x = g.range(-3, 3);
        sch.jets.push_back(j);
      }
      ++with_jets;
    }
    sch.validate(s);
    const auto m = build_matrix(s, d, sch, cfg(g.next()));
    const int fp = rank_fp(m);
    const std::int64_t exact = exact_rank_oracle(s, d, sch);
    if (fp != exact) {
      ++failures;
      MESSAGE("instance " << checked << ": rank_fp " << fp << " exact " << exact << " "
                          << to_json(SchemeDocument{s, d, sch}).dump());
    }
    ++checked;
  }
  CHECK(failures == 0);
  CHECK(with_jets == 25);
}

TEST_CASE("(f) star configurations: every index subset spans the expected space, exhaustively for n <= 6") {
  for (int n = 2; n <= 6; ++n)
    for (std::uint64_t seed : {1ULL, 77ULL, 4096ULL}) {
      CAPTURE(n);
      CAPTURE(seed);
      const auto conf = star_configuration(n, cfg(seed));
      REQUIRE(conf.points.size() == static_cast<std::size_t>(choose(n + 1, 2)));
      CHECK_NOTHROW(validate_star(conf));
      CHECK(star_span_violations(conf).empty());
      const std::uint64_t p = conf.prime;
      // Every t_ij lies on E.
      for (const auto& t : conf.points) {
        unsigned __int128 acc = 0;
        for (int k = 0; k <= n; ++k) acc = (acc + static_cast<unsigned __int128>(conf.hyperplane[k]) * t[k]) % p;
        CHECK(static_cast<std::uint64_t>(acc) == 0);
      }
      int subsets = 0, bad = 0;
      for (unsigned mask = 0; mask < (1u << (n + 1)); ++mask) {
        std::vector<int> I;
        for (int k = 0; k <= n; ++k)
          if (mask >> k & 1) I.push_back(k);
        if (I.size() < 3) continue;
        std::vector<std::vector<std::uint64_t>> rows;
        for (std::size_t q = 0; q < conf.labels.size(); ++q) {
          auto [i, j] = conf.labels[q];
          if (std::count(I.begin(), I.end(), i) && std::count(I.begin(), I.end(), j)) rows.push_back(conf.points[q]);
        }
        ++subsets;
        // The points t_ij, i,j in I, span exactly P^{|I|-2}.
        bad += rank_mod(rows, p) != static_cast<int>(I.size()) - 1;
      }
      CHECK(subsets == (1 << (n + 1)) - 1 - (n + 1) - choose(n + 1, 2));
      CHECK(bad == 0);
    }
}

TEST_CASE("(g) jet containment chain on random collisions") {
  Gen g(0x9e7);
  struct Family {
    std::vector<int> dims, degs;
  };
  const std::vector<Family> families{{{1, 1}, {3, 3}}, {{1, 1}, {4, 3}}, {{2, 1}, {3, 3}}, {{1, 2}, {3, 3}},
                                     {{2}, {5}},        {{3}, {4}},        {{1, 1, 1}, {2, 2, 2}}};
  int failures = 0;
  for (int i = 0; i < 20; ++i) {
    const auto& f = families[g.range(0, static_cast<int>(families.size()) - 1)];
    const MultiProjectiveSpace s(f.dims);
    const Multidegree d(f.degs);
    const int N = s.ambient_dim();
    const std::int64_t B = basis_size(s, d);
    // Leave room roughly at the expected vanishing threshold.
    const std::int64_t room = std::max<std::int64_t>(0, (B - choose(N + 2, N)) / (N + 1));
    SchemeType extra;
    const std::int64_t doubles = g.range(0, static_cast<int>(room) + 1);
    if (doubles > 0) extra.groups.push_back({2, doubles});
    const auto mode = g.coin() ? JetDirections::Star : JetDirections::RandomGeneral;
    const auto rep = jet_chain_check(s, d, extra, cfg(g.next()), mode);
    if (!rep.holds()) {
      ++failures;
      MESSAGE("chain " << i << " on " << s.label() << " " << d.label() << " extra " << extra.to_string() << ": "
                       << rep.dim_quadruple << " " << rep.dim_jets << " " << rep.dim_triple);
    }
  }
  CHECK(failures == 0);
}
