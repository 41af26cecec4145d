#include "fatpoints/degeneration.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace fatpoints {

void DivisorSpec::validate(const MultiProjectiveSpace& space) const {
  if (factor < 0 || factor >= space.factors() || coord < 0 || coord > space.factor_dims[factor])
    throw std::invalid_argument("divisor " + label() + " is not a coordinate of " + space.label());
}

CoordinateSubvariety DivisorSpec::as_subvariety(const MultiProjectiveSpace& space) const {
  validate(space);
  std::vector<std::vector<int>> v(space.factors());
  v[factor] = {coord};
  return CoordinateSubvariety(v);
}

std::string DivisorSpec::label() const { return std::to_string(factor) + "." + std::to_string(coord); }

DivisorSpec DivisorSpec::parse(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == text.size() ||
      text.find_first_not_of("0123456789.") != std::string::npos || text.find('.', dot + 1) != std::string::npos)
    throw std::invalid_argument("divisor must look like F.J, got '" + text + "'");
  return {std::stoi(text.substr(0, dot)), std::stoi(text.substr(dot + 1))};
}

DivisorSpec DivisorSpec::from_subvariety(const CoordinateSubvariety& sub) {
  if (sub.codimension() != 1) throw std::invalid_argument("a divisor has exactly one vanishing coordinate");
  for (std::size_t f = 0; f < sub.vanishing.size(); ++f)
    if (!sub.vanishing[f].empty()) return {static_cast<int>(f), sub.vanishing[f][0]};
  throw std::logic_error("unreachable");
}

namespace {

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// Declared incidence with D; pinned coordinates must agree with the declaration.
bool on_divisor(const FatPoint& p, const DivisorSpec& D) {
  const bool declared = p.spec.stratum && contains(p.spec.stratum->vanishing[D.factor], D.coord);
  if (!declared && p.spec.coords && (*p.spec.coords)[D.factor][D.coord] == 0)
    throw std::invalid_argument("point has a vanishing coordinate on divisor " + D.label() +
                                " but its stratum does not declare it");
  return declared;
}

void check_preconditions(const SchemeDocument& doc, const DivisorSpec& D) {
  D.validate(doc.space);
  require_match(doc.space, doc.degree);
  doc.scheme.validate(doc.space);
  if (doc.degree.degrees[D.factor] < 1)
    throw std::invalid_argument("degree 0 in the divisor's factor");
  for (const auto& p : doc.scheme.points) on_divisor(p, D);
  for (const auto& j : doc.scheme.jets)
    if (on_divisor(doc.scheme.points[j.point], D))
      throw std::invalid_argument("jet conditions at points on the divisor are not supported");
}

// Removes D's coordinate from a vanishing set and re-indexes the factor; drops the factor if asked.
std::vector<std::vector<int>> restrict_vanishing(std::vector<std::vector<int>> v, const DivisorSpec& D,
                                                 bool drop_factor) {
  auto& w = v[D.factor];
  w.erase(std::remove(w.begin(), w.end(), D.coord), w.end());
  for (int& c : w)
    if (c > D.coord) --c;
  if (drop_factor) {
    if (!w.empty()) throw std::invalid_argument("contained subvariety does not meet the divisor");
    v.erase(v.begin() + D.factor);
  }
  return v;
}

bool all_empty(const std::vector<std::vector<int>>& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& x) { return x.empty(); });
}

}  // namespace

SchemeDocument residue(const SchemeDocument& doc, const DivisorSpec& D) {
  check_preconditions(doc, D);
  SchemeDocument out{doc.space, doc.degree, {}};
  out.degree.degrees[D.factor] -= 1;
  std::vector<long> index(doc.scheme.points.size(), -1);
  for (std::size_t i = 0; i < doc.scheme.points.size(); ++i) {
    FatPoint p = doc.scheme.points[i];
    if (on_divisor(p, D)) --p.multiplicity;
    if (p.multiplicity == 0) continue;
    index[i] = static_cast<long>(out.scheme.points.size());
    out.scheme.points.push_back(std::move(p));
  }
  for (auto j : doc.scheme.jets) {
    j.point = static_cast<std::size_t>(index[j.point]);
    out.scheme.jets.push_back(std::move(j));
  }
  for (const auto& s : doc.scheme.contained)
    if (!contains(s.vanishing[D.factor], D.coord)) out.scheme.contained.push_back(s);
  out.scheme.validate(out.space);
  return out;
}

SchemeDocument trace(const SchemeDocument& doc, const DivisorSpec& D) {
  check_preconditions(doc, D);
  const bool drop = doc.space.factor_dims[D.factor] == 1;
  if (drop && doc.space.factors() == 1) throw std::invalid_argument("the trace on P^0 has no factors left");
  std::vector<int> dims = doc.space.factor_dims;
  std::vector<int> degs = doc.degree.degrees;
  if (drop) {
    dims.erase(dims.begin() + D.factor);
    degs.erase(degs.begin() + D.factor);
  } else {
    --dims[D.factor];
  }
  SchemeDocument out{MultiProjectiveSpace(dims), Multidegree(degs), {}};
  for (const auto& p : doc.scheme.points) {
    if (!on_divisor(p, D)) continue;
    FatPoint q{{}, p.multiplicity};
    auto v = restrict_vanishing(p.spec.stratum->vanishing, D, drop);
    if (!all_empty(v)) q.spec.stratum = CoordinateSubvariety(v);
    if (p.spec.coords) {
      auto c = *p.spec.coords;
      if (drop)
        c.erase(c.begin() + D.factor);
      else
        c[D.factor].erase(c[D.factor].begin() + D.coord);
      q.spec.coords = std::move(c);
    }
    out.scheme.points.push_back(std::move(q));
  }
  for (const auto& s : doc.scheme.contained) {
    auto v = restrict_vanishing(s.vanishing, D, drop);
    if (all_empty(v)) throw std::invalid_argument("contained subvariety equals the divisor");
    out.scheme.contained.push_back(CoordinateSubvariety(v));
  }
  out.scheme.validate(out.space);
  return out;
}

Json step_record(const std::string& op, const DivisorSpec& D, const SchemeDocument& before,
                 const SchemeDocument& after) {
  Json j;
  j["op"] = op;
  j["divisor"] = D.label();
  j["before_type"] = scheme_type(before.scheme).to_string();
  j["after_type"] = scheme_type(after.scheme).to_string();
  j["degree_before"] = before.degree.label();
  j["degree_after"] = after.degree.label();
  return j;
}

AdditivityReport vdim_additivity_check(const SchemeDocument& doc, const DivisorSpec& D) {
  AdditivityReport r;
  r.original = virtual_dim(doc.space, doc.degree, doc.scheme);
  const auto res = residue(doc, D);
  r.residue = virtual_dim(res.space, res.degree, res.scheme);
  if (doc.space.factor_dims[D.factor] == 1 && doc.space.factors() == 1) {
    // D is a single point of P^1: one-dimensional system, one condition per point on it.
    if (!doc.scheme.contained.empty()) throw std::invalid_argument("contained subvarieties on P^1 are not supported");
    r.trace = 1;
    for (const auto& p : doc.scheme.points)
      if (on_divisor(p, D)) --r.trace;
  } else {
    const auto tr = trace(doc, D);
    r.trace = virtual_dim(tr.space, tr.degree, tr.scheme);
  }
  return r;
}

namespace {

PrimeFieldConfig single_run(const PrimeFieldConfig& config) {
  PrimeFieldConfig c = config;
  c.retries = 0;
  c.alternate_primes.clear();
  return c;
}

}  // namespace

CastelnuovoReport castelnuovo_bound_check(const SchemeDocument& doc, const DivisorSpec& D,
                                          const PrimeFieldConfig& config) {
  config.validate();
  check_preconditions(doc, D);
  SchemeDocument pinned = doc;
  pinned.scheme = concretize(doc.space, doc.scheme, config.prime, config.seed);
  const auto res = residue(pinned, D);
  const auto tr = trace(pinned, D);
  const auto one = single_run(config);
  CastelnuovoReport r;
  r.original = dimension(pinned.space, pinned.degree, pinned.scheme, one);
  r.residue = dimension(res.space, res.degree, res.scheme, one);
  r.trace = dimension(tr.space, tr.degree, tr.scheme, one);
  r.vdim = virtual_dim(doc.space, doc.degree, doc.scheme);
  r.plan = Json::array({step_record("residue", D, doc, res), step_record("trace", D, doc, tr)});
  return r;
}

namespace {

std::uint64_t dot(const PrimeField& F, const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = F.add(s, F.mul(a[i], b[i]));
  return s;
}

void normalize(const PrimeField& F, std::vector<std::uint64_t>& v) {
  auto it = std::find_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
  if (it == v.end()) throw std::logic_error("zero vector in projective space");
  const std::uint64_t inv = F.inv(*it);
  for (auto& x : v) x = F.mul(x, inv);
}

int rank_of(const PrimeField& F, const std::vector<std::vector<std::uint64_t>>& rows) {
  if (rows.empty()) return 0;
  ModMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = static_cast<std::uint32_t>(rows[i][j]);
  return rank_fp(std::move(m), F);
}

}  // namespace

StarConfiguration star_configuration(int n, const PrimeFieldConfig& config) {
  if (n < 2) throw std::invalid_argument("star configurations need n >= 2");
  config.validate();
  const PrimeField F(config.prime);
  std::mt19937_64 rng(config.seed);
  StarConfiguration c;
  c.n = n;
  c.prime = config.prime;
  const auto nonzero = [&] { return 1 + uniform_below(rng, config.prime - 1); };
  for (int attempt = 0;; ++attempt) {
    if (attempt == 64) throw std::runtime_error("could not draw a general star configuration");
    c.hyperplane.assign(n + 1, 0);
    for (auto& x : c.hyperplane) x = nonzero();
    c.anchors.assign(n + 1, std::vector<std::uint64_t>(n + 1));
    for (auto& p : c.anchors) {
      for (auto& x : p) x = uniform_below(rng, config.prime);
    }
    bool ok = rank_of(F, c.anchors) == n + 1;
    for (const auto& p : c.anchors) ok = ok && dot(F, c.hyperplane, p) != 0;
    if (ok) break;
  }
  for (auto& p : c.anchors) normalize(F, p);
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      // l(p_j) p_i - l(p_i) p_j lies on the line and on E.
      const auto li = dot(F, c.hyperplane, c.anchors[i]);
      const auto lj = dot(F, c.hyperplane, c.anchors[j]);
      std::vector<std::uint64_t> t(n + 1);
      for (int k = 0; k <= n; ++k) t[k] = F.sub(F.mul(lj, c.anchors[i][k]), F.mul(li, c.anchors[j][k]));
      normalize(F, t);
      std::vector<std::uint64_t> e(t.begin(), t.end() - 1);
      normalize(F, e);  // nonzero since the last coefficient of E is nonzero
      c.labels.emplace_back(i, j);
      c.points.push_back(std::move(t));
      c.on_e.push_back(std::move(e));
    }
  validate_star(c);
  return c;
}

void validate_star(const StarConfiguration& c) {
  const PrimeField F(c.prime);
  if (static_cast<std::int64_t>(c.points.size()) != binomial(c.n + 1, 2) || c.on_e.size() != c.points.size())
    throw std::logic_error("star configuration has the wrong number of points");
  for (std::size_t k = 0; k < c.points.size(); ++k) {
    const auto [i, j] = c.labels[k];
    if (dot(F, c.hyperplane, c.points[k]) != 0) throw std::logic_error("star point off the hyperplane");
    if (rank_of(F, {c.anchors[i], c.anchors[j], c.points[k]}) != 2)
      throw std::logic_error("star point off its line");
  }
}

std::vector<std::vector<int>> star_span_violations(const StarConfiguration& c) {
  const PrimeField F(c.prime);
  std::vector<std::vector<int>> bad;
  const int m = c.n + 1;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> I;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1u) I.push_back(i);
    if (I.size() < 3) continue;
    std::vector<std::vector<std::uint64_t>> rows;
    for (std::size_t k = 0; k < c.labels.size(); ++k)
      if ((mask >> c.labels[k].first & 1u) && (mask >> c.labels[k].second & 1u)) rows.push_back(c.on_e[k]);
    if (rank_of(F, rows) > static_cast<int>(I.size()) - 1) bad.push_back(I);
  }
  return bad;
}

FatPointScheme star_scheme(const StarConfiguration& c, int multiplicity) {
  FatPointScheme s;
  for (const auto& e : c.on_e) {
    PointSpec spec;
    spec.coords = std::vector<std::vector<std::int64_t>>{std::vector<std::int64_t>(e.begin(), e.end())};
    s.points.push_back({spec, multiplicity});
  }
  return s;
}

StarCheck star_nonspeciality_check(int n, const PrimeFieldConfig& config) {
  const auto conf = star_configuration(n, config);
  const MultiProjectiveSpace E({n - 1});
  const auto one = single_run(config);
  StarCheck r;
  r.quadrics = dimension(E, Multidegree({2}), star_scheme(conf, 1), one);
  r.cubics = dimension(E, Multidegree({3}), star_scheme(conf, 1), one);
  r.double_cubics = dimension(E, Multidegree({3}), star_scheme(conf, 2), one);
  return r;
}

FatPointScheme collision_scheme(const MultiProjectiveSpace& space, const SchemeType& extra_type,
                                const PrimeFieldConfig& config, JetDirections mode, bool with_jets) {
  config.validate();
  const int N = space.ambient_dim();
  FatPointScheme s;
  s.points.push_back({{}, 3});
  for (const auto& g : extra_type.groups)
    for (std::int64_t i = 0; i < g.count; ++i) s.points.push_back({{}, g.multiplicity});
  if (!with_jets) return s;
  const auto count = binomial(N + 1, 2);
  if (mode == JetDirections::Star) {
    const auto conf = star_configuration(N, config);
    for (const auto& e : conf.on_e) s.jets.push_back({0, std::vector<std::int64_t>(e.begin(), e.end()), 3});
  } else {
    std::mt19937_64 rng(attempt_seed(config.seed, 0x6a6574));
    for (std::int64_t k = 0; k < count; ++k) {
      std::vector<std::int64_t> dir(N, 0);
      while (std::all_of(dir.begin(), dir.end(), [](auto x) { return x == 0; }))
        for (auto& x : dir) x = static_cast<std::int64_t>(uniform_below(rng, config.prime));
      s.jets.push_back({0, std::move(dir), 3});
    }
  }
  return s;
}

namespace {

ModMatrix stack(const ModMatrix& a, const ModMatrix& b) {
  ModMatrix m(a.rows + b.rows, a.cols);
  std::copy(a.data.begin(), a.data.end(), m.data.begin());
  std::copy(b.data.begin(), b.data.end(), m.data.begin() + a.data.size());
  return m;
}

}  // namespace

JetChainReport jet_chain_check(const MultiProjectiveSpace& space, const Multidegree& deg,
                               const SchemeType& extra_type, const PrimeFieldConfig& config, JetDirections mode) {
  const auto jets = concretize(space, collision_scheme(space, extra_type, config, mode), config.prime, config.seed);
  FatPointScheme triple = jets;
  triple.jets.clear();
  FatPointScheme quadruple = triple;
  quadruple.points[0].multiplicity = 4;
  const PrimeField F(config.prime);
  const auto m4 = build_matrix(space, deg, quadruple, config.prime, config.seed).matrix;
  const auto mt = build_matrix(space, deg, jets, config.prime, config.seed).matrix;
  const auto m3 = build_matrix(space, deg, triple, config.prime, config.seed).matrix;
  const int r4 = rank_fp(m4, F), rt = rank_fp(mt, F), r3 = rank_fp(m3, F);
  JetChainReport r;
  r.dim_quadruple = m4.cols - r4;
  r.dim_jets = mt.cols - rt;
  r.dim_triple = m3.cols - r3;
  // ker A is inside ker B iff the rows of B lie in the row space of A.
  r.quadruple_in_jets = rank_fp(stack(m4, mt), F) == r4;
  r.jets_in_triple = rank_fp(stack(mt, m3), F) == rt;
  return r;
}

}  // namespace fatpoints
