#include "fatpoints/scheme.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace fatpoints {

void FatPointScheme::validate(const MultiProjectiveSpace& space) const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    const std::string where = "point " + std::to_string(i) + ": ";
    if (p.multiplicity < 1) throw std::invalid_argument(where + "multiplicity must be at least 1");
    if (p.spec.stratum) p.spec.stratum->validate(space);
    if (!p.spec.coords) continue;
    const auto& c = *p.spec.coords;
    if (static_cast<int>(c.size()) != space.factors())
      throw std::invalid_argument(where + "coordinates do not match the factor count");
    for (int f = 0; f < space.factors(); ++f) {
      if (static_cast<int>(c[f].size()) != space.factor_dims[f] + 1)
        throw std::invalid_argument(where + "wrong coordinate count in factor " + std::to_string(f));
      if (std::all_of(c[f].begin(), c[f].end(), [](std::int64_t x) { return x == 0; }))
        throw std::invalid_argument(where + "zero coordinate vector in factor " + std::to_string(f));
      if (p.spec.stratum)
        for (int j : p.spec.stratum->vanishing[f])
          if (c[f][j] != 0) throw std::invalid_argument(where + "coordinates violate the stratum");
    }
  }
  for (std::size_t i = 0; i < jets.size(); ++i) {
    const auto& j = jets[i];
    const std::string where = "jet " + std::to_string(i) + ": ";
    if (j.point >= points.size()) throw std::invalid_argument(where + "base point index out of range");
    if (j.order < 1) throw std::invalid_argument(where + "order must be positive");
    if (points[j.point].multiplicity < j.order)
      throw std::invalid_argument(where + "base point multiplicity is below the jet order");
    if (static_cast<int>(j.direction.size()) != space.ambient_dim())
      throw std::invalid_argument(where + "direction length must equal the ambient dimension");
    if (std::all_of(j.direction.begin(), j.direction.end(), [](std::int64_t x) { return x == 0; }))
      throw std::invalid_argument(where + "direction must be nonzero");
  }
  for (const auto& s : contained) s.validate(space);
}

std::int64_t SchemeType::point_count() const {
  std::int64_t s = 0;
  for (const auto& g : groups) s += g.count;
  return s;
}

std::string SchemeType::to_string() const {
  std::string s;
  for (const auto& g : groups) {
    if (!s.empty()) s += ',';
    s += std::to_string(g.multiplicity);
    if (g.count != 1) s += '^' + std::to_string(g.count);
  }
  return s;
}

SchemeType SchemeType::parse(const std::string& raw) {
  std::string text;
  for (char ch : raw)
    if (ch != ' ') text.push_back(ch);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw std::invalid_argument("unbalanced parenthesis in scheme type");
    text = text.substr(1, text.size() - 2);
  }
  SchemeType t;
  if (text.empty()) return t;
  std::size_t pos = 0;
  auto read_int = [&](const char* what) -> std::int64_t {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument(std::string("expected ") + what + " in scheme type '" + raw + "'");
    return std::stoll(text.substr(start, pos - start));
  };
  while (true) {
    Group g;
    std::int64_t a = read_int("multiplicity");
    if (a < 1 || a > 1000) throw std::invalid_argument("multiplicity out of range in '" + raw + "'");
    g.multiplicity = static_cast<int>(a);
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      g.count = read_int("exponent");
    }
    if (g.count > 0) t.groups.push_back(g);
    if (pos == text.size()) break;
    if (text[pos] != ',') throw std::invalid_argument("unexpected character in scheme type '" + raw + "'");
    ++pos;
  }
  return t;
}

SchemeType scheme_type(const FatPointScheme& scheme) {
  SchemeType t;
  const PointSpec* prev = nullptr;
  for (const auto& p : scheme.points) {
    bool same = prev && !t.groups.empty() && t.groups.back().multiplicity == p.multiplicity &&
                prev->stratum == p.spec.stratum;
    if (same)
      ++t.groups.back().count;
    else
      t.groups.push_back({p.multiplicity, 1});
    prev = &p.spec;
  }
  return t;
}

std::int64_t conditions_of_fat_point(int a, int N) {
  if (a < 1) throw std::invalid_argument("multiplicity must be at least 1");
  if (N < 0) throw std::invalid_argument("ambient dimension must be nonnegative");
  return binomial(a + N - 1, N);
}

std::int64_t virtual_dim(const MultiProjectiveSpace& space, const Multidegree& deg,
                         const FatPointScheme& scheme) {
  std::int64_t v = scheme.contained.empty()
                       ? basis_size(space, deg)
                       : static_cast<std::int64_t>(ideal_basis(space, deg, scheme.contained).size());
  const int N = space.ambient_dim();
  for (const auto& p : scheme.points) v -= conditions_of_fat_point(p.multiplicity, N);
  v -= static_cast<std::int64_t>(scheme.jets.size());
  return v;
}

std::int64_t expected_dim(const MultiProjectiveSpace& space, const Multidegree& deg,
                          const FatPointScheme& scheme) {
  return std::max<std::int64_t>(0, virtual_dim(space, deg, scheme));
}

namespace {
BigInt big_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

BigInt virtual_dim(const std::vector<int>& factor_dims, const std::vector<int>& degrees,
                   const SchemeType& type) {
  if (factor_dims.size() != degrees.size()) throw std::invalid_argument("space/degree length mismatch");
  BigInt v = 1;
  int N = 0;
  for (std::size_t f = 0; f < factor_dims.size(); ++f) {
    if (factor_dims[f] < 0 || degrees[f] < 0) throw std::invalid_argument("negative dimension or degree");
    v *= big_binomial(factor_dims[f] + degrees[f], factor_dims[f]);
    N += factor_dims[f];
  }
  for (const auto& g : type.groups) {
    if (g.count < 0) throw std::invalid_argument("negative point count");
    v -= big_binomial(g.multiplicity + N - 1, N) * g.count;
  }
  return v;
}

FatPointScheme make_scheme(const MultiProjectiveSpace& space, const SchemeType& type,
                           const std::vector<std::optional<CoordinateSubvariety>>& strata) {
  if (strata.size() > type.groups.size())
    throw std::invalid_argument("more strata than groups in the scheme type");
  FatPointScheme s;
  for (std::size_t g = 0; g < type.groups.size(); ++g) {
    const auto& grp = type.groups[g];
    if (grp.count < 0) throw std::invalid_argument("negative point count");
    PointSpec spec;
    if (g < strata.size() && strata[g]) {
      strata[g]->validate(space);
      spec.stratum = strata[g];
    }
    for (std::int64_t i = 0; i < grp.count; ++i) s.points.push_back({spec, grp.multiplicity});
  }
  return s;
}

}  // namespace fatpoints
