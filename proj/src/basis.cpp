#include "fatpoints/basis.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fatpoints {

namespace {

int parse_int(const std::string& s, const char* what) {
  if (s.empty()) throw std::invalid_argument(std::string("empty ") + what);
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("bad ") + what + ": '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument(std::string("bad ") + what + ": '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

// All exponent vectors of length len summing to d, x_0^d first.
void factor_exponents(int len, int d, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(len, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == len - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  rec(rec, 0, d);
}

}  // namespace

MultiProjectiveSpace::MultiProjectiveSpace(std::vector<int> dims) : factor_dims(std::move(dims)) {
  if (factor_dims.empty()) throw std::invalid_argument("space needs at least one factor");
  for (int n : factor_dims)
    if (n < 1) throw std::invalid_argument("factor dimensions must be positive");
}

int MultiProjectiveSpace::ambient_dim() const {
  int s = 0;
  for (int n : factor_dims) s += n;
  return s;
}

int MultiProjectiveSpace::point_coordinate_count() const { return ambient_dim() + factors(); }

std::string MultiProjectiveSpace::label() const {
  std::string s;
  for (std::size_t i = 0; i < factor_dims.size(); ++i) {
    if (i) s += 'x';
    s += std::to_string(factor_dims[i]);
  }
  return s;
}

MultiProjectiveSpace MultiProjectiveSpace::parse(const std::string& text) {
  std::vector<int> dims;
  for (const auto& part : split(text, 'x')) dims.push_back(parse_int(part, "factor dimension"));
  return MultiProjectiveSpace(std::move(dims));
}

Multidegree::Multidegree(std::vector<int> degs) : degrees(std::move(degs)) {
  for (int d : degrees)
    if (d < 0) throw std::invalid_argument("degrees must be nonnegative");
}

std::string Multidegree::label() const {
  std::string s;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(degrees[i]);
  }
  return s;
}

Multidegree Multidegree::parse(const std::string& text) {
  std::vector<int> degs;
  for (const auto& part : split(text, ',')) degs.push_back(parse_int(part, "degree"));
  return Multidegree(std::move(degs));
}

void require_match(const MultiProjectiveSpace& space, const Multidegree& deg) {
  if (space.factor_dims.size() != deg.degrees.size())
    throw std::invalid_argument("multidegree has " + std::to_string(deg.degrees.size()) +
                                " entries but the space has " + std::to_string(space.factors()) +
                                " factors");
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t f = 0; f < exponents.size(); ++f) {
    for (std::size_t j = 0; j < exponents[f].size(); ++j) {
      int e = exponents[f][j];
      if (e == 0) continue;
      if (any) os << '*';
      os << 'x' << f << '_' << j;
      if (e > 1) os << '^' << e;
      any = true;
    }
  }
  if (!any) os << '1';
  return os.str();
}

CoordinateSubvariety::CoordinateSubvariety(std::vector<std::vector<int>> v) : vanishing(std::move(v)) {
  for (auto& s : vanishing) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
}

int CoordinateSubvariety::codimension() const {
  int c = 0;
  for (const auto& s : vanishing) c += static_cast<int>(s.size());
  return c;
}

bool CoordinateSubvariety::vanishes(int factor, int coord) const {
  if (factor < 0 || factor >= static_cast<int>(vanishing.size())) return false;
  const auto& s = vanishing[factor];
  return std::binary_search(s.begin(), s.end(), coord);
}

void CoordinateSubvariety::validate(const MultiProjectiveSpace& space) const {
  if (vanishing.size() != space.factor_dims.size())
    throw std::invalid_argument("subvariety " + label() + " does not match the factor count of " +
                                space.label());
  if (codimension() == 0) throw std::invalid_argument("subvariety must vanish on some coordinate");
  for (int f = 0; f < space.factors(); ++f) {
    const int n = space.factor_dims[f];
    for (int j : vanishing[f])
      if (j < 0 || j > n)
        throw std::invalid_argument("coordinate " + std::to_string(f) + "." + std::to_string(j) +
                                    " out of range for " + space.label());
    if (static_cast<int>(vanishing[f].size()) > n)
      throw std::invalid_argument("subvariety " + label() + " is empty in factor " + std::to_string(f));
  }
}

bool CoordinateSubvariety::inside(const CoordinateSubvariety& other) const {
  for (std::size_t f = 0; f < other.vanishing.size(); ++f)
    for (int j : other.vanishing[f])
      if (!vanishes(static_cast<int>(f), j)) return false;
  return true;
}

std::string CoordinateSubvariety::label() const {
  std::string s;
  for (std::size_t f = 0; f < vanishing.size(); ++f)
    for (int j : vanishing[f]) {
      if (!s.empty()) s += '+';
      s += std::to_string(f) + "." + std::to_string(j);
    }
  return s;
}

CoordinateSubvariety CoordinateSubvariety::parse(const std::string& text, int factors) {
  std::vector<std::vector<int>> v(factors);
  for (const auto& term : split(text, '+')) {
    auto parts = split(term, '.');
    if (parts.size() != 2) throw std::invalid_argument("coordinate term must be F.J, got '" + term + "'");
    int f = parse_int(parts[0], "factor index");
    int j = parse_int(parts[1], "coordinate index");
    if (f < 0 || f >= factors) throw std::invalid_argument("factor index out of range in '" + term + "'");
    v[f].push_back(j);
  }
  return CoordinateSubvariety(std::move(v));
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("binomial overflow");
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t basis_size(const MultiProjectiveSpace& space, const Multidegree& deg) {
  require_match(space, deg);
  __int128 r = 1;
  for (int f = 0; f < space.factors(); ++f) {
    r *= binomial(space.factor_dims[f] + deg.degrees[f], space.factor_dims[f]);
    if (r > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("basis size overflow");
  }
  return static_cast<std::int64_t>(r);
}

std::vector<Monomial> monomial_basis(const MultiProjectiveSpace& space, const Multidegree& deg) {
  require_match(space, deg);
  std::vector<std::vector<std::vector<int>>> per_factor(space.factors());
  for (int f = 0; f < space.factors(); ++f)
    factor_exponents(space.factor_dims[f] + 1, deg.degrees[f], per_factor[f]);

  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(basis_size(space, deg)));
  Monomial cur;
  cur.exponents.resize(space.factors());
  auto rec = [&](auto&& self, int f) -> void {
    if (f == space.factors()) {
      out.push_back(cur);
      return;
    }
    for (const auto& e : per_factor[f]) {
      cur.exponents[f] = e;
      self(self, f + 1);
    }
  };
  rec(rec, 0);
  return out;
}

bool in_ideal(const Monomial& m, const CoordinateSubvariety& sub) {
  for (std::size_t f = 0; f < sub.vanishing.size() && f < m.exponents.size(); ++f)
    for (int j : sub.vanishing[f])
      if (m.exponents[f][j] > 0) return true;
  return false;
}

std::vector<Monomial> ideal_basis(const MultiProjectiveSpace& space, const Multidegree& deg,
                                  const std::vector<CoordinateSubvariety>& subs) {
  for (const auto& s : subs) s.validate(space);
  auto all = monomial_basis(space, deg);
  if (subs.empty()) return all;
  std::vector<Monomial> out;
  for (auto& m : all) {
    bool keep = std::all_of(subs.begin(), subs.end(), [&](const auto& s) { return in_ideal(m, s); });
    if (keep) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace fatpoints
