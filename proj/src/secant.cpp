#include "fatpoints/secant.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace fatpoints {

namespace {

FatPointScheme doubles(std::int64_t r) {
  FatPointScheme s;
  s.points.assign(static_cast<std::size_t>(std::max<std::int64_t>(0, r)), FatPoint{{}, 2});
  return s;
}

FatPointScheme big_point_and_doubles(int a, std::int64_t r) {
  FatPointScheme s;
  s.points.push_back({{}, a});
  for (std::int64_t i = 0; i < r; ++i) s.points.push_back({{}, 2});
  return s;
}

}  // namespace

std::int64_t secant_expected_dim(const SecantQuery& q) {
  if (q.r < 1) throw std::invalid_argument("r must be at least 1");
  const std::int64_t B = basis_size(q.space, q.degree);
  return std::min(B - 1, q.r * (q.space.ambient_dim() + 1) - 1);
}

SecantVerdict secant_dim(const SecantQuery& q, const PrimeFieldConfig& config) {
  SecantVerdict v;
  v.r = q.r;
  v.expected_dim = secant_expected_dim(q);
  v.system = dimension(q.space, q.degree, doubles(q.r), config);
  v.actual_dim = basis_size(q.space, q.degree) - 1 - v.system.computed_dim;
  v.defect = v.expected_dim - v.actual_dim;
  v.defective = v.defect > 0;
  v.certified = v.system.certified();
  return v;
}

std::pair<std::int64_t, std::int64_t> critical_r(const MultiProjectiveSpace& space, const Multidegree& deg) {
  const std::int64_t B = basis_size(space, deg);
  const std::int64_t low = B / (space.ambient_dim() + 1);
  return {low, low + 1};
}

std::string to_string(Defectivity d) {
  switch (d) {
    case Defectivity::NonDefective: return "non-defective";
    case Defectivity::Defective: return "defective";
    case Defectivity::Undetermined: return "undetermined";
  }
  return "?";
}

DefectivityReport is_defective(const MultiProjectiveSpace& space, const Multidegree& deg,
                               const PrimeFieldConfig& config, bool parallel) {
  DefectivityReport rep;
  std::tie(rep.r_low, rep.r_high) = critical_r(space, deg);
  auto run = [&](std::int64_t r) {
    if (r == 0) {
      // No points: the full system, trivially regular.
      SecantVerdict v;
      v.system = dimension(space, deg, FatPointScheme{}, config);
      v.certified = true;
      return v;
    }
    return secant_dim({space, deg, r}, config);
  };
  if (parallel) {
    auto fut = std::async(std::launch::async, run, rep.r_high);
    rep.low = run(rep.r_low);
    rep.high = fut.get();
  } else {
    rep.low = run(rep.r_low);
    rep.high = run(rep.r_high);
  }
  const bool low_ok = rep.low.system.certifies(Status::Regular);
  const bool high_ok = rep.high.system.certifies(Status::Zero);
  if (low_ok && high_ok) {
    rep.verdict = Defectivity::NonDefective;
    return rep;
  }
  const SecantVerdict& bad = low_ok ? rep.high : rep.low;
  rep.failing_r = low_ok ? rep.r_high : rep.r_low;
  rep.verdict = bad.system.status == Status::Inconclusive ? Defectivity::Undetermined : Defectivity::Defective;
  return rep;
}

bool HypothesisReport::pass() const {
  if (!jet_room || !large_enough || per_r.empty()) return false;
  return std::all_of(per_r.begin(), per_r.end(),
                     [](const HypothesisCheck& c) { return c.applicable && c.triple_regular && c.quadruple_zero; });
}

HypothesisReport theorem_hypotheses(const MultiProjectiveSpace& space, const Multidegree& deg,
                                    const PrimeFieldConfig& config) {
  HypothesisReport h;
  const std::int64_t N = space.ambient_dim();
  h.ambient_dim = N;
  h.basis = basis_size(space, deg);
  h.large_enough = h.basis >= (N + 1) * (N + 1);
  h.dim_triple = dimension(space, deg, big_point_and_doubles(3, 0), config).computed_dim;
  h.dim_quadruple = dimension(space, deg, big_point_and_doubles(4, 0), config).computed_dim;
  h.jet_room = h.dim_triple - h.dim_quadruple >= binomial(N + 1, 2);

  std::vector<std::int64_t> rs{h.basis / (N + 1)};
  if (h.basis % (N + 1) != 0) rs.push_back(h.basis / (N + 1) + 1);
  for (auto r : rs) {
    HypothesisCheck c;
    c.r = r;
    c.applicable = r >= N + 1;
    if (c.applicable) {
      c.triple = dimension(space, deg, big_point_and_doubles(3, r - N - 1), config);
      c.quadruple = dimension(space, deg, big_point_and_doubles(4, r - N - 1), config);
      c.triple_regular = c.triple->certifies(Status::Regular);
      c.quadruple_zero = c.quadruple->certifies(Status::Zero);
    }
    h.per_r.push_back(std::move(c));
  }
  return h;
}

Json secant_json(const SecantQuery& q, const SecantVerdict& v, bool include_timing) {
  Json j = verdict_json(q.space, q.degree, doubles(q.r), v.system, include_timing);
  j["r"] = v.r;
  j["expected_dim"] = v.expected_dim;
  j["actual_dim"] = v.actual_dim;
  j["defect"] = v.defect;
  j["defective"] = v.defective;
  j["certified"] = v.certified;
  return j;
}

Json defectivity_json(const MultiProjectiveSpace& space, const Multidegree& deg, const DefectivityReport& r,
                      bool include_timing) {
  Json j;
  j["space"] = space.label();
  j["degree"] = deg.label();
  j["verdict"] = to_string(r.verdict);
  j["r_low"] = r.r_low;
  j["r_high"] = r.r_high;
  j["failing_r"] = r.failing_r ? Json(*r.failing_r) : Json(nullptr);
  if (r.r_low > 0) j["low"] = secant_json({space, deg, r.r_low}, r.low, include_timing);
  j["high"] = secant_json({space, deg, r.r_high}, r.high, include_timing);
  return j;
}

Json hypotheses_json(const MultiProjectiveSpace& space, const Multidegree& deg, const HypothesisReport& h) {
  Json j;
  j["space"] = space.label();
  j["degree"] = deg.label();
  j["ambient_dim"] = h.ambient_dim;
  j["basis"] = h.basis;
  j["dim_L3"] = h.dim_triple;
  j["dim_L4"] = h.dim_quadruple;
  j["condition_3"] = h.jet_room;
  j["condition_4"] = h.large_enough;
  Json rs = Json::array();
  for (const auto& c : h.per_r) {
    Json e;
    e["r"] = c.r;
    e["applicable"] = c.applicable;
    e["condition_1"] = c.triple_regular;
    e["condition_2"] = c.quadruple_zero;
    if (c.triple) {
      e["dim_L3_doubles"] = c.triple->computed_dim;
      e["vdim_L3_doubles"] = c.triple->virtual_dim;
    }
    if (c.quadruple) {
      e["dim_L4_doubles"] = c.quadruple->computed_dim;
      e["vdim_L4_doubles"] = c.quadruple->virtual_dim;
    }
    rs.push_back(std::move(e));
  }
  j["per_r"] = std::move(rs);
  j["pass"] = h.pass();
  return j;
}

}  // namespace fatpoints
