#include "fatpoints/json_io.hpp"

#include <stdexcept>

namespace fatpoints {

Json to_json(const CoordinateSubvariety& sub) { return Json(sub.vanishing); }

CoordinateSubvariety subvariety_from_json(const Json& j, int factors) {
  if (!j.is_array() || static_cast<int>(j.size()) != factors)
    throw std::invalid_argument("stratum must list one coordinate array per factor");
  return CoordinateSubvariety(j.get<std::vector<std::vector<int>>>());
}

Json to_json(const SchemeDocument& doc) {
  Json out;
  out["space"] = doc.space.factor_dims;
  out["degree"] = doc.degree.degrees;
  Json pts = Json::array();
  const auto& points = doc.scheme.points;
  for (std::size_t i = 0; i < points.size();) {
    const auto& p = points[i];
    std::size_t run = 1;
    if (!p.spec.coords)
      while (i + run < points.size() && points[i + run] == p) ++run;
    Json e;
    e["multiplicity"] = p.multiplicity;
    if (run > 1) e["count"] = run;
    e["stratum"] = p.spec.stratum ? to_json(*p.spec.stratum) : Json(nullptr);
    if (p.spec.coords) e["coords"] = *p.spec.coords;
    pts.push_back(std::move(e));
    i += run;
  }
  out["points"] = std::move(pts);
  Json jets = Json::array();
  for (const auto& j : doc.scheme.jets)
    jets.push_back(Json{{"point", j.point}, {"direction", j.direction}, {"order", j.order}});
  out["jets"] = std::move(jets);
  Json cont = Json::array();
  for (const auto& s : doc.scheme.contained) cont.push_back(to_json(s));
  out["contained"] = std::move(cont);
  return out;
}

SchemeDocument document_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("scheme document must be an object");
  SchemeDocument doc;
  doc.space = MultiProjectiveSpace(j.at("space").get<std::vector<int>>());
  doc.degree = Multidegree(j.at("degree").get<std::vector<int>>());
  require_match(doc.space, doc.degree);
  const int k = doc.space.factors();
  if (j.contains("points")) {
    for (const auto& e : j.at("points")) {
      FatPoint p;
      p.multiplicity = e.at("multiplicity").get<int>();
      if (e.contains("stratum") && !e.at("stratum").is_null())
        p.spec.stratum = subvariety_from_json(e.at("stratum"), k);
      if (e.contains("coords")) p.spec.coords = e.at("coords").get<std::vector<std::vector<std::int64_t>>>();
      std::int64_t count = e.value("count", std::int64_t{1});
      if (count < 0) throw std::invalid_argument("negative point count");
      if (count > 1 && p.spec.coords) throw std::invalid_argument("pinned coordinates cannot be repeated");
      for (std::int64_t c = 0; c < count; ++c) doc.scheme.points.push_back(p);
    }
  }
  if (j.contains("jets")) {
    for (const auto& e : j.at("jets")) {
      JetCondition jc;
      jc.point = e.at("point").get<std::size_t>();
      jc.direction = e.at("direction").get<std::vector<std::int64_t>>();
      jc.order = e.value("order", 3);
      doc.scheme.jets.push_back(std::move(jc));
    }
  }
  if (j.contains("contained"))
    for (const auto& e : j.at("contained")) doc.scheme.contained.push_back(subvariety_from_json(e, k));
  doc.scheme.validate(doc.space);
  return doc;
}

}  // namespace fatpoints
