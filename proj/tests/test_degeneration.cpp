#include <doctest.h>

#include "fatpoints/degeneration.hpp"

using namespace fatpoints;

namespace {

SchemeDocument doc_of(std::vector<int> dims, std::vector<int> degs, const std::string& type,
                      std::vector<std::optional<CoordinateSubvariety>> strata = {}) {
  MultiProjectiveSpace s(dims);
  return {s, Multidegree(degs), make_scheme(s, SchemeType::parse(type), strata)};
}

}  // namespace

TEST_CASE("divisor parsing and validation") {
  auto D = DivisorSpec::parse("1.2");
  CHECK(D.factor == 1);
  CHECK(D.coord == 2);
  CHECK(D.label() == "1.2");
  CHECK_THROWS_AS(DivisorSpec::parse("1"), std::invalid_argument);
  CHECK_THROWS_AS(DivisorSpec::parse("a.b"), std::invalid_argument);
  CHECK_THROWS_AS(D.validate(MultiProjectiveSpace({1, 1})), std::invalid_argument);
  CHECK(DivisorSpec::from_subvariety(CoordinateSubvariety({{}, {1}})) == DivisorSpec{1, 1});
  CHECK_THROWS(DivisorSpec::from_subvariety(CoordinateSubvariety({{}, {0, 1}})));
}

TEST_CASE("residue and trace of two points on a divisor") {
  DivisorSpec D{0, 0};
  MultiProjectiveSpace s({2, 2});
  auto doc = doc_of({2, 2}, {3, 3}, "3,2", {D.as_subvariety(s), D.as_subvariety(s)});
  auto res = residue(doc, D);
  CHECK(res.degree.label() == "2,3");
  CHECK(scheme_type(res.scheme).to_string() == "2,1");
  auto tr = trace(doc, D);
  CHECK(tr.space.label() == "1x2");
  CHECK(tr.degree.label() == "3,3");
  CHECK(scheme_type(tr.scheme).to_string() == "3,2");
  CHECK(!tr.scheme.points[0].spec.stratum);
  auto a = vdim_additivity_check(doc, D);
  CHECK(a.original == 80);
  CHECK(a.residue == 54);
  CHECK(a.trace == 26);
  CHECK(a.holds());
  auto step = step_record("residue", D, doc, res);
  CHECK(step["before_type"] == "3,2");
  CHECK(step["after_type"] == "2,1");
  CHECK(step["degree_after"] == "2,3");
}

TEST_CASE("collapsing residue of a triple point and doubles on the divisor") {
  DivisorSpec D{0, 0};
  MultiProjectiveSpace s({2, 2});
  auto on = D.as_subvariety(s);
  auto doc = doc_of({2, 2}, {3, 3}, "3,2^7,2^10", {on, on});
  auto res = residue(doc, D);
  CHECK(scheme_type(res.scheme).to_string() == "2,1^7,2^10");
  auto tr = trace(doc, D);
  CHECK(scheme_type(tr.scheme).to_string() == "3,2^7");
  CHECK(vdim_additivity_check(doc, D).holds());
}

TEST_CASE("a scheme off the divisor keeps its points and loses a degree") {
  DivisorSpec D{1, 0};
  auto doc = doc_of({1, 2}, {2, 2}, "2^3");
  auto res = residue(doc, D);
  CHECK(res.scheme == doc.scheme);
  CHECK(res.degree.label() == "2,1");
  CHECK(trace(doc, D).scheme.points.empty());
  // Empty scheme: Pascal's rule on basis sizes.
  auto empty = doc_of({1, 2}, {2, 2}, "");
  auto a = vdim_additivity_check(empty, D);
  CHECK(a.original == 3 * 6);
  CHECK(a.residue == 3 * 3);
  CHECK(a.trace == 3 * 3);
}

TEST_CASE("trace drops a factor that becomes a point") {
  DivisorSpec D{0, 1};
  MultiProjectiveSpace s({1, 2});
  auto doc = doc_of({1, 2}, {3, 2}, "2^2,1", {D.as_subvariety(s)});
  auto tr = trace(doc, D);
  CHECK(tr.space.label() == "2");
  CHECK(tr.degree.label() == "2");
  CHECK(scheme_type(tr.scheme).to_string() == "2^2");
  CHECK(vdim_additivity_check(doc, D).holds());
  // Single P^1: trace is a point.
  auto line = doc_of({1}, {3}, "2,1", {CoordinateSubvariety(std::vector<std::vector<int>>{{0}})});
  CHECK_THROWS(trace(line, DivisorSpec{0, 0}));
  auto a = vdim_additivity_check(line, DivisorSpec{0, 0});
  CHECK(a.original == 4 - 3);
  CHECK(a.residue == 3 - 2);
  CHECK(a.trace == 0);
}

TEST_CASE("preconditions are enforced") {
  DivisorSpec D{0, 0};
  auto zero_deg = doc_of({1, 1}, {0, 2}, "2");
  CHECK_THROWS_AS(residue(zero_deg, D), std::invalid_argument);
  // Pinned point with a zero coordinate but no declared stratum.
  SchemeDocument doc = doc_of({1, 1}, {2, 2}, "");
  PointSpec p;
  p.coords = std::vector<std::vector<std::int64_t>>{{0, 1}, {1, 1}};
  doc.scheme.points.push_back({p, 2});
  CHECK_THROWS_AS(residue(doc, D), std::invalid_argument);
  // Jets at a point on D.
  MultiProjectiveSpace s({1, 1});
  auto jet = doc_of({1, 1}, {3, 3}, "3", {D.as_subvariety(s)});
  jet.scheme.jets.push_back({0, {0, 1}, 3});
  CHECK_THROWS_AS(trace(jet, D), std::invalid_argument);
}

TEST_CASE("contained subvarieties: inside the divisor or crossing it") {
  MultiProjectiveSpace s({1, 3});
  DivisorSpec D{1, 0};
  auto doc = doc_of({1, 3}, {2, 3}, "2^2");
  doc.scheme.contained = {CoordinateSubvariety({{}, {0, 1}}), CoordinateSubvariety({{}, {2, 3}})};
  auto res = residue(doc, D);
  REQUIRE(res.scheme.contained.size() == 1);
  CHECK(res.scheme.contained[0].label() == "1.2+1.3");
  auto tr = trace(doc, D);
  REQUIRE(tr.scheme.contained.size() == 2);
  CHECK(tr.scheme.contained[0].label() == "1.0");
  CHECK(tr.scheme.contained[1].label() == "1.1+1.2");
  CHECK(vdim_additivity_check(doc, D).holds());
  doc.scheme.contained = {D.as_subvariety(s)};
  CHECK_THROWS(trace(doc, D));
}

TEST_CASE("Castelnuovo bounds on a collapsing split") {
  PrimeFieldConfig cfg;
  DivisorSpec D{0, 0};
  MultiProjectiveSpace s({2, 2});
  auto on = D.as_subvariety(s);
  auto doc = doc_of({2, 2}, {3, 3}, "3,2^7,2^10", {on, on});
  auto r = castelnuovo_bound_check(doc, D, cfg);
  CHECK(r.vdim == 0);
  CHECK(r.residue.computed_dim == 0);
  CHECK(r.trace.computed_dim == 2);
  CHECK(r.holds());
  CHECK(r.plan.size() == 2);

  // Everything on D: the bound may be strict, the lower bound still holds.
  auto all_on = doc_of({2, 2}, {3, 3}, "2^6", {on});
  auto q = castelnuovo_bound_check(all_on, D, cfg);
  CHECK(q.holds());
  CHECK(q.original.computed_dim >= q.vdim);

  auto empty = castelnuovo_bound_check(doc_of({2, 2}, {3, 3}, ""), D, cfg);
  CHECK(empty.original.computed_dim == 100);
  CHECK(empty.holds());
}

TEST_CASE("star configurations") {
  PrimeFieldConfig cfg;
  for (int n = 2; n <= 8; ++n) {
    auto c = star_configuration(n, cfg);
    CHECK(static_cast<std::int64_t>(c.points.size()) == binomial(n + 1, 2));
    CHECK_NOTHROW(validate_star(c));
    for (const auto& e : c.on_e) CHECK(static_cast<int>(e.size()) == n);
  }
  auto c3 = star_configuration(3, cfg);
  CHECK(c3.labels[3] == std::pair<int, int>{1, 2});
  // t_01, t_02, t_12 lie on a line of E = P^2.
  PrimeField F(c3.prime);
  ModMatrix m(3, 3);
  for (int i : {0, 1, 3})
    for (int k = 0; k < 3; ++k) m.at(i == 3 ? 2 : i, k) = static_cast<std::uint32_t>(c3.on_e[i][k]);
  CHECK(rank_fp(m, F) == 2);
  CHECK(star_span_violations(c3).empty());
  CHECK_THROWS_AS(star_configuration(1, cfg), std::invalid_argument);
}

TEST_CASE("star points impose independent conditions in low degree") {
  PrimeFieldConfig cfg;
  for (int n = 2; n <= 6; ++n) {
    auto r = star_nonspeciality_check(n, cfg);
    CHECK_MESSAGE(r.holds(), "n = " << n);
  }
  auto r3 = star_nonspeciality_check(3, cfg);
  CHECK(r3.quadrics.virtual_dim == 0);
  CHECK(r3.quadrics.computed_dim == 0);
  CHECK(r3.double_cubics.virtual_dim == 10 - 18);
  CHECK(r3.double_cubics.status == Status::Zero);
  auto r2 = star_nonspeciality_check(2, cfg);
  CHECK(r2.cubics.computed_dim == 1);
}

TEST_CASE("collision scheme on P1xP1 with r = 6") {
  PrimeFieldConfig cfg;
  MultiProjectiveSpace s({1, 1});
  Multidegree d({3, 3});
  auto col = collision_scheme(s, SchemeType::parse("2^3"), cfg);
  CHECK(col.points.size() == 4);
  CHECK(col.points[0].multiplicity == 3);
  CHECK(col.jets.size() == 3);
  auto collided = dimension(s, d, col, cfg);
  auto general = dimension(s, d, make_scheme(s, SchemeType::parse("2^6")), cfg);
  CHECK(collided.computed_dim == 0);
  CHECK(general.computed_dim == 0);
  CHECK(collided.virtual_dim == general.virtual_dim);
  auto plain = collision_scheme(s, SchemeType::parse("2^3"), cfg, JetDirections::RandomGeneral, false);
  CHECK(scheme_type(plain).to_string() == "3,2^3");
  CHECK(plain.jets.empty());
  auto star = collision_scheme(s, SchemeType::parse("2^3"), cfg, JetDirections::Star);
  CHECK(star.jets.size() == 3);
  CHECK(dimension(s, d, star, cfg).computed_dim >= general.computed_dim);
}

TEST_CASE("jet containment chain") {
  PrimeFieldConfig cfg;
  auto r = jet_chain_check(MultiProjectiveSpace({1, 1}), Multidegree({3, 3}), SchemeType::parse("2^2"), cfg);
  CHECK(r.holds());
  CHECK(r.dim_triple == 4);
  CHECK(r.dim_jets == 1);
  CHECK(r.dim_quadruple == 1);
}
