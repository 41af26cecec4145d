#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fatpoints/engine.hpp"
#include "fatpoints/json_io.hpp"

namespace fatpoints {

// The hyperplane {x_{factor, coord} = 0}.
struct DivisorSpec {
  int factor = 0;
  int coord = 0;

  void validate(const MultiProjectiveSpace& space) const;
  CoordinateSubvariety as_subvariety(const MultiProjectiveSpace& space) const;
  std::string label() const;  // "F.J"
  static DivisorSpec parse(const std::string& text);
  static DivisorSpec from_subvariety(const CoordinateSubvariety& sub);
  bool operator==(const DivisorSpec&) const = default;
};

// Multiplicities on D drop by one (simple points on D disappear); the degree in D's factor drops by one.
// Contained subvarieties lying inside D are dropped, since x_coord already lies in their ideal.
SchemeDocument residue(const SchemeDocument& doc, const DivisorSpec& D);
// Points on D with full multiplicity, on D's space (coordinate deleted; a factor reduced to P^0 is dropped).
SchemeDocument trace(const SchemeDocument& doc, const DivisorSpec& D);

Json step_record(const std::string& op, const DivisorSpec& D, const SchemeDocument& before,
                 const SchemeDocument& after);

struct AdditivityReport {
  std::int64_t original = 0;
  std::int64_t residue = 0;
  std::int64_t trace = 0;
  bool holds() const { return residue + trace == original; }
};
AdditivityReport vdim_additivity_check(const SchemeDocument& doc, const DivisorSpec& D);

struct CastelnuovoReport {
  DimensionVerdict original;
  DimensionVerdict residue;
  DimensionVerdict trace;
  std::int64_t vdim = 0;
  Json plan;  // step records
  bool upper_bound() const { return original.computed_dim <= residue.computed_dim + trace.computed_dim; }
  bool lower_bound() const { return original.computed_dim >= vdim; }
  bool holds() const { return upper_bound() && lower_bound(); }
};
// Pins the scheme once at (config.prime, config.seed) so all three systems share point positions.
CastelnuovoReport castelnuovo_bound_check(const SchemeDocument& doc, const DivisorSpec& D,
                                          const PrimeFieldConfig& config);

struct StarConfiguration {
  int n = 0;
  std::uint64_t prime = 0;
  std::vector<std::uint64_t> hyperplane;             // coefficients of E
  std::vector<std::vector<std::uint64_t>> anchors;   // p_0..p_n in P^n
  std::vector<std::pair<int, int>> labels;           // (i, j) of each t_ij, lexicographic
  std::vector<std::vector<std::uint64_t>> points;    // t_ij in P^n
  std::vector<std::vector<std::uint64_t>> on_e;      // t_ij in E = P^{n-1}, last coordinate dropped
};

StarConfiguration star_configuration(int n, const PrimeFieldConfig& config);
// Throws std::logic_error if a structural invariant fails.
void validate_star(const StarConfiguration& conf);
// Index subsets I (|I| >= 3) whose points t_ij span more than P^{|I|-2}.
std::vector<std::vector<int>> star_span_violations(const StarConfiguration& conf);

struct StarCheck {
  DimensionVerdict quadrics;      // L^2_{n-1}(T)
  DimensionVerdict cubics;        // L^3_{n-1}(T)
  DimensionVerdict double_cubics; // L^3_{n-1}(2T)
  bool holds() const { return quadrics.certified() && cubics.certified() && double_cubics.certified(); }
};
StarCheck star_nonspeciality_check(int n, const PrimeFieldConfig& config);
FatPointScheme star_scheme(const StarConfiguration& conf, int multiplicity);

enum class JetDirections { RandomGeneral, Star };

// 3q + binom(N+1,2) order-3 jets at q (point 0) + general points of extra_type.
FatPointScheme collision_scheme(const MultiProjectiveSpace& space, const SchemeType& extra_type,
                                const PrimeFieldConfig& config, JetDirections mode = JetDirections::RandomGeneral,
                                bool with_jets = true);

struct JetChainReport {
  int dim_quadruple = 0;  // L(4q + Z)
  int dim_jets = 0;       // L(3[T]q + Z)
  int dim_triple = 0;     // L(3q + Z)
  bool quadruple_in_jets = false;
  bool jets_in_triple = false;
  bool holds() const {
    return quadruple_in_jets && jets_in_triple && dim_quadruple <= dim_jets && dim_jets <= dim_triple;
  }
};
// Same q, Z and directions for all three systems; containment is tested on row spaces.
JetChainReport jet_chain_check(const MultiProjectiveSpace& space, const Multidegree& deg,
                               const SchemeType& extra_type, const PrimeFieldConfig& config,
                               JetDirections mode = JetDirections::RandomGeneral);

}  // namespace fatpoints
