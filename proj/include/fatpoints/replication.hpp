#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fatpoints/engine.hpp"
#include "fatpoints/json_io.hpp"
#include "fatpoints/secant.hpp"

namespace fatpoints {

// Runs fn(0..n-1) on min(jobs, n) threads; the first exception is rethrown after all workers stop.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

struct BaseCaseFixture {
  std::string id;
  std::string family;  // "3,3", "3,4" or "4,4"
  std::string anchor;
  Status expected = Status::Regular;
  std::string declared_type;
  SchemeDocument doc;
};

// One named component of a specialization table; count is an expression in n.
struct TableComponent {
  std::string name;
  int multiplicity = 1;
  std::string count;
};

struct Reconciliation {
  std::string id;
  std::string description;
  std::vector<int> n_values;
  std::vector<TableComponent> source;
  std::vector<TableComponent> target;
};

struct ReconciliationRow {
  std::string id;
  int n = 0;
  SchemeType source;  // merged by multiplicity, decreasing
  SchemeType target;
  bool matches() const { return source == target; }
};

struct LoadWarning {
  std::string id;
  std::string message;
};

struct FixtureRegistry {
  std::vector<BaseCaseFixture> fixtures;
  std::vector<Reconciliation> reconciliations;
  std::vector<LoadWarning> warnings;  // flagged, never repaired
};

// Counts of the form "4", "2n-11", "s(n-8)", "1+b(n)-b(n-1)", "v(n)-v(n-3)".
std::int64_t evaluate_count(const std::string& expr, int n);

SchemeType merged_type(const FatPointScheme& scheme);
SchemeType merged_type(const SchemeType& type);

FixtureRegistry load_registry(const Json& j);
const FixtureRegistry& bundled_registry();
std::vector<ReconciliationRow> reconcile(const Reconciliation& r);

// Empty or "all" selects everything; otherwise an exact family or a substring of the id.
bool fixture_matches(const BaseCaseFixture& f, const std::string& filter);

struct FixtureResult {
  std::string id;
  std::string family;
  std::string anchor;
  Status expected = Status::Regular;
  DimensionVerdict verdict;
  bool pass = false;
  SchemeDocument doc;
};

struct BasecaseReport {
  std::string filter;
  std::vector<FixtureResult> results;  // sorted by id
  std::vector<LoadWarning> warnings;
  bool all_pass() const;
  std::vector<std::string> failures() const;
};

BasecaseReport run_basecases(const std::vector<BaseCaseFixture>& fixtures, const std::string& filter,
                             const PrimeFieldConfig& config, int jobs = 1);
BasecaseReport run_basecases(const std::string& filter, const PrimeFieldConfig& config, int jobs = 1);

Json basecase_json(const BasecaseReport& r, const PrimeFieldConfig& config, bool include_timing);
std::string basecase_table(const BasecaseReport& r);

struct MainTheoremRow {
  int c = 0;
  int d = 0;
  int m = 0;
  int n = 0;
  DefectivityReport report;
};

struct MainTheoremReport {
  std::vector<MainTheoremRow> rows;
  bool all_pass() const;
};

// (c,d) in {(3,3),(3,4),(4,4)} on P^m x P^n, 1 <= m <= max_m, 1 <= n <= max_n.
MainTheoremReport verify_main_theorem(int max_m, int max_n, const PrimeFieldConfig& config, int jobs = 1);
Json main_theorem_json(const MainTheoremReport& r);

// Degree-d Veronese of P^n with a defective r-th secant in the classical list.
bool classically_defective(int n, int d, std::int64_t r);

struct VeroneseDefect {
  std::int64_t r = 0;
  SecantVerdict secant;
  std::int64_t oracle_dim = -1;  // exact dim L(2^r) at small integer points
  std::int64_t oracle_defect() const;
};

struct VeroneseRow {
  int n = 0;
  int d = 0;
  bool expected_defective = false;
  DefectivityReport report;
  std::vector<VeroneseDefect> defects;  // one per listed r
  bool pass() const;
};

struct VeroneseReport {
  std::vector<VeroneseRow> rows;
  bool all_pass() const;
};

// n <= 4 with 2 <= d <= 5, plus quadrics on P^5.
VeroneseReport verify_ah(const PrimeFieldConfig& config, int jobs = 1);
Json ah_json(const VeroneseReport& r);

}  // namespace fatpoints
