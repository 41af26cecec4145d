#include "fatpoints/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "fatpoints/degeneration.hpp"
#include "fatpoints/ledger.hpp"
#include "fatpoints/replication.hpp"
#include "fatpoints/secant.hpp"

namespace fatpoints::cli {

PrimeFieldConfig RunConfig::field() const {
  PrimeFieldConfig c;
  c.prime = prime;
  c.seed = seed;
  c.retries = retries;
  c.alternate_primes = {prime == kAlternatePrime ? kDefaultPrime : kAlternatePrime};
  return c;
}

void RunConfig::validate() const {
  if (jobs < 1) throw std::invalid_argument("--jobs must be at least 1");
  field().validate();
}

int exit_code_for(Status s) {
  switch (s) {
    case Status::Regular:
    case Status::Zero: return kExitOk;
    case Status::SpecialCandidate: return kExitSpecial;
    case Status::Inconclusive: return kExitInconclusive;
  }
  return kExitFailure;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string request_hash(const Json& request) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(request.dump())));
  return buf;
}

// ---- cache ----

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  {
    std::ofstream probe(path_, std::ios::app);
    if (!probe) {
      warning_ = "cache disabled: cannot write " + path_;
      return;
    }
  }
  enabled_ = true;
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Json rec = Json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.is_object() || !rec.contains("request_hash")) continue;
    const std::string key = rec["request_hash"].get<std::string>();
    records_[key] = std::move(rec);
  }
}

std::optional<Json> ResultCache::lookup(const std::string& hash) const {
  if (!enabled_) return std::nullopt;
  auto it = records_.find(hash);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::store(const std::string& hash, const Json& result, int exit_code) {
  if (!enabled_) return;
  Json rec = result;
  rec["request_hash"] = hash;
  rec["exit_code"] = exit_code;
  std::ofstream out(path_, std::ios::app);
  out << rec.dump() << '\n';
  records_[hash] = std::move(rec);
}

// ---- rendering ----

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_scalarish(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  for (const auto& e : v)
    if (e.is_object()) return false;
  return true;
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object())
      flatten(*it, key, out);
    else if (is_scalarish(*it))
      out.emplace_back(key, scalar_text(*it));
  }
}

// The first array of objects at the top level, if any.
const Json* row_array(const Json& j) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it->is_array() && !it->empty() && (*it)[0].is_object()) return &*it;
  return nullptr;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void write_table(const std::vector<std::vector<std::pair<std::string, std::string>>>& rows, std::ostream& os) {
  std::vector<std::string> cols;
  for (const auto& r : rows)
    for (const auto& [k, v] : r)
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  auto cell = [&](const std::vector<std::pair<std::string, std::string>>& r, const std::string& k) {
    for (const auto& [key, v] : r)
      if (key == k) return v;
    return std::string{};
  };
  for (const auto& r : rows)
    for (std::size_t c = 0; c < cols.size(); ++c) width[c] = std::max(width[c], cell(r, cols[c]).size());
  for (std::size_t c = 0; c < cols.size(); ++c) os << std::left << std::setw(static_cast<int>(width[c] + 2)) << cols[c];
  os << '\n';
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < cols.size(); ++c)
      os << std::left << std::setw(static_cast<int>(width[c] + 2)) << cell(r, cols[c]);
    os << '\n';
  }
}

}  // namespace

std::string render(const Json& result, Format format, const std::vector<std::string>& columns) {
  if (format == Format::Json) return result.dump(2) + "\n";
  std::ostringstream os;
  const Json* rows = row_array(result);
  if (format == Format::Csv) {
    std::vector<std::vector<std::pair<std::string, std::string>>> table;
    if (rows) {
      for (const auto& r : *rows) {
        table.emplace_back();
        flatten(r, "", table.back());
      }
    } else {
      table.emplace_back();
      flatten(result, "", table.back());
    }
    std::vector<std::string> cols;
    for (const auto& r : table)
      for (const auto& [k, v] : r)
        if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << csv_field(cols[c]);
    os << '\n';
    for (const auto& r : table) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        std::string v;
        for (const auto& [k, val] : r)
          if (k == cols[c]) v = val;
        os << (c ? "," : "") << csv_field(v);
      }
      os << '\n';
    }
    return os.str();
  }
  std::vector<std::pair<std::string, std::string>> top;
  for (auto it = result.begin(); it != result.end(); ++it) {
    if (rows && &*it == rows) continue;
    if (it->is_object()) {
      flatten(*it, it.key(), top);
    } else if (is_scalarish(*it)) {
      top.emplace_back(it.key(), scalar_text(*it));
    }
  }
  std::size_t w = 0;
  for (const auto& [k, v] : top) w = std::max(w, k.size());
  for (const auto& [k, v] : top) os << std::left << std::setw(static_cast<int>(w + 2)) << (k + ":") << v << '\n';
  if (rows) {
    os << '\n';
    std::vector<std::vector<std::pair<std::string, std::string>>> table;
    for (const auto& r : *rows) {
      std::vector<std::pair<std::string, std::string>> cells;
      flatten(r, "", cells);
      if (!columns.empty()) {
        std::vector<std::pair<std::string, std::string>> kept;
        for (const auto& c : columns)
          for (const auto& kv : cells)
            if (kv.first == c) kept.push_back(kv);
        cells = std::move(kept);
      }
      table.push_back(std::move(cells));
    }
    write_table(table, os);
  }
  return os.str();
}

// ---- commands ----

namespace {

struct Outcome {
  Json result;
  int exit_code = kExitOk;
};

// Row columns shown in table output; everything else stays in JSON and CSV.
std::vector<std::string> table_columns(const std::string& command) {
  if (command == "basecases")
    return {"id", "family", "expected", "verdict.status", "verdict.computed_dim", "verdict.vdim", "verdict.rank", "pass"};
  if (command == "verify-arith") return {"lemma_id", "range", "checked", "status"};
  if (command == "main-theorem")
    return {"c", "d", "m", "n", "verdict", "r_low", "low_status", "r_high", "high_status"};
  return {};
}

struct SchemeFlags {
  std::string space;
  std::string degree;
  std::string scheme;
  std::string file;
  std::vector<std::string> strata;       // G=label
  std::vector<std::string> on_divisor;   // ordered per group, "-" for general
  std::vector<std::string> contain;

  void add(CLI::App* sub, bool needs_scheme) {
    sub->add_option("--space", space, "product of projective spaces, e.g. 1x2")->required(!needs_scheme);
    sub->add_option("--deg", degree, "multidegree, e.g. 3,4")->required(!needs_scheme);
    if (!needs_scheme) return;
    sub->add_option("--scheme", scheme, "scheme type, e.g. 3,2^15,1^6");
    sub->add_option("--file", file, "JSON scheme document");
    sub->add_option("--stratum", strata, "G=F.J[+F.J...]: group G lies on that coordinate subvariety");
    sub->add_option("--on-divisor", on_divisor, "F.J per group in order, '-' for a general group");
    sub->add_option("--contain", contain, "coordinate subvariety the forms must contain");
  }

  Json request() const {
    return Json{{"space", space}, {"deg", degree}, {"scheme", scheme}, {"file", file},
                {"stratum", strata}, {"on_divisor", on_divisor}, {"contain", contain}};
  }

  SchemeDocument document() const {
    if (!file.empty()) {
      if (!scheme.empty() || !strata.empty() || !on_divisor.empty() || !contain.empty())
        throw std::invalid_argument("--file cannot be combined with scheme flags");
      std::ifstream in(file);
      if (!in) throw std::invalid_argument("cannot read " + file);
      Json j = Json::parse(in, nullptr, false);
      if (j.is_discarded()) throw std::invalid_argument(file + " is not valid JSON");
      return document_from_json(j);
    }
    if (space.empty() || degree.empty()) throw std::invalid_argument("--space and --deg are required");
    SchemeDocument doc;
    doc.space = MultiProjectiveSpace::parse(space);
    doc.degree = Multidegree::parse(degree);
    require_match(doc.space, doc.degree);
    const SchemeType type = SchemeType::parse(scheme);
    std::vector<std::optional<CoordinateSubvariety>> st(type.groups.size());
    if (on_divisor.size() > st.size()) throw std::invalid_argument("more --on-divisor flags than groups");
    for (std::size_t g = 0; g < on_divisor.size(); ++g)
      if (on_divisor[g] != "-") st[g] = DivisorSpec::parse(on_divisor[g]).as_subvariety(doc.space);
    for (const auto& s : strata) {
      const auto eq = s.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("--stratum must look like G=F.J, got '" + s + "'");
      std::size_t used = 0;
      const int g = std::stoi(s.substr(0, eq), &used);
      if (used != eq || g < 0 || g >= static_cast<int>(st.size()))
        throw std::invalid_argument("--stratum group out of range in '" + s + "'");
      if (st[g]) throw std::invalid_argument("group " + std::to_string(g) + " has two strata");
      st[g] = CoordinateSubvariety::parse(s.substr(eq + 1), doc.space.factors());
    }
    for (auto& sub : st)
      if (sub) sub->validate(doc.space);
    doc.scheme = make_scheme(doc.space, type, st);
    for (const auto& c : contain) doc.scheme.contained.push_back(CoordinateSubvariety::parse(c, doc.space.factors()));
    doc.scheme.validate(doc.space);
    return doc;
  }
};

ledger::Range parse_range(const std::string& text) {
  ledger::Range r;
  const auto dots = text.find("..");
  std::size_t used = 0;
  if (dots == std::string::npos) {
    r.lo = r.hi = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad range '" + text + "'");
  } else {
    r.lo = std::stoi(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument("bad range '" + text + "'");
    const std::string hi = text.substr(dots + 2);
    r.hi = std::stoi(hi, &used);
    if (used != hi.size()) throw std::invalid_argument("bad range '" + text + "'");
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + text + "'");
  return r;
}

Json verdict_extras(Json j, const DimensionVerdict& v) {
  j["expected_dim"] = v.expected_dim;
  j["certified"] = v.certified();
  j["retry_count"] = v.certificate.retry_count;
  return j;
}

Json dimension_summary(const DimensionVerdict& v) {
  return Json{{"dim", v.computed_dim}, {"vdim", v.virtual_dim}, {"status", to_string(v.status)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dimensions of linear systems through fat points on products of projective spaces"};
  app.name("fatpoints");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig rc;
  bool json_flag = false;
  std::string format = "table";
  app.add_option("--prime", rc.prime, "prime modulus")->envname("FATPOINTS_PRIME");
  app.add_option("--seed", rc.seed, "random seed")->envname("FATPOINTS_SEED");
  app.add_option("--retries", rc.retries, "extra seeds tried before the alternate prime");
  app.add_option("--jobs", rc.jobs, "worker threads");
  app.add_option("--cache", rc.cache_path, "JSONL result cache");
  app.add_option("--format", format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_flag("--json", json_flag, "same as --format json");
  app.add_flag("--timing", rc.timing, "include wall-clock timings (output is then not reproducible)");

  std::string command;
  Json params;
  std::function<Outcome()> action;

  // dim
  SchemeFlags dim_flags;
  auto* dim = app.add_subcommand("dim", "dimension of L(X) with certificate");
  dim_flags.add(dim, true);
  dim->callback([&] {
    command = "dim";
    params = dim_flags.request();
    action = [&] {
      const auto doc = dim_flags.document();
      const auto v = dimension(doc.space, doc.degree, doc.scheme, rc.field());
      return Outcome{verdict_extras(verdict_json(doc.space, doc.degree, doc.scheme, v, rc.timing), v),
                     exit_code_for(v.status)};
    };
  });

  // secant
  SchemeFlags sec_flags;
  std::int64_t sec_r = 1;
  auto* sec = app.add_subcommand("secant", "dimension of the r-th secant variety via Terracini");
  sec_flags.add(sec, false);
  sec->add_option("--r", sec_r, "number of points")->required();
  sec->callback([&] {
    command = "secant";
    params = sec_flags.request();
    params["r"] = sec_r;
    action = [&] {
      const SecantQuery q{MultiProjectiveSpace::parse(sec_flags.space), Multidegree::parse(sec_flags.degree), sec_r};
      require_match(q.space, q.degree);
      const auto v = secant_dim(q, rc.field());
      return Outcome{secant_json(q, v, rc.timing), exit_code_for(v.system.status)};
    };
  });

  // defective
  SchemeFlags def_flags;
  auto* def = app.add_subcommand("defective", "defectivity test at the two critical values of r");
  def_flags.add(def, false);
  def->callback([&] {
    command = "defective";
    params = def_flags.request();
    action = [&] {
      const auto space = MultiProjectiveSpace::parse(def_flags.space);
      const auto deg = Multidegree::parse(def_flags.degree);
      require_match(space, deg);
      const auto rep = is_defective(space, deg, rc.field(), rc.jobs > 1);
      const int code = rep.verdict == Defectivity::NonDefective ? kExitOk
                       : rep.verdict == Defectivity::Defective  ? kExitSpecial
                                                                : kExitInconclusive;
      return Outcome{defectivity_json(space, deg, rep, rc.timing), code};
    };
  });

  // hypotheses
  SchemeFlags hyp_flags;
  auto* hyp = app.add_subcommand("hypotheses", "check the four hypotheses of the collision criterion");
  hyp_flags.add(hyp, false);
  hyp->callback([&] {
    command = "hypotheses";
    params = hyp_flags.request();
    action = [&] {
      const auto space = MultiProjectiveSpace::parse(hyp_flags.space);
      const auto deg = Multidegree::parse(hyp_flags.degree);
      require_match(space, deg);
      const auto h = theorem_hypotheses(space, deg, rc.field());
      return Outcome{hypotheses_json(space, deg, h), h.pass() ? kExitOk : kExitFailure};
    };
  });

  // basecases
  std::string filter;
  auto* bc = app.add_subcommand("basecases", "run the bundled base-case fixtures");
  bc->add_option("--filter", filter, "family such as 3,3, or an id substring");
  bc->callback([&] {
    command = "basecases";
    params = Json{{"filter", filter}};
    action = [&] {
      const auto rep = run_basecases(filter, rc.field(), rc.jobs);
      if (rep.results.empty()) throw std::invalid_argument("no fixture matches '" + filter + "'");
      return Outcome{basecase_json(rep, rc.field(), rc.timing), rep.all_pass() ? kExitOk : kExitFailure};
    };
  });

  // verify-arith
  std::vector<std::string> lemma_ids;
  std::string range_text = "1..40";
  bool no_exclusions = false;
  auto* va = app.add_subcommand("verify-arith", "verify the registered arithmetic identities");
  va->add_option("--lemma", lemma_ids, "lemma id (repeatable); all when omitted");
  auto* range_opt = va->add_option("--range", range_text, "lo..hi for every variable");
  va->add_option("--n", range_text, "alias of --range")->excludes(range_opt);
  va->add_option("--m", range_text, "alias of --range")->excludes(range_opt);
  va->add_flag("--no-exclusions", no_exclusions, "also test the documented exceptional pairs");
  bool list_lemmas = false;
  va->add_flag("--list", list_lemmas, "list lemma ids");
  va->callback([&] {
    command = "verify-arith";
    params = Json{{"lemma", lemma_ids}, {"range", range_text}, {"no_exclusions", no_exclusions}, {"list", list_lemmas}};
    action = [&] {
      if (list_lemmas) {
        Json rows = Json::array();
        for (const auto& l : ledger::lemmas()) rows.push_back(Json{{"lemma_id", l.id}, {"statement", l.statement}});
        return Outcome{Json{{"count", rows.size()}, {"lemmas", rows}}, kExitOk};
      }
      ledger::Range range = parse_range(range_text);
      range.honor_exclusions = !no_exclusions;
      std::vector<ledger::LemmaResult> results;
      if (lemma_ids.empty()) {
        results = ledger::verify_all(range);
      } else {
        for (const auto& id : lemma_ids) results.push_back(ledger::verify_lemma(id, range));
      }
      std::size_t total = 0;
      Json rows = Json::array();
      for (const auto& r : results) {
        total += r.counterexamples.size();
        rows.push_back(ledger::result_json(r));
      }
      Json j{{"range", Json::array({range.lo, range.hi})},
             {"lemmas", results.size()},
             {"counterexamples", total},
             {"pass", total == 0},
             {"results", rows}};
      return Outcome{j, total == 0 ? kExitOk : kExitFailure};
    };
  });

  // star
  int star_n = 3;
  auto* star = app.add_subcommand("star", "star configuration checks in P^n");
  star->add_option("--n", star_n, "ambient dimension n >= 2")->required();
  star->callback([&] {
    command = "star";
    params = Json{{"n", star_n}};
    action = [&] {
      if (star_n < 2) throw std::invalid_argument("--n must be at least 2");
      const auto conf = star_configuration(star_n, rc.field());
      bool structure = true;
      std::string structure_error;
      try {
        validate_star(conf);
      } catch (const std::logic_error& e) {
        structure = false;
        structure_error = e.what();
      }
      const auto violations = star_span_violations(conf);
      const auto check = star_nonspeciality_check(star_n, rc.field());
      const bool ok = structure && violations.empty() && check.holds();
      Json j{{"n", star_n},
             {"points", conf.points.size()},
             {"structure", structure},
             {"span_violations", violations.size()},
             {"quadrics", dimension_summary(check.quadrics)},
             {"cubics", dimension_summary(check.cubics)},
             {"double_cubics", dimension_summary(check.double_cubics)},
             {"pass", ok}};
      if (!structure) j["structure_error"] = structure_error;
      return Outcome{j, ok ? kExitOk : kExitFailure};
    };
  });

  // castelnuovo
  SchemeFlags cas_flags;
  std::string divisor;
  auto* cas = app.add_subcommand("castelnuovo", "residue/trace split along a coordinate hyperplane");
  cas_flags.add(cas, true);
  cas->add_option("--divisor", divisor, "hyperplane F.J")->required();
  cas->callback([&] {
    command = "castelnuovo";
    params = cas_flags.request();
    params["divisor"] = divisor;
    action = [&] {
      const auto doc = cas_flags.document();
      const auto D = DivisorSpec::parse(divisor);
      D.validate(doc.space);
      const auto add = vdim_additivity_check(doc, D);
      const auto rep = castelnuovo_bound_check(doc, D, rc.field());
      const bool ok = add.holds() && rep.holds();
      Json j{{"space", doc.space.label()},
             {"degree", doc.degree.label()},
             {"divisor", D.label()},
             {"additivity", Json{{"original", add.original}, {"residue", add.residue}, {"trace", add.trace},
                                 {"holds", add.holds()}}},
             {"original", dimension_summary(rep.original)},
             {"residue", dimension_summary(rep.residue)},
             {"trace", dimension_summary(rep.trace)},
             {"upper_bound", rep.upper_bound()},
             {"lower_bound", rep.lower_bound()},
             {"pass", ok},
             {"plan", rep.plan}};
      return Outcome{j, ok ? kExitOk : kExitFailure};
    };
  });

  // main-theorem
  int max_m = 3, max_n = 3;
  auto* mt = app.add_subcommand("main-theorem", "defectivity of the (3,3), (3,4), (4,4) Segre-Veronese families");
  mt->add_option("--max-m", max_m, "largest m");
  mt->add_option("--max-n", max_n, "largest n");
  mt->callback([&] {
    command = "main-theorem";
    params = Json{{"max_m", max_m}, {"max_n", max_n}};
    action = [&] {
      const auto rep = verify_main_theorem(max_m, max_n, rc.field(), rc.jobs);
      return Outcome{main_theorem_json(rep), rep.all_pass() ? kExitOk : kExitFailure};
    };
  });

  // veronese
  auto* ver = app.add_subcommand("veronese", "Veronese defectivity sweep with exact cross-checks");
  ver->callback([&] {
    command = "veronese";
    params = Json::object();
    action = [&] {
      const auto rep = verify_ah(rc.field(), rc.jobs);
      return Outcome{ah_json(rep), rep.all_pass() ? kExitOk : kExitFailure};
    };
  });

  std::vector<std::string> argv_store{"fatpoints"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  rc.format = json_flag ? Format::Json : format == "csv" ? Format::Csv : format == "json" ? Format::Json : Format::Table;
  try {
    rc.validate();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  ResultCache cache;
  std::string hash;
  if (!rc.cache_path.empty()) {
    cache = ResultCache(rc.cache_path);
    if (!cache.enabled()) err << "warning: " << cache.warning() << '\n';
    // Timed runs are never served from or written to the cache.
    if (!rc.timing) {
      const Json request{{"command", command}, {"params", params}, {"prime", rc.prime},
                         {"seed", rc.seed},    {"retries", rc.retries}};
      hash = request_hash(request);
      if (auto hit = cache.lookup(hash)) {
        const int code = hit->value("exit_code", kExitOk);
        hit->erase("exit_code");
        hit->erase("request_hash");
        (*hit)["cached"] = true;
        out << render(*hit, rc.format, table_columns(command));
        return code;
      }
    }
  }

  Outcome outcome;
  try {
    outcome = action();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  if (!hash.empty()) cache.store(hash, outcome.result, outcome.exit_code);
  out << render(outcome.result, rc.format, table_columns(command));
  return outcome.exit_code;
}

}  // namespace fatpoints::cli
