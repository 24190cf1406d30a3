// command-line surface: invariants, family, sweep, verify-table, obstruct,
// extend.  exit codes: 0 ok, 2 parse error, 3 resource limit, 4 internal.
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "rbg/errors.hpp"
#include "rbg/families.hpp"
#include "rbg/goeritz.hpp"
#include "rbg/invariants.hpp"
#include "rbg/lee.hpp"
#include "rbg/obstruct.hpp"
#include "rbg/table.hpp"

using json = nlohmann::ordered_json;
using namespace rbg;

static const char* kSchemaVersion = "rbg-sweep-v1";

namespace {

struct Globals {
  std::string cache_path;
  int workers = 1;
  size_t limit = 10000000;
  bool as_json = false;
  std::optional<InvariantCache> cache;

  InvariantCache* cache_ptr() {
    if (!cache_path.empty() && !cache) cache.emplace(cache_path);
    return cache ? &*cache : nullptr;
  }
};

PlanarDiagram parse_input(const std::string& arg) {
  std::string text = arg;
  if (std::ifstream f{arg}) {
    std::ostringstream os;
    os << f.rdbuf();
    text = os.str();
  }
  return text.find('X') != std::string::npos ? parse_pd(text) : parse_dt(text);
}

InvariantRecord record_with_limit(const PlanarDiagram& d, Globals& g) {
  if (g.cache_ptr()) {
    if (auto hit = g.cache_ptr()->lookup(pd_digest(d))) return *hit;
  }
  // recompute through the limited entry points, then cache
  ScanOptions opt;
  opt.limit = g.limit;
  InvariantRecord r;
  r.knot_hash = pd_digest(d);
  r.crossing_count = static_cast<int>(d.crossing_count());
  r.jones = jones_t(d);
  r.s = rasmussen_s(d, opt);
  r.signature = signature(d);
  r.determinant = determinant_goeritz(d);
  if (g.cache_ptr()) g.cache_ptr()->store(r);
  return r;
}

json record_json(const InvariantRecord& r) {
  return json{{"hash", r.knot_hash},
              {"s", r.s},
              {"signature", r.signature},
              {"det", r.determinant},
              {"crossings", r.crossing_count},
              {"jones", jones_encode(r.jones)}};
}

json report_json(const CandidateReport& rep) {
  return json{{"k", rep.k},
              {"b_exceeds", rep.b_exceeds},
              {"g_exceeds", rep.g_exceeds},
              {"killed_by_prop_r1", rep.killed_by_prop_r1},
              {"k_useful", rep.k_useful},
              {"classification", to_string(rep.classification)},
              {"narrative", rep.narrative}};
}

json bound_json(const SlicenessBound& b) {
  return json{{"a", b.value.a}, {"b", b.value.b}, {"c", b.value.c}};
}

void print_record(const InvariantRecord& r, bool as_json) {
  if (as_json) {
    std::cout << record_json(r).dump() << "\n";
    return;
  }
  std::cout << "hash       " << r.knot_hash << "\n"
            << "crossings  " << r.crossing_count << "\n"
            << "s          " << r.s << "\n"
            << "signature  " << r.signature << "\n"
            << "det        " << r.determinant << "\n"
            << "jones      " << r.jones.str("t") << "\n";
}

// ---- family / sweep ---------------------------------------------------

FamilyParams make_params(FamilyId f, const std::vector<int>& twists,
                         long long r) {
  FamilyParams p;
  p.family = f;
  p.twists = twists;
  p.r = Framing{r, 1};
  return p;
}

int cmd_family(const std::string& name, const std::vector<int>& twists,
               long long r, Globals& g) {
  auto inst = build_instance(make_params(family_from_name(name), twists, r));
  auto [kb, kg] = derive_knots(inst);
  auto m = linking_matrix(inst);
  if (g.as_json) {
    json j{{"family", name},
           {"params", {{"twists", twists}, {"r", r}}},
           {"n", inst.n},
           {"l", inst.l},
           {"linking_matrix", m},
           {"kb_pd", serialize_pd(kb.diagram)},
           {"kg_pd", serialize_pd(kg.diagram)}};
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "n = " << inst.n << ", l = " << inst.l << "\n";
  std::cout << "linking matrix (R,B,G):\n";
  for (auto& row : m) {
    for (auto v : row) std::cout << "  " << v;
    std::cout << "\n";
  }
  std::cout << "K_B (" << kb.diagram.crossing_count()
            << " crossings): " << serialize_pd(kb.diagram) << "\n";
  std::cout << "K_G (" << kg.diagram.crossing_count()
            << " crossings): " << serialize_pd(kg.diagram) << "\n";
  if (jones_t(kb.diagram) == jones_t(parse_dt("4 6 8 2")))
    std::cout << "note: K_B has the figure-eight Jones polynomial\n";
  return 0;
}

struct SweepTuple {
  std::vector<int> twists;
  long long r = 0;
};

std::string tuple_key(const std::string& family, const SweepTuple& t) {
  std::ostringstream os;
  os << family;
  for (int x : t.twists) os << " " << x;
  os << " ; " << t.r;
  return os.str();
}

int cmd_sweep(const std::string& name,
              const std::vector<std::pair<int, int>>& ranges,
              std::pair<int, int> r_range, const std::string& out_path,
              bool positive_n, Globals& g) {
  FamilyId fam = family_from_name(name);
  if (static_cast<int>(ranges.size()) != family_arity(fam))
    throw TwistArityMismatch(name + " sweep needs " +
                             std::to_string(family_arity(fam)) + " ranges");
  for (auto& [lo, hi] : ranges)
    if (lo > hi) throw std::runtime_error("empty twist range");
  if (r_range.first > r_range.second)
    throw std::runtime_error("empty r range");

  // lexicographic enumeration
  std::vector<SweepTuple> tuples;
  std::vector<int> cur(ranges.size());
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == ranges.size()) {
      for (long long r = r_range.first; r <= r_range.second; ++r)
        tuples.push_back({cur, r});
      return;
    }
    for (cur[i] = ranges[i].first; cur[i] <= ranges[i].second; ++cur[i])
      rec(i + 1);
  };
  rec(0);
  std::cout << "sweep " << name << ": " << tuples.size() << " instances\n";

  // resume: skip tuples already present with the current schema
  std::set<std::string> done;
  if (std::ifstream in{out_path}) {
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto j = json::parse(line, nullptr, false);
      if (j.is_discarded() || j.value("schema_version", "") != kSchemaVersion)
        continue;
      SweepTuple t;
      t.twists = j["params"]["twists"].get<std::vector<int>>();
      t.r = j["params"]["r"].get<long long>();
      done.insert(tuple_key(name, t));
    }
  }

  struct Slot {
    bool skipped = false;
    std::string line;
    const char* classification = nullptr;
  };
  std::vector<Slot> results(tuples.size());
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t i = next++; i < tuples.size(); i = next++) {
      const auto& t = tuples[i];
      if (done.count(tuple_key(name, t))) {
        results[i].skipped = true;
        continue;
      }
      json j{{"schema_version", kSchemaVersion},
             {"family", name},
             {"params", {{"twists", t.twists}, {"r", t.r}}}};
      try {
        auto inst = build_instance(make_params(fam, t.twists, t.r));
        if (fam != FamilyId::PECULIAR && inst.n != special_n(t.r, inst.l))
          throw std::logic_error("n drifted from l(rl-2)");
        j["n"] = inst.n;
        j["l"] = inst.l;
        if (positive_n && inst.n <= 0) {
          results[i].skipped = true;
          continue;
        }
        auto [kb, kg] = derive_knots(inst);
        using clock = std::chrono::steady_clock;
        auto t0 = clock::now();
        auto rb = record_with_limit(kb.diagram, g);
        auto t1 = clock::now();
        auto rg = record_with_limit(kg.diagram, g);
        auto t2 = clock::now();
        j["kb"] = record_json(rb);
        j["kg"] = record_json(rg);
        if (inst.n >= 1) {
          auto rep = classify_candidate(rb.s, rg.s, inst.n, inst.l, t.r);
          j["report"] = report_json(rep);
          results[i].classification = to_string(rep.classification);
        } else {
          j["report"] = nullptr;
        }
        auto ms = [](auto a, auto b) {
          return std::chrono::duration_cast<std::chrono::milliseconds>(b - a)
              .count();
        };
        j["timings"] = {{"kb_ms", ms(t0, t1)}, {"kg_ms", ms(t1, t2)}};
      } catch (const std::exception& e) {
        j["error"] = e.what();
      }
      results[i].line = j.dump();
    }
  };
  std::vector<std::thread> pool;
  int nw = std::max(1, g.workers);
  for (int w = 0; w < nw; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();

  // single writer, deterministic order
  std::ofstream out(out_path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open " + out_path);
  size_t written = 0, interesting = 0;
  for (size_t i = 0; i < results.size(); ++i) {
    if (results[i].skipped || results[i].line.empty()) continue;
    out << results[i].line << "\n";
    ++written;
    const char* cls = results[i].classification;
    if (cls && std::string(cls) != "uninformative") {
      ++interesting;
      std::cout << cls << ": " << tuple_key(name, tuples[i]) << "\n";
    }
  }
  std::cout << written << " records written, " << interesting
            << " candidate rows\n";
  return 0;
}

int cmd_verify_table(Globals& g) {
  ScanOptions opt;
  opt.limit = g.limit;
  auto table = load_table();
  auto checks = verify_table(table, opt);
  int failures = 0;
  for (const auto& c : checks) {
    if (g.as_json) {
      std::cout << json{{"name", c.name},
                        {"pass", c.pass},
                        {"chirality", c.chirality == Chirality::as_recorded
                                          ? "as_recorded"
                                          : c.chirality == Chirality::mirrored
                                                ? "mirrored"
                                                : "mismatch"},
                        {"detail", c.detail}}
                       .dump()
                << "\n";
    } else {
      std::cout << c.name << ": "
                << (c.pass ? (c.chirality == Chirality::mirrored
                                  ? "ok (mirrored)"
                                  : "ok (as recorded)")
                           : "FAIL " + c.detail)
                << "\n";
    }
    failures += !c.pass;
  }
  if (!g.as_json)
    std::cout << checks.size() - failures << "/" << checks.size()
              << " entries verified\n";
  return 0;
}

int cmd_obstruct(long long s, long long k, Globals& g) {
  auto v = not_kslice(s, k);
  if (g.as_json) {
    std::cout << json{{"s", s},
                      {"k", k},
                      {"bound", bound_json(v.bound)},
                      {"obstructed", v.obstructed},
                      {"narrative", v.narrative}}
                     .dump()
              << "\n";
  } else {
    std::cout << v.narrative << "\n";
  }
  return 0;
}

int cmd_extend(long long n, Globals& g) {
  auto rep = meridian_extendability(n);
  if (g.as_json) {
    std::cout << json{{"n", rep.n},
                      {"units", rep.units},
                      {"extends_always", rep.extends_always}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << "units mod " << rep.n << ": {";
  bool first = true;
  for (auto u : rep.units) std::cout << (first ? "" : ",") << u, first = false;
  std::cout << "}; "
            << (rep.extends_always ? "extends across every homeomorphism"
                                   : "extendability not guaranteed")
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RBG surgery toolkit"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--cache", g.cache_path, "invariant cache file");
  app.add_option("--workers", g.workers, "worker threads for sweeps");
  app.add_option("--limit", g.limit, "live-generator ceiling for scans");
  app.add_flag("--json", g.as_json, "machine-readable output");

  std::string input, fam_name, out_path = "sweep.jsonl";
  std::vector<int> twists;
  long long r = 0, oby_s = 0, oby_k = 1, ext_n = 1;
  std::vector<std::pair<int, int>> ranges(4, {0, 0});
  std::vector<bool> have_range(4, false);
  std::pair<int, int> r_range{0, 0};
  bool positive_n = false;

  auto* inv = app.add_subcommand("invariants", "invariants of one diagram");
  inv->add_option("input", input, "PD/DT text or file")->required();

  auto* fm = app.add_subcommand("family", "instantiate one RBG family member");
  fm->add_option("family", fam_name, "egm|fourbox|abc|peculiar")->required();
  fm->add_option("twists", twists, "twist-box parameters");
  fm->add_option("--r", r, "red framing");

  auto* sw = app.add_subcommand("sweep", "sweep a parameter box to JSONL");
  sw->add_option("family", fam_name)->required();
  static const char* box_names[4] = {"--a", "--b", "--c", "--d"};
  for (int i = 0; i < 4; ++i)
    sw->add_option(
        box_names[i],
        [&ranges, &have_range, i](const std::vector<std::string>& v) {
          ranges[i] = {std::stoi(v[0]), std::stoi(v[1])};
          have_range[i] = true;
          return true;
        },
        "twist range lo hi")
        ->expected(2);
  sw->add_option(
        "--m",
        [&ranges, &have_range](const std::vector<std::string>& v) {
          ranges[0] = {std::stoi(v[0]), std::stoi(v[1])};
          have_range[0] = true;
          return true;
        },
        "egm twist range lo hi")
      ->expected(2);
  sw->add_option(
        "--r",
        [&r_range](const std::vector<std::string>& v) {
          r_range = {std::stoi(v[0]), std::stoi(v[1])};
          return true;
        },
        "red framing range lo hi")
      ->expected(2);
  sw->add_option("-o,--out", out_path, "output JSONL path");
  sw->add_flag("--positive-n", positive_n, "only keep instances with n > 0");

  app.add_subcommand("verify-table", "check bundled knot-table entries");

  auto* ob = app.add_subcommand("obstruct", "k-sliceness verdict from s");
  ob->add_option("--s", oby_s, "s-invariant")->required();
  ob->add_option("--k", oby_k, "k")->required();

  auto* ex = app.add_subcommand("extend", "meridian extendability mod n");
  ex->add_option("--n", ext_n, "surgery coefficient")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (inv->parsed()) {
      print_record(record_with_limit(parse_input(input), g), g.as_json);
      return 0;
    }
    if (fm->parsed()) return cmd_family(fam_name, twists, r, g);
    if (sw->parsed()) {
      int arity = family_arity(family_from_name(fam_name));
      std::vector<std::pair<int, int>> rs;
      for (int i = 0; i < arity; ++i) {
        if (!have_range[i])
          throw std::runtime_error("missing twist range for slot " +
                                   std::to_string(i));
        rs.push_back(ranges[i]);
      }
      return cmd_sweep(fam_name, rs, r_range, out_path, positive_n, g);
    }
    if (app.get_subcommand("verify-table")->parsed())
      return cmd_verify_table(g);
    if (ob->parsed()) return cmd_obstruct(oby_s, oby_k, g);
    if (ex->parsed()) return cmd_extend(ext_n, g);
  } catch (const ResourceLimit& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    std::cerr << "internal: " << e.what() << "\n";
    return 4;
  } catch (const std::runtime_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
