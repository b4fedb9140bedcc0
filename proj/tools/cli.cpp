#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "psl2/asymptotics.hpp"
#include "psl2/count_cache.hpp"
#include "psl2/enumeration.hpp"
#include "psl2/oracle.hpp"
#include "psl2/sampler.hpp"
#include "psl2/stallings.hpp"
#include "psl2/subgroup_props.hpp"
#include "psl2/words.hpp"

namespace psl2::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Well-formed flags with a size or family outside the supported range.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Malformed or missing arguments.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Family family_arg(const std::string& s) {
  auto f = parse_family(s);
  if (!f) throw InputError("unknown family '" + s + "'");
  return *f;
}

int size_arg(long long n, const std::string& flag) {
  if (n < 1 || n > 100000000) throw InputError(flag + " must be a positive size, got " + std::to_string(n));
  return static_cast<int>(n);
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw UsageError("unsupported format '" + format + "'");
}

std::string hex(const std::string& bytes) {
  std::ostringstream s;
  for (unsigned char c : bytes) s << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(c);
  return s.str();
}

json word_list(const std::vector<Word>& ws) {
  json j = json::array();
  for (const auto& w : ws) j.push_back(w.to_string());
  return j;
}

// ---------------------------------------------------------------------------------------
// Cache and counting.

struct CacheOptions {
  std::string dir;
  bool disabled = false;
};

void add_cache_options(CLI::App* app, CacheOptions& o) {
  app->add_option("--cache-dir", o.dir, "Directory for cached count tables (default: $PSL2_CACHE_DIR)");
  app->add_flag("--no-cache", o.disabled, "Neither read nor write the count cache");
}

std::optional<CountCache> open_cache(const CacheOptions& o) {
  if (o.disabled) return std::nullopt;
  if (!o.dir.empty()) return CountCache(o.dir);
  return CountCache::from_environment();
}

std::vector<BigInt> compute_counts(Family f, int n) {
  switch (f) {
    case Family::all: return count_all_univariate(n);
    case Family::finite_index: return count_finite_index(n);
    case Family::cr_free: return count_cr_free(n);
    case Family::free: return count_free(n);
    case Family::free_finite_index: return count_free_finite_index(n);
  }
  return {};
}

std::vector<BigInt> family_counts(Family f, int n, const std::optional<CountCache>& cache) {
  std::string key = "count-" + to_string(f);
  if (cache)
    if (auto v = cache->load(key, n)) return *v;
  auto v = compute_counts(f, n);
  if (cache) cache->store(key, n, v);
  return v;
}

// ---------------------------------------------------------------------------------------
// Graph input shared by analyze, member and export.

struct GraphInput {
  std::string generators;
  std::string graph_file;
};

void add_graph_input(CLI::App* app, GraphInput& in) {
  auto* g = app->add_option("--generators", in.generators, "Comma-separated generator words, e.g. \"abaB,babab\"");
  auto* f = app->add_option("--graph-file", in.graph_file, "JSON graph file (one object, an array, or one object per line)");
  g->excludes(f);
}

std::vector<StallingsGraph> parse_graph_text(const std::string& text) {
  std::vector<StallingsGraph> out;
  auto add = [&](const json& j) {
    if (j.is_array())
      for (const auto& x : j) out.push_back(from_json(x));
    else
      out.push_back(from_json(j));
  };
  try {
    add(json::parse(text));
    return out;
  } catch (const json::parse_error&) {
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) add(json::parse(line));
  return out;
}

std::vector<StallingsGraph> read_graphs(const GraphInput& in) {
  if (in.generators.empty() && in.graph_file.empty())
    throw UsageError("one of --generators or --graph-file is required");
  try {
    if (!in.graph_file.empty()) {
      std::ifstream f(in.graph_file);
      if (!f) throw UsageError("cannot read " + in.graph_file);
      std::stringstream buf;
      buf << f.rdbuf();
      auto graphs = parse_graph_text(buf.str());
      for (const auto& g : graphs)
        if (!g.root()) throw UsageError("graph in " + in.graph_file + " has no root");
      return graphs;
    }
    return {stallings_graph(parse_generators(in.generators))};
  } catch (const WordParseError& e) {
    throw UsageError(e.what());
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad graph JSON: ") + e.what());
  } catch (const GraphError& e) {
    throw UsageError(std::string("bad graph: ") + e.what());
  }
}

// ---------------------------------------------------------------------------------------
// count

struct CountOptions {
  long long max_size = 0;
  std::string family;
  std::string format = "csv";
  CacheOptions cache;
};

int cmd_count(const CountOptions& o, std::ostream& out) {
  int n = size_arg(o.max_size, "--max-size");
  check_format(o.format, {"csv", "json"});
  std::vector<Family> families(kFamilies.begin(), kFamilies.end());
  // "all" selects the whole table; any other family prints a single column.
  if (!o.family.empty() && family_arg(o.family) != Family::all) families = {family_arg(o.family)};
  auto cache = open_cache(o.cache);
  std::vector<std::vector<BigInt>> cols;
  for (Family f : families) cols.push_back(family_counts(f, n, cache));
  if (o.format == "csv") {
    out << "size";
    for (Family f : families) out << "," << to_string(f);
    out << "\n";
    for (int k = 1; k <= n; ++k) {
      out << k;
      for (const auto& c : cols) out << "," << c[k].get_str();
      out << "\n";
    }
  } else {
    json rows = json::array();
    for (int k = 1; k <= n; ++k) {
      json r{{"size", k}};
      for (std::size_t i = 0; i < families.size(); ++i) r[to_string(families[i])] = cols[i][k].get_str();
      rows.push_back(r);
    }
    out << rows.dump(1) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------------------
// Parallel sampling: worker w draws samples w, w + J, w + 2J, ... with seed ^ w.

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed, std::ostream& err) {
  if (seed) return *seed;
  std::random_device rd;
  std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  err << "seed " << s << "\n";
  return s;
}

std::vector<StallingsGraph> draw_samples(int n, Family f, long long count, std::uint64_t seed, int jobs,
                                         RejectionStats* stats) {
  SamplerTables tables(n);
  tables.prepare(f);
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::max(1LL, count))));
  std::vector<StallingsGraph> result(static_cast<std::size_t>(count));
  std::vector<RejectionStats> worker_stats(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](int w) {
    try {
      Rng rng(seed ^ static_cast<std::uint64_t>(w));
      for (long long i = w; i < count; i += jobs) result[i] = sample_subgroup(tables, n, f, rng, &worker_stats[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  if (stats)
    for (const auto& s : worker_stats) {
      stats->attempts += s.attempts;
      stats->disconnected += s.disconnected;
      stats->root_rejections += s.root_rejections;
      stats->weight_rejections += s.weight_rejections;
    }
  return result;
}

std::vector<StallingsGraph> checked_samples(int n, Family f, long long count, std::uint64_t seed, int jobs,
                                            RejectionStats* stats) {
  try {
    return draw_samples(n, f, count, seed, jobs, stats);
  } catch (const std::domain_error& e) {
    throw InputError("no " + to_string(f) + " subgroup of size " + std::to_string(n));
  }
}

// ---------------------------------------------------------------------------------------
// sample

struct SampleOptions {
  std::string family = "all";
  long long size = 0;
  long long count = 1;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  std::string output_dir;
  int jobs = 1;
};

int cmd_sample(const SampleOptions& o, std::ostream& out, std::ostream& err) {
  Family f = family_arg(o.family);
  int n = size_arg(o.size, "--size");
  check_format(o.format, {"json", "dot"});
  if (o.count < 0) throw UsageError("--count must be non-negative");
  auto seed = resolve_seed(o.seed, err);
  auto graphs = checked_samples(n, f, o.count, seed, o.jobs, nullptr);
  if (!o.output_dir.empty()) fs::create_directories(o.output_dir);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    std::string text = o.format == "json" ? to_json(graphs[i]).dump() + "\n"
                                          : to_dot(graphs[i], "G" + std::to_string(i));
    if (o.output_dir.empty()) {
      out << text;
    } else {
      auto path = fs::path(o.output_dir) / ("sample-" + std::to_string(i) + "." + o.format);
      std::ofstream(path) << text;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------------------
// analyze

json analysis(const StallingsGraph& g) {
  auto t = g.type();
  auto index = subgroup_index(g);
  auto iso = isomorphism_type(g);
  auto b = basis(g);
  json j;
  j["type"] = {t.n, t.k2, t.k3, t.l2, t.l3, t.m};
  j["index"] = index ? json(*index) : json("infinite");
  j["free"] = is_free(g);
  j["rank"] = iso.l2 + iso.l3 + iso.r;
  j["isomorphism_type"] = {iso.l2, iso.l3, iso.r};
  j["basis"] = {{"order2", word_list(b.order2)},
                {"order3", word_list(b.order3)},
                {"free", word_list([&] {
                   auto v = b.free_from_a;
                   v.insert(v.end(), b.free_from_b.begin(), b.free_from_b.end());
                   return v;
                 }())}};
  j["canonical_form"] = hex(canonical_form(g));
  return j;
}

void print_analysis(const json& j, std::ostream& out) {
  auto join = [](const json& a) {
    std::string s;
    for (const auto& w : a) s += (s.empty() ? "" : ", ") + (w.get<std::string>().empty() ? std::string("1") : w.get<std::string>());
    return s.empty() ? std::string("-") : s;
  };
  auto t = j["type"];
  out << "type (" << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << "," << t[4] << "," << t[5] << ")\n";
  out << "index " << (j["index"].is_string() ? j["index"].get<std::string>() : std::to_string(j["index"].get<long long>()))
      << "\n";
  out << "free " << (j["free"].get<bool>() ? "yes" : "no") << "\n";
  if (j["free"].get<bool>()) out << "free rank " << j["rank"] << "\n";
  auto iso = j["isomorphism_type"];
  out << "isomorphism type (" << iso[0] << "," << iso[1] << "," << iso[2] << ")\n";
  out << "basis order 2: " << join(j["basis"]["order2"]) << "\n";
  out << "basis order 3: " << join(j["basis"]["order3"]) << "\n";
  out << "basis free: " << join(j["basis"]["free"]) << "\n";
  out << "canonical " << j["canonical_form"].get<std::string>() << "\n";
}

int cmd_analyze(const GraphInput& in, const std::string& format, std::ostream& out) {
  check_format(format, {"text", "json"});
  auto graphs = read_graphs(in);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto j = analysis(graphs[i]);
    if (format == "json") {
      out << j.dump() << "\n";
    } else {
      if (i) out << "\n";
      print_analysis(j, out);
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------------------
// member

int cmd_member(const GraphInput& in, const std::vector<std::string>& words, std::ostream& out) {
  auto graphs = read_graphs(in);
  if (graphs.size() != 1) throw UsageError("member expects exactly one graph");
  for (const auto& text : words) {
    Word w;
    try {
      w = Word::parse(text);
    } catch (const WordParseError& e) {
      throw UsageError(e.what());
    }
    out << text << " " << (member(graphs[0], w) ? "true" : "false") << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------------------
// export

int cmd_export(const GraphInput& in, const std::string& format, bool core, const std::string& output,
               std::ostream& out) {
  check_format(format, {"json", "dot"});
  auto graphs = read_graphs(in);
  std::ostringstream text;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto g = core ? cyclically_reduced_core(graphs[i]) : graphs[i];
    if (format == "json")
      text << to_json(g).dump() << "\n";
    else
      text << to_dot(g, "G" + std::to_string(i));
  }
  if (output.empty()) {
    out << text.str();
  } else {
    std::ofstream f(output);
    if (!f) throw UsageError("cannot write " + output);
    f << text.str();
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------------------
// asymptotics

struct AsymptoticsOptions {
  std::string family;
  long long max_size = 0;
  long long min_size = 1;
  long long step = 1;
  std::string format = "csv";
};

void emit_table(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows,
                const std::string& format, std::ostream& out) {
  if (format == "csv") {
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << "\n";
    out << std::setprecision(12);
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) out << ",";
        if (i == 0)
          out << static_cast<long long>(r[i]);
        else
          out << r[i];
      }
      out << "\n";
    }
  } else {
    json a = json::array();
    for (const auto& r : rows) {
      json o;
      for (std::size_t i = 0; i < r.size(); ++i) o[header[i]] = i == 0 ? json(static_cast<long long>(r[i])) : json(r[i]);
      a.push_back(o);
    }
    out << a.dump(1) << "\n";
  }
}

int cmd_asymptotics(const AsymptoticsOptions& o, std::ostream& out) {
  int n_max = size_arg(o.max_size, "--max-size");
  int n_min = size_arg(o.min_size, "--min-size");
  if (o.step < 1) throw UsageError("--step must be positive");
  check_format(o.format, {"csv", "json"});
  std::vector<std::vector<double>> rows;
  auto in_range = [&](int n) { return n >= n_min && (n - n_min) % o.step == 0; };
  if (o.family == "bounds") {
    auto h = count_all_univariate(n_max);
    for (int n = 1; n <= n_max; ++n) {
      if (!in_range(n)) continue;
      auto b = h_bounds(n);
      double lh = log_big(h[n]);
      rows.push_back({double(n), lh, b.lower, b.upper, std::exp(lh - b.lower)});
    }
    emit_table({"n", "log_h", "log_lower", "log_upper", "h_over_v"}, rows, o.format, out);
    return kExitOk;
  }
  if (o.family == "probabilities") {
    for (const auto& r : probability_reports(n_max))
      if (in_range(r.n))
        rows.push_back({double(r.n), r.fi_fraction, r.fi_scale, r.free_fraction, r.free_scale, r.non_cr_free_share});
    emit_table({"n", "fi_fraction", "fi_scale", "free_fraction", "free_scale", "non_cr_free_share"}, rows, o.format,
               out);
    return kExitOk;
  }
  if (o.family == "connectivity") {
    auto m = loop_moment_tables(n_max);
    for (int n = 1; n <= n_max; ++n) {
      if (!in_range(n)) continue;
      double p = connectivity_probability(m, n).get_d();
      rows.push_back({double(n), p, (1 - p) * std::pow(n, 1.0 / 6)});
    }
    emit_table({"n", "p", "scaled_gap"}, rows, o.format, out);
    return kExitOk;
  }
  auto f = parse_asymptotic_family(o.family);
  if (!f) throw InputError("unknown asymptotic family '" + o.family + "'");
  auto exact = log_exact(*f, n_max);
  for (int n = 1; n <= n_max; ++n) {
    if (!in_range(n)) continue;
    auto a = log_asymptotic(*f, n);
    if (!a || !exact[n]) continue;
    rows.push_back({double(n), *exact[n], *a, std::exp(*exact[n] - *a)});
  }
  emit_table({"n", "log_exact", "log_asymptotic", "ratio"}, rows, o.format, out);
  return kExitOk;
}

// ---------------------------------------------------------------------------------------
// stats

struct StatsOptions {
  std::string family = "all";
  long long size = 0;
  long long samples = 100;
  std::optional<std::uint64_t> seed;
  std::string format = "text";
  int jobs = 1;
};

int cmd_stats(const StatsOptions& o, std::ostream& out, std::ostream& err) {
  Family f = family_arg(o.family);
  int n = size_arg(o.size, "--size");
  check_format(o.format, {"text", "csv", "json"});
  if (o.samples < 1) throw UsageError("--samples must be positive");
  auto seed = resolve_seed(o.seed, err);
  RejectionStats rs;
  auto graphs = checked_samples(n, f, o.samples, seed, o.jobs, &rs);
  double sum[4] = {0, 0, 0, 0}, sq[4] = {0, 0, 0, 0};
  long low = 0, high = 0;
  double root_n = std::sqrt(static_cast<double>(n));
  for (const auto& g : graphs) {
    auto t = g.type();
    double v[4] = {double(t.l2), double(t.l3), double(t.k3), double(isomorphism_type(g).r)};
    for (int i = 0; i < 4; ++i) {
      sum[i] += v[i];
      sq[i] += v[i] * v[i];
    }
    low += t.l2 <= 0.5 * root_n;
    high += t.l2 >= 1.5 * root_n;
  }
  auto e = expected_type(f, n);
  double predicted[4] = {e.l2, e.l3, e.k3, e.r};
  const char* names[4] = {"l2", "l3", "k3", "r"};
  double k = static_cast<double>(graphs.size());
  json j;
  j["family"] = to_string(f);
  j["size"] = n;
  j["samples"] = graphs.size();
  j["seed"] = seed;
  j["attempts"] = rs.attempts;
  j["acceptance_rate"] = rs.attempts ? k / rs.attempts : 1.0;
  for (int i = 0; i < 4; ++i) {
    double mean = sum[i] / k;
    double sd = std::sqrt(std::max(0.0, sq[i] / k - mean * mean));
    j["moments"][names[i]] = {{"mean", mean}, {"stddev", sd}, {"predicted", predicted[i]},
                              {"ratio", predicted[i] != 0 ? json(mean / predicted[i]) : json(nullptr)}};
  }
  j["l2_low_tail"] = low / k;
  j["l2_high_tail"] = high / k;
  if (f == Family::all || f == Family::finite_index) {
    j["l2_low_bound"] = std::exp(deviation_exponent(f, Statistic::l2, Side::lower, 0.5, n).log_bound);
    j["l2_high_bound"] = std::exp(deviation_exponent(f, Statistic::l2, Side::upper, 1.5, n).log_bound);
  }
  if (o.format == "json") {
    out << j.dump(1) << "\n";
  } else if (o.format == "csv") {
    out << "statistic,mean,stddev,predicted\n";
    for (int i = 0; i < 4; ++i) {
      const auto& m = j["moments"][names[i]];
      out << names[i] << "," << m["mean"].get<double>() << "," << m["stddev"].get<double>() << ","
          << m["predicted"].get<double>() << "\n";
    }
  } else {
    out << "family " << to_string(f) << ", size " << n << ", samples " << graphs.size() << ", seed " << seed << "\n";
    out << "acceptance rate " << j["acceptance_rate"].get<double>() << " over " << rs.attempts << " attempts\n";
    out << std::left << std::setw(6) << "stat" << std::setw(14) << "mean" << std::setw(14) << "stddev"
        << "predicted\n";
    for (int i = 0; i < 4; ++i) {
      const auto& m = j["moments"][names[i]];
      out << std::setw(6) << names[i] << std::setw(14) << m["mean"].get<double>() << std::setw(14)
          << m["stddev"].get<double>() << m["predicted"].get<double>() << "\n";
    }
    out << "P(l2 <= 0.5 sqrt n) " << j["l2_low_tail"].get<double>();
    if (j.contains("l2_low_bound")) out << "  (bound " << j["l2_low_bound"].get<double>() << ")";
    out << "\nP(l2 >= 1.5 sqrt n) " << j["l2_high_tail"].get<double>();
    if (j.contains("l2_high_bound")) out << "  (bound " << j["l2_high_bound"].get<double>() << ")";
    out << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------------------
// verify

int cmd_verify(long long max_size, const std::string& format, std::ostream& out) {
  int n_max = size_arg(max_size, "--max-size");
  if (n_max > kMaxBruteSize) throw InputError("--max-size is limited to " + std::to_string(kMaxBruteSize));
  check_format(format, {"text", "json"});
  auto g = gpr_table(n_max);
  auto m = loop_moment_tables(n_max);
  std::vector<std::vector<BigInt>> counts;
  for (Family f : kFamilies) counts.push_back(compute_counts(f, n_max));
  bool all_pass = true;
  json rows = json::array();
  for (int n = 1; n <= n_max; ++n) {
    auto b = brute_counts(n);
    bool gpr_ok = true;
    for (int l = 0; l <= 2 * n; ++l) {
      BigInt want = l < static_cast<int>(g[n].size()) ? g[n][l] : BigInt(0);
      gpr_ok = gpr_ok && BigInt(static_cast<long>(b.gpr[l])) == want;
    }
    json r{{"size", n}, {"gpr", gpr_ok}, {"rooted", BigInt(static_cast<long>(b.labelled_rooted)) == m.rooted[n]}};
    all_pass = all_pass && gpr_ok && r["rooted"].get<bool>();
    for (Family f : kFamilies) {
      bool ok = BigInt(static_cast<long>(b.count(f))) == counts[static_cast<int>(f)][n];
      r[to_string(f)] = ok;
      all_pass = all_pass && ok;
    }
    rows.push_back(r);
  }
  if (format == "json") {
    out << json{{"pass", all_pass}, {"sizes", rows}}.dump(1) << "\n";
  } else {
    std::vector<std::string> cols{"gpr", "rooted"};
    for (Family f : kFamilies) cols.push_back(to_string(f));
    out << std::left << std::setw(6) << "size";
    for (const auto& c : cols) out << std::setw(19) << c;
    out << "\n";
    for (const auto& r : rows) {
      out << std::setw(6) << r["size"].get<int>();
      for (const auto& c : cols) out << std::setw(19) << (r[c].get<bool>() ? "pass" : "FAIL");
      out << "\n";
    }
    out << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return all_pass ? kExitOk : kExitFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stallings graphs of subgroups of the modular group: counting, sampling, analysis"};
  app.name("psl2");
  app.require_subcommand(1);

  CountOptions count;
  auto* c = app.add_subcommand("count", "Exact subgroup counts by size");
  c->add_option("--max-size", count.max_size, "Largest size")->required();
  c->add_option("--family", count.family, "all (full table), fi, crfree, free or frfi");
  c->add_option("--format", count.format, "csv or json");
  add_cache_options(c, count.cache);

  SampleOptions sample;
  auto* s = app.add_subcommand("sample", "Uniform random subgroups of a given size");
  s->add_option("--family", sample.family, "all, fi, crfree, free or frfi");
  s->add_option("--size", sample.size, "Size (number of vertices)")->required();
  s->add_option("--count", sample.count, "Number of samples");
  s->add_option("--seed", sample.seed, "Random seed (printed to stderr when omitted)");
  s->add_option("--format", sample.format, "json (one graph per line) or dot");
  s->add_option("--output-dir", sample.output_dir, "Write one file per graph into this directory");
  s->add_option("--jobs", sample.jobs, "Worker threads; worker w uses seed xor w");

  GraphInput analyze_in;
  std::string analyze_format = "text";
  auto* a = app.add_subcommand("analyze", "Type, index, freeness, isomorphism type and basis");
  add_graph_input(a, analyze_in);
  a->add_option("--format", analyze_format, "text or json");

  GraphInput member_in;
  std::vector<std::string> member_words;
  auto* mb = app.add_subcommand("member", "Membership of words in a subgroup");
  add_graph_input(mb, member_in);
  mb->add_option("--word", member_words, "Word to test (repeatable)")->required();

  AsymptoticsOptions asym;
  auto* as = app.add_subcommand("asymptotics", "Exact values against asymptotic equivalents (natural logs)");
  as->add_option("--family", asym.family,
                 "t2, t3, t3_fi, t2_0, t3_0, g_tilde, g, h_fi, g0_tilde, g0, h_fr_fi, bounds, probabilities or "
                 "connectivity")
      ->required();
  as->add_option("--max-size", asym.max_size, "Largest size")->required();
  as->add_option("--min-size", asym.min_size, "Smallest size");
  as->add_option("--step", asym.step, "Row spacing");
  as->add_option("--format", asym.format, "csv or json");

  StatsOptions stats;
  auto* st = app.add_subcommand("stats", "Monte Carlo moments against predicted values");
  st->add_option("--family", stats.family, "all, fi, crfree, free or frfi");
  st->add_option("--size", stats.size, "Size")->required();
  st->add_option("--samples", stats.samples, "Number of samples");
  st->add_option("--seed", stats.seed, "Random seed (printed to stderr when omitted)");
  st->add_option("--format", stats.format, "text, csv or json");
  st->add_option("--jobs", stats.jobs, "Worker threads; worker w uses seed xor w");

  bool oracle = false;
  long long verify_max = 7;
  std::string verify_format = "text";
  auto* v = app.add_subcommand("verify", "Cross-check counts against exhaustive enumeration");
  v->add_flag("--oracle", oracle, "Use the brute force oracle")->required();
  v->add_option("--max-size", verify_max, "Largest size (at most 8)");
  v->add_option("--format", verify_format, "text or json");

  GraphInput export_in;
  std::string export_format = "json", export_output;
  bool export_core = false;
  auto* ex = app.add_subcommand("export", "Write the Stallings graph as JSON or DOT");
  add_graph_input(ex, export_in);
  ex->add_option("--format", export_format, "json or dot");
  ex->add_flag("--core", export_core, "Export the cyclically reduced core instead");
  ex->add_option("--output", export_output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c->parsed()) return cmd_count(count, out);
    if (s->parsed()) return cmd_sample(sample, out, err);
    if (a->parsed()) return cmd_analyze(analyze_in, analyze_format, out);
    if (mb->parsed()) return cmd_member(member_in, member_words, out);
    if (as->parsed()) return cmd_asymptotics(asym, out);
    if (st->parsed()) return cmd_stats(stats, out, err);
    if (v->parsed()) return cmd_verify(verify_max, verify_format, out);
    if (ex->parsed()) return cmd_export(export_in, export_format, export_core, export_output, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace psl2::cli
