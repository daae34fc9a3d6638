// Copyright 2026 The graphcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "graphcode/double_prime.hpp"
#include "graphcode/extreme.hpp"
#include "graphcode/families.hpp"
#include "graphcode/io.hpp"
#include "graphcode/triple_qary.hpp"

namespace graphcode::cli {

namespace {

using io::Json;

struct Options {
  std::string family;
  std::size_t n = 0;
  std::uint32_t q = 0;  // 0: family default
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::uint64_t generator_seed = 0;
  std::string format = "text";
  unsigned jobs = 1;
  std::size_t trials = 1;
  std::size_t bench_runs = 20;
  std::size_t rho = 0;  // 0: family design value
  std::string input;
  std::string output;
  std::string info;
  bool random_info = false;
  std::string provenance;
  std::string fail;
  std::vector<std::string> suites;
  std::uint64_t samples = 100000;
  std::string op = "both";
};

// Error raised for argument-level problems found after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Context {
 public:
  Context(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  int info();
  int encode();
  int erase();
  int decode();
  int verify();
  int bench();

 private:
  Family family() const { return parse_family(o_.family); }
  bool json() const { return o_.format == "json"; }

  std::uint64_t seed() const {
    if (o_.seed_given) return o_.seed;
    if (const char* env = std::getenv("GRAPHCODE_SEED")) {
      try {
        return std::stoull(env);
      } catch (const std::exception&) {
        throw UsageError("GRAPHCODE_SEED must be an unsigned integer");
      }
    }
    return 0;
  }

  GraphCodeSpec spec_for(std::size_t n, std::uint32_t q) const {
    FamilyParams p;
    p.family = family();
    p.n = n;
    if (q != 0) p.q = q;
    p.generator_seed = o_.generator_seed;
    return make_family_spec(p);
  }
  GraphCodeSpec spec() const {
    if (o_.n == 0) throw UsageError("--n is required");
    return spec_for(o_.n, o_.q);
  }
  std::size_t rho(const GraphCodeSpec& s) const {
    return o_.rho ? o_.rho : design_failures(s.family, s.n);
  }

  std::string read_input(const std::string& path) const {
    if (path.empty()) throw UsageError("an input file is required");
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), {}};
  }
  void write_output(const std::string& path, const std::string& text) const {
    if (path.empty() || path == "-") {
      out_ << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
  }
  std::string render(const LabeledGraph& g) const {
    return json() ? io::graph_to_json(g).dump(2) + "\n" : io::write_graph(g);
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

std::string fmt_double(double v) {
  std::ostringstream s;
  s << std::setprecision(6) << v;
  return s.str();
}

// ---------------------------------------------------------------------------

int Context::info() {
  const GraphCodeSpec s = spec();
  const std::size_t r = rho(s);
  const CodeMetrics m = code_metrics(s, r);
  const std::size_t n = s.n;
  const std::size_t array_r = (n % 2 == 1 ? n : n + 1) * r;
  const std::size_t criss_r = 2 * r * n - binomial(2 * r, 2);
  const std::size_t mds_q = edge_count(n) - 1;

  if (json()) {
    Json j;
    j["family"] = std::string(family_name(s.family));
    j["n"] = n;
    j["q"] = s.field->order();
    j["field"] = s.field->to_string();
    j["rho"] = r;
    j["k_G"] = m.dimension;
    j["r_G"] = m.redundancy;
    j["rate"] = {{"numerator", m.rate_numerator}, {"denominator", m.rate_denominator},
                 {"value", m.rate}};
    j["bound"] = m.optimal_bound;
    j["gap"] = m.optimality_gap;
    Json points = Json::array();
    for (FieldElement p : s.points) points.push_back(p.value);
    j["points"] = points;
    if (s.family == Family::kExtreme) {
      j["generator"] = extreme::to_text(extreme::generator_of(s));
      j["generator_matrices"] = extreme::count_formula(n, s.field->order()).str();
      j["distinct_codes"] = extreme::count_codes(n, s.field->order()).str();
    }
    j["comparison"] = Json::array({
        {{"code", "symmetric_array"}, {"r_G", array_r}, {"q_min", 2}},
        {{"code", "crisscross_array"}, {"r_G", criss_r}, {"q_min", n - 1}},
        {{"code", "mds"}, {"r_G", m.optimal_bound}, {"q_min", mds_q}},
    });
    out_ << j.dump(2) << "\n";
    return kExitOk;
  }
  auto row = [&](const std::string& k, const std::string& v) {
    out_ << std::left << std::setw(8) << k << v << "\n";
  };
  row("family", std::string(family_name(s.family)));
  row("n", std::to_string(n));
  row("q", std::to_string(s.field->order()));
  row("field", s.field->to_string());
  row("rho", std::to_string(r));
  row("k_G", std::to_string(m.dimension));
  row("r_G", std::to_string(m.redundancy));
  row("rate", std::to_string(m.rate_numerator) + "/" + std::to_string(m.rate_denominator) + " (" +
                  fmt_double(m.rate) + ")");
  row("bound", std::to_string(m.optimal_bound));
  row("gap", std::to_string(m.optimality_gap));
  if (s.family == Family::kExtreme) {
    row("G-count", extreme::count_formula(n, s.field->order()).str() + " generator matrices, " +
                       extreme::count_codes(n, s.field->order()).str() + " codes");
  }
  out_ << "alternatives at rho=" << r << ":\n";
  out_ << "  symmetric array code   r_G=" << array_r << "  q>=2\n";
  out_ << "  crisscross array code  r_G=" << criss_r << "  q>=" << n - 1 << "\n";
  out_ << "  MDS code               r_G=" << m.optimal_bound << "  q>=" << mds_q << "\n";
  return kExitOk;
}

int Context::encode() {
  const GraphCodeSpec s = spec();
  InfoMap info;
  if (!o_.info.empty()) {
    const std::string text = read_input(o_.info);
    if (s.family == Family::kExtreme) {
      const auto symbols = io::read_symbols(text, *s.field);
      if (symbols.size() != 3) {
        throw GraphCodeError(ErrorCode::kShapeMismatch, "the extreme code takes 3 message symbols");
      }
      for (std::size_t k = 0; k < 3; ++k) info.emplace(edge_unindex(k), symbols[k]);
    } else {
      info = io::read_info(text, *s.field, s.info_nodes);
    }
  } else if (o_.random_info) {
    std::mt19937_64 rng(mix_seed(seed(), 0x656e636f6465ULL));
    info = random_info(s, rng);
  } else {
    throw UsageError("encode needs --info <file> or --random");
  }
  write_output(o_.output, render(family_encode(s, info)));
  return kExitOk;
}

int Context::erase() {
  LabeledGraph g = io::read_graph(read_input(o_.input));
  std::vector<NodeId> failed;
  std::string_view list = o_.fail;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const std::string tok(list.substr(0, comma));
    list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    if (tok.empty()) continue;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size() || tok.front() == '-') throw UsageError("bad node index '" + tok + "'");
    if (v >= g.node_count()) {
      throw GraphCodeError(ErrorCode::kOutOfRange, "node " + tok + " outside [0, " +
                                                       std::to_string(g.node_count()) + ")");
    }
    failed.push_back(static_cast<NodeId>(v));
  }
  write_output(o_.output, render(apply_erasure(g, make_node_set(failed))));
  return kExitOk;
}

int Context::decode() {
  const LabeledGraph g = io::read_graph(read_input(o_.input));
  if (o_.n != 0 && o_.n != g.node_count()) throw UsageError("--n differs from the graph file");
  if (o_.q != 0 && o_.q != g.field()->order()) throw UsageError("--q differs from the graph file");
  const GraphCodeSpec s = spec_for(g.node_count(), g.field()->order());
  if (!same_field(s.field, g.field())) {
    throw GraphCodeError(ErrorCode::kFieldMismatch, "graph field " + g.field()->to_string() +
                                                        " differs from the code's " +
                                                        s.field->to_string());
  }
  const DecodeReport rep = family_decoder(s.family)(s, g);
  const Json prov = io::provenance_to_json(rep.provenance);
  if (!o_.provenance.empty()) {
    std::ofstream f(o_.provenance, std::ios::binary);
    if (!f) throw UsageError("cannot write " + o_.provenance);
    f << prov.dump(2) << "\n";
  }
  if (json()) {
    Json j{{"status", std::string(decode_status_name(rep.status))},
           {"reason", rep.reason},
           {"provenance", prov}};
    if (rep.ok()) j["graph"] = io::graph_to_json(rep.recovered);
    write_output(o_.output, j.dump(2) + "\n");
  } else if (rep.ok()) {
    write_output(o_.output, io::write_graph(rep.recovered));
  }
  if (rep.ok()) return kExitOk;
  err_ << "decode failed: " << decode_status_name(rep.status) << ": " << rep.reason << "\n";
  return rep.status == DecodeStatus::kUnderdetermined ? kExitUnderdetermined : kExitInconsistent;
}

int Context::verify() {
  const GraphCodeSpec s = spec();
  const std::size_t r = rho(s);
  if (r > s.n) throw UsageError("--rho exceeds n");
  VerifyOptions vo;
  vo.trials = o_.trials;
  vo.seed = seed();
  vo.jobs = o_.jobs;
  vo.decoder = family_decoder(s.family);
  const VerifyReport report = verify_exhaustive(s, r, vo);

  std::vector<SuiteResult> suites;
  Json counting;
  auto need = [&](Family f, const std::string& suite) {
    if (s.family != f) {
      throw UsageError("suite " + suite + " applies to the " + std::string(family_name(f)) +
                       " family");
    }
  };
  for (const std::string& name : o_.suites) {
    if (name == "claims1-2") {
      need(Family::kDoublePrime, name);
      suites.push_back(double_prime::check_set_identities(s.n));
      suites.push_back(double_prime::check_schedule_invariants(s.n));
    } else if (name == "schedule") {
      need(Family::kDoublePrime, name);
      suites.push_back(double_prime::check_decode_trace(s.n, vo.seed));
    } else if (name == "claims3-4") {
      need(Family::kTripleQary, name);
      suites.push_back(triple_qary::check_cross_independence(triple_qary::build_params(s.n, s.field)));
      suites.push_back(triple_qary::check_neighborhood_overlap(s.n));
    } else if (name == "counting") {
      need(Family::kExtreme, name);
      const std::uint32_t q = s.field->order();
      const extreme::BigInt formula = extreme::count_formula(s.n, q);
      const extreme::BigInt total =
          boost::multiprecision::pow(extreme::BigInt(q), static_cast<unsigned>(3 * edge_count(s.n)));
      SuiteResult c;
      c.name = "counting(n=" + std::to_string(s.n) + ",q=" + std::to_string(q) + ")";
      counting = {{"formula", formula.str()},
                  {"distinct_codes", extreme::count_codes(s.n, q).str()},
                  {"candidates", total.str()}};
      if (total <= extreme::kExhaustiveLimit) {
        const std::uint64_t found = extreme::count_exhaustive(s.n, s.field, o_.jobs);
        counting["mode"] = "exhaustive";
        counting["count"] = found;
        c.record(extreme::BigInt(found) == formula, "exhaustive count " + std::to_string(found) +
                                                        " vs formula " + formula.str());
      } else {
        const auto est = extreme::count_montecarlo(s.n, s.field, o_.samples, vo.seed, o_.jobs);
        const double ratio = std::exp(std::log(formula.convert_to<double>()) -
                                      std::log(total.convert_to<double>()));
        counting["mode"] = "montecarlo";
        counting["samples"] = est.samples;
        counting["accepted"] = est.accepted;
        counting["rate"] = est.rate;
        counting["std_error"] = est.std_error;
        counting["formula_rate"] = ratio;
        c.record(std::abs(est.rate - ratio) <= 4 * est.std_error,
                 "rate " + fmt_double(est.rate) + " vs " + fmt_double(ratio));
      }
      suites.push_back(c);
    } else {
      throw UsageError("unknown suite '" + name + "'");
    }
  }

  bool ok = report.all_ok();
  for (const auto& su : suites) ok = ok && su.passed();
  if (json()) {
    Json j{{"report", io::report_to_json(report)}, {"suites", Json::array()}, {"ok", ok}};
    for (const auto& su : suites) j["suites"].push_back(io::suite_to_json(su));
    if (!counting.is_null()) j["counting"] = counting;
    out_ << j.dump(2) << "\n";
  } else {
    out_ << "family " << family_name(s.family) << " n=" << s.n << " q=" << s.field->order()
         << " rho=" << r << " trials=" << vo.trials << "\n";
    out_ << "patterns " << report.patterns_ok << "/" << report.patterns_total << " ok\n";
    for (const auto& f : report.failures) {
      out_ << "  failed {";
      for (std::size_t k = 0; k < f.failed_nodes.size(); ++k) {
        out_ << (k ? "," : "") << f.failed_nodes[k];
      }
      out_ << "}: " << f.reason << "\n";
    }
    for (const auto& su : suites) {
      out_ << "suite " << su.name << ": " << su.checks << " checks, " << su.violations
           << " violations\n";
      for (const auto& ex : su.examples) out_ << "  " << ex << "\n";
    }
    if (!counting.is_null()) {
      out_ << "count formula=" << counting["formula"].get<std::string>()
           << " distinct_codes=" << counting["distinct_codes"].get<std::string>();
      if (counting["mode"] == "exhaustive") {
        out_ << " exhaustive=" << counting["count"].get<std::uint64_t>();
      } else {
        out_ << " rate=" << fmt_double(counting["rate"].get<double>()) << "+-"
             << fmt_double(counting["std_error"].get<double>())
             << " formula_rate=" << fmt_double(counting["formula_rate"].get<double>());
      }
      out_ << "\n";
    }
    out_ << "result " << (ok ? "ok" : "FAILED") << "\n";
  }
  return ok ? kExitOk : kExitUsage;
}

int Context::bench() {
  const GraphCodeSpec s = spec();
  const std::size_t r = rho(s);
  const Decoder decoder = family_decoder(s.family);
  const std::size_t runs = std::max<std::size_t>(o_.bench_runs, 1);
  std::vector<double> enc_us, dec_us;
  using Clock = std::chrono::steady_clock;
  for (std::size_t t = 0; t < runs; ++t) {
    std::mt19937_64 rng(mix_seed(seed(), t));
    const InfoMap info = random_info(s, rng);
    const auto t0 = Clock::now();
    const LabeledGraph g = family_encode(s, info);
    const auto t1 = Clock::now();
    std::vector<NodeId> nodes(s.n);
    std::iota(nodes.begin(), nodes.end(), NodeId{0});
    std::shuffle(nodes.begin(), nodes.end(), rng);
    nodes.resize(r);
    const LabeledGraph erased = apply_erasure(g, make_node_set(nodes));
    const auto t2 = Clock::now();
    const DecodeReport rep = decoder(s, erased);
    const auto t3 = Clock::now();
    if (!rep.ok() || !(rep.recovered == g)) {
      err_ << "bench: decode failed on run " << t << ": " << rep.reason << "\n";
      return kExitInconsistent;
    }
    enc_us.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
    dec_us.push_back(std::chrono::duration<double, std::micro>(t3 - t2).count());
  }
  auto emit = [&](const char* op, std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const double median = v.size() % 2 ? v[v.size() / 2] : (v[v.size() / 2 - 1] + v[v.size() / 2]) / 2;
    const std::size_t rank95 = static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(v.size())));
    const double p95 = v[std::max<std::size_t>(rank95, 1) - 1];
    const Json j{{"family", std::string(family_name(s.family))},
                 {"n", s.n},
                 {"q", s.field->order()},
                 {"op", op},
                 {"median_us", median},
                 {"p95_us", p95}};
    if (json()) {
      out_ << j.dump() << "\n";
    } else {
      out_ << op << " " << family_name(s.family) << " n=" << s.n << " q=" << s.field->order()
           << " median_us=" << fmt_double(median) << " p95_us=" << fmt_double(p95) << "\n";
    }
  };
  if (o_.op == "encode" || o_.op == "both") emit("encode", enc_us);
  if (o_.op == "decode" || o_.op == "both") emit("decode", dec_us);
  return kExitOk;
}

void add_code_options(CLI::App* sub, Options& o, bool n_required) {
  sub->add_option("--family", o.family, "single | double | triple | extreme")
      ->required()
      ->check(CLI::IsMember({"single", "double", "triple", "extreme"}));
  auto* n = sub->add_option("--n", o.n, "number of nodes")->check(CLI::Range(3, 10000));
  if (n_required) n->required();
  sub->add_option("--q", o.q, "field order (default: chosen per family)");
  sub->add_option("--generator-seed", o.generator_seed,
                  "seed of the extreme-code generator construction");
  sub->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
}

void add_seed(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "random seed (default: $GRAPHCODE_SEED or 0)")
      ->each([&o](const std::string&) { o.seed_given = true; });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Erasure codes over complete graphs with self loops", "graphcode"};
  app.require_subcommand(1);
  Options o;

  auto* info = app.add_subcommand("info", "code parameters and comparison rows");
  add_code_options(info, o, true);
  info->add_option("--rho", o.rho, "number of node failures (default: design value)");

  auto* encode = app.add_subcommand("encode", "encode information symbols into a graph file");
  add_code_options(encode, o, true);
  add_seed(encode, o);
  encode->add_option("--info", o.info, "information file (JSON map or triangular text)");
  encode->add_flag("--random", o.random_info, "draw the information symbols from --seed");
  encode->add_option("-o,--output", o.output, "output graph file (default: stdout)");

  auto* erase = app.add_subcommand("erase", "erase the neighborhoods of failed nodes");
  erase->add_option("-i,--input", o.input, "graph file ('-' for stdin)")->required();
  erase->add_option("--fail", o.fail, "comma separated failed nodes");
  erase->add_option("-o,--output", o.output, "output graph file (default: stdout)");
  erase->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* decode = app.add_subcommand("decode", "recover erased edges");
  add_code_options(decode, o, false);
  decode->add_option("-i,--input", o.input, "graph file ('-' for stdin)")->required();
  decode->add_option("-o,--output", o.output, "recovered graph file (default: stdout)");
  decode->add_option("--provenance", o.provenance, "write the recovery log as JSON");

  auto* verify = app.add_subcommand("verify", "exhaustive failure-pattern campaign");
  add_code_options(verify, o, true);
  add_seed(verify, o);
  verify->add_option("--rho", o.rho, "number of node failures (default: design value)");
  verify->add_option("--trials", o.trials, "random codewords per pattern")->check(CLI::PositiveNumber);
  verify->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--suite", o.suites, "claims1-2 | claims3-4 | schedule | counting");
  verify->add_option("--samples", o.samples, "Monte Carlo samples for the counting suite");

  auto* bench = app.add_subcommand("bench", "encode/decode timing");
  add_code_options(bench, o, true);
  add_seed(bench, o);
  bench->add_option("--rho", o.rho, "number of node failures (default: design value)");
  bench->add_option("--trials", o.bench_runs, "timed runs")->capture_default_str();
  bench->add_option("--op", o.op, "encode | decode | both")
      ->check(CLI::IsMember({"encode", "decode", "both"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Context ctx(o, out, err);
  try {
    if (*info) return ctx.info();
    if (*encode) return ctx.encode();
    if (*erase) return ctx.erase();
    if (*decode) return ctx.decode();
    if (*verify) return ctx.verify();
    if (*bench) return ctx.bench();
  } catch (const GraphCodeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace graphcode::cli
