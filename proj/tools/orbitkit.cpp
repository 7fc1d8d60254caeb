// orbitkit: command-line front end for the twisted moment map.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "orbitkit/verify.hpp"
#include "orbitkit/worked_examples.hpp"

using namespace orbitkit;

namespace {

struct RunConfig {
  std::string suite;
  std::size_t n = 0;
  std::string lambda;
  std::size_t samples = 50;
  std::uint64_t seed = 0;
  std::string output;
  unsigned jobs = 0;
  long num_max = 20;
  long den_max = 10;
  std::string scale;
  std::string point;
  std::string g;
  std::string to;
  std::string example_case;
  std::string s = "2";
  std::size_t p = 1;
  std::size_t q = 1;
};

[[noreturn]] void config_error(const std::string& what) { throw Error(ErrorCode::kConfigError, what); }

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json_arg(const std::string& text, const char* what) {
  const std::string body = !text.empty() && text[0] == '@' ? read_text(text.substr(1)) : text;
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    config_error(std::string(what) + " is not valid JSON: " + e.what());
  }
}

unsigned default_jobs() {
  if (const char* env = std::getenv("ORBITKIT_JOBS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) config_error("ORBITKIT_JOBS must be a positive integer");
    return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Fills fields whose flag was not given on the command line from the config file.
void merge_config(const Json& j, CLI::App& sub, RunConfig& cfg) {
  if (!j.is_object()) config_error("config file must hold a JSON object");
  auto unset = [&](const char* flag) { return sub.get_option_no_throw(flag) == nullptr || sub.count(flag) == 0; };
  auto get = [&](const char* key, auto& field, const char* flag) {
    if (!j.contains(key) || !unset(flag)) return;
    try {
      j.at(key).get_to(field);
    } catch (const Json::exception&) {
      config_error(std::string("config field \"") + key + "\" has the wrong type");
    }
  };
  if (j.contains("lambda") && unset("--lambda")) {
    const Json& l = j.at("lambda");
    if (l.is_string()) {
      cfg.lambda = l.get<std::string>();
    } else if (l.is_array()) {
      std::string joined;
      for (const auto& v : l) {
        if (!joined.empty()) joined += ",";
        joined += v.is_string() ? v.get<std::string>() : v.dump();
      }
      cfg.lambda = joined;
    } else {
      config_error("config field \"lambda\" must be a string or array");
    }
  }
  get("n", cfg.n, "--n");
  get("samples", cfg.samples, "--samples");
  get("seed", cfg.seed, "--seed");
  get("output", cfg.output, "--output");
  get("jobs", cfg.jobs, "--jobs");
  get("num_max", cfg.num_max, "--num-max");
  get("den_max", cfg.den_max, "--den-max");
  get("scale", cfg.scale, "--scale");
  get("to", cfg.to, "--to");
  get("case", cfg.example_case, "--case");
  get("s", cfg.s, "--s");
  get("p", cfg.p, "--p");
  get("q", cfg.q, "--q");
  for (const char* key : {"point", "g"}) {
    if (j.contains(key) && unset(key == std::string("point") ? "--point" : "--g")) {
      const Json& v = j.at(key);
      (key == std::string("point") ? cfg.point : cfg.g) = v.is_string() ? v.get<std::string>() : v.dump();
    }
  }
}

struct Setup {
  BlockSorted sorted;
  ParabolicData p;
  std::vector<WeylCoset> atlas;
};

Setup setup(const RunConfig& cfg) {
  if (cfg.lambda.empty()) config_error("--lambda is required");
  WeightLambda raw;
  try {
    raw = parse_lambda(cfg.lambda);
  } catch (const Error& e) {
    config_error(std::string("bad --lambda: ") + e.what());
  }
  if (cfg.n != 0 && cfg.n != raw.n()) {
    config_error("--n " + std::to_string(cfg.n) + " does not match the " + std::to_string(raw.n()) +
                 " entries of --lambda");
  }
  Setup s{block_sort(raw), {}, {}};
  try {
    s.p = build_parabolic(s.sorted.lambda);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kConstantLambda) config_error("lambda must have at least two distinct values");
    throw;
  }
  s.atlas = weyl_cosets(s.p);
  if (s.sorted.changed) {
    std::cerr << "note: lambda was block-sorted; entry k is original entry lambda_permutation[k]\n";
  }
  return s;
}

Json header(const Setup& s) {
  Json out{{"schema", "1"}, {"parabolic", to_json(s.p, s.atlas)}};
  if (s.sorted.changed) out["lambda_permutation"] = s.sorted.permutation;
  return out;
}

ChartPoint read_point(const Setup& s, const RunConfig& cfg) {
  if (cfg.point.empty()) config_error("--point is required");
  try {
    return chart_point_from_json(s.p, s.atlas, parse_json_arg(cfg.point, "--point"));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kParseError) throw;
    config_error(std::string("bad --point: ") + e.what());
  }
}

void emit(const Json& j, const RunConfig& cfg) {
  const std::string text = j.dump(2) + "\n";
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) config_error("cannot write " + cfg.output);
  out << text;
}

int run_mu(const RunConfig& cfg) {
  Setup s = setup(cfg);
  ChartPoint cp = read_point(s, cfg);
  Json out = header(s);
  out["point"] = to_json(s.p, cp);
  out["w"] = coordinates_to_json(s.p, solve_w(s.p, cp.z, cp.xi));
  out["orbit_point"] = to_json(mu_global(s.p, cp));
  emit(out, cfg);
  return 0;
}

int run_transition(const RunConfig& cfg) {
  Setup s = setup(cfg);
  ChartPoint cp = read_point(s, cfg);
  if (cfg.to.empty()) config_error("--to is required (target permutation, e.g. 1,0)");
  std::vector<int> perm;
  std::stringstream in(cfg.to);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      perm.push_back(std::stoi(item));
    } catch (const std::exception&) {
      config_error("bad --to entry: " + item);
    }
  }
  const WeylCoset* tau = nullptr;
  for (const auto& c : s.atlas)
    if (c.perm() == perm) tau = &c;
  if (tau == nullptr) config_error("--to is not a minimal coset representative of this atlas");
  ChartPoint moved = transition(s.p, cp, *tau);
  Json out = header(s);
  out["point"] = to_json(s.p, cp);
  out["transition"] = to_json(s.p, moved);
  emit(out, cfg);
  return 0;
}

int run_action(const RunConfig& cfg) {
  Setup s = setup(cfg);
  ChartPoint cp = read_point(s, cfg);
  if (cfg.g.empty()) config_error("--g is required");
  QMatrix g;
  try {
    g = matrix_from_json(parse_json_arg(cfg.g, "--g"));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kParseError) throw;
    config_error(std::string("bad --g: ") + e.what());
  }
  if (g.rows() != s.p.n()) config_error("--g has the wrong size");
  ChartPoint moved = psi_global(s.p, s.atlas, g, cp);
  Json out = header(s);
  out["point"] = to_json(s.p, cp);
  out["g"] = to_json(g);
  out["image"] = to_json(s.p, moved);
  out["orbit_point"] = to_json(mu_global(s.p, moved));
  emit(out, cfg);
  return 0;
}

VerifyOptions verify_options(const RunConfig& cfg) {
  if (cfg.samples == 0) config_error("--samples must be >= 1");
  if (cfg.num_max < 1 || cfg.den_max < 1) config_error("--num-max and --den-max must be >= 1");
  VerifyOptions opt;
  opt.samples = cfg.samples;
  opt.seed = cfg.seed;
  opt.range = {cfg.num_max, cfg.den_max};
  opt.jobs = cfg.jobs == 0 ? default_jobs() : cfg.jobs;
  if (!cfg.scale.empty()) {
    try {
      opt.scale = GaussianRational::parse_rational(cfg.scale);
    } catch (const Error&) {
      config_error("bad --scale: " + cfg.scale);
    }
    if (opt.scale->is_zero()) config_error("--scale must be nonzero");
  }
  return opt;
}

int run_verify(const RunConfig& cfg) {
  Setup s = setup(cfg);
  VerifyOptions opt = verify_options(cfg);
  VerifyReport r = verify_all(s.p, s.atlas, opt);
  Json out = to_json(r, s.p, s.atlas, opt);
  if (s.sorted.changed) out["lambda_permutation"] = s.sorted.permutation;
  emit(out, cfg);
  std::cerr << r.passed() << " passed, " << r.failed() << " failed\n";
  return r.ok() ? 0 : 1;
}

int run_examples(const RunConfig& cfg) {
  VerifyOptions opt = verify_options(cfg);
  GaussianRational s;
  try {
    s = GaussianRational::parse_rational(cfg.s);
  } catch (const Error&) {
    config_error("bad --s: " + cfg.s);
  }
  Json out;
  if (cfg.example_case == "sl2") {
    out = sl2_fixture(s, opt.samples, opt.seed, opt.range);
  } else if (cfg.example_case == "gl3") {
    out = gl3_fixture(parse_lambda(cfg.lambda.empty() ? "3,1,0" : cfg.lambda), opt.samples, opt.seed, opt.range);
  } else if (cfg.example_case == "supq") {
    out = grassmannian_fixture(cfg.p, cfg.q, s, opt.samples, opt.seed, opt.range);
  } else {
    config_error("--case must be one of sl2, gl3, supq");
  }
  out["schema"] = "1";
  emit(out, cfg);
  return out.at("ok").get<bool>() ? 0 : 1;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n", cfg.n, "Matrix size (must match --lambda)");
  sub->add_option("--lambda", cfg.lambda, "Comma-separated rationals, e.g. 3,1,0 or 1/2,-1/2");
  sub->add_option("--samples", cfg.samples, "Random samples per check");
  sub->add_option("--seed", cfg.seed, "Random seed");
  sub->add_option("--output", cfg.output, "Write the JSON report here instead of stdout");
  sub->add_option("--jobs", cfg.jobs, "Worker threads (default: ORBITKIT_JOBS or all cores)");
  sub->add_option("--num-max", cfg.num_max, "Random numerators lie in [-num-max, num-max]");
  sub->add_option("--den-max", cfg.den_max, "Random denominators lie in [1, den-max]");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact twisted moment maps for type-A flag varieties"};
  app.require_subcommand(0, 1);
  RunConfig cfg;
  std::string config_path;
  app.add_option("--config", config_path, "JSON file mirroring the command-line options");

  CLI::App* mu = app.add_subcommand("mu", "Evaluate mu_lambda at a chart point");
  CLI::App* tr = app.add_subcommand("transition", "Move a chart point to another chart");
  CLI::App* act = app.add_subcommand("action", "Apply Psi_lambda(g) to a chart point");
  CLI::App* ver = app.add_subcommand("verify-all", "Run the randomized identity checks");
  CLI::App* ex = app.add_subcommand("examples", "Emit fixtures for the closed-form examples");
  for (CLI::App* sub : {mu, tr, act, ver, ex}) add_common(sub, cfg);
  for (CLI::App* sub : {mu, tr, act}) sub->add_option("--point", cfg.point, "Chart point JSON, or @file");
  tr->add_option("--to", cfg.to, "Target coset permutation, e.g. 1,0");
  act->add_option("--g", cfg.g, "Group element as matrix JSON, or @file");
  ver->add_option("--scale", cfg.scale, "Also check rescaling lambda by this factor");
  ex->add_option("--case", cfg.example_case, "sl2, gl3 or supq");
  ex->add_option("--s", cfg.s, "Weight parameter s for sl2 and supq");
  ex->add_option("--p", cfg.p, "First block size for supq");
  ex->add_option("--q", cfg.q, "Second block size for supq");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    CLI::App* chosen = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
    if (!config_path.empty()) {
      Json j = parse_json_arg("@" + config_path, "--config");
      if (chosen == nullptr) {
        if (!j.contains("suite") || !j.at("suite").is_string()) config_error("config needs a \"suite\" field");
        chosen = app.get_subcommand_no_throw(j.at("suite").get<std::string>());
        if (chosen == nullptr) config_error("unknown suite " + j.at("suite").dump());
      }
      merge_config(j, *chosen, cfg);
    }
    if (chosen == nullptr) {
      std::cerr << app.help();
      return 2;
    }
    const std::string name = chosen->get_name();
    if (name == "mu") return run_mu(cfg);
    if (name == "transition") return run_transition(cfg);
    if (name == "action") return run_action(cfg);
    if (name == "verify-all") return run_verify(cfg);
    return run_examples(cfg);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return e.code() == ErrorCode::kConfigError ? 2 : 3;
  }
}
