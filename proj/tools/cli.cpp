#include "cli.hpp"

#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hh/adaptive.hpp"
#include "hh/errors.hpp"
#include "hh/minimum.hpp"
#include "hh/optimal_hh.hpp"
#include "hh/oracle.hpp"
#include "hh/simple_hh.hpp"
#include "hh/voting.hpp"
#include "hh/workload.hpp"

namespace hh::cli {

using json = nlohmann::ordered_json;

namespace {

// list-hh-opt constants are sized for streams far longer than a desk run;
// bench and verify shrink them unless --scale is given.
constexpr double kHarnessOptimalScale = 0.0025;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Calls f(line_number, text) for every non-blank line.
template <class F>
void for_each_line(std::istream& in, F&& f) {
  std::string line;
  std::uint64_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto text = trim(line);
    if (!text.empty()) f(number, text);
  }
}

template <class F>
void for_each_item(std::istream& in, std::uint64_t n, F&& f) {
  for_each_line(in, [&](std::uint64_t line, std::string_view text) {
    std::uint64_t x = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
    if (ec != std::errc() || end != text.data() + text.size()) {
      throw InputError(line, "expected a non-negative integer id, got '" + std::string(text) + "'");
    }
    if (x >= n) throw InputError(line, "id " + std::to_string(x) + " outside universe of size " + std::to_string(n));
    f(x);
  });
}

template <class F>
void for_each_vote(std::istream& in, std::uint64_t n, F&& f) {
  for_each_line(in, [&](std::uint64_t line, std::string_view text) {
    Ranking r;
    try {
      r = Ranking::parse(text);
    } catch (const std::invalid_argument& e) {
      throw InputError(line, e.what());
    }
    if (r.size() != n) {
      throw InputError(line, "vote ranks " + std::to_string(r.size()) + " candidates, expected " + std::to_string(n));
    }
    f(r);
  });
}

SketchConfig config_of(const RunSpec& spec) {
  SketchConfig cfg;
  cfg.epsilon = spec.epsilon;
  cfg.phi = spec.phi.value_or(1.0);
  cfg.delta = spec.delta;
  cfg.universe = spec.n;
  cfg.stream_length = spec.m;
  cfg.seed = spec.seed;
  cfg.scale = spec.scale.value_or(1.0);
  return cfg;
}

void require_phi(const RunSpec& spec) {
  if (!spec.phi) throw std::invalid_argument(spec.subcommand + " needs --phi");
  if (!(*spec.phi > spec.epsilon) || *spec.phi > 1.0) {
    throw std::invalid_argument("list modes need 0 < epsilon < phi <= 1");
  }
}

json items_json(const std::vector<ItemEstimate>& items) {
  json out = json::array();
  for (const auto& it : items) out.push_back(json{{"id", it.id}, {"estimate", it.estimate}});
  return out;
}

json params_json(const RunSpec& spec) {
  json p;
  p["epsilon"] = spec.epsilon;
  p["phi"] = spec.phi ? json(*spec.phi) : json(nullptr);
  p["delta"] = spec.delta;
  p["n"] = spec.n;
  p["m"] = spec.m ? json(*spec.m) : json(nullptr);
  p["seed"] = spec.seed;
  p["scale"] = spec.scale.value_or(1.0);
  p["exact"] = spec.exact;
  p["adaptive"] = !spec.m && !spec.exact;
  return p;
}

struct Result {
  std::vector<ItemEstimate> items;
  std::uint64_t samples_seen = 0;
  std::uint64_t bits_used = 0;
  json extra = json::object();
};

Result from_report(const FrequencyReport& r) { return Result{r.items, r.samples_seen, r.bits_used, json::object()}; }

std::uint64_t tally_bits(std::uint64_t cells) { return cells * 64; }

Result run_items(const RunSpec& spec, std::istream& in) {
  const SketchConfig cfg = config_of(spec);
  const std::string& cmd = spec.subcommand;
  if (cmd == "list-hh" || cmd == "list-hh-opt") require_phi(spec);
  if (cmd == "list-hh-opt" && !spec.m) {
    throw std::invalid_argument("list-hh-opt needs the stream length --m");
  }

  if (spec.exact) {
    ExactTally tally(spec.n);
    for_each_item(in, spec.n, [&](std::uint64_t x) { tally.add(x); });
    Result out;
    out.samples_seen = tally.length();
    out.bits_used = tally_bits(spec.n);
    if (cmd == "maximum") {
      out.items.push_back(exact_max(tally));
    } else if (cmd == "minimum") {
      out.items.push_back(exact_min(tally));
    } else {
      const auto sets = exact_heavy_hitters(tally, spec.epsilon, *spec.phi);
      for (auto x : sets.mandatory) out.items.push_back(ItemEstimate{x, static_cast<double>(tally.frequency(x))});
    }
    return out;
  }

  if (cmd == "list-hh-opt") {
    OptimalHHSketch sk(cfg);
    for_each_item(in, spec.n, [&](std::uint64_t x) { sk.insert(x); });
    return from_report(sk.report());
  }

  if (cmd == "list-hh" || cmd == "maximum") {
    const auto mode = cmd == "list-hh" ? SimpleHHSketch::Mode::kList : SimpleHHSketch::Mode::kMaximum;
    auto finish = [&](const SimpleHHSketch& sk, Scaling scaling, std::uint64_t bits) {
      Result out;
      if (mode == SimpleHHSketch::Mode::kList) {
        out = from_report(sk.report(scaling));
      } else {
        out.items.push_back(sk.max_report(scaling));
        out.samples_seen = sk.samples_seen();
      }
      out.bits_used = bits;
      return out;
    };
    if (spec.m) {
      if (mode == SimpleHHSketch::Mode::kList) validate_list(cfg);
      SimpleHHSketch sk(cfg, mode);
      for_each_item(in, spec.n, [&](std::uint64_t x) { sk.insert(x); });
      return finish(sk, Scaling::kByLength, sk.space_bits());
    }
    auto ad = make_adaptive_heavy_hitters(cfg, mode);
    for_each_item(in, spec.n, [&](std::uint64_t x) { ad.insert(x); });
    Result out = finish(ad.oldest(), Scaling::kByProbability, ad.space_bits());
    out.extra["generation"] = ad.oldest_generation();
    return out;
  }

  // minimum
  auto finish = [](const MinimumSketch& sk, Scaling scaling, std::uint64_t bits) {
    const auto r = sk.report(scaling);
    Result out;
    out.items.push_back(r.item);
    out.samples_seen = sk.samples(0) + sk.samples(1) + sk.samples(2);
    out.bits_used = bits;
    out.extra["rule"] = to_string(r.rule);
    return out;
  };
  if (spec.m) {
    MinimumSketch sk(cfg);
    for_each_item(in, spec.n, [&](std::uint64_t x) { sk.insert(x); });
    return finish(sk, Scaling::kByLength, sk.space_bits());
  }
  auto ad = make_adaptive_minimum(cfg);
  for_each_item(in, spec.n, [&](std::uint64_t x) { ad.insert(x); });
  Result out = finish(ad.oldest(), Scaling::kByProbability, ad.space_bits());
  out.extra["generation"] = ad.oldest_generation();
  return out;
}

std::vector<ItemEstimate> all_scores(const std::vector<double>& scores) {
  std::vector<ItemEstimate> out;
  for (std::size_t i = 0; i < scores.size(); ++i) out.push_back(ItemEstimate{i, scores[i]});
  return out;
}

std::vector<double> to_double(const std::vector<std::uint64_t>& v) { return {v.begin(), v.end()}; }

ItemEstimate best_of(const std::vector<double>& scores) {
  ItemEstimate best{0, scores.at(0)};
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > best.estimate) best = ItemEstimate{i, scores[i]};
  }
  return best;
}

/// Items for a voting report: the list when --phi is given, else every candidate.
template <class Sketch>
Result voting_result(const RunSpec& spec, const Sketch& sk, Scaling scaling, std::uint64_t bits) {
  Result out;
  out.samples_seen = sk.samples_seen();
  out.bits_used = bits;
  const auto scores = sk.scores(scaling);
  out.items = spec.phi ? sk.report(scaling).items : all_scores(scores);
  const auto w = best_of(scores);
  out.extra["winner"] = json{{"id", w.id}, {"estimate", w.estimate}};
  return out;
}

Result run_votes(const RunSpec& spec, std::istream& in) {
  if (spec.phi) require_phi(spec);
  const bool borda = spec.subcommand == "borda";
  if (!borda && spec.n < 2) throw std::invalid_argument("maximin needs at least two candidates");
  const SketchConfig cfg = config_of(spec);

  if (spec.exact) {
    if (spec.n > UINT32_MAX) throw std::invalid_argument("too many candidates");
    VoteTally tally(static_cast<std::uint32_t>(spec.n));
    for_each_vote(in, spec.n, [&](const Ranking& r) { tally.add(r); });
    if (tally.length() == 0) throw NoDataError(spec.subcommand + ": no votes");
    const auto scores = to_double(borda ? exact_borda(tally) : exact_maximin(tally));
    Result out;
    out.samples_seen = tally.length();
    out.bits_used = tally_bits(spec.n * spec.n);
    if (spec.phi) {
      const double unit = static_cast<double>(tally.length()) * (borda ? static_cast<double>(spec.n) : 1.0);
      for (std::size_t i = 0; i < scores.size(); ++i) {
        if (scores[i] >= *spec.phi * unit) out.items.push_back(ItemEstimate{i, scores[i]});
      }
    } else {
      out.items = all_scores(scores);
    }
    const auto w = best_of(scores);
    out.extra["winner"] = json{{"id", w.id}, {"estimate", w.estimate}};
    return out;
  }

  if (spec.m) {
    auto fixed = [&](auto sk) {
      for_each_vote(in, spec.n, [&](const Ranking& r) { sk.insert(r); });
      return voting_result(spec, sk, Scaling::kByLength, sk.space_bits());
    };
    return borda ? fixed(BordaSketch(cfg)) : fixed(MaximinSketch(cfg));
  }
  auto adaptive = [&](auto ad) {
    for_each_vote(in, spec.n, [&](const Ranking& r) { ad.insert(r); });
    Result out = voting_result(spec, ad.oldest(), Scaling::kByProbability, ad.space_bits());
    out.extra["generation"] = ad.oldest_generation();
    return out;
  };
  return borda ? adaptive(make_adaptive_borda(cfg)) : adaptive(make_adaptive_maximin(cfg));
}

json run_bench(const RunSpec& spec) {
  const std::uint64_t n = spec.n;
  const std::uint64_t m = spec.m.value_or(1000000);
  const auto stream = zipf_stream(n, 1.1, m, derive_seed(spec.seed, 0xbe));
  json results = json::array();
  for (double eps : {0.1, 0.05, 0.025}) {
    for (double phi : {0.5, 0.25}) {
      SketchConfig cfg;
      cfg.epsilon = eps;
      cfg.phi = phi;
      cfg.delta = spec.delta;
      cfg.universe = n;
      cfg.stream_length = m;
      cfg.seed = spec.seed;
      auto time = [&](auto& sk) {
        const auto t0 = std::chrono::steady_clock::now();
        for (auto x : stream) sk.insert(x);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return static_cast<double>(m) / secs;
      };
      SimpleHHSketch simple(cfg);
      const double simple_rate = time(simple);
      cfg.scale = spec.scale.value_or(kHarnessOptimalScale);
      OptimalHHSketch opt(cfg);
      const double opt_rate = time(opt);
      results.push_back(json{{"epsilon", eps},
                             {"phi", phi},
                             {"n", n},
                             {"m", m},
                             {"list_hh_updates_per_sec", simple_rate},
                             {"list_hh_opt_updates_per_sec", opt_rate},
                             {"list_hh_space_bits", simple.space_bits()},
                             {"ohh_space_bits", opt.space_bits()}});
    }
  }
  return results;
}

bool verify_trial(const RunSpec& spec, std::uint64_t trial) {
  const std::string& target = spec.algorithm;
  const std::uint64_t n = spec.n;
  const std::uint64_t m = spec.m.value_or(100000);
  const std::uint64_t stream_seed = derive_seed(spec.seed, 2 * trial);
  SketchConfig cfg;
  cfg.epsilon = spec.epsilon;
  cfg.phi = spec.phi.value_or(1.0);
  cfg.delta = spec.delta;
  cfg.universe = n;
  cfg.stream_length = m;
  cfg.seed = derive_seed(spec.seed, 2 * trial + 1);
  cfg.scale = spec.scale.value_or(target == "list-hh-opt" ? kHarnessOptimalScale : 1.0);
  const double eps_m = spec.epsilon * static_cast<double>(m);

  if (target == "borda" || target == "maximin") {
    const auto votes = clustered_votes(static_cast<std::uint32_t>(n), m, stream_seed);
    VoteTally tally(static_cast<std::uint32_t>(n));
    for (const auto& v : votes) tally.add(v);
    std::vector<double> est;
    std::vector<std::uint64_t> exact;
    double bound = eps_m;
    if (target == "borda") {
      BordaSketch sk(cfg);
      for (const auto& v : votes) sk.insert(v);
      est = sk.scores();
      exact = exact_borda(tally);
      bound *= static_cast<double>(n);
    } else {
      MaximinSketch sk(cfg);
      for (const auto& v : votes) sk.insert(v);
      est = sk.scores();
      exact = exact_maximin(tally);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(est[i] - static_cast<double>(exact[i])) > bound) return false;
    }
    return true;
  }

  const auto stream = zipf_stream(n, 1.1, m, stream_seed);
  ExactTally tally(n);
  tally.add(stream.begin(), stream.end());
  if (target == "list-hh") {
    SimpleHHSketch sk(cfg);
    for (auto x : stream) sk.insert(x);
    return check_list_report(sk.report(), tally, spec.epsilon, cfg.phi).ok();
  }
  if (target == "list-hh-opt") {
    OptimalHHSketch sk(cfg);
    for (auto x : stream) sk.insert(x);
    return check_list_report(sk.report(), tally, spec.epsilon, cfg.phi).ok();
  }
  if (target == "maximum") {
    SimpleHHSketch sk(cfg, SimpleHHSketch::Mode::kMaximum);
    for (auto x : stream) sk.insert(x);
    const auto got = sk.max_report();
    return static_cast<double>(tally.frequency(got.id)) >= exact_max(tally).estimate - eps_m;
  }
  MinimumSketch sk(cfg);
  for (auto x : stream) sk.insert(x);
  const auto got = sk.report();
  return static_cast<double>(tally.frequency(got.item.id)) <= exact_min(tally).estimate + eps_m;
}

json run_verify(const RunSpec& spec) {
  const std::string& t = spec.algorithm;
  if (t != "list-hh" && t != "list-hh-opt" && t != "maximum" && t != "minimum" && t != "borda" &&
      t != "maximin") {
    throw std::invalid_argument("verify: unknown algorithm '" + t + "'");
  }
  if (t == "list-hh" || t == "list-hh-opt") require_phi(spec);
  if ((t == "borda" || t == "maximin") && spec.n > 1000) {
    throw std::invalid_argument("verify: voting targets support at most 1000 candidates");
  }
  if (spec.trials == 0) throw std::invalid_argument("verify: --trials must be positive");
  std::uint64_t passed = 0;
  for (std::uint64_t trial = 0; trial < spec.trials; ++trial) passed += verify_trial(spec, trial) ? 1 : 0;
  json out;
  out["target"] = t;
  out["trials"] = spec.trials;
  out["passed"] = passed;
  out["pass_rate"] = static_cast<double>(passed) / static_cast<double>(spec.trials);
  return out;
}

}  // namespace

json execute(const RunSpec& spec, std::istream& in) {
  if (spec.n == 0) throw std::invalid_argument("--n must be positive");
  if (spec.scale && (!(*spec.scale > 0.0) || *spec.scale > 1.0)) {
    throw std::invalid_argument("--scale must be in (0, 1]");
  }
  if (!(spec.epsilon > 0.0) || !(spec.epsilon < 1.0)) throw std::invalid_argument("epsilon must be in (0, 1)");
  if (!(spec.delta > 0.0) || !(spec.delta < 1.0)) throw std::invalid_argument("delta must be in (0, 1)");
  if (spec.m && *spec.m == 0) throw std::invalid_argument("--m must be positive");

  const auto t0 = std::chrono::steady_clock::now();
  json out;
  out["schema"] = 1;
  out["algorithm"] = spec.subcommand;
  out["params"] = params_json(spec);

  const std::string& cmd = spec.subcommand;
  if (cmd == "bench") {
    out["results"] = run_bench(spec);
  } else if (cmd == "verify") {
    out["params"]["algorithm"] = spec.algorithm;
    out.update(run_verify(spec));
  } else {
    std::ifstream file;
    std::istream* source = &in;
    if (spec.input != "-") {
      file.open(spec.input);
      if (!file) throw std::invalid_argument("cannot open input file '" + spec.input + "'");
      source = &file;
    }
    const Result r = (cmd == "borda" || cmd == "maximin") ? run_votes(spec, *source) : run_items(spec, *source);
    out["items"] = items_json(r.items);
    for (const auto& [key, value] : r.extra.items()) out[key] = value;
    out["samples_seen"] = r.samples_seen;
    out["bits_used"] = r.bits_used;
  }
  out["wall_time_ns"] = std::chrono::duration_cast<std::chrono::nanoseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
  return out;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Streaming heavy hitters, extreme frequencies and vote aggregation"};
  app.require_subcommand(1);
  RunSpec spec;
  std::optional<std::uint64_t> seed;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--epsilon", spec.epsilon, "Additive error, as a fraction of m (or m*n for borda)");
    sub->add_option("--phi", spec.phi, "Heavy-hitter threshold; voting commands list all candidates without it");
    sub->add_option("--delta", spec.delta, "Failure probability");
    sub->add_option("--n", spec.n, "Universe size (number of ids or candidates)")->required();
    sub->add_option("--m", spec.m, "Stream length; omit for unknown-length mode");
    sub->add_option("--seed", seed, "Random seed (falls back to HH_SEED, then 0)");
    sub->add_option("--scale", spec.scale, "Shrink sample-size constants by this factor in (0, 1]");
  };
  struct Command {
    const char* name;
    const char* help;
  };
  const Command stream_commands[] = {
      {"list-hh", "(eps, phi)-list heavy hitters"},
      {"list-hh-opt", "(eps, phi)-list heavy hitters with the space-optimal sketch (needs --m)"},
      {"maximum", "eps-maximum frequency"},
      {"minimum", "eps-minimum frequency"},
      {"borda", "Borda scores of a vote stream"},
      {"maximin", "Maximin scores of a vote stream"},
  };
  for (const auto& c : stream_commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    add_common(sub);
    sub->add_option("--input", spec.input, "Input file, '-' for standard input");
    sub->add_flag("--exact", spec.exact, "Answer exactly with the brute-force oracle");
  }
  auto* bench = app.add_subcommand("bench", "Update throughput and space over an (eps, phi) grid");
  add_common(bench);
  auto* verify = app.add_subcommand("verify", "Seeded trials on synthetic streams checked against the oracle");
  add_common(verify);
  verify->add_option("--algorithm", spec.algorithm, "Command to verify")->required();
  verify->add_option("--trials", spec.trials, "Number of seeded trials");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  spec.subcommand = app.get_subcommands().front()->get_name();

  if (seed) {
    spec.seed = *seed;
  } else if (const char* env = std::getenv("HH_SEED")) {
    const std::string_view text(env);
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), spec.seed);
    if (ec != std::errc() || end != text.data() + text.size()) {
      err << "error: HH_SEED must be an unsigned 64-bit integer\n";
      return kUsage;
    }
  }

  try {
    out << execute(spec, in).dump(2) << '\n';
    return kOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NoSampleError& e) {
    err << "error: " << e.what() << '\n';
    return kNoSample;
  } catch (const NoDataError& e) {
    err << "error: " << e.what() << '\n';
    return kNoSample;
  }
}

}  // namespace hh::cli
