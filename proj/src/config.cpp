#include "ucb/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ucb::cli {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  return j.get<double>();
}

std::int64_t require_integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ConfigError(path, "expected an integer");
  return j.get<std::int64_t>();
}

const json& require_field(const json& j, const char* key, const std::string& path) {
  if (!j.contains(key)) throw ConfigError(path, "missing required field");
  return j.at(key);
}

sim::BanditInstance parse_instance(const json& j) {
  if (!j.is_object()) throw ConfigError("instance", "expected an object");
  sim::BanditInstance instance;
  const json& means = require_field(j, "means", "instance.means");
  if (!means.is_array() || means.size() < 2) {
    throw ConfigError("instance.means", "expected an array of at least 2 means");
  }
  for (std::size_t i = 0; i < means.size(); ++i) {
    const double m = require_number(means[i], "instance.means[" + std::to_string(i) + "]");
    if (!std::isfinite(m)) {
      throw ConfigError("instance.means[" + std::to_string(i) + "]", "must be finite");
    }
    instance.means.push_back(m);
  }
  instance.sigma = require_number(require_field(j, "sigma", "instance.sigma"), "instance.sigma");
  if (!(instance.sigma > 0.0) || !std::isfinite(instance.sigma)) {
    throw ConfigError("instance.sigma", "must be positive");
  }
  if (j.contains("stds")) {
    const json& stds = j.at("stds");
    if (!stds.is_array() || stds.size() != means.size()) {
      throw ConfigError("instance.stds", "expected an array matching means in length");
    }
    for (std::size_t i = 0; i < stds.size(); ++i) {
      const std::string path = "instance.stds[" + std::to_string(i) + "]";
      const double s = require_number(stds[i], path);
      if (!(s > 0.0)) throw ConfigError(path, "must be positive");
      if (!(s <= instance.sigma)) throw ConfigError(path, "must not exceed instance.sigma");
      instance.stds.push_back(s);
    }
  } else {
    instance.stds.assign(means.size(), instance.sigma);
  }
  instance.horizon =
      require_integer(require_field(j, "horizon", "instance.horizon"), "instance.horizon");
  if (instance.horizon < static_cast<std::int64_t>(instance.num_arms()) + 1) {
    throw ConfigError("instance.horizon", "must be at least the number of arms + 1");
  }
  return instance;
}

PolicyEntry parse_policy(const json& j, const sim::BanditInstance& instance, std::size_t i) {
  const std::string path = "policies[" + std::to_string(i) + "]";
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  const json& kind_j = require_field(j, "kind", path + ".kind");
  if (!kind_j.is_string()) throw ConfigError(path + ".kind", "expected a string");
  const std::string kind = kind_j.get<std::string>();
  const std::int64_t t_prime = instance.t_prime();

  PolicyEntry entry;
  entry.spec.sigma = instance.sigma;
  entry.spec.horizon = instance.horizon;
  if (kind == "constant_ucb") {
    const json& level = require_field(j, "level", path + ".level");
    exploration::ExplorationLevel lv;
    if (level.is_string() && level.get<std::string>() == "sqrt_two_log") {
      if (t_prime < 2) throw ConfigError(path + ".level", "sqrt_two_log requires T' >= 2");
      lv = exploration::sqrt_two_log_level(t_prime);
      entry.name = "constant_ucb_sqrt_two_log";
    } else if (level.is_string() && level.get<std::string>() == "argmin_eta") {
      lv = exploration::argmin_eta_level(t_prime);
      entry.name = "constant_ucb_argmin_eta";
    } else if (level.is_object() && level.contains("fixed")) {
      const double b = require_number(level.at("fixed"), path + ".level.fixed");
      if (!(b >= 0.0)) throw ConfigError(path + ".level.fixed", "must be nonnegative");
      lv = exploration::fixed_level(b, t_prime);
      std::ostringstream name;
      name << "constant_ucb_fixed_" << b;
      entry.name = name.str();
    } else {
      throw ConfigError(path + ".level",
                        "expected \"sqrt_two_log\", \"argmin_eta\" or {\"fixed\": b}");
    }
    entry.spec.rule = policies::ConstantUcb{lv};
  } else if (kind == "lai_ucb") {
    if (t_prime < 1) throw ConfigError(path, "lai_ucb requires T' >= 1");
    entry.spec.rule = policies::LaiUcb{};
    entry.name = "lai_ucb";
  } else if (kind == "ucb1") {
    double alpha = 2.0;
    if (j.contains("alpha")) alpha = require_number(j.at("alpha"), path + ".alpha");
    if (!(alpha > 0.0)) throw ConfigError(path + ".alpha", "must be positive");
    entry.spec.rule = policies::Ucb1{alpha};
    entry.name = "ucb1";
  } else if (kind == "klucb_gauss") {
    entry.spec.rule = policies::KlUcbGauss{};
    entry.name = "klucb_gauss";
  } else if (kind == "follow_the_leader") {
    entry.spec.rule = policies::FollowTheLeader{};
    entry.name = "follow_the_leader";
  } else {
    throw ConfigError(path + ".kind", "unknown policy kind \"" + kind + "\"");
  }
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw ConfigError(path + ".name", "expected a string");
    entry.name = j.at("name").get<std::string>();
  }
  return entry;
}

CrossingSection parse_crossing(const json& j) {
  CrossingSection section;
  section.max_walk.clear();
  section.drifted.clear();
  section.lai_boundary.clear();
  if (!j.is_object()) throw ConfigError("crossing", "expected an object");
  if (j.contains("replications")) {
    section.replications = require_integer(j.at("replications"), "crossing.replications");
    if (section.replications < 1) throw ConfigError("crossing.replications", "must be >= 1");
  }
  if (j.contains("seed")) {
    section.seed = static_cast<std::uint64_t>(require_integer(j.at("seed"), "crossing.seed"));
  }
  if (j.contains("max_walk")) {
    const json& arr = j.at("max_walk");
    if (!arr.is_array()) throw ConfigError("crossing.max_walk", "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = "crossing.max_walk[" + std::to_string(i) + "]";
      MaxWalkCase c;
      c.b = require_number(require_field(arr[i], "b", path + ".b"), path + ".b");
      if (!(c.b > 0.0)) throw ConfigError(path + ".b", "must be positive");
      c.horizon =
          require_integer(require_field(arr[i], "horizon", path + ".horizon"), path + ".horizon");
      if (c.horizon < 1) throw ConfigError(path + ".horizon", "must be >= 1");
      section.max_walk.push_back(c);
    }
  }
  if (j.contains("drifted")) {
    const json& arr = j.at("drifted");
    if (!arr.is_array()) throw ConfigError("crossing.drifted", "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = "crossing.drifted[" + std::to_string(i) + "]";
      DriftedCase c;
      c.b = require_number(require_field(arr[i], "b", path + ".b"), path + ".b");
      if (!(c.b > 0.0)) throw ConfigError(path + ".b", "must be positive");
      c.gamma = require_number(require_field(arr[i], "gamma", path + ".gamma"), path + ".gamma");
      if (!(c.gamma > 0.0)) throw ConfigError(path + ".gamma", "must be positive");
      c.horizon =
          require_integer(require_field(arr[i], "horizon", path + ".horizon"), path + ".horizon");
      if (c.horizon < 1) throw ConfigError(path + ".horizon", "must be >= 1");
      section.drifted.push_back(c);
    }
  }
  if (j.contains("lai_boundary")) {
    const json& arr = j.at("lai_boundary");
    if (!arr.is_array()) throw ConfigError("crossing.lai_boundary", "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = "crossing.lai_boundary[" + std::to_string(i) + "]";
      LaiBoundaryCase c;
      c.n = require_number(require_field(arr[i], "n", path + ".n"), path + ".n");
      if (!(c.n > 0.0)) throw ConfigError(path + ".n", "must be positive");
      if (arr[i].contains("gamma")) {
        c.gamma = require_number(arr[i].at("gamma"), path + ".gamma");
        if (!(c.gamma > 0.0)) throw ConfigError(path + ".gamma", "must be positive");
      }
      if (arr[i].contains("points_per_decade")) {
        c.points_per_decade =
            static_cast<int>(require_integer(arr[i].at("points_per_decade"), path + ".points_per_decade"));
      }
      if (c.points_per_decade < 10) {
        throw ConfigError(path + ".points_per_decade", "must be at least 10");
      }
      section.lai_boundary.push_back(c);
    }
  }
  return section;
}

json canonical_level(const exploration::ExplorationLevel& lv) {
  json j;
  switch (lv.method) {
    case exploration::LevelMethod::kSqrtTwoLog: j["method"] = "sqrt_two_log"; break;
    case exploration::LevelMethod::kArgminEta: j["method"] = "argmin_eta"; break;
    case exploration::LevelMethod::kFixed: j["method"] = "fixed"; break;
  }
  j["b"] = lv.b;
  return j;
}

json canonical_form(const ExperimentConfig& config) {
  json j;
  j["instance"] = {{"means", config.instance.means},
                   {"stds", config.instance.stds},
                   {"sigma", config.instance.sigma},
                   {"horizon", config.instance.horizon}};
  json pols = json::array();
  for (const PolicyEntry& p : config.policies) {
    json pj;
    pj["name"] = p.name;
    std::visit(
        [&](const auto& rule) {
          using R = std::decay_t<decltype(rule)>;
          if constexpr (std::is_same_v<R, policies::ConstantUcb>) {
            pj["kind"] = "constant_ucb";
            pj["level"] = canonical_level(rule.level);
          } else if constexpr (std::is_same_v<R, policies::LaiUcb>) {
            pj["kind"] = "lai_ucb";
          } else if constexpr (std::is_same_v<R, policies::Ucb1>) {
            pj["kind"] = "ucb1";
            pj["alpha"] = rule.alpha;
          } else if constexpr (std::is_same_v<R, policies::KlUcbGauss>) {
            pj["kind"] = "klucb_gauss";
          } else {
            pj["kind"] = "follow_the_leader";
          }
        },
        p.spec.rule);
    pols.push_back(pj);
  }
  j["policies"] = pols;
  j["replications"] = config.replications;
  j["master_seed"] = config.master_seed;
  j["output_dir"] = config.output_dir.string();
  if (config.crossing) {
    json c;
    c["replications"] = config.crossing->replications;
    c["seed"] = config.crossing->seed;
    json mw = json::array();
    for (const auto& x : config.crossing->max_walk) mw.push_back({{"b", x.b}, {"horizon", x.horizon}});
    json dr = json::array();
    for (const auto& x : config.crossing->drifted) {
      dr.push_back({{"b", x.b}, {"gamma", x.gamma}, {"horizon", x.horizon}});
    }
    json lb = json::array();
    for (const auto& x : config.crossing->lai_boundary) {
      lb.push_back({{"n", x.n}, {"gamma", x.gamma}, {"points_per_decade", x.points_per_decade}});
    }
    c["max_walk"] = mw;
    c["drifted"] = dr;
    c["lai_boundary"] = lb;
    j["crossing"] = c;
  }
  return j;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001B3ULL;
  }
  return hash;
}

CrossingSection default_crossing_section() {
  CrossingSection s;
  for (double b : {2.0, 2.5, 3.0, 3.5}) {
    for (std::int64_t tp : {100, 1000, 10000}) s.max_walk.push_back({b, tp});
  }
  for (double b : {1.0, 2.0}) {
    for (double g : {0.2, 0.5, 1.0}) s.drifted.push_back({b, g, 10000});
  }
  for (double x : {10.0, 100.0, 1000.0, 10000.0}) s.lai_boundary.push_back({x, 1.0, 200});
  return s;
}

ExperimentConfig parse_config_text(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<document>", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("<document>", "expected a JSON object");

  ExperimentConfig config;
  config.instance = parse_instance(require_field(j, "instance", "instance"));
  const json& pols = require_field(j, "policies", "policies");
  if (!pols.is_array() || pols.empty()) {
    throw ConfigError("policies", "expected a non-empty array");
  }
  for (std::size_t i = 0; i < pols.size(); ++i) {
    config.policies.push_back(parse_policy(pols[i], config.instance, i));
  }
  if (j.contains("replications")) {
    config.replications = require_integer(j.at("replications"), "replications");
    if (config.replications < 1) throw ConfigError("replications", "must be >= 1");
  }
  if (j.contains("master_seed")) {
    config.master_seed =
        static_cast<std::uint64_t>(require_integer(j.at("master_seed"), "master_seed"));
  }
  if (j.contains("output_dir")) {
    if (!j.at("output_dir").is_string()) throw ConfigError("output_dir", "expected a string");
    config.output_dir = j.at("output_dir").get<std::string>();
  }
  if (j.contains("crossing")) config.crossing = parse_crossing(j.at("crossing"));

  config.config_hash = fnv1a64(canonical_form(config).dump());
  return config;
}

ExperimentConfig parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot open config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

}  // namespace ucb::cli
