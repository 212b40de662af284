#include "cli.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "invset/bellsim/chsh.hpp"
#include "invset/bellsim/classical.hpp"
#include "invset/detgen/doubling.hpp"
#include "invset/errors.hpp"
#include "invset/exactnum/niven.hpp"
#include "invset/exactnum/padic.hpp"
#include "invset/finitestates/helix.hpp"
#include "invset/finitestates/serialization.hpp"
#include "invset/finitestates/superposition.hpp"
#include "invset/ontology/spherical_triangle.hpp"

namespace invset::cli {

using nlohmann::ordered_json;
using exactnum::Rational;
using exactnum::RationalAngle;

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 8> kCommandNames{{
    {Command::Niven, "niven"},
    {Command::Counterfactual, "counterfactual"},
    {Command::Superpose, "superpose"},
    {Command::Chsh, "chsh"},
    {Command::Sweep, "sweep"},
    {Command::Bits, "bits"},
    {Command::Padic, "padic"},
    {Command::Validate, "validate"},
}};

// ---------------------------------------------------------------- parsing

struct SubcommandSpec {
  std::vector<std::string> options;  // long names taking a value
  std::vector<std::string> flags;
  std::vector<std::string> required;
  std::string positional;            // optional positional alias of an option
  std::string description;
};

const std::map<std::string, SubcommandSpec>& subcommand_specs() {
  static const std::map<std::string, SubcommandSpec> specs{
      {"niven", {{"turns"}, {}, {"turns"}, "turns", "Classify cos(2 pi turns) as rational or irrational"}},
      {"counterfactual",
       {{"cos-a", "cos-b", "gamma"}, {}, {"cos-a", "cos-b", "gamma"}, "",
        "Decide whether the counterfactual context (X=1, Y=0) has a rational cosine"}},
      {"superpose", {{"phi1", "phi2"}, {}, {"phi1", "phi2"}, "", "Classify the normalised sum of two finite qubits"}},
      {"chsh",
       {{"N", "cos00", "cos01", "cos10", "cos11"}, {"auto-tsirelson", "atoms"}, {"N"}, "",
        "Build the contextual ensemble and report the exact CHSH value"}},
      {"sweep", {{"N"}, {"auto-tsirelson"}, {"N"}, "", "CHSH values over a list of N (comma separated)"}},
      {"bits",
       {{"seed", "n", "from", "period", "reading"}, {}, {}, "", "Doubling-map bit generation and its inverse"}},
      {"padic", {{"x", "p", "a", "b", "base"}, {}, {}, "", "p-adic valuation or digit-string ultrametric distance"}},
      {"validate",
       {{"state", "state-json", "cos", "phi", "N"}, {"qubit"}, {}, "",
        "Check the finiteness conditions of a state, or build a finite qubit"}},
  };
  return specs;
}

bool has_option(const std::vector<std::string>& args, const std::string& key) {
  const std::string flag = "--" + key;
  return std::any_of(args.begin(), args.end(),
                     [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
}

// Pulls "--config FILE" / "--config=FILE" out of the argument list.
std::optional<std::string> extract_config(std::vector<std::string>& args) {
  for (auto it = args.begin(); it != args.end(); ++it) {
    if (*it == "--config") {
      if (std::next(it) == args.end()) throw ParseError("--config needs a file path");
      std::string path = *std::next(it);
      args.erase(it, std::next(it, 2));
      return path;
    }
    if (it->rfind("--config=", 0) == 0) {
      std::string path = it->substr(9);
      args.erase(it);
      return path;
    }
  }
  return std::nullopt;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_natural(const std::string& text, std::string_view what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw ParseError(std::string(what) + ": expected a non-negative integer, got '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + ": integer out of range '" + text + "'");
  }
}

std::vector<std::uint64_t> parse_natural_list(const std::string& text, std::string_view what) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_natural(trim(item), what));
  if (out.empty()) throw ParseError(std::string(what) + ": empty list");
  return out;
}

// ---------------------------------------------------------------- execution

class Params {
 public:
  explicit Params(const RunConfig& c) : p_(c.params) {}

  [[nodiscard]] bool has(const std::string& key) const { return p_.count(key) != 0; }
  [[nodiscard]] bool flag(const std::string& key) const { return has(key) && p_.at(key) == "true"; }
  [[nodiscard]] const std::string& str(const std::string& key) const {
    const auto it = p_.find(key);
    if (it == p_.end()) throw ParseError("missing required parameter --" + key);
    return it->second;
  }
  [[nodiscard]] Rational rational(const std::string& key) const { return Rational::parse(str(key)); }
  [[nodiscard]] RationalAngle angle(const std::string& key) const { return RationalAngle(rational(key)); }
  [[nodiscard]] std::uint64_t natural(const std::string& key) const { return parse_natural(str(key), "--" + key); }

 private:
  const std::map<std::string, std::string>& p_;
};

ordered_json cosine_json(const exactnum::CosineClass& c) {
  return c.is_rational() ? ordered_json(c.value().str()) : ordered_json("irrational");
}

ordered_json run_niven(const Params& p) {
  const auto angle = p.angle("turns");
  const auto c = exactnum::niven_classify(angle);
  return {{"turns", angle.str()}, {"cos", cosine_json(c)}, {"rational", c.is_rational()}};
}

ordered_json run_counterfactual(const Params& p) {
  const ontology::SphericalTriangle t{p.rational("cos-a"), p.rational("cos-b"), p.angle("gamma")};
  const auto a = ontology::analyze_counterfactual(t);
  ordered_json out = {{"cos_a", t.cos_side_a.str()}, {"cos_b", t.cos_side_b.str()}, {"gamma_turns", t.gamma.str()}};
  if (const auto* o = std::get_if<ontology::Ontic>(&a.result)) {
    out["class"] = "ontic";
    out["value"] = o->value.str();
    out["case"] = ontology::to_string(o->branch);
    out["exceptional"] = o->exceptional;
  } else {
    const auto& n = std::get<ontology::NonOntic>(a.result);
    out["class"] = "non-ontic";
    out["value"] = nullptr;
    out["case"] = ontology::to_string(n.reason);
    out["exceptional"] = false;
  }
  out["sine_product_squared"] = a.sine_product_sq.str();
  const auto root = exactnum::is_perfect_square(a.sine_product_sq);
  out["sine_product"] = root ? ordered_json(root->str()) : ordered_json(nullptr);
  out["exact_form"] = a.surd ? ordered_json(a.surd->str()) : ordered_json(nullptr);
  return out;
}

ordered_json run_superpose(const Params& p) {
  const auto r = finitestates::superpose_classify(p.angle("phi1"), p.angle("phi2"));
  return {{"phi4_turns", r.phi4.str()},
          {"cos_sq_half_phi3", cosine_json(r.cos_sq_half_phi3)},
          {"cos_theta3", r.cos_theta3 ? ordered_json(r.cos_theta3->str()) : ordered_json("irrational")},
          {"finite", r.finite}};
}

bellsim::MeasurementSettings chsh_settings(const Params& p) {
  const auto N = p.natural("N");
  if (p.flag("auto-tsirelson")) return bellsim::auto_tsirelson_settings(N);
  bellsim::MeasurementSettings s{N, {}};
  for (const auto c : ontology::kAllContexts) {
    const std::string key = "cos" + c.str();
    if (!p.has(key)) throw ParseError("chsh needs --auto-tsirelson or all of --cos00 --cos01 --cos10 --cos11");
    s.cosines[c.index()] = p.rational(key);
  }
  return s;
}

ordered_json atoms_json(const bellsim::BellEnsemble& e) {
  ordered_json atoms = ordered_json::array();
  for (const auto& atom : e.atoms) {
    ordered_json ctx = ordered_json::object();
    ordered_json cond = ordered_json::object();
    std::optional<ontology::ContextPair> realized;
    for (const auto c : ontology::kAllContexts) {
      if (const auto& o = atom.outcomes[c.index()]) {
        ctx[c.str()] = {{"A", o->a}, {"B", o->b}};
        if (!realized) realized = c;
      }
    }
    if (realized) {
      const Rational base = atom.weight / e.context_weight(*realized);
      for (const auto c : ontology::kAllContexts) cond[c.str()] = ontology::context_weight(base, *realized, c).str();
    }
    atoms.push_back({{"id", atom.id},
                     {"class", atom.cls == bellsim::AtomClass::Same ? "same" : "diff"},
                     {"weight", atom.weight.str()},
                     {"outcomes", std::move(ctx)},
                     {"p_given_context", std::move(cond)}});
  }
  return atoms;
}

ordered_json run_chsh(const Params& p) {
  const auto settings = chsh_settings(p);
  const auto ensemble = bellsim::build_bell_ensemble(settings);
  const auto report = bellsim::chsh_value(ensemble);
  ordered_json out = ordered_json::parse(bellsim::to_json(report));
  ordered_json cos = ordered_json::object();
  for (const auto c : ontology::kAllContexts) cos[c.str()] = settings.cosine(c).str();
  out["settings"] = std::move(cos);
  out["free_choice_on_IU"] = bellsim::verify_free_choice_on_IU(ensemble).ok;
  out["local_causality_on_IU"] = bellsim::verify_local_causality_on_IU(ensemble).ok;
  out["classical_max"] = bellsim::classical_chsh_max().str();
  if (p.flag("atoms")) out["atoms"] = atoms_json(ensemble);
  return out;
}

ordered_json run_bits(const Params& p) {
  if (p.has("seed")) {
    const auto n = p.natural("n");
    const auto b = detgen::generate_bits(p.rational("seed"), n);
    return {{"seed", p.rational("seed").str()},
            {"bits", b.str()},
            {"period", b.period ? ordered_json(*b.period) : ordered_json(nullptr)},
            {"preperiod", b.preperiod ? ordered_json(*b.preperiod) : ordered_json(nullptr)},
            {"bracketed", b.bracketed()}};
  }
  if (p.has("from")) {
    auto b = detgen::BitString::parse(p.str("from"));
    auto reading = detgen::SeedReading::Finite;
    if (p.has("period")) {
      b.period = p.natural("period");
      reading = detgen::SeedReading::Periodic;
    }
    if (p.has("reading")) {
      const auto& r = p.str("reading");
      if (r == "finite") {
        reading = detgen::SeedReading::Finite;
      } else if (r == "periodic") {
        reading = detgen::SeedReading::Periodic;
      } else {
        throw ParseError("--reading must be 'finite' or 'periodic'");
      }
    }
    const auto seed = detgen::seed_from_bits(b, reading);
    return {{"bits", b.str()},
            {"reading", reading == detgen::SeedReading::Finite ? "finite" : "periodic"},
            {"seed", seed.str()},
            {"regenerated", detgen::generate_bits(seed, b.bits.size()).str()}};
  }
  throw ParseError("bits needs --seed R --n K or --from BITS");
}

ordered_json run_padic(const Params& p) {
  if (p.has("x")) {
    const auto x = p.rational("x");
    const auto prime = p.natural("p");
    const auto v = exactnum::padic_valuation(x, prime);
    return {{"x", x.str()},
            {"p", prime},
            {"valuation", v ? ordered_json(*v) : ordered_json("+inf")},
            {"norm", exactnum::padic_norm(x, prime).str()}};
  }
  if (p.has("a") && p.has("b")) {
    const auto base = p.natural("base");
    if (base > 36) throw ParseError("--base above 36 cannot be written as digit text");
    auto a = exactnum::DigitString::parse(static_cast<std::uint32_t>(base), p.str("a"));
    auto b = exactnum::DigitString::parse(static_cast<std::uint32_t>(base), p.str("b"));
    // Shorter string is padded with trailing zeros.
    const auto len = std::max(a.size(), b.size());
    a = a.padded(len);
    b = b.padded(len);
    return {{"base", base}, {"a", a.str()}, {"b", b.str()}, {"distance", exactnum::ultrametric_distance(a, b).str()}};
  }
  throw ParseError("padic needs --x R --p P or --a DIGITS --b DIGITS --base N");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read state file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_validate(const Params& p, ordered_json& out) {
  if (p.flag("qubit")) {
    const auto q = finitestates::make_finite_qubit(p.rational("cos"), p.angle("phi"), p.natural("N"));
    const auto helix = finitestates::helix_ensemble(q);
    const auto [p0, p1] = finitestates::ensemble_statistics(helix);
    std::string labels;
    for (auto l : helix.labels) labels.push_back(static_cast<char>('0' + l));
    const auto state = q.to_state();
    const auto violations = finitestates::validate_finite_state(state);
    out = {{"N", q.N()},
           {"n1", q.n1()},
           {"state", ordered_json::parse(finitestates::to_json(state))},
           {"valid", violations.empty()},
           {"violations", violations},
           {"helix_labels", labels},
           {"statistics", {p0.str(), p1.str()}}};
    return {violations.empty() ? kExitOk : kExitDomain, {}};
  }
  std::string text;
  if (p.has("state-json")) {
    text = p.str("state-json");
  } else if (p.has("state")) {
    text = slurp(p.str("state"));
  } else {
    throw ParseError("validate needs --state FILE, --state-json TEXT or --qubit");
  }
  const auto state = finitestates::state_from_json(text);
  const auto violations = finitestates::validate_finite_state(state);
  out = {{"state", ordered_json::parse(finitestates::to_json(state))},
         {"valid", violations.empty()},
         {"violations", violations}};
  return {violations.empty() ? kExitOk : kExitDomain, {}};
}

// ---------------------------------------------------------------- rendering

std::string scalar_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "null";
  return v.dump();
}

void flatten(const ordered_json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object() || v.is_array()) {
    if (v.empty()) {
      out.emplace_back(prefix, v.is_object() ? "{}" : "[]");
      return;
    }
    std::size_t i = 0;
    for (auto it = v.begin(); it != v.end(); ++it, ++i) {
      const std::string key = v.is_object() ? it.key() : std::to_string(i);
      flatten(*it, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  out.emplace_back(prefix, scalar_text(v));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q.push_back('"');
    q.push_back(c);
  }
  return q + "\"";
}

std::string render(const ordered_json& data, OutputFormat format) {
  if (format == OutputFormat::Json) return data.dump() + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(data, "", rows);
  std::ostringstream os;
  if (format == OutputFormat::Csv) os << "key,value\n";
  for (const auto& [k, v] : rows) {
    if (format == OutputFormat::Csv) {
      os << csv_field(k) << ',' << csv_field(v) << '\n';
    } else {
      os << k << ": " << v << '\n';
    }
  }
  return os.str();
}

}  // namespace

std::string_view to_string(Command c) {
  for (const auto& [cmd, name] : kCommandNames) {
    if (cmd == c) return name;
  }
  return "unknown";
}

std::optional<Command> command_from_string(std::string_view name) {
  for (const auto& [cmd, n] : kCommandNames) {
    if (n == name) return cmd;
  }
  return std::nullopt;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
    }
    auto key = trim(line.substr(0, eq));
    auto value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    out[key] = value;
  }
  return out;
}

RunConfig parse_args(const std::vector<std::string>& raw_args, std::optional<std::string>* help) {
  std::vector<std::string> args = raw_args;
  RunConfig config;

  // Config file entries act as defaults: anything given on the command line wins.
  if (const auto path = extract_config(args)) {
    const auto entries = read_config_file(*path);
    const bool has_command = std::any_of(args.begin(), args.end(), [](const std::string& a) {
      return command_from_string(a).has_value();
    });
    if (const auto it = entries.find("command"); it != entries.end() && !has_command) {
      args.insert(args.begin(), it->second);
    }
    for (const auto& [key, value] : entries) {
      if (key == "command" || has_option(args, key)) continue;
      if (value == "false") continue;
      args.push_back("--" + key);
      if (value != "true") args.push_back(value);
    }
  }

  CLI::App app{"Exact-arithmetic toolkit for invariant-set Bell experiments", "invset"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string output;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--output,-o", output, "Write the report to this file instead of stdout");
  app.add_flag("--meta", config.meta, "Append a metadata line after the data block");
  app.add_option("--config", "Load default parameters from a key = value file");

  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, spec] : subcommand_specs()) {
    auto* sub = app.add_subcommand(name, spec.description);
    subs[name] = sub;
    for (const auto& opt : spec.options) {
      std::string names = "--" + opt;
      if (opt == spec.positional) names += "," + opt;
      auto* o = sub->add_option_function<std::string>(
          names, [&config, opt](const std::string& v) { config.params[opt] = v; }, "exact value (p/q)");
      if (std::find(spec.required.begin(), spec.required.end(), opt) != spec.required.end()) o->required();
    }
    for (const auto& flag : spec.flags) {
      sub->add_flag_callback("--" + flag, [&config, flag] { config.params[flag] = "true"; });
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    if (help) *help = app.help();
    return config;
  } catch (const CLI::ParseError& e) {
    throw ParseError(e.what());
  }

  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) config.command = *command_from_string(name);
  }
  config.format = format == "csv" ? OutputFormat::Csv : format == "plain" ? OutputFormat::Plain : OutputFormat::Json;
  if (!output.empty()) config.output_path = output;
  return config;
}

RunResult execute(const RunConfig& config) {
  const Params p(config);
  ordered_json data;
  RunResult result;

  switch (config.command) {
    case Command::Niven:
      data = run_niven(p);
      break;
    case Command::Counterfactual:
      data = run_counterfactual(p);
      break;
    case Command::Superpose:
      data = run_superpose(p);
      break;
    case Command::Chsh:
      data = run_chsh(p);
      break;
    case Command::Sweep: {
      if (!p.flag("auto-tsirelson")) throw ParseError("sweep currently supports only --auto-tsirelson");
      const auto Ns = parse_natural_list(p.str("N"), "--N");
      const auto rows = bellsim::tsirelson_sweep(Ns);
      if (config.format == OutputFormat::Csv) return {kExitOk, bellsim::to_csv(rows)};
      data = ordered_json::array();
      for (const auto& r : rows) {
        data.push_back({{"N", r.N},
                        {"n", r.n},
                        {"S", r.S.str()},
                        {"S_decimal", r.S_decimal},
                        {"gap_to_tsirelson", r.gap_to_tsirelson}});
      }
      break;
    }
    case Command::Bits:
      data = run_bits(p);
      break;
    case Command::Padic:
      data = run_padic(p);
      break;
    case Command::Validate:
      result = run_validate(p, data);
      break;
  }
  result.payload = render(data, config.format);
  return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    std::optional<std::string> help;
    config = parse_args(args, &help);
    if (help) {
      out << *help;
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  RunResult result;
  try {
    result = execute(config);
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  }

  std::string payload = std::move(result.payload);
  if (config.meta) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::ostringstream stamp;
    stamp << std::put_time(&utc, "%FT%TZ");
    payload += "# invset " + std::string(to_string(config.command)) + " generated_at=" + stamp.str() + "\n";
  }

  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file) {
      err << "usage error: cannot write '" << *config.output_path << "'\n";
      return kExitUsage;
    }
    file << payload;
  } else {
    out << payload;
  }
  return result.exit_code;
}

const std::vector<CoverageEntry>& operation_coverage() {
  static const std::vector<CoverageEntry> entries{
      {"niven_classify", {"niven", "1/6"}},
      {"is_perfect_square", {"counterfactual", "--cos-a", "3/5", "--cos-b", "4/5", "--gamma", "1/2"}},
      {"surd_mul", {"counterfactual", "--cos-a", "1/5", "--cos-b", "1/2", "--gamma", "1/8"}},
      {"ultrametric_distance", {"padic", "--a", "0123", "--b", "0124", "--base", "10"}},
      {"padic_valuation", {"padic", "--x", "3/4", "--p", "2"}},
      {"validate_finite_state", {"validate", "--state-json", R"({"N":2,"amps":[{"m":1,"phase_turns":"0"},{"m":1,"phase_turns":"0"}]})"}},
      {"make_finite_qubit", {"validate", "--qubit", "--cos", "1/2", "--phi", "0", "--N", "4"}},
      {"superpose_classify", {"superpose", "--phi1", "1/3", "--phi2", "0"}},
      {"helix_ensemble", {"validate", "--qubit", "--cos", "1/2", "--phi", "1/4", "--N", "4"}},
      {"ensemble_statistics", {"validate", "--qubit", "--cos", "0", "--phi", "0", "--N", "2"}},
      {"counterfactual_cosine_class", {"counterfactual", "--cos-a", "3/5", "--cos-b", "3/5", "--gamma", "1/7"}},
      {"admissible_contexts", {"chsh", "--N", "4", "--auto-tsirelson", "--atoms"}},
      {"context_weight", {"chsh", "--N", "8", "--auto-tsirelson", "--atoms"}},
      {"singlet_correlation", {"chsh", "--N", "16", "--cos00", "11/16", "--cos01", "11/16", "--cos10", "11/16", "--cos11", "-11/16"}},
      {"rational_cos_approx", {"chsh", "--N", "16", "--auto-tsirelson"}},
      {"build_bell_ensemble", {"chsh", "--N", "64", "--auto-tsirelson"}},
      {"chsh_value", {"sweep", "--N", "8,16", "--auto-tsirelson"}},
      {"verify_free_choice_on_IU", {"chsh", "--N", "256", "--auto-tsirelson"}},
      {"verify_local_causality_on_IU", {"chsh", "--N", "1024", "--auto-tsirelson"}},
      {"classical_chsh_max", {"chsh", "--N", "2", "--cos00", "1", "--cos01", "1", "--cos10", "1", "--cos11", "1"}},
      {"generate_bits", {"bits", "--seed", "1/7", "--n", "6"}},
      {"seed_from_bits", {"bits", "--from", "001001"}},
  };
  return entries;
}

}  // namespace invset::cli
