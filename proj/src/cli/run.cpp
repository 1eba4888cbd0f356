#include "g2gamma/cli/run.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "g2gamma/engine/gamma.hpp"
#include "g2gamma/engine/random.hpp"
#include "g2gamma/errors.hpp"
#include "g2gamma/io/json.hpp"
#include "g2gamma/wdrep/ops.hpp"

namespace g2gamma::cli {

namespace {

struct Options {
  std::string input;
  std::string q;
  std::string pi;
  std::string rho;
  std::string chi;
  std::string format;
  bool adjoint = false;
  bool check = false;
  bool l_factor = false;
  std::uint64_t seed = 0;
  int instances = 200;
  bool seed_given = false;
  bool instances_given = false;
};

// Inline JSON from a flag; plain words such as `trivial` are taken as strings.
Json flag_json(const std::string& text, const std::string& flag) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[' || text[first] == '"'))
    return parse_json(text, flag);
  return Json(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot read input file " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void set_q(const std::string& text) {
  if (text.empty() || text == "symbolic") {
    set_residue_field_size(std::nullopt);
    return;
  }
  long q = 0;
  std::size_t used = 0;
  try {
    q = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || used == 0) throw MalformedInput("--q: expected a prime power or \"symbolic\", got \"" + text + "\"");
  set_residue_field_size(q);
}

// Fills unset options from the "options" object of the input file.
void merge_file_options(const Json& file, Options& o) {
  const auto it = file.find("options");
  if (it == file.end()) return;
  const Json& opts = *it;
  if (!opts.is_object()) throw MalformedInput("options: expected an object");
  for (const auto& [k, v] : opts.items()) {
    const std::string path = "options." + k;
    if (k == "q") {
      if (o.q.empty()) o.q = v.is_number_integer() ? std::to_string(v.get<long>()) : v.is_string() ? v.get<std::string>() : "?";
    } else if (k == "format") {
      if (!v.is_string()) throw MalformedInput(path + ": expected a string");
      if (o.format.empty()) o.format = v.get<std::string>();
    } else if (k == "adjoint" || k == "check" || k == "L") {
      if (!v.is_boolean()) throw MalformedInput(path + ": expected true or false");
      bool& flag = k == "adjoint" ? o.adjoint : k == "check" ? o.check : o.l_factor;
      flag = flag || v.get<bool>();
    } else if (k == "seed") {
      if (!v.is_number_unsigned()) throw MalformedInput(path + ": expected a non-negative integer");
      if (!o.seed_given) o.seed = v.get<std::uint64_t>(), o.seed_given = true;
    } else if (k == "instances") {
      if (!v.is_number_unsigned()) throw MalformedInput(path + ": expected a non-negative integer");
      if (!o.instances_given) o.instances = v.get<int>(), o.instances_given = true;
    } else {
      throw MalformedInput(path + ": unknown option");
    }
  }
}

void render(const GammaExpr& g, const std::string& format, std::ostream& out) {
  if (format == "json")
    out << to_json(g).dump(2) << "\n";
  else if (format == "latex")
    out << g.to_latex() << "\n";
  else
    out << g.to_string() << "\n";
}

void render(const LaurentRational& f, const std::string& format, std::ostream& out) {
  if (format == "json")
    out << to_json(f).dump(2) << "\n";
  else if (format == "latex")
    out << f.to_latex() << "\n";
  else
    out << f.to_string() << "\n";
}

int run_suite(const Options& o, std::ostream& out) {
  const AdditiveCharacter psi;
  std::mt19937_64 rng(o.seed);
  Json reports = Json::array();
  int equal = 0;
  std::ostringstream lines;
  for (int k = 0; k < o.instances; ++k) {
    const Instance in = random_suite_instance(rng, k);
    const TwoPathReport r = check_two_paths(in.pi, in.rho, psi);
    equal += r.equal;
    if (o.format == "json")
      reports.push_back(to_json(r, in.pi, in.rho, o.seed));
    else
      lines << "instance " << k + 1 << ": " << in.pi.to_string() << " x " << in.rho.to_string() << ": "
            << (r.equal ? "equal" : r.error.empty() ? "DIFFERENT" : "error: " + r.error) << "\n";
  }
  if (o.format == "json")
    out << Json{{"seed", o.seed}, {"instances", o.instances}, {"equal", equal}, {"reports", std::move(reports)}}.dump(2)
        << "\n";
  else
    out << lines.str() << equal << "/" << o.instances << " equal\n";
  return equal == o.instances ? ok : check_failed;
}

int execute(Options o, std::ostream& out) {
  Json file = Json::object();
  if (!o.input.empty()) {
    file = parse_json(read_file(o.input), o.input);
    if (!file.is_object()) throw MalformedInput(o.input + ": expected a JSON object");
    for (const auto& [k, v] : file.items())
      if (k != "pi" && k != "rho" && k != "chi" && k != "options") throw MalformedInput(k + ": unknown field");
    merge_file_options(file, o);
  }
  if (o.format.empty()) o.format = "text";
  if (o.format != "text" && o.format != "latex" && o.format != "json")
    throw MalformedInput("format: expected text, latex or json, got \"" + o.format + "\"");
  if (o.instances < 0) throw MalformedInput("instances: expected a non-negative integer");
  set_q(o.q);

  const Json pi_json = !o.pi.empty() ? flag_json(o.pi, "--pi") : file.value("pi", Json());
  if (pi_json.is_null()) {
    if (o.check) return run_suite(o, out);
    throw MalformedInput("pi: missing (give --pi or a \"pi\" field in the input file)");
  }
  const G2Support pi = support_from_json(pi_json, "pi");
  const Json rho_json = !o.rho.empty() ? flag_json(o.rho, "--rho") : file.value("rho", Json("trivial"));
  const WDParam rho = param_from_json(rho_json, "rho");
  const Json chi_json = !o.chi.empty() ? flag_json(o.chi, "--chi") : file.value("chi", Json("trivial"));
  const MultChar chi = character_from_json(chi_json, "chi");
  const AdditiveCharacter psi;

  if (o.check) {
    const TwoPathReport r = check_two_paths(pi, rho, psi);
    if (o.format == "json") {
      out << to_json(r, pi, rho, o.seed_given ? std::optional(o.seed) : std::nullopt).dump(2) << "\n";
    } else {
      out << "path a: " << (r.error.empty() ? r.path_a.to_string() : "-") << "\n";
      out << "path b: " << (r.error.empty() ? r.path_b.to_string() : "-") << "\n";
      out << (r.equal ? "equal" : r.error.empty() ? "DIFFERENT" : "error: " + r.error) << "\n";
    }
    return r.equal ? ok : check_failed;
  }
  if (o.adjoint) {
    render(gamma_adjoint(pi, chi, psi), o.format, out);
    return ok;
  }
  if (o.l_factor) {
    render(wd_L(tensor(std_parameter(pi), rho)), o.format, out);
    return ok;
  }
  render(gamma_via_lift(pi, rho, psi), o.format, out);
  return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local gamma-factors of G2 x GL_r from cuspidal-support data."};
  app.name("g2gamma");
  Options o;
  app.add_option("input", o.input, "JSON file with \"pi\", \"rho\", \"chi\" and \"options\"");
  app.add_option("--q", o.q, "residue field size: a prime power, or \"symbolic\" (default)");
  app.add_option("--pi", o.pi, "G2 support as JSON");
  app.add_option("--rho", o.rho, "GL_r parameter as a JSON summand list, or \"trivial\" (default)");
  app.add_option("--chi", o.chi, "twisting character for --adjoint (default trivial)");
  app.add_flag("--adjoint", o.adjoint, "compute the adjoint gamma-factor twisted by --chi");
  app.add_flag("--check", o.check, "compare the two computation paths; without --pi, run a random suite");
  app.add_flag("--L", o.l_factor, "print L(s, Lif(pi) x rho) instead of the gamma-factor");
  app.add_option("--format", o.format, "text (default), latex or json");
  auto* seed = app.add_option("--seed", o.seed, "seed of the random suite (default 0)");
  auto* instances = app.add_option("--instances", o.instances, "size of the random suite (default 200)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return schema_error;
  }
  o.seed_given = seed->count() > 0;
  o.instances_given = instances->count() > 0;
  try {
    return execute(std::move(o), out);
  } catch (const MalformedInput& e) {
    err << "error: " << e.what() << "\n";
    return schema_error;
  } catch (const IncompleteInput& e) {
    err << "error: " << e.what() << "\n";
    return schema_error;
  } catch (const UnsupportedConfiguration& e) {
    err << "unsupported: " << e.what() << "\n";
    return unsupported;
  } catch (const InternalConsistency& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return check_failed;
  }
}

}  // namespace g2gamma::cli
