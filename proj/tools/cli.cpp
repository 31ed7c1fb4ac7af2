#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gradus/betti.hpp"
#include "gradus/error.hpp"
#include "gradus/experiments.hpp"
#include "gradus/hilbert.hpp"
#include "gradus/hom.hpp"
#include "gradus/points.hpp"
#include "gradus/serialize.hpp"
#include "gradus/version.hpp"

namespace gradus::cli {
namespace {

struct IoError : Error {
  using Error::Error;
};

struct UsageError : Error {
  using Error::Error;
};

struct RunConfig {
  std::string field;
  std::string order = "grevlex";
  std::uint64_t seed = 1;
  std::optional<unsigned> max_degree;
  std::string format = "text";
  std::string output;
  CLI::App* command = nullptr;

  bool field_given() const { return command->get_option("--field")->count() > 0; }
  bool json() const { return format == "json"; }
  FieldSpec field_spec() const { return FieldSpec::parse(field); }
  TermOrder order_spec() const { return TermOrder::parse(order); }
};

// Inputs shared by the query subcommands.
struct Inputs {
  std::string points_file;
  std::string ideal_file;
  std::vector<std::string> add_files;
};

std::string default_field() {
  const char* env = std::getenv("GRADUS_FIELD");
  return env && *env ? env : std::to_string(FieldSpec::kDefaultPrime);
}

void add_common(CLI::App* sub, RunConfig& cfg, bool with_max_degree) {
  sub->add_option("--field", cfg.field, "prime p (2 < p < 2^31) or Q; default from GRADUS_FIELD, else 32003");
  sub->add_option("--order", cfg.order, "grevlex, lex or elim:k")->capture_default_str();
  sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  sub->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  sub->add_option("-o,--output", cfg.output, "write the result to this file instead of standard output");
  if (with_max_degree) sub->add_option("--max-degree", cfg.max_degree, "last degree to compute");
}

void add_inputs(CLI::App* sub, Inputs& in) {
  sub->add_option("--points", in.points_file, "PointSet JSON; its vanishing ideal is added to the ideal")
      ->check(CLI::ExistingFile);
  sub->add_option("--ideal", in.ideal_file, "Ideal JSON")->check(CLI::ExistingFile);
  sub->add_option("--add", in.add_files, "further Ideal JSON files to add")->check(CLI::ExistingFile);
}

Json read_json(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

PointSet load_points(const std::string& path, const RunConfig& cfg) {
  PointSet points = point_set_from_json(read_json(path));
  if (cfg.field_given() && !(points.field() == cfg.field_spec())) {
    throw PreconditionError("'" + path + "' is over " + points.field().to_string() + " but --field is " + cfg.field);
  }
  return points;
}

Ideal load_ideal(const std::string& path, const RunConfig& cfg) {
  Ideal ideal = ideal_from_json(read_json(path));
  if (cfg.field_given() && !(ideal.ring().field == cfg.field_spec())) {
    throw PreconditionError("'" + path + "' is over " + ideal.ring().field.to_string() + " but --field is " +
                            cfg.field);
  }
  if (cfg.command->get_option("--order")->count() > 0 && !(ideal.ring().order == cfg.order_spec())) {
    return Ideal(ideal.ring().with_order(cfg.order_spec()),
                 [&] {
                   std::vector<Polynomial> gens;
                   for (const auto& g : ideal.generators()) gens.push_back(g.with_order(cfg.order_spec()));
                   return gens;
                 }());
  }
  return ideal;
}

struct Assembled {
  Ideal ideal;
  std::optional<PointSet> points;
  std::optional<Ideal> vanishing;
  std::optional<Ideal> defining;  // the --ideal part alone
};

Assembled assemble(const Inputs& in, const RunConfig& cfg) {
  if (in.points_file.empty() && in.ideal_file.empty()) throw UsageError("give --points, --ideal or both");
  std::optional<PointSet> points;
  std::optional<Ideal> vanishing;
  std::optional<Ideal> defining;
  std::optional<Ideal> total;
  if (!in.points_file.empty()) {
    points = load_points(in.points_file, cfg);
    vanishing = vanishing_ideal(*points, cfg.order_spec());
    total = *vanishing;
  }
  if (!in.ideal_file.empty()) {
    defining = load_ideal(in.ideal_file, cfg);
    total = total ? ideal_sum(*total, *defining) : *defining;
  }
  for (const auto& extra : in.add_files) total = ideal_sum(*total, load_ideal(extra, cfg));
  return {*total, points, vanishing, defining};
}

Json config_json(const RunConfig& cfg, const std::string& command) {
  Json c;
  c["command"] = command;
  c["field"] = cfg.field;
  c["order"] = cfg.order;
  c["seed"] = cfg.seed;
  c["max_degree"] = cfg.max_degree ? Json(*cfg.max_degree) : Json(nullptr);
  c["format"] = cfg.format;
  return c;
}

std::string config_line(const RunConfig& cfg, const std::string& command) {
  std::ostringstream line;
  line << "# gradus " << command << " field=" << cfg.field << " order=" << cfg.order << " seed=" << cfg.seed;
  if (cfg.max_degree) line << " max_degree=" << *cfg.max_degree;
  line << "\n";
  return line.str();
}

std::string join_values(const std::vector<std::size_t>& values) {
  std::ostringstream out;
  for (std::size_t k = 0; k < values.size(); ++k) out << (k ? " " : "") << values[k];
  return out.str();
}

class Emitter {
 public:
  Emitter(const RunConfig& cfg, std::string command, std::ostream& out)
      : cfg_(cfg), command_(std::move(command)), out_(out) {}

  void json(Json doc) {
    Json framed = Json::object();
    framed["config"] = config_json(cfg_, command_);
    for (auto& [k, v] : doc.items()) framed[k] = v;
    write(framed.dump(2) + "\n");
  }

  void text(const std::string& body) { write(config_line(cfg_, command_) + body); }

 private:
  void write(const std::string& content) {
    if (cfg_.output.empty()) {
      out_ << content;
      return;
    }
    std::ofstream file(cfg_.output);
    if (!file) throw IoError("cannot write '" + cfg_.output + "'");
    file << content;
  }

  const RunConfig& cfg_;
  std::string command_;
  std::ostream& out_;
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--range expects lo:hi, got '" + text + "'");
  try {
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    const std::string lo_text = text.substr(0, colon);
    const std::string hi_text = text.substr(colon + 1);
    const int lo = std::stoi(lo_text, &used_lo);
    const int hi = std::stoi(hi_text, &used_hi);
    if (used_lo != lo_text.size() || used_hi != hi_text.size() || lo > hi) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--range expects lo:hi with lo <= hi, got '" + text + "'");
  }
}

constexpr unsigned kDefaultHilbertDegree = 12;

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"gradus: exact computations with ideals of points in projective space", "gradus"};
  app.set_version_flag("--version", std::string("gradus ") + kEngineVersion + " (schema " + kSchemaVersion + ")");
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.field = default_field();
  Inputs in;

  // points
  std::size_t s = 0;
  std::size_t n = 2;
  auto* points_cmd = app.add_subcommand("points", "sample s general-position points of P^n");
  points_cmd->add_option("--s", s, "number of points")->required()->check(CLI::PositiveNumber);
  points_cmd->add_option("--n", n, "projective dimension")->capture_default_str()->check(CLI::Range(1, 15));
  add_common(points_cmd, cfg, false);

  // ideal
  std::vector<std::string> gens;
  std::size_t nvars = 3;
  std::string basis = "given";
  std::string method = "kernel";
  bool leading = false;
  auto* ideal_cmd = app.add_subcommand("ideal", "build an ideal (vanishing ideal, explicit generators, sums)");
  add_inputs(ideal_cmd, in);
  ideal_cmd->add_option("--gens", gens, "generators as polynomial text")->delimiter(',');
  ideal_cmd->add_option("--nvars", nvars, "number of variables for --gens")->capture_default_str();
  ideal_cmd->add_option("--basis", basis, "emitted generators")
      ->check(CLI::IsMember({"given", "groebner", "minimal"}))
      ->capture_default_str();
  ideal_cmd->add_option("--method", method, "vanishing ideal construction")
      ->check(CLI::IsMember({"kernel", "oracle"}))
      ->capture_default_str();
  ideal_cmd->add_flag("--leading-terms", leading, "replace the ideal by its leading-term ideal");
  add_common(ideal_cmd, cfg, false);

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function and polynomial of R/I");
  add_inputs(hilbert_cmd, in);
  add_common(hilbert_cmd, cfg, true);

  auto* betti_cmd = app.add_subcommand("betti", "graded Betti diagram of R/I");
  add_inputs(betti_cmd, in);
  add_common(betti_cmd, cfg, true);

  auto* socle_cmd = app.add_subcommand("socle", "socle degree of an Artinian R/I");
  add_inputs(socle_cmd, in);
  add_common(socle_cmd, cfg, false);

  auto* artinian_cmd = app.add_subcommand("artinian", "both Artinian criteria for R/I");
  add_inputs(artinian_cmd, in);
  add_common(artinian_cmd, cfg, false);

  std::string range_text;
  std::string witness_text;
  std::string theta_text;
  auto* hom_cmd = app.add_subcommand("hom", "graded dimensions of Hom_{R_X}(J, R_X)");
  hom_cmd->add_option("--points", in.points_file, "PointSet JSON")->required()->check(CLI::ExistingFile);
  hom_cmd->add_option("--ideal", in.ideal_file, "Ideal JSON with lifts of the generators of J")
      ->required()
      ->check(CLI::ExistingFile);
  hom_cmd->add_option("--range", range_text, "degrees lo:hi (default 0:delta_X+3)");
  hom_cmd->add_option("--witness", witness_text, "non-zero-divisor of J used for the embedding");
  hom_cmd->add_option("--theta", theta_text, "also report ker(theta_g) for this g in J");
  add_common(hom_cmd, cfg, false);

  auto* experiment_cmd = app.add_subcommand("experiment", "scripted reproductions");
  experiment_cmd->require_subcommand(1);
  std::size_t min_s = 2;
  std::size_t max_s = 25;
  unsigned trials = 3;
  JConvention convention;
  auto* groups_cmd = experiment_cmd->add_subcommand("socle-groups", "socle offset classes over a range of s");
  groups_cmd->add_option("--min-s", min_s, "smallest point count")->capture_default_str();
  groups_cmd->add_option("--max-s", max_s, "largest point count")->capture_default_str();
  groups_cmd->add_option("--trials", trials, "samples per point count")->capture_default_str();
  groups_cmd->add_option("--shift", convention.shift, "deg J = max(min-degree, alpha(I_X) + shift)")
      ->capture_default_str();
  groups_cmd->add_option("--min-degree", convention.min_degree, "lower bound on deg J")->capture_default_str();
  add_common(groups_cmd, cfg, false);
  std::string case_name;
  bool all_cases = false;
  auto* reproduce_cmd = experiment_cmd->add_subcommand("reproduce", "rerun a stored case with fresh points");
  auto* case_opt = reproduce_cmd->add_option("--case", case_name, "case identifier")
                       ->check(CLI::IsMember(reproduction_cases()));
  auto* all_opt = reproduce_cmd->add_flag("--all", all_cases, "run every case");
  case_opt->excludes(all_opt);
  add_common(reproduce_cmd, cfg, false);
  std::size_t s1 = 15;
  std::size_t s2 = 21;
  auto* monomial_cmd = experiment_cmd->add_subcommand("monomial", "leading-term ideals of two point sets");
  monomial_cmd->add_option("--s1", s1, "size of X1")->capture_default_str();
  monomial_cmd->add_option("--s2", s2, "size of X2")->capture_default_str();
  add_common(monomial_cmd, cfg, false);

  std::vector<std::string> texts;
  auto* parse_cmd = app.add_subcommand("parse-check", "parse polynomials and print their canonical form");
  parse_cmd->add_option("polynomials", texts, "polynomial text");
  parse_cmd->add_option("--nvars", nvars, "number of variables")->capture_default_str();
  parse_cmd->add_option("--ideal", in.ideal_file, "validate an Ideal JSON file")->check(CLI::ExistingFile);
  add_common(parse_cmd, cfg, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  // points and ideal produce pipeline files, so they default to JSON.
  for (auto* sub : {points_cmd, ideal_cmd}) {
    if (sub->parsed() && sub->get_option("--format")->count() == 0) cfg.format = "json";
  }

  try {
    if (points_cmd->parsed()) {
      cfg.command = points_cmd;
      const PointSet points = random_general_points(s, n, cfg.seed, cfg.field_spec());
      Emitter emit(cfg, "points", out);
      if (cfg.json()) {
        emit.json(to_json(points));
      } else {
        std::ostringstream body;
        body << "n=" << points.dimension() << " s=" << points.size() << "\n";
        for (const auto& p : points.points()) {
          for (std::size_t k = 0; k < p.coords().size(); ++k) body << (k ? " " : "") << p.coords()[k].to_string();
          body << "\n";
        }
        emit.text(body.str());
      }
      return kExitOk;
    }

    if (ideal_cmd->parsed()) {
      cfg.command = ideal_cmd;
      std::optional<Ideal> ideal;
      if (!gens.empty()) {
        ideal = Ideal::parse(RingSpec::make(nvars, cfg.field_spec(), cfg.order_spec()), gens);
      }
      if (!in.points_file.empty()) {
        const PointSet points = load_points(in.points_file, cfg);
        Ideal v = method == "oracle" ? vanishing_ideal_oracle(points, cfg.order_spec())
                                     : vanishing_ideal(points, cfg.order_spec());
        ideal = ideal ? ideal_sum(*ideal, v) : v;
      }
      if (!in.ideal_file.empty()) {
        Ideal loaded = load_ideal(in.ideal_file, cfg);
        ideal = ideal ? ideal_sum(*ideal, loaded) : loaded;
      }
      if (!ideal) throw UsageError("give --gens, --points or --ideal");
      for (const auto& extra : in.add_files) ideal = ideal_sum(*ideal, load_ideal(extra, cfg));
      if (leading) ideal = leading_term_ideal(*ideal, ideal->ring().order);
      if (basis == "groebner") ideal = Ideal(ideal->ring(), ideal->groebner_basis());
      if (basis == "minimal") ideal = Ideal(ideal->ring(), ideal->minimal_generators());
      Emitter emit(cfg, "ideal", out);
      if (cfg.json()) {
        emit.json(to_json(*ideal));
      } else {
        std::ostringstream body;
        body << "ring: nvars=" << ideal->ring().nvars << " field=" << ideal->ring().field.to_string()
             << " order=" << ideal->ring().order.to_string() << "\n";
        for (const auto& g : ideal->generators()) body << g.to_string() << "\n";
        emit.text(body.str());
      }
      return kExitOk;
    }

    if (hilbert_cmd->parsed()) {
      cfg.command = hilbert_cmd;
      const Assembled a = assemble(in, cfg);
      const unsigned top = cfg.max_degree.value_or(kDefaultHilbertDegree);
      const HilbertFunction hf = hilbert_data(a.ideal, top);
      const bool artinian = is_artinian(a.ideal);
      Emitter emit(cfg, "hilbert", out);
      if (cfg.json()) {
        emit.json(to_json(hf, artinian));
      } else {
        std::ostringstream body;
        body << "values: " << join_values(hf.values) << "\n";
        body << "stable_from: " << (hf.stable_from ? std::to_string(*hf.stable_from) : "none") << "\n";
        body << "polynomial: " << (hf.polynomial ? hf.polynomial->to_string() : "none") << "\n";
        body << "artinian: " << (artinian ? "true" : "false") << "\n";
        emit.text(body.str());
      }
      return kExitOk;
    }

    if (betti_cmd->parsed()) {
      cfg.command = betti_cmd;
      const Assembled a = assemble(in, cfg);
      const BettiTable table = graded_betti(a.ideal, cfg.max_degree);
      Emitter emit(cfg, "betti", out);
      if (cfg.json()) {
        emit.json(to_json(table));
      } else {
        std::string body = render_betti(table);
        if (table.truncated) {
          body += "truncated: entries complete only through degree " + std::to_string(table.max_degree) + "\n";
        }
        emit.text(body);
      }
      return kExitOk;
    }

    if (socle_cmd->parsed()) {
      cfg.command = socle_cmd;
      const Assembled a = assemble(in, cfg);
      const SocleReport report = a.defining ? socle_degree(a.ideal, *a.defining) : socle_degree(a.ideal);
      Emitter emit(cfg, "socle", out);
      if (cfg.json()) {
        emit.json(to_json(report));
      } else {
        std::ostringstream body;
        body << "artinian: " << (report.artinian ? "true" : "false") << "\n";
        body << "socle_degree: " << (report.socle_degree ? std::to_string(*report.socle_degree) : "none") << "\n";
        body << "initial_degree: " << report.initial_degree << "\n";
        emit.text(body.str());
      }
      return kExitOk;
    }

    if (artinian_cmd->parsed()) {
      cfg.command = artinian_cmd;
      const Assembled a = assemble(in, cfg);
      const ArtinianCertificate cert = artinian_certificate(a.ideal);
      Emitter emit(cfg, "artinian", out);
      if (cfg.json()) {
        emit.json(to_json(cert));
      } else {
        std::ostringstream body;
        body << "artinian: " << (cert.pure_powers && cert.eventual_zero ? "true" : "false") << "\n";
        body << "pure_powers: " << (cert.pure_powers ? "true" : "false") << "\n";
        body << "eventual_zero: " << (cert.eventual_zero ? "true" : "false") << "\n";
        body << "probe_degree: " << cert.probe_degree << "\n";
        emit.text(body.str());
      }
      return kExitOk;
    }

    if (hom_cmd->parsed()) {
      cfg.command = hom_cmd;
      const PointSet points = load_points(in.points_file, cfg);
      const Ideal j = load_ideal(in.ideal_file, cfg);
      const Ideal vanishing = vanishing_ideal(points, j.ring().order);
      std::optional<DegreeRange> range;
      if (!range_text.empty()) {
        const auto [lo, hi] = parse_range(range_text);
        range = DegreeRange{lo, hi};
      }
      std::optional<Polynomial> witness;
      if (!witness_text.empty()) witness = Polynomial::parse(j.ring(), witness_text);
      const HomProfile profile = hom_graded_dims(j, points, vanishing, range, witness);
      std::optional<ThetaReport> theta;
      if (!theta_text.empty()) {
        theta = theta_kernel_dims(j, Polynomial::parse(j.ring(), theta_text), points, vanishing, range);
      }
      Emitter emit(cfg, "hom", out);
      if (cfg.json()) {
        Json doc = to_json(profile);
        if (theta) doc["theta"] = to_json(*theta);
        emit.json(std::move(doc));
      } else {
        std::ostringstream body;
        body << "s: " << profile.s << "\n";
        body << "delta_X: " << profile.delta << "\n";
        body << "witness: " << profile.witness.to_string() << "\n";
        body << "degree dim\n";
        for (const auto& [i, d] : profile.dims) body << i << " " << d << "\n";
        if (theta) {
          body << "theta kernel:";
          for (const auto& [i, d] : theta->kernel_dims) body << " " << i << ":" << d;
          body << "\n" << theta->summary() << "\n";
        }
        emit.text(body.str());
      }
      return kExitOk;
    }

    if (experiment_cmd->parsed()) {
      std::vector<ExperimentReport> reports;
      std::string name;
      if (groups_cmd->parsed()) {
        cfg.command = groups_cmd;
        name = "experiment socle-groups";
        const SocleScan scan = socle_group_scan(min_s, max_s, trials, cfg.seed, cfg.field_spec(), convention);
        reports.push_back(socle_group_report(scan, min_s, max_s, trials, cfg.seed, convention));
      } else if (reproduce_cmd->parsed()) {
        cfg.command = reproduce_cmd;
        name = "experiment reproduce";
        if (!all_cases && case_name.empty()) throw UsageError("give --case or --all");
        const std::vector<std::string> names = all_cases ? reproduction_cases() : std::vector{case_name};
        for (const auto& c : names) reports.push_back(reproduce_case(c, cfg.seed, cfg.field_spec()));
      } else {
        cfg.command = monomial_cmd;
        name = "experiment monomial";
        reports.push_back(monomial_artinian_study(s1, s2, cfg.seed, cfg.field_spec()));
      }
      bool passed = true;
      for (const auto& r : reports) passed = passed && r.passed();
      Emitter emit(cfg, name, out);
      if (cfg.json()) {
        Json list = Json::array();
        for (const auto& r : reports) list.push_back(to_json(r));
        emit.json({{"reports", std::move(list)}, {"passed", passed}});
      } else {
        std::string body;
        for (const auto& r : reports) body += render_report(r);
        emit.text(body);
      }
      if (!passed) {
        err << "computation error: at least one checked expectation failed\n";
        return kExitComputation;
      }
      return kExitOk;
    }

    if (parse_cmd->parsed()) {
      cfg.command = parse_cmd;
      std::ostringstream body;
      if (!in.ideal_file.empty()) {
        const Ideal ideal = load_ideal(in.ideal_file, cfg);
        body << "ideal: ok (" << ideal.generators().size() << " generators)\n";
        for (const auto& g : ideal.generators()) body << g.to_string() << "\n";
      }
      const RingSpec ring = RingSpec::make(nvars, cfg.field_spec(), cfg.order_spec());
      Json canonical = Json::array();
      for (const auto& t : texts) {
        const Polynomial p = Polynomial::parse(ring, t);
        body << p.to_string() << "\n";
        canonical.push_back(p.to_string());
      }
      if (in.ideal_file.empty() && texts.empty()) throw UsageError("give polynomials or --ideal");
      Emitter emit(cfg, "parse-check", out);
      if (cfg.json()) {
        Json doc = {{"polynomials", std::move(canonical)}};
        if (!in.ideal_file.empty()) doc["ideal"] = to_json(load_ideal(in.ideal_file, cfg));
        emit.json(std::move(doc));
      } else {
        emit.text(body.str());
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MismatchError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "computation error: " << e.what() << "\n";
    return kExitComputation;
  }
  err << "usage error: no subcommand\n";
  return kExitUsage;
}

}  // namespace gradus::cli
