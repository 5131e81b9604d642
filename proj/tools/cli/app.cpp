#include "app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "json_io.hpp"

namespace chipfire::cli {

namespace {

struct Options {
  std::string input = "-";
  std::string inline_doc;
  std::string policy = "lowest";
  std::uint64_t seed = 0;
  std::uint64_t cap_det = kDefaultDetCap;
  std::uint64_t cap_box = kDefaultBoxCap;
  std::string format = "json";
  std::string with_m;
};

// Result of one command: the document to print plus the exit status.
struct Outcome {
  Json doc;
  int status = kSuccess;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::NonSquare:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::InvalidInput:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::NegativeScript:
      return kParseError;
    case ErrorCode::DeterminantExceedsCap:
    case ErrorCode::BoxTooLarge:
    case ErrorCode::BallTooLarge:
    case ErrorCode::IterationCapExceeded:
      return kCapExceeded;
    default:
      return kDomainNegative;
  }
}

Json read_document(const Options& opt, std::istream& in) {
  std::string text;
  if (!opt.inline_doc.empty()) {
    text = opt.inline_doc;
  } else if (opt.input == "-") {
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream file(opt.input);
    if (!file) throw Error(ErrorCode::ParseError, "cannot open " + opt.input);
    std::stringstream ss;
    ss << file.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("input document needs \"") + key + "\"");
  }
  return doc.at(key);
}

IntMatrix read_l(const Json& doc) { return parse_int_matrix(field(doc, "L")); }

// "M" may be a matrix or the shortcuts "identity" and "L"; absent means identity.
RatMatrix read_m(const Json& doc, const IntMatrix& l) {
  if (!doc.contains("M")) return RatMatrix::identity(l.rows());
  const Json& m = doc.at("M");
  if (m.is_string()) {
    const auto s = m.get<std::string>();
    if (s == "identity") return RatMatrix::identity(l.rows());
    if (s == "L") return to_rational(l);
    throw Error(ErrorCode::ParseError, "unknown M shortcut \"" + s + "\"");
  }
  return parse_rat_matrix(m);
}

Pairing read_pairing(const Json& doc) {
  const IntMatrix l = read_l(doc);
  return make_pairing(l, read_m(doc, l));
}

ConfigS read_config(const Json& doc) { return ConfigS{parse_int_vector(field(doc, "f"))}; }

FiringPolicy parse_policy(const Options& opt) {
  if (opt.policy == "lowest") return FiringPolicy::lowest();
  if (opt.policy == "highest") return FiringPolicy::highest();
  if (opt.policy == "random") return FiringPolicy::random(opt.seed);
  throw Error(ErrorCode::ParseError, "unknown policy " + opt.policy);
}

Json config_list(const std::vector<ConfigS>& configs) {
  Json out = Json::array();
  for (const auto& c : configs) out.push_back(to_json(c.f));
  return out;
}

Json classification(const Pairing& p, const Options& opt) {
  const auto reports = all_class_reports(p, BigInt(opt.cap_det), BigInt(opt.cap_box));
  Json doc;
  doc["det_L_abs"] = to_json(p.det_l_abs());
  doc["invariant_factors"] = to_json(p.smith().invariant_factors());
  Json classes = Json::array();
  std::vector<ConfigS> criticals, superstables;
  for (const auto& r : reports) {
    Json c;
    c["label"] = to_json(r.label.residues);
    c["critical"] = to_json(r.critical.f);
    c["superstable"] = to_json(r.superstable.f);
    c["energy_of_superstable"] = to_json(r.energy_of_superstable);
    classes.push_back(std::move(c));
    criticals.push_back(r.critical);
    superstables.push_back(r.superstable);
  }
  doc["classes"] = std::move(classes);
  doc["criticals"] = config_list(criticals);
  doc["superstables"] = config_list(superstables);
  return doc;
}

// --- commands -------------------------------------------------------------

Outcome cmd_check_mmatrix(const Json& doc) {
  const RatMatrix m = parse_rat_matrix(doc.contains("M") ? doc.at("M") : field(doc, "matrix"));
  const auto verdict = check_m_matrix(m);
  Outcome o;
  o.doc["is_m_matrix"] = verdict.is_m_matrix;
  o.doc["failure_reason"] =
      verdict.failure_reason ? Json(std::string(to_string(*verdict.failure_reason))) : Json(nullptr);
  o.doc["inverse"] = verdict.inverse ? to_json(*verdict.inverse) : Json(nullptr);
  o.doc["positive_witness"] = verdict.positive_witness ? to_json(*verdict.positive_witness) : Json(nullptr);
  o.status = verdict.is_m_matrix ? kSuccess : kDomainNegative;
  return o;
}

Outcome cmd_membership(const Json& doc) {
  const Pairing p = read_pairing(doc);
  Outcome o;
  if (doc.contains("x")) {
    const ConfigR x{parse_rat_vector(doc.at("x"))};
    const bool member = in_r_plus(p, x);
    o.doc["in_r_plus"] = member;
    const RatVector f = p.n_matrix() * x.x;
    o.doc["f"] = to_json(f);
    o.status = member ? kSuccess : kDomainNegative;
    return o;
  }
  const ConfigS f = read_config(doc);
  const ConfigR x = to_r_coords(p, f);
  const bool member = is_nonnegative(x.x);
  o.doc["in_s_plus"] = member;
  o.doc["x"] = to_json(x.x);
  o.status = member ? kSuccess : kDomainNegative;
  return o;
}

Outcome cmd_fire(const Json& doc) {
  const Pairing p = read_pairing(doc);
  const ConfigS f = read_config(doc);
  Outcome o;
  if (doc.contains("script")) {
    const FiringScript z{parse_int_vector(doc.at("script"))};
    o.doc["script"] = to_json(z.z);
    o.doc["result"] = to_json(multifire(p, f, z).f);
    return o;
  }
  const Json& site = field(doc, "site");
  if (!site.is_number_integer() || site.get<std::int64_t>() < 0) {
    throw Error(ErrorCode::ParseError, "\"site\" must be a nonnegative integer");
  }
  o.doc["site"] = site;
  o.doc["result"] = to_json(fire(p, f, site.get<std::size_t>()).f);
  return o;
}

Outcome cmd_stabilize(const Json& doc, const Options& opt) {
  const Pairing p = read_pairing(doc);
  const auto result = stabilize(p, read_config(doc), parse_policy(opt));
  Outcome o;
  o.doc["stable_config"] = to_json(result.stable_config.f);
  o.doc["firing_script"] = to_json(result.total_firings.z);
  o.doc["steps"] = result.steps;
  return o;
}

Outcome cmd_classify(const Json& doc, const Options& opt) {
  return Outcome{classification(read_pairing(doc), opt), kSuccess};
}

Outcome cmd_collection(const Json& doc, const Options& opt, const char* key) {
  Json full = classification(read_pairing(doc), opt);
  Outcome o;
  o.doc["det_L_abs"] = full["det_L_abs"];
  o.doc[key] = full[key];
  return o;
}

Outcome cmd_energy(const Json& doc) {
  const Pairing p = read_pairing(doc);
  Outcome o;
  o.doc["energy"] = to_json(energy(p, read_config(doc)));
  return o;
}

Outcome cmd_coker(const Json& doc) {
  const Pairing p = identity_pairing(read_l(doc));
  const auto& snf = p.smith();
  Outcome o;
  o.doc["det_L_abs"] = to_json(p.det_l_abs());
  o.doc["invariant_factors"] = to_json(snf.invariant_factors());
  o.doc["U"] = to_json(snf.u);
  o.doc["D"] = to_json(snf.d);
  o.doc["V"] = to_json(snf.v);
  if (doc.contains("f")) o.doc["label"] = to_json(coset_label(p, read_config(doc)).residues);
  return o;
}

Outcome cmd_parallelepiped(const Json& doc, const Options& opt) {
  const auto set = fundamental_parallelepiped_points(read_l(doc), BigInt(opt.cap_det));
  Outcome o;
  Json points = Json::array();
  for (const auto& pt : set.points) points.push_back(to_json(pt));
  o.doc["points"] = std::move(points);
  return o;
}

// Optional classification of a freshly built L under "identity", "L", or
// the document's "M".
void maybe_classify(Outcome& o, const IntMatrix& l, const Json& doc, const Options& opt) {
  std::optional<RatMatrix> m;
  if (opt.with_m == "identity") m = RatMatrix::identity(l.rows());
  else if (opt.with_m == "L") m = to_rational(l);
  else if (!opt.with_m.empty()) throw Error(ErrorCode::ParseError, "--with-m takes identity or L");
  else if (doc.contains("M")) m = read_m(doc, l);
  if (m) o.doc["classification"] = classification(make_pairing(l, *m), opt);
}

Outcome cmd_from_graph(const Json& doc, const Options& opt) {
  const Json& g = doc.contains("graph") ? doc.at("graph") : doc;
  const IntMatrix l = reduced_graph_laplacian(parse_graph(g));
  Outcome o;
  o.doc["L"] = to_json(l);
  maybe_classify(o, l, doc, opt);
  return o;
}

Outcome cmd_from_complex(const Json& doc, const Options& opt) {
  const Json& c = doc.contains("complex") ? doc.at("complex") : doc;
  const auto lap = reduced_combinatorial_laplacian(parse_complex(c));
  Outcome o;
  Json edges = Json::array();
  for (const auto& e : lap.edges) edges.push_back({e[0], e[1]});
  o.doc["edges"] = std::move(edges);
  o.doc["L"] = to_json(lap.matrix);
  maybe_classify(o, lap.matrix, doc, opt);
  return o;
}

Outcome cmd_check_duality(const Json& doc, const Options& opt) {
  const Pairing p = read_pairing(doc);
  const auto result = check_duality(p, BigInt(opt.cap_det));
  Outcome o;
  o.doc["holds"] = result.holds;
  o.doc["counterexample"] = result.counterexample ? to_json(result.counterexample->f) : Json(nullptr);
  o.status = result.holds ? kSuccess : kDomainNegative;
  return o;
}

// --- text rendering -------------------------------------------------------

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

bool is_vector(const Json& j) {
  return j.is_array() && std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
}

bool is_vector_list(const Json& j) {
  return j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), is_vector);
}

std::string tuple_text(const Json& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
  return s + ")";
}

// Configurations are printed side by side as column vectors; matrices as
// aligned rows.
void render_columns(const Json& list, std::ostream& out) {
  const std::size_t height = list[0].size();
  std::vector<std::size_t> width(list.size(), 1);
  for (std::size_t c = 0; c < list.size(); ++c)
    for (const auto& e : list[c]) width[c] = std::max(width[c], scalar_text(e).size());
  for (std::size_t r = 0; r < height; ++r) {
    out << " ";
    for (std::size_t c = 0; c < list.size(); ++c) {
      const std::string s = r < list[c].size() ? scalar_text(list[c][r]) : "";
      out << "  " << std::string(width[c] - s.size(), ' ') << s;
    }
    out << "\n";
  }
}

void render_rows(const Json& matrix, std::ostream& out) {
  std::size_t width = 1;
  for (const auto& row : matrix)
    for (const auto& e : row) width = std::max(width, scalar_text(e).size());
  for (const auto& row : matrix) {
    out << " ";
    for (const auto& e : row) {
      const std::string s = scalar_text(e);
      out << "  " << std::string(width - s.size(), ' ') << s;
    }
    out << "\n";
  }
}

bool is_config_set_key(const std::string& key) {
  return key == "criticals" || key == "superstables" || key == "points";
}

void render_text(const Json& doc, std::ostream& out, const std::string& indent = "") {
  for (const auto& [key, value] : doc.items()) {
    if (key == "classes") {
      out << indent << "classes:\n";
      for (const auto& c : value) {
        out << indent << "  label " << tuple_text(c["label"]) << "  critical " << tuple_text(c["critical"])
            << "  superstable " << tuple_text(c["superstable"]) << "  energy "
            << scalar_text(c["energy_of_superstable"]) << "\n";
      }
    } else if (value.is_object()) {
      out << indent << key << ":\n";
      render_text(value, out, indent + "  ");
    } else if (is_vector_list(value)) {
      out << indent << key << ":\n";
      if (is_config_set_key(key)) render_columns(value, out);
      else render_rows(value, out);
    } else if (is_vector(value)) {
      out << indent << key << ": " << tuple_text(value) << "\n";
    } else {
      out << indent << key << ": " << scalar_text(value) << "\n";
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized chip-firing on (L, M) pairings with exact arithmetic", "chipfire"};
  app.require_subcommand(1);
  Options opt;

  struct Command {
    const char* name;
    const char* help;
  };
  const std::vector<Command> commands = {
      {"check-mmatrix", "Decide whether {\"M\"} is an M-matrix"},
      {"membership", "Test {\"L\",\"M\",\"f\"} for S+ (or {\"x\"} for R+)"},
      {"fire", "Fire {\"site\"} (or multifire {\"script\"}) on {\"f\"}"},
      {"stabilize", "Stabilize {\"f\"} under a firing policy"},
      {"classify", "Critical and superstable representative of every class"},
      {"criticals", "Critical configurations of every class"},
      {"superstables", "Superstable configurations of every class"},
      {"energy", "Energy ||L^-1 f||^2 of {\"f\"}"},
      {"coker", "Smith normal form of {\"L\"} and optional coset label of {\"f\"}"},
      {"parallelepiped", "Integer points of the fundamental parallelepiped of {\"L\"}"},
      {"from-graph", "Reduced Laplacian of a digraph with a sink"},
      {"from-complex", "Reduced combinatorial Laplacian of a 2-complex and spanning tree"},
      {"check-duality", "Test the critical/superstable duality c -> (L_ii - 1) - c"},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("input", opt.input, "JSON input document, '-' for stdin");
    sub->add_option("--json", opt.inline_doc, "Inline JSON input document");
    sub->add_option("--policy", opt.policy, "Firing policy")->check(CLI::IsMember({"lowest", "highest", "random"}));
    sub->add_option("--seed", opt.seed, "Seed for the random policy");
    sub->add_option("--cap-det", opt.cap_det, "Largest |det L| to enumerate");
    sub->add_option("--cap-box", opt.cap_box, "Largest superstability search box");
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--with-m", opt.with_m, "Classify the built matrix under M = identity or L");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    app.exit(e, msg, msg);
    err << msg.str();
    return kParseError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const Json doc = read_document(opt, in);
    Outcome o;
    if (command == "check-mmatrix") o = cmd_check_mmatrix(doc);
    else if (command == "membership") o = cmd_membership(doc);
    else if (command == "fire") o = cmd_fire(doc);
    else if (command == "stabilize") o = cmd_stabilize(doc, opt);
    else if (command == "classify") o = cmd_classify(doc, opt);
    else if (command == "criticals") o = cmd_collection(doc, opt, "criticals");
    else if (command == "superstables") o = cmd_collection(doc, opt, "superstables");
    else if (command == "energy") o = cmd_energy(doc);
    else if (command == "coker") o = cmd_coker(doc);
    else if (command == "parallelepiped") o = cmd_parallelepiped(doc, opt);
    else if (command == "from-graph") o = cmd_from_graph(doc, opt);
    else if (command == "from-complex") o = cmd_from_complex(doc, opt);
    else if (command == "check-duality") o = cmd_check_duality(doc, opt);

    Json result;
    result["command"] = command;
    result.update(o.doc);
    if (opt.format == "text") render_text(result, out);
    else out << result.dump(2) << "\n";
    return o.status;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return kParseError;
  }
}

}  // namespace chipfire::cli
