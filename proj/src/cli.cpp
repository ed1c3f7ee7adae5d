#include "surfcx/cli.hpp"

#include "surfcx/graph_io.hpp"
#include "surfcx/json_support.hpp"
#include "surfcx/seifert.hpp"
#include "surfcx/toruscomplex.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <ostream>

namespace surfcx::cli {

namespace {

using nlohmann::json;
using torus::ProjVector;

enum class OutputFormat { Json, Dot, Text };

// Parsed command line: one subcommand plus its flags.
struct CliConfig {
  std::vector<std::string> vectors;
  long long height = 0;
  std::string kind = "surface";
  std::string complex = "finegold";
  std::size_t dim = 0;
  std::string format = "json";
  bool via_axis = false;
  std::int64_t genus = 0;
  std::int64_t b = 0;
  std::vector<std::string> fibers;
};

bool is_integer_token(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

exactlin::IntVector parse_vector(const std::string& text) {
  exactlin::IntVector v;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string part = text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!is_integer_token(part)) throw InvalidInput("malformed vector '" + text + "'");
    v.emplace_back(part);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return v;
}

ProjVector parse_vertex(const std::string& text) { return torus::canonicalize(parse_vector(text)); }

std::int64_t parse_int64(std::string_view s, const std::string& context) {
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || end != s.data() + s.size() || s.empty())
    throw InvalidInput("malformed " + context);
  return value;
}

seifert::Fiber parse_fiber(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidInput("malformed fiber '" + text + "', expected A:B");
  const std::string ctx = "fiber '" + text + "'";
  return {parse_int64(std::string_view(text).substr(0, colon), ctx),
          parse_int64(std::string_view(text).substr(colon + 1), ctx)};
}

OutputFormat parse_format(const std::string& f, bool allow_dot) {
  if (f == "json") return OutputFormat::Json;
  if (f == "text") return OutputFormat::Text;
  if (f == "dot" && allow_dot) return OutputFormat::Dot;
  throw InvalidInput("unsupported output format '" + f + "'");
}

std::size_t resolve_dimension(std::size_t requested, std::span<const ProjVector> vs) {
  const std::size_t n = requested != 0 ? requested : vs.front().dimension();
  for (const auto& v : vs)
    if (v.dimension() != n)
      throw InvalidInput("vertex " + v.to_string() + " does not have dimension " + std::to_string(n));
  return n;
}

void emit(std::ostream& out, const json& j, OutputFormat format) {
  if (format == OutputFormat::Text && j.is_object()) {
    for (const auto& [key, value] : j.items())
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    return;
  }
  out << j.dump(2) << '\n';
}

json simplex_json(const torus::SimplexCheck& check) {
  auto witnesses = json::array();
  for (const auto& w : check.witnesses)
    witnesses.push_back({{"members", w.members}, {"minors_gcd", integer_json(w.minors_gcd)}});
  return witnesses;
}

void cmd_path(const CliConfig& cfg, std::ostream& out) {
  const auto a = parse_vertex(cfg.vectors.at(0));
  const auto b = parse_vertex(cfg.vectors.at(1));
  const auto path = cfg.via_axis ? torus::axis_path(a, b) : torus::connect_path(a, b);
  emit(out, torus::to_json(path), parse_format(cfg.format, false));
}

void cmd_distance(const CliConfig& cfg, std::ostream& out) {
  const auto a = parse_vertex(cfg.vectors.at(0));
  const auto b = parse_vertex(cfg.vectors.at(1));
  const std::array<ProjVector, 2> pair{a, b};
  const std::size_t n = resolve_dimension(cfg.dim, pair);
  const auto g = torus::build_graph(torus::GraphKind::SurfaceComplexS1, cfg.height, n);
  const auto d = torus::bfs_distance(g, a, b);
  json j{{"from", vector_json(a.coords())},
         {"to", vector_json(b.coords())},
         {"height", cfg.height}};
  j["distance"] = d ? json(*d) : json("unreachable-in-truncation");
  emit(out, j, parse_format(cfg.format, false));
}

void cmd_simplex(const CliConfig& cfg, std::ostream& out) {
  std::vector<ProjVector> vs;
  for (const auto& s : cfg.vectors) vs.push_back(parse_vertex(s));
  if (vs.empty()) throw InvalidInput("no vertices given");
  const std::size_t n = resolve_dimension(cfg.dim, vs);
  const auto kind = torus::parse_graph_kind(cfg.complex);
  if (!kind) throw InvalidInput("unknown complex '" + cfg.complex + "'");
  const auto check = *kind == torus::GraphKind::FinegoldSkeleton
                         ? torus::finegold_simplex_check(vs, n)
                         : torus::surface_simplex_check(vs);
  auto vertices = json::array();
  for (const auto& v : vs) vertices.push_back(vector_json(v.coords()));
  json j{{"complex", std::string(torus::to_string(*kind))},
         {"dim", n},
         {"vertices", std::move(vertices)},
         {"simplex", check.spans},
         {"witnesses", simplex_json(check)}};
  emit(out, j, parse_format(cfg.format, false));
}

void cmd_graph(const CliConfig& cfg, std::ostream& out) {
  const auto kind = torus::parse_graph_kind(cfg.kind);
  if (!kind) throw InvalidInput("unknown graph kind '" + cfg.kind + "'");
  const auto g = torus::build_graph(*kind, cfg.height, cfg.dim == 0 ? 3 : cfg.dim);
  const auto format = parse_format(cfg.format, true);
  if (format == OutputFormat::Dot)
    out << torus::to_dot(g);
  else
    out << torus::to_json(g).dump() << '\n';
}

void cmd_diameter(const CliConfig& cfg, std::ostream& out) {
  const auto kind = torus::parse_graph_kind(cfg.kind);
  if (!kind) throw InvalidInput("unknown graph kind '" + cfg.kind + "'");
  const auto g = torus::build_graph(*kind, cfg.height, cfg.dim == 0 ? 3 : cfg.dim);
  const auto d = torus::truncation_diameter(g);
  json j{{"kind", std::string(torus::to_string(g.kind()))},
         {"height", cfg.height},
         {"vertices", g.vertices().size()},
         {"edges", g.edges().size()},
         {"diameter", d.diameter},
         {"connected", d.connected}};
  if (d.diameter > 0)
    j["pair"] = {vector_json(g.vertices()[d.pair.first].coords()),
                 vector_json(g.vertices()[d.pair.second].coords())};
  else
    j["pair"] = nullptr;
  emit(out, j, parse_format(cfg.format, false));
}

void cmd_farey(const CliConfig& cfg, std::ostream& out) {
  const auto v = parse_vertex(cfg.vectors.at(0));
  auto neighbors = json::array();
  for (const auto& w : torus::farey_neighbors(v, cfg.height)) neighbors.push_back(vector_json(w.coords()));
  json j{{"vertex", vector_json(v.coords())}, {"height", cfg.height}, {"neighbors", std::move(neighbors)}};
  emit(out, j, parse_format(cfg.format, false));
}

json seifert_report(const seifert::SeifertInvariants& input) {
  const auto inv = seifert::normalize(input);
  const auto e = seifert::euler_number(inv);
  const auto homology = seifert::h1(inv);
  const auto report = seifert::classify_surface_complex(inv);

  auto fibers = json::array();
  for (const auto& f : inv.fibers) fibers.push_back({f.alpha, f.beta});
  auto torsion = json::array();
  for (const auto& t : homology.torsion) torsion.push_back(integer_json(t));

  json j;
  j["genus"] = inv.genus;
  j["b"] = inv.b;
  j["fibers"] = std::move(fibers);
  j["euler_number"] = seifert::to_string(e);
  j["d"] = report.d ? integer_json(*report.d) : json(nullptr);
  j["h1"] = {{"free_rank", homology.free_rank}, {"torsion", std::move(torsion)}};
  j["h2_rank"] = seifert::h2_rank(inv);
  j["verdict"] = std::string(seifert::to_string(report.verdict));
  j["theorem"] = report.theorem;
  j["diameter_bound"] = report.diameter_bound ? json(*report.diameter_bound) : json(nullptr);
  return j;
}

void cmd_seifert(const CliConfig& cfg, std::ostream& out) {
  seifert::SeifertInvariants inv{cfg.genus, cfg.b, {}};
  for (const auto& f : cfg.fibers) inv.fibers.push_back(parse_fiber(f));
  emit(out, seifert_report(inv), parse_format(cfg.format, false));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  std::function<void(const CliConfig&, std::ostream&)> action;

  CLI::App app{"Surface complexes of the 3-torus and of Seifert fibered spaces", "surfcx"};
  app.require_subcommand(1);

  auto* torus_cmd = app.add_subcommand("torus", "Finegold's torus complex and S_1(T^3)");
  torus_cmd->require_subcommand(1);

  auto* path = torus_cmd->add_subcommand("path", "Certified path of at most two edges");
  path->add_option("A", cfg.vectors, "Endpoints, e.g. 2,3,5 0,0,1")->required()->expected(2);
  path->add_flag("--via-axis", cfg.via_axis, "Always route through the axis construction (two edges)");
  path->add_option("--format", cfg.format, "json|text");
  path->callback([&] { action = cmd_path; });

  auto* distance = torus_cmd->add_subcommand("distance", "BFS distance inside a truncation");
  distance->add_option("A", cfg.vectors, "Endpoints")->required()->expected(2);
  distance->add_option("--height", cfg.height, "Max-norm bound")->required()->check(CLI::PositiveNumber);
  distance->add_option("--dim", cfg.dim, "Dimension (2 or 3)");
  distance->add_option("--format", cfg.format, "json|text");
  distance->callback([&] { action = cmd_distance; });

  auto* simplex = torus_cmd->add_subcommand("simplex", "Simplex test with minor witnesses");
  simplex->add_option("V", cfg.vectors, "Vertices")->required();
  simplex->add_option("--complex", cfg.complex, "finegold|surface");
  simplex->add_option("--dim", cfg.dim, "Dimension n");
  simplex->add_option("--format", cfg.format, "json|text");
  simplex->callback([&] { action = cmd_simplex; });

  auto* graph = torus_cmd->add_subcommand("graph", "Export a truncated 1-skeleton");
  graph->add_option("--height", cfg.height, "Max-norm bound")->required()->check(CLI::PositiveNumber);
  graph->add_option("--kind", cfg.kind, "finegold|surface");
  graph->add_option("--dim", cfg.dim, "Dimension n (default 3)");
  graph->add_option("--format", cfg.format, "dot|json");
  graph->callback([&] { action = cmd_graph; });

  auto* diameter = torus_cmd->add_subcommand("diameter", "Diameter of a truncation");
  diameter->add_option("--height", cfg.height, "Max-norm bound")->required()->check(CLI::PositiveNumber);
  diameter->add_option("--kind", cfg.kind, "finegold|surface");
  diameter->add_option("--dim", cfg.dim, "Dimension n (default 3)");
  diameter->add_option("--format", cfg.format, "json|text");
  diameter->callback([&] { action = cmd_diameter; });

  auto* farey_cmd = app.add_subcommand("farey", "Farey graph");
  farey_cmd->require_subcommand(1);
  auto* neighbors = farey_cmd->add_subcommand("neighbors", "Farey neighbours of P,Q");
  neighbors->add_option("V", cfg.vectors, "Vertex, e.g. 1,1")->required()->expected(1);
  neighbors->add_option("--height", cfg.height, "Max-norm bound")->required()->check(CLI::PositiveNumber);
  neighbors->add_option("--format", cfg.format, "json|text");
  neighbors->callback([&] { action = cmd_farey; });

  auto* seifert_cmd = app.add_subcommand("seifert", "Seifert fibered spaces");
  seifert_cmd->require_subcommand(1);
  auto* info = seifert_cmd->add_subcommand("info", "Invariants and surface-complex structure");
  info->add_option("--genus", cfg.genus, "Base genus g")->required();
  info->add_option("--b", cfg.b, "Obstruction b")->required();
  info->add_option("--fiber", cfg.fibers, "Exceptional fiber alpha:beta (repeatable)");
  info->add_option("--format", cfg.format, "json|text");
  info->callback([&] { action = cmd_seifert; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    action(cfg, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const CertificateError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kOk;
}

}  // namespace surfcx::cli
