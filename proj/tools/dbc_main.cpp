// Command-line front end: series computation with a disk cache, identity
// verification harnesses, JSON graph/config dumps, and SVG rendering.
//
// Exit codes: 0 pass, 1 verified mismatch, 2 usage error, 3 resource
// ceiling (stabilization did not converge below the window limit).

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dbc/cache.hpp"
#include "dbc/condense.hpp"
#include "dbc/doublebox.hpp"
#include "dbc/doubledimer.hpp"
#include "dbc/hexlattice.hpp"
#include "dbc/planepart.hpp"
#include "dbc/qseries.hpp"
#include "dbc/render.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCeiling = 3;

struct CommonOpts {
  int a = 0, b = 0, c = 0;
  int trunc = 6;
  int window = -1;
  int n_ceiling = 8;
  std::string format = "table";
  std::string cache_dir = dbc::ResultCache::default_dir();
  bool no_cache = false;
  int jobs = 0;
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("-a", o.a, "box parameter a")->check(CLI::NonNegativeNumber);
  cmd->add_option("-b", o.b, "box parameter b")->check(CLI::NonNegativeNumber);
  cmd->add_option("-c", o.c, "box parameter c")->check(CLI::NonNegativeNumber);
  cmd->add_option("--trunc", o.trunc, "truncation order N")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--window", o.window, "fixed window size n (no limit)");
  cmd->add_option("--n-ceiling", o.n_ceiling, "stabilization window ceiling");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--cache-dir", o.cache_dir, "cache directory");
  cmd->add_flag("--no-cache", o.no_cache, "bypass the result cache");
  cmd->add_option("--jobs", o.jobs, "parallelism degree (0 = all cores)");
  cmd->add_option("--out", o.out, "write the JSON report to this file");
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream f(out);
    f << text;
  }
}

std::string format_series(const nlohmann::json& payload,
                          const std::string& format) {
  if (format == "json") return payload.dump();
  std::ostringstream os;
  const auto& coeffs = payload.at("coeffs");
  if (format == "csv") {
    for (size_t k = 0; k < coeffs.size(); ++k)
      os << k << "," << coeffs[k].get<std::string>() << "\n";
  } else {
    os << "k\tcoefficient\n";
    for (size_t k = 0; k < coeffs.size(); ++k)
      os << k << "\t" << coeffs[k].get<std::string>() << "\n";
  }
  return os.str();
}

int cmd_series(const std::string& kind, const CommonOpts& o) {
  dbc::ResultCache cache(o.cache_dir, !o.no_cache);
  std::ostringstream keys;
  keys << "series_" << kind << "_" << o.a << "_" << o.b << "_" << o.c << "_t"
       << o.trunc;
  if (kind == "zddc")
    keys << "_w" << o.window << "_ceil" << o.n_ceiling;
  std::string key = keys.str();

  nlohmann::json payload;
  if (auto hit = cache.get(key)) {
    payload = nlohmann::json::parse(*hit);
  } else {
    dbc::QSeries series(o.trunc);
    payload["kind"] = kind;
    payload["params"] = {o.a, o.b, o.c};
    try {
      if (kind == "macmahon") {
        series = dbc::macmahon(o.trunc);
      } else if (kind == "box") {
        series = dbc::macmahon_box(o.a, o.b, o.c, o.trunc);
      } else if (kind == "zdbc") {
        series = dbc::zdbc(o.a, o.b, o.c, o.trunc, o.jobs);
      } else if (kind == "x") {
        series = dbc::x_series(o.a, o.b, o.c, o.trunc);
      } else if (kind == "zddc") {
        if (o.window > 0) {
          dbc::WindowSeries w =
              dbc::zddc_window(o.a, o.b, o.c, o.window, o.trunc, o.jobs);
          series = w.series;
          payload["window"] = w.n;
        } else {
          dbc::StabilizedSeries s =
              dbc::zddc(o.a, o.b, o.c, o.trunc, o.n_ceiling, o.jobs);
          series = s.series;
          payload["stabilized_at"] = s.stabilized_at;
        }
      }
    } catch (const dbc::StabilizationError& e) {
      payload["error"] = e.what();
      payload["partial"] = nlohmann::json::parse(e.partial.to_json());
      emit(payload.dump(), o.out);
      return kExitCeiling;
    }
    nlohmann::json sj = nlohmann::json::parse(series.to_json());
    payload["trunc_order"] = sj["trunc_order"];
    payload["coeffs"] = sj["coeffs"];
    cache.put(key, payload.dump());
  }
  emit(format_series(payload, o.format), o.out);
  return kExitPass;
}

int cmd_verify_main(const CommonOpts& o, bool with_ddc) {
  try {
    dbc::MainReport r = dbc::verify_main(o.a, o.b, o.c, o.trunc, with_ddc,
                                         o.n_ceiling, o.jobs);
    if (o.format == "json")
      emit(r.to_json(), o.out);
    else {
      std::cout << "verify main (a,b,c)=(" << o.a << "," << o.b << "," << o.c
                << ") N=" << o.trunc << ": " << (r.pass ? "PASS" : "FAIL");
      if (r.first_mismatch_dbc_x)
        std::cout << "  first mismatch zdbc vs M^2 M_box at q^"
                  << *r.first_mismatch_dbc_x;
      if (r.first_mismatch_ddc)
        std::cout << "  first mismatch zddc at q^" << *r.first_mismatch_ddc;
      std::cout << "\n";
      if (!o.out.empty()) emit(r.to_json(), o.out);
    }
    return r.pass ? kExitPass : kExitMismatch;
  } catch (const dbc::StabilizationError& e) {
    std::cerr << "stabilization ceiling: " << e.what() << "\n";
    return kExitCeiling;
  }
}

int cmd_verify_recurrence(const CommonOpts& o, int grid) {
  bool all_pass = true;
  auto run_point = [&](int a, int b, int c) {
    dbc::RecurrenceReport rm = dbc::check_m_recurrence(a, b, c, o.trunc);
    dbc::RecurrenceReport rx = dbc::check_x_recurrence(a, b, c, o.trunc);
    bool ok = rm.pass && rx.pass && (rm.pass == rx.pass);
    if (!ok) {
      std::cout << "FAIL at (a,b,c)=(" << a << "," << b << "," << c << ")";
      if (rm.first_mismatch)
        std::cout << " first mismatch q^" << *rm.first_mismatch;
      std::cout << "\n";
    }
    all_pass = all_pass && ok;
  };
  if (grid < 0)
    run_point(o.a, o.b, o.c);
  else
    all_pass = dbc::check_recurrence_grid(grid, o.trunc, o.jobs);
  std::cout << "verify recurrence"
            << (grid >= 0 ? " grid " + std::to_string(grid) : "")
            << " N=" << o.trunc << ": " << (all_pass ? "PASS" : "FAIL")
            << "\n";
  return all_pass ? kExitPass : kExitMismatch;
}

int cmd_verify_bijection(const CommonOpts& o) {
  int n = o.window > 0 ? o.window : 3;
  dbc::HexGraph g = dbc::HexGraph::build(n);
  dbc::Matching min_m = dbc::to_matching(dbc::PlanePartition(), g);
  int min_expo = dbc::gauge_exponent(g, min_m);
  bool pass = true;
  for (const auto& pp : dbc::enumerate_boxed(n, n, n)) {
    dbc::Matching m = dbc::to_matching(pp, g);
    if (dbc::from_matching(g, m) != pp) pass = false;
    if (dbc::gauge_exponent(g, m) - min_expo != pp.volume()) pass = false;
  }
  std::cout << "verify bijection n=" << n << ": " << (pass ? "PASS" : "FAIL")
            << "\n";
  return pass ? kExitPass : kExitMismatch;
}

int cmd_verify_stabilization(const CommonOpts& o) {
  try {
    dbc::StabilizedSeries s =
        dbc::zddc(o.a, o.b, o.c, o.trunc, o.n_ceiling, o.jobs);
    nlohmann::json j;
    j["params"] = {o.a, o.b, o.c};
    j["trunc_order"] = o.trunc;
    j["stabilized_at"] = s.stabilized_at;
    j["series"] = nlohmann::json::parse(s.series.to_json());
    if (o.format == "json")
      emit(j.dump(), o.out);
    else {
      std::cout << "verify stabilization (a,b,c)=(" << o.a << "," << o.b
                << "," << o.c << ") N=" << o.trunc << ": PASS (stabilized at n="
                << s.stabilized_at << ")\n";
      if (!o.out.empty()) emit(j.dump(), o.out);
    }
    return kExitPass;
  } catch (const dbc::StabilizationError& e) {
    nlohmann::json j;
    j["error"] = e.what();
    j["partial"] = nlohmann::json::parse(e.partial.to_json());
    emit(j.dump(), o.out);
    return kExitCeiling;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_render(const std::string& object, const std::string& in_path,
               const std::string& out_path, int n) {
  std::string svg;
  if (object == "pp") {
    dbc::PlanePartition pp = dbc::PlanePartition::from_json(read_file(in_path));
    int nn = n > 0 ? n : std::max(1, pp.extent());
    svg = dbc::render_pp_svg(pp, nn);
  } else if (object == "dbc") {
    auto j = nlohmann::json::parse(read_file(in_path));
    dbc::DoubleBoxClass cls;
    cls.typing.a = j.at("params").at(0).get<int>();
    cls.typing.b = j.at("params").at(1).get<int>();
    cls.typing.c = j.at("params").at(2).get<int>();
    auto boxes = [](const nlohmann::json& arr) {
      std::vector<dbc::Box> v;
      for (const auto& t : arr)
        v.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
      return v;
    };
    for (int m = 0; m < 3; ++m)
      cls.typing.type1[m] = boxes(j.at("type1").at(m));
    cls.typing.type2 = boxes(j.at("type2"));
    cls.typing.type3 = boxes(j.at("type3"));
    cls.weight = dbc::weight(cls.typing);
    cls.moveable = boxes(j.at("moveable"));
    svg = dbc::render_dbc_svg(cls);
  } else if (object == "ddc") {
    auto j = nlohmann::json::parse(read_file(in_path));
    int nn = j.at("n").get<int>();
    dbc::HexGraph g = dbc::HexGraph::build(nn);
    std::vector<uint8_t> mult(g.edges().size(), 0);
    int nodes_a = 0, nodes_b = 0, nodes_c = 0;
    if (j.contains("params")) {
      nodes_a = j.at("params").at(0).get<int>();
      nodes_b = j.at("params").at(1).get<int>();
      nodes_c = j.at("params").at(2).get<int>();
    }
    for (const auto& em : j.at("edge_multiset")) {
      auto vid = [&](const nlohmann::json& v) {
        int id = g.vertex_id(v.at(0).get<int>(), v.at(1).get<int>(),
                             v.at(2).get<bool>());
        if (id < 0) throw std::runtime_error("vertex outside H(n): /edge_multiset");
        return id;
      };
      int va = vid(em.at(0)), vb = vid(em.at(1));
      int e = g.edge_between(va, vb);
      if (e < 0) throw std::runtime_error("not an edge of H(n): /edge_multiset");
      mult[e] = (uint8_t)em.at(2).get<int>();
    }
    dbc::NodeSpec spec = dbc::place_nodes(g, nodes_a, nodes_b, nodes_c);
    dbc::DoubleDimerConfig cfg = dbc::make_config(g, spec, std::move(mult), 0);
    svg = dbc::render_ddc_svg(g, cfg, spec);
  } else {
    return kExitUsage;
  }
  emit(svg, out_path);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"double-box / double-dimer enumeration and verification"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string series_kind, verify_target, render_object;
  std::string in_path, out_path;
  int grid = -1;
  int render_n = -1;
  bool with_ddc = false;

  CLI::App* series = app.add_subcommand("series", "compute a series");
  series->add_option("kind", series_kind, "macmahon|box|zdbc|zddc|x")
      ->required()
      ->check(CLI::IsMember({"macmahon", "box", "zdbc", "zddc", "x"}));
  add_common(series, o);

  CLI::App* verify = app.add_subcommand("verify", "run a verification");
  verify->add_option("target", verify_target,
                     "main|recurrence|bijection|stabilization")
      ->required()
      ->check(CLI::IsMember({"main", "recurrence", "bijection",
                             "stabilization"}));
  add_common(verify, o);
  verify->add_option("--grid", grid, "check the whole parameter grid");
  verify->add_flag("--ddc", with_ddc, "also compare the double-dimer series");

  CLI::App* render = app.add_subcommand("render", "render an object to SVG");
  render->add_option("object", render_object, "pp|dbc|ddc")
      ->required()
      ->check(CLI::IsMember({"pp", "dbc", "ddc"}));
  render->add_option("--in", in_path, "input JSON file")->required();
  render->add_option("--out", out_path, "output SVG file")->required();
  render->add_option("-n", render_n, "window size for pp rendering");

  CLI::App* graph = app.add_subcommand("graph", "dump H(n) as JSON");
  int graph_n = 2;
  std::string graph_out;
  graph->add_option("-n", graph_n, "hexagon side")->required();
  graph->add_option("--out", graph_out, "output file");
  graph->add_option("-a", o.a, "node parameter a");
  graph->add_option("-b", o.b, "node parameter b");
  graph->add_option("-c", o.c, "node parameter c");

  CLI::App* dump = app.add_subcommand(
      "dump", "dump double-box classes or double-dimer configs as JSON");
  std::string dump_object;
  dump->add_option("object", dump_object, "dbc|ddc")
      ->required()
      ->check(CLI::IsMember({"dbc", "ddc"}));
  add_common(dump, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (series->parsed()) return cmd_series(series_kind, o);
    if (verify->parsed()) {
      if (verify_target == "main") return cmd_verify_main(o, with_ddc);
      if (verify_target == "recurrence") return cmd_verify_recurrence(o, grid);
      if (verify_target == "bijection") return cmd_verify_bijection(o);
      return cmd_verify_stabilization(o);
    }
    if (render->parsed())
      return cmd_render(render_object, in_path, out_path, render_n);
    if (graph->parsed()) {
      dbc::HexGraph g = dbc::HexGraph::build(graph_n);
      auto j = nlohmann::json::parse(g.to_json());
      if (o.a || o.b || o.c) {
        dbc::NodeSpec spec = dbc::place_nodes(g, o.a, o.b, o.c);
        auto coord = [&](int v) {
          const auto& vx = g.verts()[v];
          return nlohmann::json{vx.u, vx.t, vx.east};
        };
        nlohmann::json nodes;
        for (auto [name, list] :
             {std::pair{"red", &spec.red}, {"green", &spec.green},
              {"blue", &spec.blue}}) {
          auto arr = nlohmann::json::array();
          for (int v : *list) arr.push_back(coord(v));
          nodes[name] = arr;
        }
        j["nodes"] = nodes;
      }
      emit(j.dump(), graph_out);
      return kExitPass;
    }
    if (dump->parsed()) {
      std::ostringstream os;
      if (dump_object == "dbc") {
        auto classes =
            dbc::enumerate_classes(o.a, o.b, o.c, o.trunc, o.jobs);
        os << "[";
        for (size_t i = 0; i < classes.size(); ++i)
          os << (i ? "," : "") << classes[i].to_json();
        os << "]";
      } else {
        int n = o.window > 0 ? o.window : std::max(1, o.a + o.b + o.c);
        dbc::HexGraph g = dbc::HexGraph::build(n);
        dbc::NodeSpec spec = dbc::place_nodes(g, o.a, o.b, o.c);
        auto configs = dbc::enumerate_ddc(g, spec, o.trunc, o.jobs);
        os << "[";
        for (size_t i = 0; i < configs.size(); ++i)
          os << (i ? "," : "") << configs[i].to_json(g);
        os << "]";
      }
      emit(os.str(), o.out);
      return kExitPass;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
