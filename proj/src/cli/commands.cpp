#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "coffin/cli/cli.hpp"
#include "coffin/problems/problems.hpp"
#include "coffin/sketch/svg.hpp"

namespace coffin::cli {

namespace fs = std::filesystem;
using exactnum::BigRational;
using exactnum::ExactReal;
using problems::VerificationReport;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BigRational rational_of(const nlohmann::json& v) {
  if (v.is_string()) return exactnum::parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return BigRational(v.get<long long>());
  if (v.is_number()) return exactnum::parse_rational(v.dump());
  throw UsageError("expected a number or \"p/q\" string, got " + v.dump());
}

euclid::Point point_of(const nlohmann::json& v) {
  if (!v.is_array() || v.size() != 2) throw UsageError("expected [x, y], got " + v.dump());
  return {ExactReal(rational_of(v[0])), ExactReal(rational_of(v[1]))};
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

std::string render_script(const std::string& script_id, const sketch::Bindings& instance) {
  const auto trace = problems::construction_trace(script_id, instance);
  return sketch::render_svg(trace, sketch::auto_viewport(trace));
}

std::string script_for(const std::string& id) {
  const auto& ids = problems::construction_ids();
  if (std::find(ids.begin(), ids.end(), id) != ids.end()) return id;
  if (const auto* info = problems::find_problem(id); info != nullptr && !info->scripts.empty()) {
    return info->scripts.front();
  }
  if (problems::find_problem(id) != nullptr) throw UsageError(id + " has no construction to render");
  throw UsageError("unknown problem id: " + id);
}

std::string human_line(const VerificationReport& r) {
  std::ostringstream line;
  line << (r.passed() ? "✓ " : "✗ ") << r.problem_id << "  " << problems::to_string(r.status) << "  "
       << (r.status == problems::Status::Error ? r.error : r.headline);
  if (!r.passed() && r.status != problems::Status::Error) {
    for (const auto& c : r.certificates) {
      if (!c.pass) {
        line << "  [first failure: " << c.claim << ": " << c.witness << "]";
        break;
      }
    }
  }
  char ms[32];
  std::snprintf(ms, sizeof ms, "  (%.0f ms)", r.elapsed_ms);
  line << ms;
  return line.str();
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  auto reports = run_batch(config);
  fs::create_directories(config.output_dir);

  if (config.figures) {
    for (auto& r : reports) {
      const auto* info = problems::find_problem(r.problem_id);
      for (const auto& script : info->scripts) {
        const std::string name = script + ".svg";
        try {
          write_file(config.output_dir / name, render_script(script, {}));
          r.figures.push_back(name);
        } catch (const std::exception& e) {
          r.status = problems::Status::Error;
          r.error = "figure " + name + ": " + e.what();
        }
      }
    }
  }

  nlohmann::ordered_json summary;
  summary["seed"] = config.seed;
  auto rows = nlohmann::ordered_json::array();
  nlohmann::ordered_json timing;
  for (const auto& r : reports) {
    write_file(config.output_dir / (r.problem_id + ".json"), report_to_json(r).dump(2) + "\n");
    rows.push_back({{"problem", r.problem_id}, {"status", problems::to_string(r.status)}});
    timing[r.problem_id] = {{"elapsed_ms", r.elapsed_ms}};
  }
  summary["reports"] = rows;
  const int status = exit_status(reports);
  summary["exit_status"] = status;
  write_file(config.output_dir / "summary.json", summary.dump(2) + "\n");
  write_file(config.output_dir / "timing.json", timing.dump(2) + "\n");

  if (config.mode == OutputMode::Json) {
    auto all = nlohmann::ordered_json::array();
    for (const auto& r : reports) all.push_back(report_to_json(r));
    out << all.dump(2) << "\n";
  } else {
    for (const auto& r : reports) out << human_line(r) << "\n";
    const auto passed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    out << passed << "/" << reports.size() << " passed; reports in " << config.output_dir.string() << "\n";
  }
  return status;
}

int cmd_render(const std::string& id, const std::string& instance_path, const fs::path& output) {
  const std::string script = script_for(id);
  sketch::Bindings instance;
  if (!instance_path.empty()) {
    std::ifstream f(instance_path);
    if (!f) throw UsageError("cannot read instance file " + instance_path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("instance file is not valid JSON: ") + e.what());
    }
    instance = parse_instance(problems::construction_program(script), j);
  }
  write_file(output, render_script(script, instance));
  return 0;
}

int cmd_list(std::ostream& out) {
  for (const auto& info : problems::problem_catalog()) {
    std::string kind = problems::to_string(info.kind);
    kind.resize(18, ' ');
    out << info.id << "  " << kind << info.summary << "\n";
  }
  return 0;
}

}  // namespace

sketch::Bindings parse_instance(const sketch::Program& program, const nlohmann::json& json) {
  if (!json.is_object()) throw UsageError("instance file must hold a JSON object");
  sketch::Bindings out;
  for (const auto& [name, v] : json.items()) {
    const auto* param = program.find_param(name);
    if (param == nullptr) throw UsageError("script has no parameter named " + name);
    switch (param->type) {
      case sketch::ValueType::Point:
        out.emplace(name, point_of(v));
        break;
      case sketch::ValueType::Line:
        if (!v.is_array() || v.size() != 3) throw UsageError("line " + name + " must be [a, b, c]");
        out.emplace(name, euclid::Line(ExactReal(rational_of(v[0])), ExactReal(rational_of(v[1])),
                                       ExactReal(rational_of(v[2]))));
        break;
      case sketch::ValueType::Circle:
        if (!v.is_array() || v.size() != 2) throw UsageError("circle " + name + " must be [[cx, cy], r2]");
        out.emplace(name, euclid::Circle{point_of(v[0]), ExactReal(rational_of(v[1]))});
        break;
      case sketch::ValueType::Length:
      case sketch::ValueType::Ratio:
        out.emplace(name, ExactReal(rational_of(v)));
        break;
    }
  }
  return out;
}

std::vector<VerificationReport> run_batch(const RunConfig& config) {
  std::vector<std::string> ids;
  if (config.all) {
    for (const auto& info : problems::problem_catalog()) ids.push_back(info.id);
  } else {
    ids = config.ids;
  }
  for (const auto& id : ids) {
    if (problems::find_problem(id) == nullptr) throw problems::UnknownProblem("unknown problem id: " + id);
  }
  std::vector<VerificationReport> reports(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ids.size(); i = next++) reports[i] = problems::verify(ids[i], config.seed);
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(ids.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return reports;
}

int exit_status(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); }) ? 0 : 1;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification engine for the coffin problem solutions"};
  app.require_subcommand(1);

  RunConfig config;
  std::string output_dir = config.output_dir.string();
  bool json = false;
  bool human = false;
  auto* verify = app.add_subcommand("verify", "Run verifiers and write JSON reports");
  verify->add_option("ids", config.ids, "Problem ids (e.g. p01 p42)");
  verify->add_flag("--all", config.all, "Verify every problem");
  verify->add_option("--seed", config.seed, "Random seed")->default_val(0);
  verify->add_flag("--figures", config.figures, "Also render construction figures");
  auto* json_flag = verify->add_flag("--json", json, "Print reports as JSON");
  verify->add_flag("--human", human, "Print one line per problem")->excludes(json_flag);
  verify->add_option("-o,--output", output_dir, "Report directory")->default_val(output_dir);
  verify->add_option("--jobs", config.jobs, "Parallel verifiers")->default_val(1)->check(CLI::Range(1, 256));

  std::string render_id;
  std::string instance_path;
  std::string render_output;
  auto* render = app.add_subcommand("render", "Render a construction as SVG");
  render->add_option("id", render_id, "Problem or script id")->required();
  render->add_option("--instance", instance_path, "JSON file with parameter values");
  render->add_option("-o,--output", render_output, "SVG path")->required();

  auto* list = app.add_subcommand("list", "List the verified problems");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    err << app.help();
    return 2;
  }

  try {
    if (verify->parsed()) {
      if (config.all == !config.ids.empty()) throw UsageError("give problem ids or --all (not both)");
      config.output_dir = output_dir;
      config.mode = json ? OutputMode::Json : OutputMode::Human;
      return cmd_verify(config, out);
    }
    if (render->parsed()) return cmd_render(render_id, instance_path, render_output);
    if (list->parsed()) return cmd_list(out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const problems::UnknownProblem& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const sketch::SketchError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const exactnum::DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace coffin::cli
