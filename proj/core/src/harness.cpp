#include "gather/harness.hpp"

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "gather/error.hpp"
#include "gather/io.hpp"

namespace gather {

Swarm GeneratorSpec::build() const {
  if (kind == "square_ring") return square_ring(side);
  if (kind == "filled_rect") return filled_rect(width, height);
  if (kind == "line")
    return line(length, orientation == "vertical" ? Orientation::vertical
                                                  : Orientation::horizontal);
  if (kind == "cross") return cross(arm);
  if (kind == "hourglass") return hourglass(block);
  if (kind == "random_connected") return random_connected(n, seed);
  throw invalid_input("unknown generator kind: " + kind);
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ExperimentConfig cfg;
  cfg.sim.max_rounds = j.value("max_rounds", std::int64_t{0});
  cfg.sim.strict_conflicts = j.value("strict", true);
  cfg.sim.lemma_checks = j.value("lemma_checks", true);
  cfg.sim.record_trace = j.value("record_trace", true);
  cfg.output_dir = j.value("output_dir", std::string("out"));
  cfg.render = j.value("render", false);

  if (!j.contains("runs") || !j["runs"].is_array() || j["runs"].empty())
    throw invalid_input("config: needs a nonempty 'runs' array");
  int index = 0;
  for (const auto& r : j["runs"]) {
    RunSpec spec;
    spec.name = r.value("name", "run" + std::to_string(index));
    if (r.contains("file")) {
      spec.input = r["file"].get<std::string>();
    } else if (r.contains("generator")) {
      const auto& g = r["generator"];
      GeneratorSpec gen;
      gen.kind = g.value("kind", "");
      gen.side = g.value("side", std::int64_t{0});
      gen.width = g.value("width", std::int64_t{0});
      gen.height = g.value("height", std::int64_t{0});
      gen.length = g.value("length", std::int64_t{0});
      gen.orientation = g.value("orientation", "horizontal");
      gen.arm = g.value("arm", std::int64_t{0});
      gen.block = g.value("block", std::int64_t{0});
      gen.n = g.value("n", std::int64_t{0});
      gen.seed = g.value("seed", std::uint64_t{0});
      spec.input = gen;
    } else {
      throw invalid_input("config run '" + spec.name +
                          "': needs 'file' or 'generator'");
    }
    cfg.runs.push_back(std::move(spec));
    ++index;
  }
  return cfg;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  return from_json_text(read_file(path));
}

std::string render_frame(const Swarm& s) { return render_text_map(s); }

namespace {

std::string format_ratio(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string trace_to_jsonl(const Trace& trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.measures_per_round.size(); ++i) {
    nlohmann::json j;
    j["round"] = i;
    const ProgressMeasures& m = trace.measures_per_round[i];
    j["boundary_len"] = m.boundary_len;
    j["convex_count"] = m.convex_count;
    j["convex_measure"] = m.convex_measure;
    j["area"] = m.area;
    if (i == 0) {
      j["hops"] = nlohmann::json::array();
      j["merges"] = 0;
      j["robots"] = trace.initial.size();
    } else {
      const RoundResult& rr = trace.rounds[i - 1];
      nlohmann::json hops = nlohmann::json::array();
      for (const auto& [from, to] : rr.hops)
        hops.push_back({{"from", {from.x, from.y}}, {"to", {to.x, to.y}}});
      j["hops"] = std::move(hops);
      j["merges"] = rr.merges;
      j["robots"] = rr.robots_after;
    }
    out << j.dump() << "\n";
  }
  return out.str();
}

std::string summary_to_csv(const ExperimentSummary& summary) {
  std::ostringstream out;
  out << "name,n,initial_boundary,rounds,bound,rounds_per_b2,lemma_violations,"
         "merges_total,cumulative_area_increase,outcome\n";
  for (const RunSummary& r : summary.rows) {
    out << r.name << ',' << r.n << ',' << r.initial_boundary << ',' << r.rounds
        << ',' << r.bound << ',' << format_ratio(r.rounds_per_b2) << ','
        << r.lemma_violations << ',' << r.merges_total << ','
        << r.cumulative_area_increase << ',' << r.outcome << "\n";
  }
  return out.str();
}

ExperimentSummary run_experiments(const ExperimentConfig& cfg,
                                  const PatternLibrary& lib) {
  namespace fs = std::filesystem;
  fs::create_directories(cfg.output_dir);

  ExperimentSummary summary;
  summary.all_ok = true;

  for (const RunSpec& spec : cfg.runs) {
    RunSummary row;
    row.name = spec.name;
    Swarm start;
    try {
      if (std::holds_alternative<std::string>(spec.input))
        start = load_swarm_file(std::get<std::string>(spec.input));
      else
        start = std::get<GeneratorSpec>(spec.input).build();
      if (!is_connected(start))
        throw invalid_input("initial swarm is not 4-connected");

      row.n = static_cast<std::int64_t>(start.size());
      const ProgressMeasures m0 = measures(start);
      row.initial_boundary = m0.boundary_len;
      row.bound = gathering_round_bound(m0.boundary_len);

      SimConfig sim = cfg.sim;
      sim.lemma_checks = true;  // the harness always monitors the lemmas
      const Trace trace = run(start, lib, sim);

      row.merges_total = 0;
      for (const RoundResult& rr : trace.rounds) row.merges_total += rr.merges;
      for (std::size_t i = 1; i < trace.measures_per_round.size(); ++i) {
        const std::int64_t delta = trace.measures_per_round[i].area -
                                   trace.measures_per_round[i - 1].area;
        if (delta > 0) row.cumulative_area_increase += delta;
      }

      if (trace.outcome == Outcome::Gathered) {
        row.rounds = trace.gathered_round;
        const double b2 = static_cast<double>(m0.boundary_len) *
                          static_cast<double>(m0.boundary_len);
        row.rounds_per_b2 = b2 > 0 ? static_cast<double>(row.rounds) / b2 : 0.0;
        row.outcome = "gathered";
        if (row.rounds > row.bound) {
          row.outcome = "bound_exceeded";
          summary.all_ok = false;
        }
      } else {
        row.outcome = "max_rounds";
        summary.all_ok = false;
      }

      write_file((fs::path(cfg.output_dir) / (spec.name + ".jsonl")).string(),
                 trace_to_jsonl(trace));
    } catch (const lemma_violation& e) {
      row.lemma_violations = 1;
      row.outcome = std::string("error:") + e.what();
      summary.all_ok = false;
    } catch (const error& e) {
      row.outcome = std::string("error:") + e.what();
      summary.all_ok = false;
    }
    summary.rows.push_back(std::move(row));
  }

  write_file((fs::path(cfg.output_dir) / "summary.csv").string(),
             summary_to_csv(summary));
  return summary;
}

}  // namespace gather
