#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ballcover/ball.hpp"
#include "ballcover/graph.hpp"
#include "ballcover/lp.hpp"
#include "ballcover/minor.hpp"

namespace ballcover {

// Graph text format: "n m", then m lines "u v" with u < v, ascending.
// The reader accepts any order and orientation but rejects loops and
// duplicates; the writer emits the canonical order.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

// Ball-system text format: one "center radius" line per ball.
BallSystem read_balls(std::istream& in, std::shared_ptr<const Graph> g);
void write_balls(std::ostream& out, const BallSystem& h);

Graph load_graph(const std::string& path);
BallSystem load_balls(const std::string& path, std::shared_ptr<const Graph> g);

nlohmann::json to_json(const FractionalSolution& w);
nlohmann::json to_json(const MinorModel& model);
nlohmann::json to_json(const DensityWitness& witness);
nlohmann::json to_json(const BroomInstance& broom);

// Throws InputError on malformed documents.
MinorModel minor_model_from_json(const nlohmann::json& doc);

}  // namespace ballcover
