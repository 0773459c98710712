#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "experiments.hpp"

namespace uwbpc {

// Sweep lists consumed by the simulate runner.
struct RunConfig {
    int realizations = 2000;
    std::uint64_t seed = 1;
    int workers = 0;  // <= 0: decide at run time (flag, env, hardware)
    std::vector<int> processing_gains;
    std::vector<AccessMode> modes;       // expanded against chips_per_frame
    std::vector<int> chips_per_frame;    // N_c values for the UWB columns
    std::vector<double> finger_fractions;
};

// Parsed scenario document: sections channel, rake, game, run. All values
// default to the stock simulation parameters, so an empty document {} is a
// complete scenario. Unknown keys are rejected. pdp_ratio is written in dB
// in the file and stored linear here.
struct ScenarioDoc {
    ChannelConfig channel;
    RakeConfig rake;   // rake.processing_gain = frames_per_symbol * chips_per_frame
    GameParams game;
    RunConfig run;

    // Single-cell scenario view (used by run_ensemble-style consumers).
    Scenario base_scenario(AccessMode mode) const;
};

ScenarioDoc parse_scenario(const std::string& text);   // throws ParseError
ScenarioDoc load_scenario(const std::string& path);    // throws ParseError

std::string default_scenario_text();

// Grid spec: semicolon-separated axes, each "name=v1,v2,..." or
// "name=start:stop:step" (inclusive). Example:
//   "lambda_db=20;rho=0.05:1:0.05;beta=0,0.25,1"
std::map<std::string, std::vector<double>> parse_grid(
    const std::string& spec, const std::vector<std::string>& allowed_axes);

double db_to_linear(double db);
double linear_to_db(double linear);

}  // namespace uwbpc
