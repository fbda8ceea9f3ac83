#pragma once
#include "cyclo/constructions.hpp"
#include "cyclo/homology.hpp"

#include <json.hpp>

#include <functional>
#include <string>

namespace cyclo {

using Json = nlohmann::ordered_json;

// Structured-text algebra presentation:
//   # comment
//   basis: <label> <weight>
//   unit: <label>
//   window: <nat>              (optional; defaults to the max basis weight)
//   mul: <left> <right> = 0 | <term> [+ <term>]...
// with <term> either <label> or <coeff>*<label>, <coeff> an integer or p/q.
// Omitted products are zero.
AlgebraPtr parse_algebra_text(const std::string& content);

// The same schema as JSON: {"basis": [{"label","weight"}...], "unit",
// "window"?, "mul": [{"left","right","result":[{"coeff","label"}...]}...]}.
AlgebraPtr parse_algebra_json(const std::string& content);

// Reads a file (text or JSON); a non-file argument naming a catalog entry
// loads the built-in algebra.
AlgebraPtr load_algebra(const std::string& path_or_name, bool json_in, int kt_window);

struct ExperimentResult {
    std::string name;
    std::string status; // pass | fail | inconclusive
    Json detail;
    double wall_seconds = 0.0;

    int exit_code() const;
    Json to_json() const; // deterministic: no timing data
};

// Reruns once at n_max = 12 when the first pass is unstabilized.
HPReport periodic_bumped(const std::function<Mixed(int)>& build_at, HpParams p);

Json hp_report_json(const HPReport& r);

ExperimentResult run_hp(AlgebraPtr a, HpParams p);
ExperimentResult run_ft(AlgebraPtr a, HpParams p);
ExperimentResult run_graded(AlgebraPtr a, HpParams p);
ExperimentResult run_a1(AlgebraPtr a, HpParams p, int a1_t_cap);
ExperimentResult run_k0();
ExperimentResult run_simplicial(int n_max, int d);

struct ExperimentInfo {
    std::string key;
    std::string summary;
    bool in_scope;
};
std::vector<ExperimentInfo> experiment_list();

} // namespace cyclo
