#pragma once

#include "wittrank/knot.hpp"
#include "wittrank/realize.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace wittrank {

using json = nlohmann::ordered_json;

/// Reads and parses a JSON file; InputError on I/O or syntax failure.
json read_json_file(const std::string& path);
json parse_json_text(const std::string& text);

/// Form file: {"kind":"matrix","entries":[[expr,...],...]} or
/// {"kind":"diagonal","entries":[expr,...]}.
WittDiagonal load_form(const json& j);
HermitianMatrix load_matrix(const json& j);

StepSpec load_step(const json& j);
/// Fixture file: {"knots":[...]} or a bare list of {"label", "V"} objects,
/// where "V" may be replaced by {"sum":[ref,...]} or {"mirror":ref}.
/// References are knot expressions over the labels defined earlier.
FixtureTable load_fixtures(const json& j);

json form_to_json(const WittDiagonal& w);
json profile_to_json(const SignatureProfile& p, int plot_samples = 0);
json rank_to_json(const RankReport& r);
json ball_to_json(const BallPolygon& b);
json step_to_json(const StepSpec& s);

// Whole commands, shared by the command line and the Python module.
json run_diagonalize(const json& form);
json run_signature(const json& form, int plot_samples);
json run_rank(const json& form);
json run_realize(const json& step);
json run_norm_ball(const json& form1, const json& form2, Norm norm);
json run_knot(const json& fixtures, const std::optional<std::string>& expr);

}  // namespace wittrank
