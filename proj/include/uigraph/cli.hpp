// Copyright (C) 2026 The uigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Command-line front end. Lives in a header so tests can drive it in-process;
// tools/uigraph.cpp is a two-line main.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "uigraph/action.hpp"
#include "uigraph/error.hpp"
#include "uigraph/eval.hpp"
#include "uigraph/image_io.hpp"
#include "uigraph/layer_policy.hpp"
#include "uigraph/patch_grid.hpp"
#include "uigraph/sampler.hpp"
#include "uigraph/serialize.hpp"
#include "uigraph/synthetic.hpp"
#include "uigraph/token_select.hpp"
#include "uigraph/ui_graph.hpp"
#include "uigraph/vla_stream.hpp"

namespace uigraph::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Everything a run can be configured with; unused fields keep defaults.
struct RunConfig {
    std::string subcommand;
    std::string input;
    std::string output;
    std::string map_out, stats_out, overlay_out, grid_out;
    std::string raw_size;
    std::string space_file;
    std::string device = "web";
    std::string task;
    std::string mode = "training-random";
    std::string strategy = "cross";
    std::string kind = "grounding";
    std::vector<std::string> splits;
    double delta = kDefaultDelta;
    double ratio = kDefaultRatio;
    std::uint64_t seed = 0;
    std::size_t patch_size = 14;
    std::size_t merge_factor = 2;
    std::size_t history_n = kDefaultHistory;
    bool mask_visual_history = false;
    std::size_t max_turns = 4;
    std::size_t num_layers = 28;
    std::size_t insert_count = 14;
    std::size_t draws = 1000;
    std::size_t widgets = 10;
    std::size_t width = 1344;
    std::size_t height = 756;
};

namespace detail {

class Logger {
public:
    explicit Logger(std::ostream& err) : m_err(err) {
        const char* level = std::getenv("UIGRAPH_LOG");
        m_enabled = level != nullptr && *level != '\0' && std::string(level) != "0" && std::string(level) != "off";
    }
    void info(const std::string& msg) const {
        if (m_enabled) m_err << "[uigraph] " << msg << '\n';
    }

private:
    std::ostream& m_err;
    bool m_enabled = false;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::IoError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline nlohmann::json read_json(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::ParseError, path + ": " + e.what(), e.byte);
    }
}

/// Non-blank lines of a JSONL file, parsed.
inline std::vector<nlohmann::json> read_jsonl(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<nlohmann::json> out;
    std::size_t line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(nlohmann::json::parse(line));
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(Errc::ParseError, path + ":" + std::to_string(line_no) + ": " + e.what(), e.byte);
        }
    }
    return out;
}

/// Writes to `path`, or to `out` when the path is empty or "-".
inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(Errc::IoError, "cannot write " + path);
    f << text;
}

inline ActionSpace resolve_space(const RunConfig& cfg, const std::string& device) {
    if (!cfg.space_file.empty()) {
        return action_space_from_json(read_json(cfg.space_file), device.empty() ? cfg.device : device);
    }
    return builtin_space(device.empty() ? cfg.device : device);
}

inline Screenshot load_input(const RunConfig& cfg) {
    if (cfg.raw_size.empty()) return load_png(cfg.input);
    const auto x = cfg.raw_size.find('x');
    if (x == std::string::npos) throw Error(Errc::UsageError, "--raw-size expects WxH");
    return load_raw_rgb(cfg.input, std::stoul(cfg.raw_size.substr(0, x)), std::stoul(cfg.raw_size.substr(x + 1)));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Subcommands

inline void run_graph(const RunConfig& cfg, std::ostream& out, const detail::Logger& log) {
    const Screenshot shot = detail::load_input(cfg);
    const PatchGrid grid = build_grid(shot, cfg.patch_size, cfg.merge_factor);
    const ComponentMap map = build_components(grid, cfg.delta);
    const GraphStats stats = component_stats(map);
    log.info("graph: " + std::to_string(stats.token_count) + " tokens -> " + std::to_string(stats.component_count) +
             " components");
    if (!cfg.grid_out.empty()) detail::emit(cfg.grid_out, grid_to_json(grid).dump() + "\n", out);
    if (!cfg.map_out.empty()) detail::emit(cfg.map_out, component_map_to_json(map).dump() + "\n", out);
    if (!cfg.overlay_out.empty()) save_png(cfg.overlay_out, render_overlay(map, grid.patch_size));
    detail::emit(cfg.stats_out, stats_to_json(stats).dump() + "\n", out);
}

inline void run_select(const RunConfig& cfg, std::ostream& out, const detail::Logger& log) {
    const ComponentMap map = component_map_from_json(detail::read_json(cfg.input));
    SelectionMask mask;
    switch (parse_mode(cfg.mode)) {
    case SelectionMode::TrainingRandom: mask = select_training(map, cfg.ratio, cfg.seed); break;
    case SelectionMode::InferenceUniform: mask = select_inference(map, cfg.ratio); break;
    case SelectionMode::BaselineRandom: mask = select_random_baseline(map.total(), cfg.ratio, cfg.seed); break;
    case SelectionMode::None: mask = select_none(map.total()); break;
    }
    log.info("select: kept " + std::to_string(mask.kept_positions.size()) + " of " + std::to_string(mask.total));
    detail::emit(cfg.output, mask_to_json(mask).dump() + "\n", out);
}

inline void run_schedule(const RunConfig& cfg, std::ostream& out) {
    const auto sched = make_schedule(cfg.num_layers, parse_strategy(cfg.strategy), cfg.insert_count);
    detail::emit(cfg.output, schedule_to_json(sched).dump() + "\n", out);
}

inline void run_pack_nav(const RunConfig& cfg, std::ostream& out, const detail::Logger& log) {
    std::string text;
    std::size_t count = 0;
    for (const auto& line : detail::read_jsonl(cfg.input)) {
        const Episode ep = episode_from_json(line);
        const ActionSpace space = detail::resolve_space(cfg, ep.device);
        for (const auto& seq : pack_navigation(ep, space, {cfg.history_n, cfg.mask_visual_history})) {
            text += sequence_to_json(seq).dump() + "\n";
            ++count;
        }
    }
    log.info("pack-nav: " + std::to_string(count) + " sequences");
    detail::emit(cfg.output, text, out);
}

inline void run_pack_ground(const RunConfig& cfg, std::ostream& out) {
    std::string text;
    for (const auto& line : detail::read_jsonl(cfg.input)) {
        const ActionSpace space = detail::resolve_space(cfg, line.value("device", std::string{}));
        std::vector<GroundingPair> pairs;
        for (const auto& p : line.at("pairs")) {
            pairs.push_back({p.at("query").get<std::string>(), action_from_json(p.at("action"))});
        }
        for (const auto& seq : pack_grounding(line.at("image").get<std::string>(), pairs, cfg.max_turns, space)) {
            text += sequence_to_json(seq).dump() + "\n";
        }
    }
    detail::emit(cfg.output, text, out);
}

inline void run_sample(const RunConfig& cfg, std::ostream& out) {
    const auto specs = dataset_specs_from_json(detail::read_json(cfg.input));
    detail::emit(cfg.output, plan_to_jsonl(plan_draws(specs, cfg.draws, cfg.seed)), out);
}

inline void run_score(const RunConfig& cfg, std::ostream& out) {
    std::vector<ScoredItem> items;
    std::vector<std::string> metrics;
    const auto lines = detail::read_jsonl(cfg.input);
    auto tags_of = [](const nlohmann::json& j) {
        return j.contains("tags") ? j.at("tags").get<std::set<std::string>>() : std::set<std::string>{};
    };
    if (cfg.kind == "grounding") {
        metrics = {"Acc"};
        for (const auto& j : lines) {
            GroundingCase c{j.value("query", std::string{}), j.at("gt_bbox").get<Box>(),
                            j.at("pred_point").get<std::array<double, 2>>(), tags_of(j)};
            items.push_back({c.split_tags, {score_grounding(c) ? 1.0 : 0.0}});
        }
    } else if (cfg.kind == "step") {
        metrics = {"Ele.Acc", "Op.F1", "Step.SR"};
        for (const auto& j : lines) {
            const ActionSpace space = detail::resolve_space(cfg, j.value("device", std::string{}));
            std::optional<Box> box;
            if (j.contains("gt_bbox") && !j.at("gt_bbox").is_null()) box = j.at("gt_bbox").get<Box>();
            const auto s = score_step(action_from_json(j.at("pred")), action_from_json(j.at("gt")), box, space);
            items.push_back({tags_of(j), {s.element_correct ? 1.0 : 0.0, s.op_f1, s.step_success ? 1.0 : 0.0}});
        }
    } else {
        throw Error(Errc::UsageError, "--kind must be 'grounding' or 'step'");
    }
    std::vector<Split> splits;
    for (const auto& s : cfg.splits) splits.push_back(Split::parse(s));
    const MetricTable table = aggregate(items, metrics, splits);
    if (!cfg.output.empty()) detail::emit(cfg.output, table_to_json(table).dump() + "\n", out);
    out << format_table(table);
}

inline void run_readme(const RunConfig& cfg, std::ostream& out) {
    out << render_readme(detail::resolve_space(cfg, cfg.device), cfg.device, cfg.task) << '\n';
}

inline void run_synth(const RunConfig& cfg) {
    if (cfg.output.empty()) throw Error(Errc::UsageError, "synth needs --out");
    save_png(cfg.output, synthetic_sparse_ui(cfg.width, cfg.height, cfg.widgets, cfg.seed));
}

inline void dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const detail::Logger log(err);
    log.info("subcommand " + cfg.subcommand);
    if (cfg.subcommand == "graph") run_graph(cfg, out, log);
    else if (cfg.subcommand == "select") run_select(cfg, out, log);
    else if (cfg.subcommand == "schedule") run_schedule(cfg, out);
    else if (cfg.subcommand == "pack-nav") run_pack_nav(cfg, out, log);
    else if (cfg.subcommand == "pack-ground") run_pack_ground(cfg, out);
    else if (cfg.subcommand == "sample") run_sample(cfg, out);
    else if (cfg.subcommand == "score") run_score(cfg, out);
    else if (cfg.subcommand == "readme") run_readme(cfg, out);
    else if (cfg.subcommand == "synth") run_synth(cfg);
    else throw Error(Errc::UsageError, "unknown subcommand '" + cfg.subcommand + "'");
}

/// Parses flags and runs. Returns 0 on success, 1 on a library error and 2 on
/// bad usage, always with a one-line diagnostic on `err`.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    RunConfig cfg;
    CLI::App app{"UI-graph visual token selection and GUI-agent data toolkit", "uigraph"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    auto* graph = app.add_subcommand("graph", "Screenshot -> component map, stats and overlay");
    graph->add_option("-i,--input", cfg.input, "PNG (or raw RGB with --raw-size)")->required();
    graph->add_option("--raw-size", cfg.raw_size, "WxH of a headerless RGB input");
    graph->add_option("--patch-size", cfg.patch_size, "Base patch edge in pixels")->check(CLI::PositiveNumber);
    graph->add_option("--merge-factor", cfg.merge_factor, "Patch merge factor")->check(CLI::PositiveNumber);
    graph->add_option("--delta", cfg.delta, "RGB distance threshold (strict <)")->check(CLI::NonNegativeNumber);
    graph->add_option("--map-out", cfg.map_out, "Component map JSON");
    graph->add_option("--stats-out", cfg.stats_out, "Graph stats JSON (default stdout)");
    graph->add_option("--overlay-out", cfg.overlay_out, "Overlay PNG");
    graph->add_option("--grid-out", cfg.grid_out, "Patch grid JSON");

    auto* select = app.add_subcommand("select", "Component map -> selection mask");
    select->add_option("-i,--map", cfg.input, "Component map JSON")->required();
    select->add_option("--mode", cfg.mode, "training-random | inference-uniform | baseline-random | none");
    select->add_option("--ratio", cfg.ratio, "Skip ratio in [0, 1]")->check(CLI::Range(0.0, 1.0));
    select->add_option("--seed", cfg.seed, "PRNG seed");
    select->add_option("-o,--out", cfg.output, "Mask JSON (default stdout)");

    auto* schedule = app.add_subcommand("schedule", "Layer insertion schedule");
    schedule->add_option("--layers", cfg.num_layers, "Number of layers")->check(CLI::PositiveNumber);
    schedule->add_option("--strategy", cfg.strategy, "all | early | late | cross");
    schedule->add_option("--count", cfg.insert_count, "Layers with selection");
    schedule->add_option("-o,--out", cfg.output, "Schedule JSON (default stdout)");

    auto* pack_nav = app.add_subcommand("pack-nav", "Episode JSONL -> action-visual sequences");
    pack_nav->add_option("-i,--episodes", cfg.input, "Episode JSONL")->required();
    pack_nav->add_option("--history", cfg.history_n, "Past (image, action) pairs kept");
    pack_nav->add_flag("--mask-visual-history", cfg.mask_visual_history, "Replace past images by placeholders");
    pack_nav->add_option("--space", cfg.space_file, "Action space JSON (default: built-in for the device)");
    pack_nav->add_option("-o,--out", cfg.output, "Sequence JSONL (default stdout)");

    auto* pack_ground = app.add_subcommand("pack-ground", "Grounding JSONL -> action-query sequences");
    pack_ground->add_option("-i,--input", cfg.input, "Lines of {image, device, pairs:[{query, action}]}")->required();
    pack_ground->add_option("--max-turns", cfg.max_turns, "Turns per sequence")->check(CLI::PositiveNumber);
    pack_ground->add_option("--space", cfg.space_file, "Action space JSON");
    pack_ground->add_option("--device", cfg.device, "Default device when a line has none");
    pack_ground->add_option("-o,--out", cfg.output, "Sequence JSONL (default stdout)");

    auto* sample = app.add_subcommand("sample", "Dataset specs -> balanced draw plan");
    sample->add_option("-i,--specs", cfg.input, "JSON list of {name, size, weight}")->required();
    sample->add_option("-n,--draws", cfg.draws, "Number of draws")->check(CLI::PositiveNumber);
    sample->add_option("--seed", cfg.seed, "PRNG seed");
    sample->add_option("-o,--out", cfg.output, "Plan JSONL (default stdout)");

    auto* score = app.add_subcommand("score", "Cases JSONL -> metric report");
    score->add_option("-i,--cases", cfg.input, "Cases JSONL")->required();
    score->add_option("--kind", cfg.kind, "grounding | step");
    score->add_option("--splits", cfg.splits, "Splits, each a tag or tags joined by '&'")->delimiter(',');
    score->add_option("--space", cfg.space_file, "Action space JSON (step scoring)");
    score->add_option("--device", cfg.device, "Built-in space for step scoring");
    score->add_option("-o,--json-out", cfg.output, "Report JSON");

    auto* readme = app.add_subcommand("readme", "Render the action README prompt");
    readme->add_option("--device", cfg.device, "web | mobile | miniwob");
    readme->add_option("--task", cfg.task, "Task text");
    readme->add_option("--space", cfg.space_file, "Action space JSON");

    auto* synth = app.add_subcommand("synth", "Write a synthetic sparse-UI screenshot");
    synth->add_option("-o,--out", cfg.output, "PNG path");
    synth->add_option("--width", cfg.width)->check(CLI::PositiveNumber);
    synth->add_option("--height", cfg.height)->check(CLI::PositiveNumber);
    synth->add_option("--widgets", cfg.widgets);
    synth->add_option("--seed", cfg.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "UsageError: " << e.what() << '\n';
        return 2;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();

    try {
        dispatch(cfg, out, err);
    } catch (const Error& e) {
        err << e.what() << '\n';
        return e.code() == Errc::UsageError ? 2 : 1;
    } catch (const nlohmann::json::exception& e) {
        err << "ParseError: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "Error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace uigraph::cli
