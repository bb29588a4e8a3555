// Copyright (C) 2026 The uigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "uigraph/action.hpp"
#include "uigraph/error.hpp"

namespace uigraph {

/// [x0, y0, x1, y1] in relative coordinates.
using Box = std::array<double, 4>;

struct GroundingCase {
    std::string query;
    Box gt_bbox{};
    std::array<double, 2> pred_point{};
    std::set<std::string> split_tags;
};

/// Closed box: edge hits count.
inline bool point_in_box(const std::array<double, 2>& p, const Box& b) noexcept {
    return b[0] <= p[0] && p[0] <= b[2] && b[1] <= p[1] && p[1] <= b[3];
}

inline bool score_grounding(const GroundingCase& c) { return point_in_box(c.pred_point, c.gt_bbox); }

struct StepScore {
    bool element_correct = false;
    double op_f1 = 0.0;
    bool step_success = false;
};

/// Lower-cased whitespace tokens of "action value".
inline std::vector<std::string> operation_tokens(const ActionRecord& rec) {
    std::string text = rec.action;
    if (rec.value) {
        text += ' ';
        text += *rec.value;
    }
    std::transform(text.begin(), text.end(), text.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    std::istringstream in(text);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) {
        out.push_back(std::move(tok));
    }
    return out;
}

/// Multiset token F1 between two operation strings.
inline double operation_f1(const ActionRecord& pred, const ActionRecord& gt) {
    const auto p = operation_tokens(pred);
    const auto g = operation_tokens(gt);
    if (p.empty() || g.empty()) {
        return p.empty() && g.empty() ? 1.0 : 0.0;
    }
    std::map<std::string, std::size_t> remaining;
    for (const auto& t : g) ++remaining[t];
    std::size_t overlap = 0;
    for (const auto& t : p) {
        auto it = remaining.find(t);
        if (it != remaining.end() && it->second > 0) {
            --it->second;
            ++overlap;
        }
    }
    if (overlap == 0) {
        return 0.0;
    }
    const double precision = static_cast<double>(overlap) / static_cast<double>(p.size());
    const double recall = static_cast<double>(overlap) / static_cast<double>(g.size());
    return 2.0 * precision * recall / (precision + recall);
}

inline bool iequals(std::string_view a, std::string_view b) noexcept {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](unsigned char x, unsigned char y) {
               return std::tolower(x) == std::tolower(y);
           });
}

/// Element / operation / step scoring for one navigation step. When the
/// ground-truth action takes a position, the element is correct only if the
/// predicted point lands in `gt_bbox`; a missing box counts as a miss.
inline StepScore score_step(const ActionRecord& pred, const ActionRecord& gt, const std::optional<Box>& gt_bbox,
                            const ActionSpace& space) {
    const ActionSpaceEntry* gt_entry = space.find(gt.action);
    if (gt_entry == nullptr || space.find(pred.action) == nullptr) {
        throw Error(Errc::SpaceMismatch, "actions '" + pred.action + "' / '" + gt.action +
                                             "' are not both in the " + space.device() + " space");
    }
    StepScore score;
    if (gt_entry->requires_position) {
        score.element_correct = pred.position && gt_bbox && point_in_box(*pred.position, *gt_bbox);
    } else {
        score.element_correct = true;
    }
    score.op_f1 = operation_f1(pred, gt);
    bool value_ok = true;
    if (gt_entry->requires_value) {
        value_ok = pred.value && gt.value && iequals(*pred.value, *gt.value);
    }
    score.step_success = score.element_correct && pred.action == gt.action && value_ok;
    return score;
}

// ---------------------------------------------------------------------------
// Aggregation

/// A split is named by the tags a case must all carry, written "a&b".
struct Split {
    std::string name;
    std::set<std::string> required;

    static Split parse(std::string_view spec) {
        Split s{std::string(spec), {}};
        std::size_t start = 0;
        while (start <= spec.size()) {
            const std::size_t amp = spec.find('&', start);
            const auto part = spec.substr(start, amp == std::string_view::npos ? std::string_view::npos : amp - start);
            if (!part.empty()) {
                s.required.emplace(part);
            }
            if (amp == std::string_view::npos) break;
            start = amp + 1;
        }
        return s;
    }
};

struct ScoredItem {
    std::set<std::string> tags;
    std::vector<double> values;  // one per metric, each in [0, 1]
};

struct MetricRow {
    std::string split;
    std::size_t count = 0;
    std::vector<double> values;  // percent
};

struct MetricTable {
    std::vector<std::string> metrics;
    std::vector<MetricRow> rows;   // non-empty splits only
    std::vector<double> average;   // unweighted mean of the rows, percent
};

inline double macro_average(std::span<const double> cells) {
    if (cells.empty()) {
        throw Error(Errc::InvalidArgument, "nothing to average");
    }
    return std::accumulate(cells.begin(), cells.end(), 0.0) / static_cast<double>(cells.size());
}

/// Per-split means (as percentages) and their macro average. With no splits
/// listed, every distinct tag becomes its own split; with no tags at all, a
/// single "all" split covers everything. Empty splits are left out.
inline MetricTable aggregate(std::span<const ScoredItem> items, std::vector<std::string> metrics,
                             std::vector<Split> splits = {}) {
    if (items.empty()) {
        throw Error(Errc::InvalidArgument, "no scores to aggregate");
    }
    for (const auto& item : items) {
        if (item.values.size() != metrics.size()) {
            throw Error(Errc::LengthMismatch, "scored item does not carry one value per metric");
        }
    }
    if (splits.empty()) {
        std::set<std::string> tags;
        for (const auto& item : items) tags.insert(item.tags.begin(), item.tags.end());
        for (const auto& t : tags) splits.push_back({t, {t}});
        if (splits.empty()) splits.push_back({"all", {}});
    }

    MetricTable table;
    table.metrics = std::move(metrics);
    for (const auto& split : splits) {
        MetricRow row{split.name, 0, std::vector<double>(table.metrics.size(), 0.0)};
        for (const auto& item : items) {
            if (std::includes(item.tags.begin(), item.tags.end(), split.required.begin(), split.required.end())) {
                ++row.count;
                for (std::size_t m = 0; m < row.values.size(); ++m) row.values[m] += item.values[m];
            }
        }
        if (row.count == 0) {
            continue;
        }
        for (double& v : row.values) v = 100.0 * v / static_cast<double>(row.count);
        table.rows.push_back(std::move(row));
    }
    if (table.rows.empty()) {
        throw Error(Errc::InvalidArgument, "no case matches any listed split");
    }
    table.average.assign(table.metrics.size(), 0.0);
    for (std::size_t m = 0; m < table.metrics.size(); ++m) {
        std::vector<double> cells;
        for (const auto& row : table.rows) cells.push_back(row.values[m]);
        table.average[m] = macro_average(cells);
    }
    return table;
}

inline std::string format_table(const MetricTable& table) {
    std::size_t name_w = 5;  // "Split"
    for (const auto& row : table.rows) name_w = std::max(name_w, row.split.size());
    std::size_t col_w = 8;
    for (const auto& m : table.metrics) col_w = std::max(col_w, m.size() + 2);

    auto pad_left = [](std::string s, std::size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; };
    auto pad_right = [](std::string s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); };
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.1f", v);
        return std::string(buf);
    };

    std::string out = pad_right("Split", name_w) + pad_left("N", 8);
    for (const auto& m : table.metrics) out += pad_left(m, col_w);
    out += '\n';
    for (const auto& row : table.rows) {
        out += pad_right(row.split, name_w) + pad_left(std::to_string(row.count), 8);
        for (double v : row.values) out += pad_left(num(v), col_w);
        out += '\n';
    }
    out += pad_right("Avg.", name_w) + pad_left("", 8);
    for (double v : table.average) out += pad_left(num(v), col_w);
    out += '\n';
    return out;
}

inline nlohmann::json table_to_json(const MetricTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        rows.push_back({{"split", row.split}, {"count", row.count}, {"values", row.values}});
    }
    return {{"schema_version", 1}, {"metrics", table.metrics}, {"rows", std::move(rows)}, {"average", table.average}};
}

}  // namespace uigraph
