// Copyright (C) 2026 The uigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "uigraph/error.hpp"

namespace uigraph {

/// One documented action: what it does and which parameters it takes.
struct ActionSpaceEntry {
    std::string name;         // upper-case token, e.g. "CLICK" or "PRESS HOME"
    std::string description;  // one sentence, no trailing period
    bool requires_value = false;
    bool requires_position = false;
    std::string value_hint;   // e.g. "the string to type"; used only when requires_value
    std::set<std::string> device_tags;

    friend bool operator==(const ActionSpaceEntry&, const ActionSpaceEntry&) = default;
};

class ActionSpace {
public:
    ActionSpace() = default;

    ActionSpace(std::string device, std::vector<ActionSpaceEntry> entries)
        : m_device(std::move(device)), m_entries(std::move(entries)) {
        if (m_entries.empty()) {
            throw Error(Errc::InvalidArgument, "action space is empty");
        }
        std::set<std::string> seen;
        for (const auto& e : m_entries) {
            if (e.name.empty() || e.description.empty()) {
                throw Error(Errc::InvalidArgument, "action entries need a name and a description");
            }
            if (!seen.insert(e.name).second) {
                throw Error(Errc::InvalidArgument, "duplicate action '" + e.name + "'");
            }
        }
    }

    const std::string& device() const noexcept { return m_device; }
    const std::vector<ActionSpaceEntry>& entries() const noexcept { return m_entries; }
    std::size_t size() const noexcept { return m_entries.size(); }

    const ActionSpaceEntry* find(std::string_view name) const noexcept {
        for (const auto& e : m_entries) {
            if (e.name == name) {
                return &e;
            }
        }
        return nullptr;
    }

private:
    std::string m_device;
    std::vector<ActionSpaceEntry> m_entries;
};

/// {action, value, position}; position is relative to the screenshot, in [0, 1].
struct ActionRecord {
    std::string action;
    std::optional<std::string> value;
    std::optional<std::array<double, 2>> position;

    friend bool operator==(const ActionRecord&, const ActionRecord&) = default;
};

// ---------------------------------------------------------------------------
// Built-in registries

namespace detail {

inline ActionSpaceEntry entry(std::string name, std::string description, bool value, bool position,
                              std::string hint, const std::string& device) {
    return {std::move(name), std::move(description), value, position, std::move(hint), {device}};
}

}  // namespace detail

/// Mind2Web-style web space.
inline ActionSpace web_space() {
    const std::string d = "web";
    return ActionSpace(d, {
        detail::entry("CLICK", "Click on an element", false, true, "", d),
        detail::entry("TYPE", "Type a string into an element", true, true, "the string to type", d),
        detail::entry("SELECT", "Select a value for an element", true, true, "the option to select", d),
    });
}

/// AITW-style Android space (11 actions).
inline ActionSpace mobile_space() {
    const std::string d = "mobile";
    return ActionSpace(d, {
        detail::entry("CLICK", "Click on an element", false, true, "", d),
        detail::entry("TYPE", "Type a string into the focused input field", true, false, "the string to type", d),
        detail::entry("SCROLL UP", "Scroll the screen up", false, false, "", d),
        detail::entry("SCROLL DOWN", "Scroll the screen down", false, false, "", d),
        detail::entry("SCROLL LEFT", "Scroll the screen to the left", false, false, "", d),
        detail::entry("SCROLL RIGHT", "Scroll the screen to the right", false, false, "", d),
        detail::entry("PRESS BACK", "Press the back button", false, false, "", d),
        detail::entry("PRESS HOME", "Press the home button", false, false, "", d),
        detail::entry("PRESS ENTER", "Press the enter key", false, false, "", d),
        detail::entry("STATUS TASK COMPLETE", "Mark the task as complete", false, false, "", d),
        detail::entry("STATUS TASK IMPOSSIBLE", "Mark the task as impossible to complete", false, false, "", d),
    });
}

inline ActionSpace miniwob_space() {
    const std::string d = "miniwob";
    return ActionSpace(d, {
        detail::entry("CLICK", "Click on an element", false, true, "", d),
        detail::entry("TYPE", "Type a string into the focused element", true, false, "the string to type", d),
    });
}

/// Looks up a built-in space by device name ("web", "mobile", "miniwob").
inline ActionSpace builtin_space(std::string_view device) {
    if (device == "web") return web_space();
    if (device == "mobile") return mobile_space();
    if (device == "miniwob") return miniwob_space();
    throw Error(Errc::InvalidArgument, "no built-in action space for device '" + std::string(device) + "'");
}

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind {
    UnknownAction,
    MissingValue,
    UnexpectedValue,
    MissingPosition,
    UnexpectedPosition,
    CoordinateOutOfRange,
};

struct Violation {
    ViolationKind kind;
    std::string message;
};

inline std::vector<Violation> validate_action(const ActionRecord& rec, const ActionSpace& space) {
    std::vector<Violation> out;
    const ActionSpaceEntry* e = space.find(rec.action);
    if (e == nullptr) {
        out.push_back({ViolationKind::UnknownAction,
                       "action '" + rec.action + "' does not exist in the " + space.device() + " space"});
    } else {
        if (e->requires_value && !rec.value) {
            out.push_back({ViolationKind::MissingValue, rec.action + " requires a value"});
        }
        if (!e->requires_value && rec.value) {
            out.push_back({ViolationKind::UnexpectedValue, rec.action + " takes no value"});
        }
        if (e->requires_position && !rec.position) {
            out.push_back({ViolationKind::MissingPosition, rec.action + " requires a position"});
        }
        if (!e->requires_position && rec.position) {
            out.push_back({ViolationKind::UnexpectedPosition, rec.action + " takes no position"});
        }
    }
    if (rec.position) {
        for (double v : *rec.position) {
            if (!(v >= 0.0 && v <= 1.0)) {
                out.push_back({ViolationKind::CoordinateOutOfRange, "coordinate outside [0, 1]"});
                break;
            }
        }
    }
    return out;
}

inline bool is_valid(const ActionRecord& rec, const ActionSpace& space) { return validate_action(rec, space).empty(); }

// ---------------------------------------------------------------------------
// Serialization

/// Snaps a coordinate to the two-decimal value it serializes as.
inline double quantize_coordinate(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return std::strtod(buf, nullptr);
}

/// Compact JSON with fixed key order action, value, position and positions
/// printed with two decimals.
inline std::string serialize_action(const ActionRecord& rec) {
    std::string out = "{\"action\":";
    out += nlohmann::json(rec.action).dump();
    out += ",\"value\":";
    out += rec.value ? nlohmann::json(*rec.value).dump() : "null";
    out += ",\"position\":";
    if (rec.position) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "[%.2f,%.2f]", (*rec.position)[0], (*rec.position)[1]);
        out += buf;
    } else {
        out += "null";
    }
    out += '}';
    return out;
}

/// Converts an already-parsed JSON object. Missing keys "value"/"position" are
/// treated as null.
inline ActionRecord action_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw Error(Errc::ParseError, "action must be a JSON object");
    }
    auto it = j.find("action");
    if (it == j.end() || !it->is_string() || it->get_ref<const std::string&>().empty()) {
        throw Error(Errc::ParseError, "missing string key \"action\"");
    }
    ActionRecord rec;
    rec.action = it->get<std::string>();
    if (auto v = j.find("value"); v != j.end() && !v->is_null()) {
        if (!v->is_string()) {
            throw Error(Errc::ParseError, "\"value\" must be a string or null");
        }
        rec.value = v->get<std::string>();
    }
    if (auto p = j.find("position"); p != j.end() && !p->is_null()) {
        if (!p->is_array() || p->size() != 2 || !(*p)[0].is_number() || !(*p)[1].is_number()) {
            throw Error(Errc::ParseError, "\"position\" must be [x, y] or null");
        }
        rec.position = std::array<double, 2>{(*p)[0].get<double>(), (*p)[1].get<double>()};
    }
    return rec;
}

inline nlohmann::json action_to_json(const ActionRecord& rec) {
    return nlohmann::json::parse(serialize_action(rec));
}

/// Parses any JSON spelling of a record; coordinates of any precision.
inline ActionRecord parse_action(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::ParseError, e.what(), e.byte);
    }
    return action_from_json(j);
}

// ---------------------------------------------------------------------------
// README prompt

/// "1. 'CLICK': Click on an element, value is not applicable and the position
/// [x,y] is required." Both clauses come from the entry's flags, so what the
/// prompt promises is exactly what validate_action enforces.
inline std::string readme_line(std::size_t number, const ActionSpaceEntry& e) {
    std::string line = std::to_string(number) + ". '" + e.name + "': " + e.description + ", value is ";
    line += e.requires_value ? (e.value_hint.empty() ? std::string("required") : e.value_hint)
                             : std::string("not applicable");
    line += " and the position [x,y] is ";
    line += e.requires_position ? "required." : "not applicable.";
    return line;
}

/// System part of the navigation prompt (everything before the task line).
inline std::string render_system_prompt(const ActionSpace& space, std::string_view device) {
    std::string out = "You are an assistant trained to navigate the ";
    out += device;
    out += ". Given a task instruction, a screen observation, and an action history sequence, "
           "output the next action and wait for the next observation.\n"
           "Here is the action space:\n";
    std::size_t n = 1;
    for (const auto& e : space.entries()) {
        out += readme_line(n++, e);
        out += '\n';
    }
    out += "Format the action as a dictionary with the following keys:\n"
           "{'action': 'action_type', 'value': 'element', 'position': [x,y]}\n"
           "Position represents the relative coordinates on the screenshot and should be scaled to a range of 0-1.\n";
    return out;
}

inline std::string render_task_line(std::string_view task) { return "Task: " + std::string(task); }

inline std::string render_readme(const ActionSpace& space, std::string_view device, std::string_view task) {
    return render_system_prompt(space, device) + render_task_line(task);
}

// ---------------------------------------------------------------------------
// Action-space definition files: JSON list of entries.

inline ActionSpace action_space_from_json(const nlohmann::json& j, std::string device) {
    if (!j.is_array()) {
        throw Error(Errc::ParseError, "action space file must hold a JSON list");
    }
    std::vector<ActionSpaceEntry> entries;
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("name") || !item.contains("description")) {
            throw Error(Errc::ParseError, "action space entries need \"name\" and \"description\"");
        }
        ActionSpaceEntry e;
        e.name = item.at("name").get<std::string>();
        e.description = item.at("description").get<std::string>();
        e.requires_value = item.value("requires_value", false);
        e.requires_position = item.value("requires_position", false);
        e.value_hint = item.value("value_hint", std::string{});
        if (item.contains("device_tags")) {
            e.device_tags = item.at("device_tags").get<std::set<std::string>>();
        }
        entries.push_back(std::move(e));
    }
    return ActionSpace(std::move(device), std::move(entries));
}

inline nlohmann::json action_space_to_json(const ActionSpace& space) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : space.entries()) {
        out.push_back({{"name", e.name},
                       {"description", e.description},
                       {"requires_value", e.requires_value},
                       {"requires_position", e.requires_position},
                       {"value_hint", e.value_hint},
                       {"device_tags", e.device_tags}});
    }
    return out;
}

}  // namespace uigraph
