// Copyright (C) 2026 The uigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "uigraph/error.hpp"
#include "uigraph/rng.hpp"

namespace uigraph {

struct DatasetSpec {
    std::string name;
    std::size_t size = 0;
    double weight = 1.0;
};

struct Draw {
    std::size_t dataset;  // index into the dataset list
    std::size_t index;    // item within that dataset

    friend bool operator==(const Draw&, const Draw&) = default;
};

struct SamplePlan {
    std::vector<std::string> datasets;  // names, parallel to the dataset list
    std::vector<Draw> draws;
    std::uint64_t seed = 0;

    friend bool operator==(const SamplePlan&, const SamplePlan&) = default;
};

/// Draws `n` items with replacement. Each draw picks dataset d with probability
/// weight_d / sum(weights), regardless of how many items d holds, then an item
/// uniformly inside it.
inline SamplePlan plan_draws(const std::vector<DatasetSpec>& specs, std::size_t n, std::uint64_t seed) {
    if (specs.empty()) {
        throw Error(Errc::InvalidArgument, "no datasets to sample from");
    }
    if (n == 0) {
        throw Error(Errc::InvalidArgument, "draw count must be >= 1");
    }
    std::vector<double> cumulative;
    cumulative.reserve(specs.size());
    double total = 0.0;
    for (const auto& s : specs) {
        if (s.size == 0) {
            throw Error(Errc::InvalidArgument, "dataset '" + s.name + "' is empty");
        }
        if (!(s.weight > 0.0) || !std::isfinite(s.weight)) {
            throw Error(Errc::InvalidArgument, "dataset '" + s.name + "' needs a positive weight");
        }
        total += s.weight;
        cumulative.push_back(total);
    }

    SamplePlan plan;
    plan.seed = seed;
    for (const auto& s : specs) {
        plan.datasets.push_back(s.name);
    }
    plan.draws.reserve(n);
    Xoshiro256 rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = rng.unit() * total;
        std::size_t d = 0;
        while (d + 1 < cumulative.size() && u >= cumulative[d]) {
            ++d;
        }
        plan.draws.push_back({d, static_cast<std::size_t>(rng.below(specs[d].size))});
    }
    return plan;
}

inline std::vector<DatasetSpec> dataset_specs_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw Error(Errc::ParseError, "dataset spec file must hold a JSON list");
    }
    std::vector<DatasetSpec> specs;
    for (const auto& item : j) {
        specs.push_back({item.at("name").get<std::string>(), item.at("size").get<std::size_t>(),
                         item.value("weight", 1.0)});
    }
    return specs;
}

}  // namespace uigraph
