// Copyright (C) 2026 The uigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "uigraph/action.hpp"
#include "uigraph/error.hpp"
#include "uigraph/eval.hpp"
#include "uigraph/image_io.hpp"
#include "uigraph/layer_policy.hpp"
#include "uigraph/patch_grid.hpp"
#include "uigraph/rng.hpp"
#include "uigraph/sampler.hpp"
#include "uigraph/serialize.hpp"
#include "uigraph/synthetic.hpp"
#include "uigraph/token_select.hpp"
#include "uigraph/ui_graph.hpp"
#include "uigraph/vla_stream.hpp"
