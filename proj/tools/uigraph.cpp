// Copyright (C) 2026 The uigraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "uigraph/cli.hpp"

int main(int argc, char** argv) { return uigraph::cli::run(argc, argv); }
