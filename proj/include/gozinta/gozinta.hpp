// Copyright (c) gozinta contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "gozinta/achieve.hpp"
#include "gozinta/brute.hpp"
#include "gozinta/constructions.hpp"
#include "gozinta/core.hpp"
#include "gozinta/errors.hpp"
#include "gozinta/feasibility.hpp"
#include "gozinta/format.hpp"
#include "gozinta/nesting.hpp"
#include "gozinta/perm.hpp"
#include "gozinta/rational.hpp"
