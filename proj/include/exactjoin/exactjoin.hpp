// Copyright (c) exactjoin contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "exactjoin/bd_shape.hpp"
#include "exactjoin/box.hpp"
#include "exactjoin/conjecture.hpp"
#include "exactjoin/decision.hpp"
#include "exactjoin/dd.hpp"
#include "exactjoin/errors.hpp"
#include "exactjoin/graph.hpp"
#include "exactjoin/instances.hpp"
#include "exactjoin/interval.hpp"
#include "exactjoin/linear.hpp"
#include "exactjoin/nnc_polyhedron.hpp"
#include "exactjoin/octagon.hpp"
#include "exactjoin/oracle.hpp"
#include "exactjoin/parse.hpp"
#include "exactjoin/polyhedron.hpp"
#include "exactjoin/powerset.hpp"
#include "exactjoin/rational.hpp"
