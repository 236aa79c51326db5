#pragma once

#include "coloring.hpp"
#include "constructions.hpp"
#include "digraph.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "patterns.hpp"
#include "search.hpp"
#include "suite.hpp"
#include "vertex_set.hpp"
#include "witnesses.hpp"
