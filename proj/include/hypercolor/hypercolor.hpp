#pragma once

#include "hypercolor/bounds.hpp"
#include "hypercolor/colex.hpp"
#include "hypercolor/coloring.hpp"
#include "hypercolor/constructions.hpp"
#include "hypercolor/designs.hpp"
#include "hypercolor/hypergraph.hpp"
#include "hypercolor/io.hpp"
#include "hypercolor/search.hpp"
#include "hypercolor/union_find.hpp"
#include "hypercolor/verify.hpp"
#include "hypercolor/vertex_set.hpp"
