#pragma once

#include "deltacvx/convexity.hpp"
#include "deltacvx/cover_partition.hpp"
#include "deltacvx/errors.hpp"
#include "deltacvx/graph.hpp"
#include "deltacvx/io.hpp"
#include "deltacvx/products.hpp"
#include "deltacvx/reduction.hpp"
#include "deltacvx/structure.hpp"
#include "deltacvx/vertex_set.hpp"
