#pragma once

#include "gsum/centrality.hpp"
#include "gsum/error.hpp"
#include "gsum/eval.hpp"
#include "gsum/graph.hpp"
#include "gsum/gscis.hpp"
#include "gsum/queries.hpp"
#include "gsum/summary.hpp"
#include "gsum/tbuds.hpp"
#include "gsum/union_find.hpp"
