#pragma once

#include "clique_set.hpp"
#include "coloring.hpp"
#include "enumerate.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "ordering.hpp"
#include "pruning.hpp"
#include "random.hpp"
#include "suggest.hpp"
