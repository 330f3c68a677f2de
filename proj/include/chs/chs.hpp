#pragma once

// Umbrella header: CHS d-norms of simple graphs by independent exact and
// floating-point routes, plus the extremal verification machinery.

#include "chs/analysis.hpp"
#include "chs/chs_norm.hpp"
#include "chs/error.hpp"
#include "chs/graph.hpp"
#include "chs/graph_io.hpp"
#include "chs/partitions.hpp"
#include "chs/rational.hpp"
#include "chs/spectra.hpp"
#include "chs/walks.hpp"
