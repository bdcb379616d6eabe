#pragma once

// Umbrella header: epidemic simulation on synthetic networks, structural
// feature extraction, reproduction number estimation, and the regression
// models that predict it.

#include "r0net/ann.hpp"
#include "r0net/dataset.hpp"
#include "r0net/epidemic.hpp"
#include "r0net/errors.hpp"
#include "r0net/eval.hpp"
#include "r0net/graph.hpp"
#include "r0net/linreg.hpp"
#include "r0net/model_io.hpp"
#include "r0net/netgen.hpp"
#include "r0net/netmetrics.hpp"
#include "r0net/ranking.hpp"
#include "r0net/rng.hpp"
#include "r0net/svr.hpp"
