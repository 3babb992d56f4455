#pragma once

#include "fbs/embedding.hpp"
#include "fbs/graph.hpp"
#include "fbs/io/campaign.hpp"
#include "fbs/io/classify.hpp"
#include "fbs/io/dot.hpp"
#include "fbs/io/format.hpp"
#include "fbs/io/generators.hpp"
#include "fbs/io/manifest.hpp"
#include "fbs/linear_forest.hpp"
#include "fbs/planarity.hpp"
#include "fbs/reductions/cfvs.hpp"
#include "fbs/reductions/doubling.hpp"
#include "fbs/reductions/planar_dfvs.hpp"
#include "fbs/reductions/speckenmeyer.hpp"
#include "fbs/reductions/splitting.hpp"
#include "fbs/reductions/verify.hpp"
#include "fbs/sign_pattern.hpp"
#include "fbs/solvers/cycles.hpp"
#include "fbs/solvers/exact.hpp"
#include "fbs/solvers/poly.hpp"
#include "fbs/solvers/validate.hpp"
