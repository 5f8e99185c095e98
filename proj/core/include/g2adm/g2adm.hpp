#pragma once

#include "g2adm/arch_invariants.hpp"
#include "g2adm/errors.hpp"
#include "g2adm/fiber_catalog.hpp"
#include "g2adm/io.hpp"
#include "g2adm/metric_graph.hpp"
#include "g2adm/pm_invariants.hpp"
#include "g2adm/quadrature.hpp"
#include "g2adm/rational.hpp"
#include "g2adm/siegel.hpp"
#include "g2adm/theta.hpp"
