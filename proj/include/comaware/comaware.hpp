#ifndef COMAWARE_COMAWARE_HPP
#define COMAWARE_COMAWARE_HPP

#include "errors.hpp"
#include "experiment.hpp"
#include "fastgreedy.hpp"
#include "graph.hpp"
#include "growth.hpp"
#include "io.hpp"
#include "metrics.hpp"
#include "powerlaw.hpp"
#include "presets.hpp"
#include "report.hpp"
#include "stats.hpp"

#endif // COMAWARE_COMAWARE_HPP
