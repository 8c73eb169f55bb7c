#pragma once

#include "stickknot/bareiss.hpp"
#include "stickknot/census.hpp"
#include "stickknot/config_io.hpp"
#include "stickknot/cycle.hpp"
#include "stickknot/diagram.hpp"
#include "stickknot/epsilon_cache.hpp"
#include "stickknot/errors.hpp"
#include "stickknot/geometry.hpp"
#include "stickknot/reduction.hpp"
#include "stickknot/report.hpp"
#include "stickknot/search.hpp"
#include "stickknot/tables.hpp"
