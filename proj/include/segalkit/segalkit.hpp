#pragma once

#include "segalkit/bridge.hpp"
#include "segalkit/category.hpp"
#include "segalkit/completeness.hpp"
#include "segalkit/core.hpp"
#include "segalkit/generators.hpp"
#include "segalkit/horns.hpp"
#include "segalkit/json_io.hpp"
#include "segalkit/report.hpp"
