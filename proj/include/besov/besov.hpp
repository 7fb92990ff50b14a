#pragma once

#include "config.hpp"
#include "power_series.hpp"
#include "analytic_map.hpp"
#include "polynomial_roots.hpp"
#include "quadrature.hpp"
#include "norms.hpp"
#include "operators.hpp"
#include "search.hpp"
#include "map_json.hpp"
#include "acceptance.hpp"
