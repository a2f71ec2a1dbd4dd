#pragma once

#include "frieze/bigint.hpp"
#include "frieze/diagonal_map.hpp"
#include "frieze/generate.hpp"
#include "frieze/glue.hpp"
#include "frieze/json_io.hpp"
#include "frieze/pattern.hpp"
#include "frieze/polygon.hpp"
#include "frieze/semifield.hpp"
#include "frieze/svg.hpp"
#include "frieze/tpath.hpp"
