#pragma once

#include "tripolar/error.hpp"
#include "tripolar/spectra.hpp"
#include "tripolar/trisemifield.hpp"
#include "tripolar/poles.hpp"
#include "tripolar/colourspace.hpp"
#include "tripolar/diagnostics.hpp"
#include "tripolar/io.hpp"
#include "tripolar/dsl.hpp"
#include "tripolar/check.hpp"
