#pragma once

// Umbrella header: the exact word-algebra kernel for the d-isometry
// relations, the fermion embedding, the shift crossed product, the finite
// matrix realizations, and the verification suites.

#include "checks.hpp"
#include "config.hpp"
#include "crossed.hpp"
#include "element.hpp"
#include "fa.hpp"
#include "maps.hpp"
#include "parser.hpp"
#include "report.hpp"
#include "rfs.hpp"
#include "rng.hpp"
#include "scalar.hpp"
#include "serial.hpp"
#include "uhf.hpp"
