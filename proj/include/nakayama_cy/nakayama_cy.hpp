#pragma once

// Umbrella header.

#include "algebra.hpp"
#include "arrows.hpp"
#include "cache.hpp"
#include "classification.hpp"
#include "errors.hpp"
#include "homspace.hpp"
#include "matrix.hpp"
#include "orbit_oracle.hpp"
#include "render.hpp"
#include "scalar.hpp"
#include "serialization.hpp"
#include "sweep.hpp"
