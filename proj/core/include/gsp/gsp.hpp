#pragma once

#include "gsp/comparison.hpp"
#include "gsp/errors.hpp"
#include "gsp/filters.hpp"
#include "gsp/frames.hpp"
#include "gsp/graph.hpp"
#include "gsp/io.hpp"
#include "gsp/properties.hpp"
#include "gsp/rng.hpp"
#include "gsp/spectral.hpp"
#include "gsp/types.hpp"
