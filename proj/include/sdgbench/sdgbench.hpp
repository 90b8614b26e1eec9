#pragma once

// Umbrella header for the whole toolkit.

#include "sdgbench/attacks.hpp"
#include "sdgbench/classifiers.hpp"
#include "sdgbench/dataset.hpp"
#include "sdgbench/error.hpp"
#include "sdgbench/experiment.hpp"
#include "sdgbench/fixtures.hpp"
#include "sdgbench/generators.hpp"
#include "sdgbench/importance.hpp"
#include "sdgbench/kvfile.hpp"
#include "sdgbench/metrics.hpp"
#include "sdgbench/numeric.hpp"
#include "sdgbench/rng.hpp"
