#pragma once

#include "twofilm/entropy.hpp"
#include "twofilm/errors.hpp"
#include "twofilm/fvm.hpp"
#include "twofilm/riemann.hpp"
#include "twofilm/state.hpp"
#include "twofilm/system.hpp"
#include "twofilm/wavecurves.hpp"
