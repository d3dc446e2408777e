#pragma once

#include "logent/continuum.hpp"
#include "logent/dynamics_fd.hpp"
#include "logent/errors.hpp"
#include "logent/io.hpp"
#include "logent/maxent.hpp"
#include "logent/prob_core.hpp"
#include "logent/profile.hpp"
#include "logent/skew_propagator.hpp"
#include "logent/spectral.hpp"
#include "logent/wigner.hpp"
