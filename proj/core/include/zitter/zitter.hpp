#pragma once

#include "zitter/beta.hpp"
#include "zitter/entropy.hpp"
#include "zitter/errors.hpp"
#include "zitter/kinematics.hpp"
#include "zitter/scales.hpp"
#include "zitter/simulator.hpp"
#include "zitter/verify.hpp"
#include "zitter/version.hpp"
