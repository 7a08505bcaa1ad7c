#pragma once

#include "twreg/specfun/airy.hpp"
#include "twreg/specfun/asymptotic_eval.hpp"
#include "twreg/specfun/gamma.hpp"
#include "twreg/specfun/kummer.hpp"
#include "twreg/specfun/theta.hpp"
