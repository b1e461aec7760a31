#pragma once

#include "banach2d/constants.hpp"
#include "banach2d/ext_real.hpp"
#include "banach2d/means.hpp"
#include "banach2d/norm_space.hpp"
#include "banach2d/norm_spec.hpp"
#include "banach2d/records.hpp"
#include "banach2d/search.hpp"
#include "banach2d/vec2.hpp"
#include "banach2d/verify.hpp"
