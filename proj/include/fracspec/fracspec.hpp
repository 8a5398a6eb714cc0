#pragma once

#include "fracspec/error.hpp"
#include "fracspec/specfun.hpp"
#include "fracspec/kernels.hpp"
#include "fracspec/models.hpp"
#include "fracspec/gamma_quadrature.hpp"
#include "fracspec/transforms.hpp"
#include "fracspec/covariance.hpp"
#include "fracspec/synth.hpp"
#include "fracspec/figure.hpp"
#include "fracspec/io.hpp"
#include "fracspec/validation.hpp"
