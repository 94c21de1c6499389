#pragma once

// Umbrella header.

#include "inchyp/appell.hpp"
#include "inchyp/core.hpp"
#include "inchyp/fracderiv.hpp"
#include "inchyp/gamma.hpp"
#include "inchyp/generating.hpp"
#include "inchyp/hypergeometric.hpp"
#include "inchyp/incomplete_beta.hpp"
#include "inchyp/incomplete_hypergeometric.hpp"
#include "inchyp/parallel.hpp"
#include "inchyp/pochhammer_ratio.hpp"
#include "inchyp/quadrature.hpp"
#include "inchyp/series.hpp"
#include "inchyp/verify.hpp"
