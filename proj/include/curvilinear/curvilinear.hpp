#pragma once

// Umbrella header.

#include "curvilinear/error.hpp"
#include "curvilinear/laurent.hpp"
#include "curvilinear/factored_rational.hpp"
#include "curvilinear/series.hpp"
#include "curvilinear/specialize.hpp"
#include "curvilinear/lt_parser.hpp"
#include "curvilinear/univariate.hpp"
#include "curvilinear/bivariate.hpp"
#include "curvilinear/curve.hpp"
#include "curvilinear/resolution.hpp"
#include "curvilinear/resolution_file.hpp"
#include "curvilinear/zeta.hpp"
#include "curvilinear/jets.hpp"
