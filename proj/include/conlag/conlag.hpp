#pragma once

#include "conlag/alpha_calc.hpp"
#include "conlag/errors.hpp"
#include "conlag/figures.hpp"
#include "conlag/integrate.hpp"
#include "conlag/laguerre.hpp"
#include "conlag/laplace.hpp"
#include "conlag/poly.hpp"
#include "conlag/rational.hpp"
#include "conlag/series.hpp"
#include "conlag/table.hpp"
#include "conlag/verify.hpp"
