#pragma once

#include "bbcell/cell.hpp"
#include "bbcell/chow.hpp"
#include "bbcell/dual.hpp"
#include "bbcell/dual_cell.hpp"
#include "bbcell/errors.hpp"
#include "bbcell/exponent.hpp"
#include "bbcell/groebner.hpp"
#include "bbcell/io.hpp"
#include "bbcell/linalg.hpp"
#include "bbcell/oracle.hpp"
#include "bbcell/order.hpp"
#include "bbcell/polynomial.hpp"
#include "bbcell/rational.hpp"
#include "bbcell/staircase.hpp"
