#pragma once

// Umbrella header for the core library (everything except JSON I/O).

#include "thinpoly/classify.hpp"
#include "thinpoly/counting.hpp"
#include "thinpoly/gorenstein.hpp"
#include "thinpoly/integer.hpp"
#include "thinpoly/local_hstar.hpp"
#include "thinpoly/matrix.hpp"
#include "thinpoly/polynomial.hpp"
#include "thinpoly/polytope.hpp"
#include "thinpoly/poset.hpp"
