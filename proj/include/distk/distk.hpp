#pragma once

#include "ball_vc.hpp"
#include "distance.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "kernel.hpp"
#include "oracle.hpp"
#include "projections.hpp"
#include "rational.hpp"
#include "serialize.hpp"
#include "simplex.hpp"
#include "uqw.hpp"
#include "wcol.hpp"
