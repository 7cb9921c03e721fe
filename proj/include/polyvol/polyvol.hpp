#pragma once

#include "polyvol/bipartite.hpp"
#include "polyvol/closed_forms.hpp"
#include "polyvol/dsl.hpp"
#include "polyvol/ehrhart.hpp"
#include "polyvol/error.hpp"
#include "polyvol/family.hpp"
#include "polyvol/graph.hpp"
#include "polyvol/methods.hpp"
#include "polyvol/montecarlo.hpp"
#include "polyvol/polynomial.hpp"
#include "polyvol/rational.hpp"
#include "polyvol/rvf.hpp"
#include "polyvol/series.hpp"
#include "polyvol/sliced.hpp"
