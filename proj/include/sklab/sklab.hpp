#pragma once

#include "sklab/complex.hpp"
#include "sklab/connectivity.hpp"
#include "sklab/constructors.hpp"
#include "sklab/face_lattice.hpp"
#include "sklab/incidence.hpp"
#include "sklab/lattice_checks.hpp"
#include "sklab/lattice_ops.hpp"
#include "sklab/rational.hpp"
#include "sklab/skeleton.hpp"
#include "sklab/theorems.hpp"
#include "sklab/vertex_set.hpp"
