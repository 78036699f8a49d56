#pragma once

#include "sqzero/counterexample.hpp"
#include "sqzero/errors.hpp"
#include "sqzero/gen.hpp"
#include "sqzero/lattice.hpp"
#include "sqzero/linalg.hpp"
#include "sqzero/matrix.hpp"
#include "sqzero/matrix_io.hpp"
#include "sqzero/nnrank.hpp"
#include "sqzero/rational.hpp"
#include "sqzero/rng.hpp"
#include "sqzero/squarezero.hpp"
