#pragma once

// Umbrella header. Individual headers are self-contained; include them
// directly when build time matters (oracle.hpp is the only one that pulls
// in Eigen).

#include "ctqw/dawson.hpp"
#include "ctqw/errors.hpp"
#include "ctqw/intersection.hpp"
#include "ctqw/jacobi.hpp"
#include "ctqw/odd_graph.hpp"
#include "ctqw/oracle.hpp"
#include "ctqw/polynomials.hpp"
#include "ctqw/qclt.hpp"
#include "ctqw/quantum_decomposition.hpp"
#include "ctqw/serialize.hpp"
#include "ctqw/spectral.hpp"
#include "ctqw/tridiagonal.hpp"
#include "ctqw/walk.hpp"
