#pragma once

// Umbrella header: the t-product algebra of tubal matrices, the
// nonnegativity cone hierarchy, irreducibility certificates, t-eigenvalues
// through the block-circulant embedding, and checkers for the
// Perron-Frobenius-type statements that hold over this algebra.

#include "tubal/cone.hpp"
#include "tubal/dense.hpp"
#include "tubal/dft.hpp"
#include "tubal/digraph.hpp"
#include "tubal/eig.hpp"
#include "tubal/generate.hpp"
#include "tubal/io.hpp"
#include "tubal/irreducibility.hpp"
#include "tubal/pf.hpp"
#include "tubal/spectra.hpp"
#include "tubal/tensor.hpp"
#include "tubal/tube.hpp"
