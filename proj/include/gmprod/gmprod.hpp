#ifndef GMPROD_GMPROD_HPP_
#define GMPROD_GMPROD_HPP_

#include "compatibility.hpp"
#include "constructions.hpp"
#include "dsl.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "isomorphism.hpp"
#include "matrix.hpp"
#include "partition.hpp"
#include "product.hpp"
#include "spectral.hpp"

#endif // GMPROD_GMPROD_HPP_
