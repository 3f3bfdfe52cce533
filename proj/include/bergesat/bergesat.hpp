#ifndef BERGESAT_BERGESAT_HPP
#define BERGESAT_BERGESAT_HPP

#include "bergesat/berge.hpp"
#include "bergesat/combinatorics.hpp"
#include "bergesat/config_model.hpp"
#include "bergesat/errors.hpp"
#include "bergesat/hypergraph.hpp"
#include "bergesat/rng.hpp"
#include "bergesat/saturation.hpp"

#endif // BERGESAT_BERGESAT_HPP
