#ifndef DMSPEC_DMSPEC_HPP
#define DMSPEC_DMSPEC_HPP

#include "app.hpp"
#include "burnside.hpp"
#include "catalog.hpp"
#include "element_set.hpp"
#include "error.hpp"
#include "figure.hpp"
#include "golden.hpp"
#include "group.hpp"
#include "ideals.hpp"
#include "lattice.hpp"
#include "maps.hpp"
#include "permutation.hpp"
#include "primes.hpp"
#include "quotient.hpp"
#include "spectrum.hpp"
#include "subgroup.hpp"

#endif
