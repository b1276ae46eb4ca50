#pragma once

#include "tropabel/error.hpp"
#include "tropabel/rational.hpp"
#include "tropabel/matrix.hpp"
#include "tropabel/normal_form.hpp"
#include "tropabel/lattice.hpp"
#include "tropabel/finite_group.hpp"
#include "tropabel/monomial.hpp"
#include "tropabel/torus.hpp"
#include "tropabel/ns_pairings.hpp"
#include "tropabel/trop_bundles.hpp"
#include "tropabel/trop_char.hpp"
#include "tropabel/na_side.hpp"
