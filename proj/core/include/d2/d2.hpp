#pragma once

#include "d2/chain_map.hpp"
#include "d2/cohomology.hpp"
#include "d2/complex.hpp"
#include "d2/errors.hpp"
#include "d2/expression.hpp"
#include "d2/f2_matrix.hpp"
#include "d2/free_module_map.hpp"
#include "d2/group.hpp"
#include "d2/group_ring.hpp"
#include "d2/int_matrix.hpp"
#include "d2/lattice.hpp"
#include "d2/matrix_io.hpp"
#include "d2/normal_form.hpp"
#include "d2/units.hpp"
