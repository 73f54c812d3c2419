#ifndef LYDIM_LYDIM_HPP
#define LYDIM_LYDIM_HPP

#include "lydim/coding.hpp"
#include "lydim/coupled_map.hpp"
#include "lydim/dimension.hpp"
#include "lydim/errors.hpp"
#include "lydim/ifs.hpp"
#include "lydim/interval.hpp"
#include "lydim/io.hpp"
#include "lydim/rational.hpp"
#include "lydim/symbols.hpp"
#include "lydim/transition_matrix.hpp"
#include "lydim/witness.hpp"

#endif  // LYDIM_LYDIM_HPP
